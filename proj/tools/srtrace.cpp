// srtrace: Gorenstein-type classification of Stanley-Reisner rings.

#include <iostream>

#include "CLI11.hpp"
#include "srtrace/commands.hpp"

namespace {

void add_source_options(CLI::App* cmd, srtrace::RunConfig& config) {
  cmd->add_option("--input", config.input, "facet file");
  cmd->add_option("--corpus", config.corpus, "corpus entry, e.g. rp2_6 or path:3");
  cmd->add_option("--field", config.fields, "coefficient field: q or gf:P (repeatable)");
  cmd->add_option("--out", config.out, "write JSON here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gorenstein-type properties and canonical trace of Stanley-Reisner rings"};
  app.require_subcommand(1);

  srtrace::RunConfig config;

  auto* classify = app.add_subcommand("classify", "full classification report");
  add_source_options(classify, config);
  classify->add_flag("--oracle", config.oracle, "cross-check with the brute-force trace oracle");
  classify->add_option("--cache-dir", config.cache_dir, "reuse reports stored here");
  classify->add_flag("--debug-all-faces", config.debug_all_faces,
                     "also check punctured-Gorenstein over all faces");
  classify->add_flag("--summary", config.summary, "print a short summary to stderr");

  auto* homology = app.add_subcommand("homology", "reduced Betti numbers");
  add_source_options(homology, config);

  bool no_oracle = false;
  auto* sweep = app.add_subcommand("sweep", "exhaustive invariant check over all small complexes");
  sweep->add_option("--max-n", config.max_n, "ground set size (at most 6)");
  sweep->add_option("--field", config.fields, "coefficient field: q or gf:P (repeatable)");
  sweep->add_flag("--no-oracle", no_oracle, "skip the trace oracle");
  sweep->add_flag("--oracle", config.oracle, "accepted for symmetry; the oracle is on by default");
  sweep->add_option("--out", config.out, "write JSON here instead of stdout");
  sweep->add_option("--cache-dir", config.cache_dir, "per-complex result cache");
  sweep->add_option("--threads", config.threads, "worker threads (0 = hardware concurrency)");

  auto* corpus = app.add_subcommand("corpus", "named example complexes");
  auto* corpus_list = corpus->add_subcommand("list", "list corpus names");
  corpus->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : srtrace::kExitParse;
  }

  if (classify->parsed()) return srtrace::cmd_classify(config, std::cout, std::cerr);
  if (homology->parsed()) return srtrace::cmd_homology(config, std::cout, std::cerr);
  if (sweep->parsed()) {
    config.oracle = !no_oracle;
    return srtrace::cmd_sweep(config, std::cout, std::cerr);
  }
  if (corpus_list->parsed()) return srtrace::cmd_corpus_list(std::cout);
  return srtrace::kExitParse;
}
