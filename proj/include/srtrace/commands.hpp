#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "srtrace/complex.hpp"
#include "srtrace/field.hpp"

namespace srtrace {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // sweep violations, internal errors
  kExitParse = 2,    // malformed input, flags or field specifiers
  kExitPredicate = 3,
};

struct RunConfig {
  std::optional<std::filesystem::path> input;
  std::optional<std::string> corpus;
  std::vector<std::string> fields;  // unparsed "q" / "gf:P"
  bool oracle = false;
  int max_n = 4;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> cache_dir;
  bool debug_all_faces = false;
  bool summary = false;
  unsigned threads = 0;

  /// Parsed fields, with `fallback` used when none were given. Throws
  /// ParseError / std::invalid_argument on bad specifiers.
  std::vector<FieldSpec> field_specs(const std::vector<FieldSpec>& fallback) const;
  /// The complex named by --input or --corpus, with its report id.
  std::pair<SimplicialComplex, std::string> load_complex() const;
};

int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_homology(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_corpus_list(std::ostream& out);

}  // namespace srtrace
