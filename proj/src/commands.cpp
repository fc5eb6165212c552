#include "srtrace/commands.hpp"

#include <chrono>
#include <fstream>
#include <functional>

#include "srtrace/builders.hpp"
#include "srtrace/errors.hpp"
#include "srtrace/io.hpp"
#include "srtrace/report.hpp"
#include "srtrace/sweep.hpp"

namespace srtrace {

std::vector<FieldSpec> RunConfig::field_specs(const std::vector<FieldSpec>& fallback) const {
  if (fields.empty()) return fallback;
  std::vector<FieldSpec> out;
  for (const auto& text : fields) {
    const auto spec = FieldSpec::parse(text);
    if (std::find(out.begin(), out.end(), spec) == out.end()) out.push_back(spec);
  }
  return out;
}

std::pair<SimplicialComplex, std::string> RunConfig::load_complex() const {
  if (input.has_value() == corpus.has_value()) {
    throw ParseError("exactly one of --input and --corpus is required");
  }
  if (corpus) return {corpus_complex(*corpus), *corpus};
  return {load_facet_file(*input), input->filename().string()};
}

namespace {

/// Input/flag problems map to kExitParse, mathematical ones to kExitPredicate.
int guarded(std::ostream& err, const std::function<int()>& setup_and_run) {
  try {
    return setup_and_run();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitPredicate;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (!config.out) {
    out << text;
    return;
  }
  std::ofstream file(*config.out, std::ios::binary | std::ios::trunc);
  if (!file) throw ParseError("cannot write " + config.out->string());
  file << text;
}

const std::vector<FieldSpec> kDefaultSingle{FieldSpec::rationals()};
const std::vector<FieldSpec> kDefaultSweep{FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::rationals()};

}  // namespace

int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto fields = config.field_specs(kDefaultSingle);
    const auto [k, id] = config.load_complex();
    ReportOptions options;
    options.oracle = config.oracle;
    options.debug_all_faces = config.debug_all_faces;

    std::optional<ReportCache> cache;
    std::string key;
    if (config.cache_dir) {
      cache.emplace(*config.cache_dir);
      key = ReportCache::make_key("classify", k, fields,
                                  "id=" + id + ",oracle=" + std::to_string(options.oracle) +
                                      ",all_faces=" + std::to_string(options.debug_all_faces));
    }
    std::string text;
    if (cache) {
      if (auto hit = cache->load(key)) text = std::move(*hit);
    }
    if (text.empty()) {
      text = classification_document(k, id, fields, options).dump(2) + "\n";
      if (cache) cache->store(key, text);
    }
    emit(config, text, out);
    if (config.summary) err << render_summary(Json::parse(text));
    return static_cast<int>(kExitOk);
  });
}

int cmd_homology(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto fields = config.field_specs(kDefaultSingle);
    const auto [k, id] = config.load_complex();
    emit(config, homology_document(k, id, fields).dump(2) + "\n", out);
    return static_cast<int>(kExitOk);
  });
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SweepConfig sweep;
    sweep.max_n = config.max_n;
    sweep.fields = config.field_specs(kDefaultSweep);
    sweep.oracle = config.oracle;
    sweep.threads = config.threads;
    sweep.cache_dir = config.cache_dir;
    const auto start = std::chrono::steady_clock::now();
    const auto summary = run_sweep(sweep);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(config, to_json(summary).dump(2) + "\n", out);
    err << "sweep n<=" << summary.max_n << ": " << summary.total << " complexes, " << summary.violations.size()
        << " violations, " << seconds << " s";
    if (config.cache_dir) err << ", " << summary.cache_hits << " cache hits";
    err << '\n';
    return static_cast<int>(summary.ok() ? kExitOk : kExitFailure);
  });
}

int cmd_corpus_list(std::ostream& out) {
  Json doc;
  doc["schema"] = kReportSchema;
  doc["kind"] = "corpus";
  Json entries = Json::array();
  for (const auto& e : corpus_entries()) {
    Json j;
    j["name"] = e.name;
    j["description"] = e.description;
    entries.push_back(std::move(j));
  }
  doc["entries"] = std::move(entries);
  out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace srtrace
