#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srtrace/classifier.hpp"
#include "srtrace/complex.hpp"
#include "srtrace/field.hpp"
#include "srtrace/oracle.hpp"
#include "srtrace/report.hpp"

namespace srtrace {

struct SweepConfig {
  int max_n = 4;
  std::vector<FieldSpec> fields{FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::rationals()};
  /// Run the trace oracle on every Cohen-Macaulay complex in range.
  bool oracle = true;
  OracleOptions oracle_options{.max_vertices = 9, .max_dim = 4};
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  std::optional<std::filesystem::path> cache_dir;
};

/// Outcome of all checks on one complex.
struct SweepRecord {
  /// Parallel to SweepConfig::fields.
  std::vector<TraceClass> classes;
  std::vector<std::string> violations;
  /// Check name -> number of times its hypothesis held (so it was exercised).
  std::map<std::string, long> exercised;
};

struct SweepSummary {
  int max_n = 0;
  std::vector<FieldSpec> fields;
  /// Nonvoid complexes checked; the void complex is skipped.
  long total = 0;
  std::map<std::string, std::map<TraceClass, long>> counts;
  std::map<std::string, long> exercised;
  std::vector<std::string> violations;
  std::size_t cache_hits = 0;

  bool ok() const { return violations.empty(); }
};

/// Every invariant the sweep asserts, evaluated on a single nonvoid complex.
SweepRecord check_complex(const SimplicialComplex& k, const SweepConfig& config);

/// Throws std::invalid_argument for max_n outside 0..kMaxEnumerationVertices.
SweepSummary run_sweep(const SweepConfig& config);

Json to_json(const SweepSummary& s);

}  // namespace srtrace
