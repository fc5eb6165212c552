#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "srtrace/classifier.hpp"
#include "srtrace/complex.hpp"
#include "srtrace/field.hpp"
#include "srtrace/oracle.hpp"

namespace srtrace {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;
/// Bumped whenever any engine changes output for a fixed input; part of the
/// cache key.
inline constexpr const char* kEngineVersion = "srtrace-1.0.0";

struct ReportOptions {
  bool oracle = false;
  bool debug_all_faces = false;
  OracleOptions oracle_options{};
};

/// Every predicate for one complex over one field. Optional members are the
/// ones that are undefined on this input (CM-only quantities on non-CM
/// complexes, orientability on non-pseudomanifolds).
struct ClassificationReport {
  std::string complex_id;
  FieldSpec field = FieldSpec::rationals();

  bool pure = false;
  bool connected = false;
  bool strongly_connected = false;
  bool normal = false;
  bool pseudomanifold = false;
  bool homology_manifold = false;
  bool homology_sphere = false;
  std::optional<bool> orientable_Z;
  std::optional<bool> k_orientable;
  bool cohen_macaulay = false;
  bool gorenstein = false;
  bool punctured_gorenstein = false;
  std::optional<bool> punctured_gorenstein_all_faces;
  std::optional<bool> nearly_gorenstein;
  std::optional<bool> level;
  bool quasi_gorenstein_candidate = false;
  std::optional<int> cm_type;
  TraceClass trace_class = TraceClass::NotCohenMacaulay;
  std::optional<AlmostGorenstein> almost_gorenstein;

  std::vector<int> reduced_betti;  // β̃_{-1} .. β̃_d
  Face cone_face;
  /// Gräbe module generators; equal to the ω generators when CM.
  std::map<Face, int> module_generators;

  std::optional<Crosscheck> oracle;
};

ClassificationReport classify(const SimplicialComplex& k, const std::string& id, const FieldSpec& field,
                              const ReportOptions& options = {});

Json complex_json(const SimplicialComplex& k, const std::string& id);
Json to_json(const ClassificationReport& r);
Json to_json(const TraceComponents& t);

/// Full classify output: schema header, complex block, one report per field.
Json classification_document(const SimplicialComplex& k, const std::string& id,
                             const std::vector<FieldSpec>& fields, const ReportOptions& options);

/// β̃ table per field.
Json homology_document(const SimplicialComplex& k, const std::string& id,
                       const std::vector<FieldSpec>& fields);

/// Short text rendering of a classification document.
std::string render_summary(const Json& document);

/// 64-bit FNV-1a, hex-encoded.
std::string fnv1a_hex(const std::string& text);

/// On-disk cache of serialized documents. Entries store their full key and
/// are ignored on mismatch, so hash collisions only cost a recomputation.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path dir);

  static std::string make_key(const std::string& kind, const SimplicialComplex& k,
                              const std::vector<FieldSpec>& fields, const std::string& flags);

  std::optional<std::string> load(const std::string& key) const;
  void store(const std::string& key, const std::string& text) const;

  std::size_t hits() const { return hits_; }

 private:
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path dir_;
  mutable std::size_t hits_ = 0;
};

}  // namespace srtrace
