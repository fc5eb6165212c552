#include "srtrace/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "srtrace/builders.hpp"
#include "srtrace/homology.hpp"

namespace srtrace {

namespace {

class Checker {
 public:
  Checker(const SimplicialComplex& k, SweepRecord& record, std::string where)
      : k_(k), record_(record), where_(std::move(where)) {}

  /// Counts the check as exercised when `applies`, and records a violation
  /// when it applies but `holds` is false.
  void expect(const char* name, bool applies, bool holds, const std::string& detail = {}) {
    if (!applies) return;
    ++record_.exercised[name];
    if (!holds) {
      std::string msg = std::string(name) + ": " + k_.canonical_encoding() + where_;
      if (!detail.empty()) msg += " (" + detail + ")";
      record_.violations.push_back(std::move(msg));
    }
  }

 private:
  const SimplicialComplex& k_;
  SweepRecord& record_;
  std::string where_;
};

int top_betti_of_link(const std::vector<int>& lk_betti, int index) {
  const auto pos = static_cast<std::size_t>(index + 1);
  return pos < lk_betti.size() ? lk_betti[pos] : 0;
}

std::string dims_text(const TraceComponents& t) {
  return "tr=(" + std::to_string(t.tr0) + "," + std::to_string(t.tr1) + "," + std::to_string(t.tr2) +
         ") r=(" + std::to_string(t.r1) + "," + std::to_string(t.r2) + ")";
}

void check_orientability(const SimplicialComplex& k, SweepRecord& record) {
  if (!is_pseudomanifold(k)) return;
  Checker check(k, record, "");
  const bool walk = orientable_sign_walk(k).has_value();
  const int bq = reduced_betti(k, FieldSpec::rationals()).back();
  const int b3 = reduced_betti(k, FieldSpec::prime(3)).back();
  const int b2 = reduced_betti(k, FieldSpec::prime(2)).back();
  check.expect("orientability_walk_vs_homology", true, walk == (bq == 1) && walk == (b3 == 1),
               "walk=" + std::to_string(walk) + " bQ=" + std::to_string(bq) + " b3=" + std::to_string(b3));
  check.expect("orientability_char2", true, b2 == 1);
}

template <class F>
void check_grabe_dims(const SimplicialComplex& k, const F& field, bool normal_pseudomanifold,
                      Checker& check) {
  const int d = k.dim();
  std::map<Face, RelativeCycleBasis<F>> bases;
  for (Face sigma : k.faces()) {
    auto basis = relative_top_cycles(k, sigma, field);
    const auto lk_betti = reduced_betti(link(k, sigma), field);
    const int expected = top_betti_of_link(lk_betti, d - sigma.size());
    check.expect("grabe_isomorphism_dims", true, basis.dim() == expected,
                 "sigma=" + sigma.to_string());
    check.expect("normal_pseudomanifold_component_dim", normal_pseudomanifold, basis.dim() <= 1,
                 "sigma=" + sigma.to_string());
    bases.emplace(sigma, std::move(basis));
  }
  if (!normal_pseudomanifold) return;
  for (const auto& [sigma, target] : bases) {
    for (int l : sigma.vertices()) {
      const auto& source = bases.at(sigma.without(l));
      if (source.dim() == 0) continue;
      const auto map = iota_star(source, target, field);
      const bool iso = source.dim() == target.dim() && rank(map) == static_cast<std::size_t>(target.dim());
      check.expect("normal_pseudomanifold_iota_iso", true, iso,
                   "from " + sigma.without(l).to_string() + " to " + sigma.to_string());
    }
  }
}

void check_field(const SimplicialComplex& k, const FieldSpec& field, const SweepConfig& config,
                 SweepRecord& record) {
  Checker check(k, record, " over " + field.to_string());
  const int d = k.dim();
  const bool char2 = field.characteristic() == 2;

  check.expect("boundary_squares_to_zero", true, boundary_squares_to_zero(k, field));
  const auto betti = reduced_betti(k, field);
  const auto f = k.f_vector();
  long long alt_betti = 0, alt_faces = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    const int sign = i % 2 == 0 ? -1 : 1;  // index i is dimension i - 1
    alt_betti += sign * betti[i];
    alt_faces += sign * f[i];
  }
  check.expect("euler_identity", true, alt_betti == alt_faces);

  const bool pseudo = is_pseudomanifold(k);
  const bool normal = is_normal(k, field);
  const bool connected = is_connected(k);
  with_field(field, [&](const auto& fld) { check_grabe_dims(k, fld, normal && pseudo, check); });

  const bool pg = is_gorenstein_on_punctured_spectrum(k, field);
  const bool pg_all = is_gorenstein_on_punctured_spectrum(k, field, true);
  check.expect("punctured_gorenstein_vertex_shortcut", true, pg == pg_all);

  const bool gor = is_gorenstein(k, field);
  const bool manifold = is_homology_manifold(k, field);
  check.expect("connected_punctured_gorenstein_dim2_manifold", connected && d >= 2 && pg && !gor, manifold);
  check.expect("punctured_gorenstein_pseudomanifold_manifold", pg && connected && pseudo, manifold);
  check.expect("punctured_gorenstein_trichotomy", pg && connected,
               d <= 1 || !cone_face(k).empty() || manifold);

  const auto gens = grabe_module_generators(k, field);
  const bool orientable = pseudo && betti.back() != 0;
  const std::map<Face, int> unit_generator{{Face{}, 1}};
  check.expect("normal_pseudomanifold_char2_generator", normal && pseudo && char2,
               gens.multiplicity == unit_generator);
  if (!char2 && manifold && pseudo) {
    std::map<Face, int> at_vertices;
    for (int v : k.vertices()) at_vertices.emplace(Face::singleton(v), 1);
    check.expect("orientable_manifold_generator", orientable, gens.multiplicity == unit_generator);
    check.expect("nonorientable_manifold_vertex_generators", !orientable, gens.multiplicity == at_vertices);
  }

  const bool cm = is_cohen_macaulay(k, field);
  TraceClass tc = TraceClass::NotCohenMacaulay;
  if (cm) {
    try {
      tc = trace_class(k, field);
    } catch (const std::logic_error& e) {
      check.expect("trace_class_total", true, false, e.what());
    }
    const bool ng = is_nearly_gorenstein(k, field);
    const bool level = gens.single_degree();
    const int type = gens.total();
    check.expect("gorenstein_implies_nearly", gor, ng);
    check.expect("nearly_implies_punctured", ng, pg);
    check.expect("nearly_gorenstein_dim2_gorenstein", ng && d >= 2, gor);
    check.expect("char2_punctured_iff_nearly", char2 && pg, ng);
    check.expect("punctured_gorenstein_level", pg, level);
    check.expect("gorenstein_iff_quasi_candidate", true, gor == is_quasi_gorenstein_candidate(k, field));
    check.expect("nonorientable_manifold_level_type_n", manifold && pseudo && !orientable,
                 level && type == k.num_vertices());
    check.expect("classifier_classes_match_punctured", true,
                 pg == (tc == TraceClass::TrUnit || tc == TraceClass::TrMaximal || tc == TraceClass::TrMaxSquared));

    const auto& cap = config.oracle_options;
    if (config.oracle && k.num_vertices() <= cap.max_vertices && k.dim() <= cap.max_dim) {
      const auto t = trace_components(k, field, cap);
      const auto verdict = to_trace_class(t.verdict);
      if (pg) {
        check.expect("oracle_agrees_with_classifier", true, verdict == tc,
                     std::string(to_string(t.verdict)) + " vs " + std::string(to_string(tc)) + " " + dims_text(t));
      } else {
        check.expect("oracle_non_punctured_not_power", true, !verdict, dims_text(t));
      }
      check.expect("nonorientable_manifold_trace_dims", manifold && pseudo && !orientable,
                   t.tr0 == 0 && t.tr1 == 0 && t.tr2 == t.r2, dims_text(t));
      check.expect("level_type_ge_r1_gorenstein_iff_tr1_nzd", level && d >= 0 && type >= t.r1,
                   gor == t.tr1_has_nonzero_divisor, dims_text(t));
    }
  }
  record.classes.push_back(tc);
}

Json record_json(const SweepRecord& r) {
  Json out;
  Json classes = Json::array();
  for (auto c : r.classes) classes.push_back(std::string(to_string(c)));
  out["classes"] = std::move(classes);
  out["violations"] = r.violations;
  out["exercised"] = r.exercised;
  return out;
}

std::optional<SweepRecord> record_from_json(const Json& j, std::size_t field_count) {
  static const std::map<std::string, TraceClass> by_name{
      {"NotCohenMacaulay", TraceClass::NotCohenMacaulay},
      {"NotPuncturedGorenstein", TraceClass::NotPuncturedGorenstein},
      {"TrUnit", TraceClass::TrUnit},
      {"TrMaximal", TraceClass::TrMaximal},
      {"TrMaxSquared", TraceClass::TrMaxSquared}};
  SweepRecord r;
  for (const auto& c : j.at("classes")) {
    auto it = by_name.find(c.get<std::string>());
    if (it == by_name.end()) return std::nullopt;
    r.classes.push_back(it->second);
  }
  if (r.classes.size() != field_count) return std::nullopt;
  r.violations = j.at("violations").get<std::vector<std::string>>();
  r.exercised = j.at("exercised").get<std::map<std::string, long>>();
  return r;
}

std::string config_flags(const SweepConfig& c) {
  return "oracle=" + std::to_string(c.oracle) + ",cap=" + std::to_string(c.oracle_options.max_vertices) + "/" +
         std::to_string(c.oracle_options.max_dim);
}

}  // namespace

SweepRecord check_complex(const SimplicialComplex& k, const SweepConfig& config) {
  SweepRecord record;
  try {
    check_orientability(k, record);
    for (const auto& field : config.fields) check_field(k, field, config, record);
  } catch (const std::exception& e) {
    record.violations.push_back("exception: " + k.canonical_encoding() + ": " + e.what());
    record.classes.resize(config.fields.size(), TraceClass::NotCohenMacaulay);
  }
  return record;
}

SweepSummary run_sweep(const SweepConfig& config) {
  if (config.max_n < 0 || config.max_n > kMaxEnumerationVertices) {
    throw std::invalid_argument("enumeration refused: max-n = " + std::to_string(config.max_n) +
                                " exceeds the cap of " + std::to_string(kMaxEnumerationVertices));
  }
  if (config.fields.empty()) throw std::invalid_argument("sweep needs at least one field");

  SweepSummary summary;
  summary.max_n = config.max_n;
  summary.fields = config.fields;
  for (const auto& f : config.fields) summary.counts[f.to_string()];

  std::optional<ReportCache> cache;
  if (config.cache_dir) cache.emplace(*config.cache_dir);
  const std::string flags = config_flags(config);

  const unsigned threads = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  constexpr std::size_t kBatch = 512;

  ComplexStream stream(config.max_n);
  bool exhausted = false;
  while (!exhausted) {
    std::vector<SimplicialComplex> batch;
    while (batch.size() < kBatch) {
      auto k = stream.next();
      if (!k) {
        exhausted = true;
        break;
      }
      if (!k->is_void()) batch.push_back(std::move(*k));
    }

    std::vector<SweepRecord> records(batch.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < batch.size(); i = next++) {
        const auto& k = batch[i];
        if (cache) {
          const auto key = ReportCache::make_key("sweep-record", k, config.fields, flags);
          if (auto text = cache->load(key)) {
            if (auto r = record_from_json(Json::parse(*text), config.fields.size())) {
              records[i] = std::move(*r);
              continue;
            }
          }
          records[i] = check_complex(k, config);
          cache->store(key, record_json(records[i]).dump());
        } else {
          records[i] = check_complex(k, config);
        }
      }
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    // Merge in enumeration order so the summary is deterministic.
    for (auto& r : records) {
      ++summary.total;
      for (std::size_t f = 0; f < config.fields.size(); ++f) {
        ++summary.counts[config.fields[f].to_string()][r.classes[f]];
      }
      for (const auto& [name, count] : r.exercised) summary.exercised[name] += count;
      for (auto& v : r.violations) summary.violations.push_back(std::move(v));
    }
  }
  if (cache) summary.cache_hits = cache->hits();
  return summary;
}

Json to_json(const SweepSummary& s) {
  Json out;
  out["schema"] = kReportSchema;
  out["kind"] = "sweep";
  out["engine"] = kEngineVersion;
  out["max_n"] = s.max_n;
  Json fields = Json::array();
  for (const auto& f : s.fields) fields.push_back(f.to_string());
  out["fields"] = std::move(fields);
  out["total"] = s.total;
  Json counts;
  for (const auto& f : s.fields) {
    Json per;
    const auto& m = s.counts.at(f.to_string());
    for (auto c : {TraceClass::NotCohenMacaulay, TraceClass::NotPuncturedGorenstein, TraceClass::TrUnit,
                   TraceClass::TrMaximal, TraceClass::TrMaxSquared}) {
      auto it = m.find(c);
      per[std::string(to_string(c))] = it == m.end() ? 0L : it->second;
    }
    counts[f.to_string()] = std::move(per);
  }
  out["counts"] = std::move(counts);
  out["exercised"] = s.exercised;
  out["violations"] = s.violations;
  out["ok"] = s.ok();
  return out;
}

}  // namespace srtrace
