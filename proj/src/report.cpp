#include "srtrace/report.hpp"

#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>

#include "srtrace/homology.hpp"

namespace srtrace {

namespace {

Json face_json(Face f) {
  Json arr = Json::array();
  for (int v : f.vertices()) arr.push_back(v + 1);
  return arr;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

ClassificationReport classify(const SimplicialComplex& k, const std::string& id, const FieldSpec& field,
                              const ReportOptions& options) {
  ClassificationReport r;
  r.complex_id = id;
  r.field = field;

  r.pure = is_pure(k);
  r.connected = is_connected(k);
  r.strongly_connected = is_strongly_connected(k);
  r.normal = is_normal(k, field);
  r.pseudomanifold = is_pseudomanifold(k);
  r.homology_manifold = is_homology_manifold(k, field);
  r.homology_sphere = is_homology_sphere(k, field);
  if (r.pseudomanifold) {
    r.orientable_Z = is_orientable_Z(k);
    r.k_orientable = is_k_orientable(k, field);
  }
  r.cohen_macaulay = is_cohen_macaulay(k, field);
  r.gorenstein = is_gorenstein(k, field);
  r.punctured_gorenstein = is_gorenstein_on_punctured_spectrum(k, field);
  if (options.debug_all_faces) {
    r.punctured_gorenstein_all_faces = is_gorenstein_on_punctured_spectrum(k, field, true);
  }
  r.quasi_gorenstein_candidate = is_quasi_gorenstein_candidate(k, field);
  r.trace_class = trace_class(k, field);
  r.reduced_betti = reduced_betti(k, field);
  r.cone_face = cone_face(k);
  r.module_generators = grabe_module_generators(k, field).multiplicity;

  if (r.cohen_macaulay) {
    r.nearly_gorenstein = is_nearly_gorenstein(k, field);
    int total = 0;
    std::set<int> degrees;
    for (const auto& [face, m] : r.module_generators) {
      total += m;
      degrees.insert(face.size());
    }
    r.cm_type = total;
    r.level = degrees.size() <= 1;
    r.almost_gorenstein = almost_gorenstein_class(k, field);
  }
  if (options.oracle) r.oracle = crosscheck(k, field, options.oracle_options);
  return r;
}

Json complex_json(const SimplicialComplex& k, const std::string& id) {
  Json facets = Json::array();
  for (const auto& f : k.facet_lists()) facets.push_back(f);
  Json out;
  out["id"] = id;
  out["ground_size"] = k.ground_size();
  out["num_vertices"] = k.num_vertices();
  out["dim"] = k.dim();
  out["f_vector"] = k.f_vector();
  out["facets"] = std::move(facets);
  out["encoding"] = k.canonical_encoding();
  return out;
}

Json to_json(const TraceComponents& t) {
  Json out;
  out["dims"] = {t.tr0, t.tr1, t.tr2};
  out["ring_dims"] = {1, t.r1, t.r2};
  out["verdict"] = std::string(to_string(t.verdict));
  out["generator_count"] = t.generator_count;
  out["nzd_degree"] = t.nzd_degree;
  out["tr1_has_nonzero_divisor"] = t.tr1_has_nonzero_divisor;
  return out;
}

Json to_json(const ClassificationReport& r) {
  Json flags;
  flags["pure"] = r.pure;
  flags["connected"] = r.connected;
  flags["strongly_connected"] = r.strongly_connected;
  flags["normal"] = r.normal;
  flags["pseudomanifold"] = r.pseudomanifold;
  flags["homology_manifold"] = r.homology_manifold;
  flags["homology_sphere"] = r.homology_sphere;
  flags["orientable_Z"] = optional_json(r.orientable_Z);
  flags["k_orientable"] = optional_json(r.k_orientable);
  flags["cohen_macaulay"] = r.cohen_macaulay;
  flags["gorenstein"] = r.gorenstein;
  flags["punctured_gorenstein"] = r.punctured_gorenstein;
  if (r.punctured_gorenstein_all_faces) flags["punctured_gorenstein_all_faces"] = *r.punctured_gorenstein_all_faces;
  flags["nearly_gorenstein"] = optional_json(r.nearly_gorenstein);
  flags["level"] = optional_json(r.level);
  flags["quasi_gorenstein_candidate"] = r.quasi_gorenstein_candidate;

  Json gens = Json::array();
  for (const auto& [face, m] : r.module_generators) {
    Json g;
    g["face"] = face_json(face);
    g["multiplicity"] = m;
    gens.push_back(std::move(g));
  }

  Json out;
  out["field"] = r.field.to_string();
  out["flags"] = std::move(flags);
  out["cm_type"] = optional_json(r.cm_type);
  out["trace_class"] = std::string(to_string(r.trace_class));
  out["almost_gorenstein"] =
      r.almost_gorenstein ? Json(std::string(to_string(*r.almost_gorenstein))) : Json(nullptr);
  out["reduced_betti"] = r.reduced_betti;
  out["cone_face"] = face_json(r.cone_face);
  // Gräbe-module generators; they describe ω only when cohen_macaulay holds.
  out["module_generators"] = std::move(gens);
  if (r.oracle) {
    Json o;
    o["status"] = std::string(to_string(r.oracle->status));
    o["trace"] = r.oracle->oracle ? to_json(*r.oracle->oracle) : Json(nullptr);
    o["note"] = r.oracle->note;
    out["oracle"] = std::move(o);
  } else {
    out["oracle"] = nullptr;
  }
  return out;
}

Json classification_document(const SimplicialComplex& k, const std::string& id,
                             const std::vector<FieldSpec>& fields, const ReportOptions& options) {
  Json doc;
  doc["schema"] = kReportSchema;
  doc["kind"] = "classification";
  doc["engine"] = kEngineVersion;
  doc["complex"] = complex_json(k, id);
  Json reports = Json::array();
  for (const auto& field : fields) reports.push_back(to_json(classify(k, id, field, options)));
  doc["reports"] = std::move(reports);
  return doc;
}

Json homology_document(const SimplicialComplex& k, const std::string& id,
                       const std::vector<FieldSpec>& fields) {
  Json doc;
  doc["schema"] = kReportSchema;
  doc["kind"] = "homology";
  doc["engine"] = kEngineVersion;
  doc["complex"] = complex_json(k, id);
  Json rows = Json::array();
  for (const auto& field : fields) {
    const auto betti = reduced_betti(k, field);
    Json row;
    row["field"] = field.to_string();
    row["reduced_betti"] = std::vector<int>(betti.begin() + 1, betti.end());
    row["reduced_betti_minus_one"] = betti.front();
    row["euler_characteristic"] = k.euler_characteristic();
    rows.push_back(std::move(row));
  }
  doc["homology"] = std::move(rows);
  return doc;
}

std::string render_summary(const Json& document) {
  std::ostringstream out;
  const auto& c = document.at("complex");
  out << c.at("id").get<std::string>() << ": " << c.at("num_vertices").get<int>() << " vertices, dim "
      << c.at("dim").get<int>() << ", " << c.at("facets").size() << " facets\n";
  for (const auto& r : document.at("reports")) {
    const auto& flags = r.at("flags");
    out << "  [" << r.at("field").get<std::string>() << "] " << r.at("trace_class").get<std::string>();
    out << "  CM=" << flags.at("cohen_macaulay") << " Gor=" << flags.at("gorenstein")
        << " pGor=" << flags.at("punctured_gorenstein") << " level=" << flags.at("level")
        << " type=" << r.at("cm_type");
    const auto& o = r.at("oracle");
    if (!o.is_null()) {
      out << "  oracle " << o.at("status").get<std::string>();
      if (!o.at("trace").is_null()) out << " tr=" << o.at("trace").at("dims").dump();
    }
    out << '\n';
  }
  return out.str();
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
    h >>= 4;
  }
  return out;
}

ReportCache::ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string ReportCache::make_key(const std::string& kind, const SimplicialComplex& k,
                                  const std::vector<FieldSpec>& fields, const std::string& flags) {
  std::string key = kind + "|" + kEngineVersion + "|schema=" + std::to_string(kReportSchema) + "|" +
                    k.canonical_encoding() + "|";
  for (const auto& f : fields) key += f.to_string() + ",";
  return key + "|" + flags;
}

std::filesystem::path ReportCache::path_for(const std::string& key) const {
  return dir_ / (fnv1a_hex(key) + ".json");
}

std::optional<std::string> ReportCache::load(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::string stored_key;
  if (!std::getline(in, stored_key) || stored_key != key) return std::nullopt;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  ++hits_;
  return text;
}

void ReportCache::store(const std::string& key, const std::string& text) const {
  const auto target = path_for(key);
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << key << '\n' << text;
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace srtrace
