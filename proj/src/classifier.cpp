#include "srtrace/classifier.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "srtrace/errors.hpp"
#include "srtrace/homology.hpp"

namespace srtrace {

std::string_view to_string(TraceClass c) {
  switch (c) {
    case TraceClass::NotCohenMacaulay: return "NotCohenMacaulay";
    case TraceClass::NotPuncturedGorenstein: return "NotPuncturedGorenstein";
    case TraceClass::TrUnit: return "TrUnit";
    case TraceClass::TrMaximal: return "TrMaximal";
    case TraceClass::TrMaxSquared: return "TrMaxSquared";
  }
  return "?";
}

std::string_view to_string(AlmostGorenstein a) {
  switch (a) {
    case AlmostGorenstein::Yes: return "Yes";
    case AlmostGorenstein::No: return "No";
    case AlmostGorenstein::Undetermined: return "Undetermined";
  }
  return "?";
}

namespace {

void require_nonvoid(const SimplicialComplex& k) {
  if (k.is_void()) throw VoidComplexError();
}

void require_cm(const SimplicialComplex& k, const FieldSpec& field, const char* what) {
  if (!is_cohen_macaulay(k, field)) {
    throw PreconditionError(std::string(what) + " undefined here: complex is not Cohen-Macaulay over " +
                            field.to_string());
  }
}

}  // namespace

bool is_cohen_macaulay(const SimplicialComplex& k, const FieldSpec& spec) {
  require_nonvoid(k);
  return with_field(spec, [&](const auto& field) {
    for (Face sigma : k.faces()) {
      const auto betti = reduced_betti(link(k, sigma), field);
      // betti has entries for -1..dim lk; all but the last must vanish.
      if (std::any_of(betti.begin(), betti.end() - 1, [](int b) { return b != 0; })) return false;
    }
    return true;
  });
}

bool is_gorenstein(const SimplicialComplex& k, const FieldSpec& field) {
  require_nonvoid(k);
  return is_homology_sphere(link(k, cone_face(k)), field);
}

bool is_gorenstein_on_punctured_spectrum(const SimplicialComplex& k, const FieldSpec& field,
                                         bool check_all_faces) {
  require_nonvoid(k);
  for (Face sigma : k.faces()) {
    if (sigma.empty()) continue;
    if (!check_all_faces && sigma.size() != 1) continue;
    if (!is_gorenstein(link(k, sigma), field)) return false;
  }
  return true;
}

bool is_points_or_long_path(const SimplicialComplex& k) {
  if (k.is_void()) return false;
  const int nv = k.num_vertices();
  if (k.dim() == 0) return nv >= 3;
  if (k.dim() != 1 || !is_pure(k) || !is_connected(k)) return false;
  const int edges = static_cast<int>(k.facets().size());
  if (edges != nv - 1 || edges < 3) return false;
  std::unordered_map<int, int> degree;
  for (Face e : k.facets())
    for (int v : e.vertices()) ++degree[v];
  int leaves = 0;
  for (const auto& [v, deg] : degree) {
    if (deg == 1) ++leaves;
    else if (deg != 2) return false;
  }
  return leaves == 2;
}

bool is_nearly_gorenstein(const SimplicialComplex& k, const FieldSpec& field) {
  require_nonvoid(k);
  require_cm(k, field, "nearly Gorenstein");
  return is_gorenstein(k, field) || is_points_or_long_path(k);
}

int OmegaGenerators::total() const {
  int t = 0;
  for (const auto& [face, m] : multiplicity) t += m;
  return t;
}

std::set<int> OmegaGenerators::degrees() const {
  std::set<int> out;
  for (const auto& [face, m] : multiplicity) out.insert(face.size());
  return out;
}

OmegaGenerators grabe_module_generators(const SimplicialComplex& k, const FieldSpec& spec) {
  require_nonvoid(k);
  return with_field(spec, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    std::unordered_map<Face, RelativeCycleBasis<F>> bases;
    const auto faces = k.faces();
    for (Face sigma : faces) bases.emplace(sigma, relative_top_cycles(k, sigma, field));

    OmegaGenerators gens;
    for (Face sigma : faces) {
      const auto& target = bases.at(sigma);
      if (target.dim() == 0) continue;
      std::vector<Vec<F>> images;
      for (int l : sigma.vertices()) {
        const auto map = iota_star(bases.at(sigma.without(l)), target, field);
        for (std::size_t c = 0; c < map.cols(); ++c) images.push_back(map.column(c));
      }
      const int covered = static_cast<int>(span_dim(field, target.cycles.size(), images));
      if (target.dim() > covered) gens.multiplicity[sigma] = target.dim() - covered;
    }
    return gens;
  });
}

OmegaGenerators omega_min_generators(const SimplicialComplex& k, const FieldSpec& field) {
  require_nonvoid(k);
  require_cm(k, field, "omega generators");
  return grabe_module_generators(k, field);
}

bool is_level(const SimplicialComplex& k, const FieldSpec& field) {
  return omega_min_generators(k, field).single_degree();
}

int cm_type(const SimplicialComplex& k, const FieldSpec& field) {
  return omega_min_generators(k, field).total();
}

TraceClass trace_class(const SimplicialComplex& k, const FieldSpec& field) {
  require_nonvoid(k);
  if (!is_cohen_macaulay(k, field)) return TraceClass::NotCohenMacaulay;
  if (!is_gorenstein_on_punctured_spectrum(k, field)) return TraceClass::NotPuncturedGorenstein;
  if (is_gorenstein(k, field)) return TraceClass::TrUnit;
  if (is_points_or_long_path(k)) return TraceClass::TrMaximal;
  const bool manifold = is_homology_manifold(k, field);
  if (!manifold || k.dim() < 1 || is_k_orientable(k, field)) {
    throw std::logic_error("punctured-Gorenstein CM complex outside every trace class: " +
                           k.canonical_encoding());
  }
  return TraceClass::TrMaxSquared;
}

AlmostGorenstein almost_gorenstein_class(const SimplicialComplex& k, const FieldSpec& field) {
  require_nonvoid(k);
  require_cm(k, field, "almost Gorenstein");
  if (is_gorenstein(k, field)) return AlmostGorenstein::Yes;
  if (!is_gorenstein_on_punctured_spectrum(k, field)) return AlmostGorenstein::Undetermined;
  return is_points_or_long_path(k) ? AlmostGorenstein::Yes : AlmostGorenstein::No;
}

bool is_quasi_gorenstein_candidate(const SimplicialComplex& k, const FieldSpec& field) {
  require_nonvoid(k);
  const Face gamma = cone_face(k);
  const auto gens = grabe_module_generators(k, field);
  if (gens.total() != 1 || gens.multiplicity.begin()->first != gamma) return false;
  for (Face tau : k.faces()) {
    const int expected = tau.contains(gamma) ? 1 : 0;
    if (relative_top_dim(k, tau, field) != expected) return false;
  }
  return true;
}

}  // namespace srtrace
