#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "srtrace/complex.hpp"
#include "srtrace/field.hpp"

namespace srtrace {

enum class TraceClass { NotCohenMacaulay, NotPuncturedGorenstein, TrUnit, TrMaximal, TrMaxSquared };

std::string_view to_string(TraceClass c);

enum class AlmostGorenstein { Yes, No, Undetermined };

std::string_view to_string(AlmostGorenstein a);

/// Reisner's criterion: every link (including K itself) has vanishing reduced
/// homology below its top dimension.
bool is_cohen_macaulay(const SimplicialComplex& k, const FieldSpec& field);

/// Hochster: the link of the maximal cone face is a homology sphere.
bool is_gorenstein(const SimplicialComplex& k, const FieldSpec& field);

/// Links of all nonempty faces are Gorenstein. By default only vertex links are
/// inspected; links of larger faces are links inside vertex links, and a
/// localization of a Gorenstein ring is Gorenstein.
bool is_gorenstein_on_punctured_spectrum(const SimplicialComplex& k, const FieldSpec& field,
                                         bool check_all_faces = false);

/// K is m >= 3 isolated vertices, or a path with m >= 3 edges.
bool is_points_or_long_path(const SimplicialComplex& k);

/// Requires Cohen-Macaulay input (PreconditionError otherwise).
bool is_nearly_gorenstein(const SimplicialComplex& k, const FieldSpec& field);

/// Minimal generators of the canonical module read off from the Gräbe
/// components. A squarefree face σ contributes the cokernel of the combined
/// maps H_d(K, cost(σ∖l)) → H_d(K, cost σ); non-squarefree degrees add
/// nothing since multiplication by x_l with l ∈ s(a) is the identity.
struct OmegaGenerators {
  /// Faces with positive multiplicity only.
  std::map<Face, int> multiplicity;

  int total() const;
  /// The distinct values of |σ| over generator positions.
  std::set<int> degrees() const;
  bool single_degree() const { return degrees().size() <= 1; }
};

/// Generator analysis of the Gräbe module without any Cohen-Macaulay guard.
/// On non-CM inputs this describes that module, not ω.
OmegaGenerators grabe_module_generators(const SimplicialComplex& k, const FieldSpec& field);

/// CM-guarded versions (PreconditionError on non-CM input).
OmegaGenerators omega_min_generators(const SimplicialComplex& k, const FieldSpec& field);
bool is_level(const SimplicialComplex& k, const FieldSpec& field);
int cm_type(const SimplicialComplex& k, const FieldSpec& field);

TraceClass trace_class(const SimplicialComplex& k, const FieldSpec& field);

/// Requires Cohen-Macaulay input.
AlmostGorenstein almost_gorenstein_class(const SimplicialComplex& k, const FieldSpec& field);

/// The Gräbe module has a single generator sitting at the maximal cone face γ,
/// and its squarefree components are one-dimensional exactly over faces
/// containing γ (the shape of R shifted by x_γ).
bool is_quasi_gorenstein_candidate(const SimplicialComplex& k, const FieldSpec& field);

}  // namespace srtrace
