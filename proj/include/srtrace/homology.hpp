#pragma once

#include <optional>
#include <vector>

#include "srtrace/complex.hpp"
#include "srtrace/field.hpp"
#include "srtrace/matrix.hpp"

namespace srtrace {

/// Matrix of ∂_i : C_i → C_{i-1} of the augmented chain complex.
/// Bases are the faces of each dimension sorted by mask value; the column of
/// a face {a_0 < .. < a_i} has entry (-1)^k in the row of the face missing a_k.
/// For i = 0 the target is the one-dimensional C_{-1} spanned by ∅.
template <class F>
struct ChainBoundary {
  int source_dim;
  std::vector<Face> source_basis;
  std::vector<Face> target_basis;
  Matrix<F> matrix;
};

template <class F>
ChainBoundary<F> boundary_matrix(const SimplicialComplex& k, int i, const F& field);

/// Relative boundary on chains of faces containing sigma: C_i(K, cost σ) has
/// basis the i-faces containing σ. With σ = ∅ this is the augmented complex.
template <class F>
ChainBoundary<F> relative_boundary_matrix(const SimplicialComplex& k, Face sigma, int i,
                                          const F& field);

/// Checks ∂_{i-1} ∘ ∂_i = 0 for every i.
bool boundary_squares_to_zero(const SimplicialComplex& k, const FieldSpec& field);

/// Reduced Betti numbers β̃_{-1}, .., β̃_{dim K}. Throws VoidComplexError.
template <class F>
std::vector<int> reduced_betti(const SimplicialComplex& k, const F& field);
std::vector<int> reduced_betti(const SimplicialComplex& k, const FieldSpec& field);

/// Explicit basis of H_d(K, cost σ), d = dim K. Top-dimensional relative
/// homology has no boundaries, so this is the kernel of the relative ∂_d;
/// the basis is the RREF of that kernel.
template <class F>
struct RelativeCycleBasis {
  Face sigma;
  /// d-faces containing sigma, sorted by mask; coordinates of `cycles`.
  std::vector<Face> faces;
  std::vector<Vec<F>> cycles;

  int dim() const { return static_cast<int>(cycles.size()); }
};

template <class F>
RelativeCycleBasis<F> relative_top_cycles(const SimplicialComplex& k, Face sigma, const F& field);
int relative_top_dim(const SimplicialComplex& k, Face sigma, const FieldSpec& field);

/// Restriction of chains from the d-faces containing `from` to the d-faces
/// containing `to` (from ⊆ to), in the given cycle bases. Rows index the
/// target basis, columns the source basis.
template <class F>
Matrix<F> iota_star(const RelativeCycleBasis<F>& from, const RelativeCycleBasis<F>& to,
                    const F& field);

/// Convenience form computing both cycle bases. Throws PreconditionError
/// unless tau ⊆ sigma are both faces of k.
template <class F>
Matrix<F> iota_star(const SimplicialComplex& k, Face tau, Face sigma, const F& field);

/// Every link (including lk ∅ = K) has the reduced homology of a sphere of its
/// own dimension.
bool is_homology_sphere(const SimplicialComplex& k, const FieldSpec& field);
/// Connected, and every vertex link is a homology sphere.
bool is_homology_manifold(const SimplicialComplex& k, const FieldSpec& field);

/// Sign propagation across ridges of a pseudomanifold. Returns one sign per
/// facet (in facet order) if a global orientation exists. Throws
/// PreconditionError if k is not a pseudomanifold.
std::optional<std::vector<int>> orientable_sign_walk(const SimplicialComplex& k);

/// Top reduced homology nonzero. Throws PreconditionError if k is not a pseudomanifold.
bool is_k_orientable(const SimplicialComplex& k, const FieldSpec& field);
/// Integral orientability, decided over ℚ (valid for pseudomanifolds).
bool is_orientable_Z(const SimplicialComplex& k);

/// Same as the field-free is_normal; normality does not depend on the field.
bool is_normal(const SimplicialComplex& k, const FieldSpec& field);

}  // namespace srtrace
