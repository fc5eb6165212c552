#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srtrace/face.hpp"

namespace srtrace {

/// A finite simplicial complex on the ground set {0, .., n-1}, stored as its
/// facet antichain. Immutable after construction.
///
/// Two degenerate complexes are representable: the void complex (no faces,
/// not even the empty one) and the irrelevant complex {∅}, whose only facet
/// is the empty face.
class SimplicialComplex {
 public:
  /// The void complex on zero vertices.
  SimplicialComplex() = default;

  /// Builds the complex generated by `raw` (0-indexed faces), pruning dominated
  /// sets. Throws std::out_of_range if a vertex is >= n.
  SimplicialComplex(int n, std::vector<Face> raw);

  /// 1-indexed entry point used by file readers and builders.
  static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& raw);

  static SimplicialComplex void_complex(int n = 0) { return SimplicialComplex(n, {}); }
  static SimplicialComplex irrelevant(int n = 0) { return SimplicialComplex(n, {Face{}}); }

  int ground_size() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_.front().empty(); }

  /// Maximal face dimension; -1 for {∅}, -2 for the void complex.
  int dim() const { return dim_; }

  bool contains(Face f) const;

  /// Union of all facets (vertices that actually occur in the complex).
  Face vertex_set() const;
  std::vector<int> vertices() const { return vertex_set().vertices(); }
  int num_vertices() const { return vertex_set().size(); }

  /// All faces, sorted by mask value. Includes ∅ unless void.
  std::vector<Face> faces() const;
  /// Faces of the given dimension, sorted by mask value.
  std::vector<Face> faces_of_dim(int i) const;
  /// f_{-1}, f_0, .., f_dim.
  std::vector<long long> f_vector() const;

  /// Sum of (-1)^i f_i over i >= 0.
  long long euler_characteristic() const;

  /// Facet list as 1-indexed vertex lists, in canonical order.
  std::vector<std::vector<int>> facet_lists() const;
  /// "n=4;1,2|2,3" style canonical text, stable across runs.
  std::string canonical_encoding() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

 private:
  int n_ = 0;
  std::vector<Face> facets_;
  int dim_ = -2;
};

// Face-level constructions. All of these keep the original vertex labels.

/// lk σ = {τ : τ ∪ σ ∈ K, τ ∩ σ = ∅}. Throws PreconditionError if σ ∉ K.
SimplicialComplex link(const SimplicialComplex& k, Face sigma);
/// st σ = {τ : τ ∪ σ ∈ K}.
SimplicialComplex star(const SimplicialComplex& k, Face sigma);
/// cost σ = {τ ∈ K : σ ⊄ τ}. cost ∅ is the void complex.
SimplicialComplex costar(const SimplicialComplex& k, Face sigma);

/// Faces on both sides of two complexes with equal ground sets.
SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b);

/// Join of complexes with disjoint vertex sets; ground set is the larger one.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);

/// Relabels vertices: vertex v becomes perm[v]. perm must be a permutation of
/// {0, .., n-1}.
SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<int>& perm);

bool is_pure(const SimplicialComplex& k);
/// The 1-skeleton on the occurring vertices has at most one component.
bool is_connected(const SimplicialComplex& k);
bool is_strongly_connected(const SimplicialComplex& k);

/// Number of connected components of the 1-skeleton (0 for {∅}).
int connected_components(const SimplicialComplex& k);

/// Maximal cone face: the vertices common to every facet.
Face cone_face(const SimplicialComplex& k);

/// Strongly connected and every (d-1)-face lies in exactly two facets.
/// Complexes of dimension <= 0 are reported as non-pseudomanifolds.
bool is_pseudomanifold(const SimplicialComplex& k);

/// Links of all faces of dimension <= dim K - 2 are connected.
bool is_normal(const SimplicialComplex& k);

}  // namespace srtrace
