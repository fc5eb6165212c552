#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "srtrace/complex.hpp"

namespace srtrace {

/// Boundary of the k-simplex on vertices 1..k+1 (a (k-1)-sphere).
SimplicialComplex simplex_boundary(int k);
/// The full k-simplex on vertices 1..k+1.
SimplicialComplex solid_simplex(int k);
/// Path with m edges on vertices 1..m+1.
SimplicialComplex path(int m);
/// m isolated vertices 1..m.
SimplicialComplex isolated_points(int m);
/// Cycle graph on vertices 1..m (m >= 3).
SimplicialComplex cycle(int m);
/// Six-vertex, ten-triangle real projective plane.
SimplicialComplex rp2_6();
/// Seven-vertex Möbius torus: facets {i,i+1,i+3} and {i,i+2,i+3} mod 7.
SimplicialComplex torus7();
/// (torus7 * {8}) ∪ (torus7 * {9}) on nine vertices: a normal pseudomanifold
/// that is not a homology manifold.
SimplicialComplex nat_example();

inline constexpr int kMaxEnumerationVertices = 6;

/// Streams every simplicial complex on the labeled ground set {1..n}, each
/// exactly once, as a facet antichain. The void complex and {∅} are included.
/// Subsets are visited by decreasing size, so a set may become a facet
/// only when no previously chosen facet contains it.
class ComplexStream {
 public:
  /// Throws std::invalid_argument for n > kMaxEnumerationVertices.
  explicit ComplexStream(int n);

  std::optional<SimplicialComplex> next();

 private:
  struct Frame {
    std::size_t index;  // next subset position to decide
    bool tried_include;
  };

  int n_;
  std::vector<Face> order_;
  std::vector<Face> chosen_;
  std::vector<Frame> stack_;
  bool done_ = false;
};

inline ComplexStream enumerate_complexes(int n) { return ComplexStream(n); }

/// Number of complexes produced by ComplexStream(n).
std::uint64_t count_complexes(int n);

}  // namespace srtrace
