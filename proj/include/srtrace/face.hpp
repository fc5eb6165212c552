#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace srtrace {

inline constexpr int kMaxVertices = 64;

/// A set of vertices stored as a 64-bit mask. Vertex v (0-indexed) is bit v.
/// Ordering is by raw mask value, which is the canonical order used for chain
/// bases and face listings.
class Face {
 public:
  constexpr Face() = default;
  constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

  static Face from_vertices(const std::vector<int>& vertices);
  static constexpr Face singleton(int v) { return Face(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int dim() const { return size() - 1; }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool contains(Face other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr bool is_subset_of(Face other) const { return other.contains(*this); }

  constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
  constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
  /// Set difference.
  constexpr Face operator-(Face o) const { return Face(bits_ & ~o.bits_); }

  constexpr Face with(int v) const { return Face(bits_ | (std::uint64_t{1} << v)); }
  constexpr Face without(int v) const { return Face(bits_ & ~(std::uint64_t{1} << v)); }

  /// Smallest vertex; undefined on the empty face.
  constexpr int min_vertex() const { return std::countr_zero(bits_); }

  /// Vertices in increasing order (0-indexed).
  std::vector<int> vertices() const;

  /// Position of v among the sorted vertices of this face (v must belong to it).
  constexpr int rank_of(int v) const {
    return std::popcount(bits_ & ((std::uint64_t{1} << v) - 1));
  }

  /// "{1,2,4}" with 1-indexed labels.
  std::string to_string() const;

  friend constexpr bool operator==(Face, Face) = default;
  friend constexpr auto operator<=>(Face a, Face b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Calls fn(sub) for every subset of face, including the empty set and face itself.
template <class Fn>
void for_each_subset(Face face, Fn&& fn) {
  const std::uint64_t all = face.bits();
  std::uint64_t sub = all;
  while (true) {
    fn(Face(sub));
    if (sub == 0) break;
    sub = (sub - 1) & all;
  }
}

}  // namespace srtrace

template <>
struct std::hash<srtrace::Face> {
  std::size_t operator()(srtrace::Face f) const noexcept {
    return std::hash<std::uint64_t>{}(f.bits());
  }
};
