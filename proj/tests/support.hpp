#pragma once

// Test-side helpers. The brute-force routines here deliberately avoid the
// library's own algorithms so they can serve as independent oracles.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "srtrace/complex.hpp"

namespace srtest {

using srtrace::Face;
using srtrace::SimplicialComplex;

inline SimplicialComplex K(int n, const std::vector<std::vector<int>>& facets) {
  return SimplicialComplex::from_facets(n, facets);
}

inline Face F(const std::vector<int>& one_indexed) {
  std::vector<int> v;
  for (int x : one_indexed) v.push_back(x - 1);
  return Face::from_vertices(v);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Faces by brute force: every subset of the ground set lying in some facet.
inline std::vector<std::uint64_t> brute_faces(const SimplicialComplex& k) {
  std::vector<std::uint64_t> out;
  const int n = k.ground_size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    for (Face f : k.facets()) {
      if ((s & ~f.bits()) == 0) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

/// Rank over GF(2) of 0/1 rows packed into 64-bit words (xor basis).
inline int gf2_rank(std::vector<std::vector<std::uint64_t>> rows) {
  int rank = 0;
  const std::size_t words = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < words * 64; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return (r[w] & bit) != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) != rank && (rows[i][w] & bit)) {
        for (std::size_t j = 0; j < words; ++j) rows[i][j] ^= rows[static_cast<std::size_t>(rank)][j];
      }
    }
    ++rank;
  }
  return rank;
}

/// Reduced Betti numbers over GF(2), indices -1..dim, from packed boundary
/// matrices built directly off the brute-force face list.
inline std::vector<int> brute_betti_gf2(const SimplicialComplex& k) {
  const auto faces = brute_faces(k);
  const int d = k.dim();
  std::vector<std::vector<std::uint64_t>> by_size(static_cast<std::size_t>(d + 2));
  for (auto f : faces) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  std::vector<int> rank_of_boundary(static_cast<std::size_t>(d + 3), 0);  // index i+1 for ∂_i
  for (int i = 0; i <= d; ++i) {
    const auto& src = by_size[static_cast<std::size_t>(i + 1)];
    const auto& dst = by_size[static_cast<std::size_t>(i)];
    const std::size_t words = (dst.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    for (auto s : src) {
      std::vector<std::uint64_t> row(words, 0);
      for (std::size_t j = 0; j < dst.size(); ++j) {
        if ((dst[j] & ~s) == 0) row[j / 64] |= std::uint64_t{1} << (j % 64);
      }
      rows.push_back(std::move(row));
    }
    rank_of_boundary[static_cast<std::size_t>(i + 1)] = words == 0 ? 0 : gf2_rank(rows);
  }
  std::vector<int> betti;
  for (int i = -1; i <= d; ++i) {
    const auto idx = static_cast<std::size_t>(i + 1);
    betti.push_back(static_cast<int>(by_size[idx].size()) - rank_of_boundary[idx] - rank_of_boundary[idx + 1]);
  }
  return betti;
}

/// All down-sets of the Boolean lattice on m elements, as bitmasks over the
/// 2^m subsets (m <= 4).
inline std::vector<std::uint32_t> downsets(int m) {
  const int subsets = 1 << m;
  std::vector<std::uint32_t> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    bool closed = true;
    for (int s = 0; s < subsets && closed; ++s) {
      if (!((fam >> s) & 1U)) continue;
      for (int v = 0; v < m && closed; ++v) {
        if ((s >> v) & 1) closed = (fam >> (s & ~(1 << v))) & 1U;
      }
    }
    if (closed) out.push_back(static_cast<std::uint32_t>(fam));
  }
  return out;
}

/// Down-sets of B_{m+1} correspond to pairs B ⊆ A of down-sets of B_m
/// (A: members avoiding the new element, B: their traces of members with it).
inline std::uint64_t downset_count_by_pairs(int m) {
  const auto d = downsets(m);
  std::uint64_t count = 0;
  for (auto a : d)
    for (auto b : d)
      if ((b & ~a) == 0) ++count;
  return count;
}

}  // namespace srtest
