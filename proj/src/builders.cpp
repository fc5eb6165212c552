#include "srtrace/builders.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace srtrace {

namespace {

void require_at_least(int value, int minimum, const char* what) {
  if (value < minimum) {
    throw std::invalid_argument(std::string(what) + " must be >= " + std::to_string(minimum));
  }
}

}  // namespace

SimplicialComplex simplex_boundary(int k) {
  require_at_least(k, 1, "simplex_boundary(k): k");
  const Face all((std::uint64_t{1} << (k + 1)) - 1);
  std::vector<Face> facets;
  for (int v = 0; v <= k; ++v) facets.push_back(all.without(v));
  return SimplicialComplex(k + 1, std::move(facets));
}

SimplicialComplex solid_simplex(int k) {
  require_at_least(k, 0, "solid_simplex(k): k");
  return SimplicialComplex(k + 1, {Face((std::uint64_t{1} << (k + 1)) - 1)});
}

SimplicialComplex path(int m) {
  require_at_least(m, 1, "path(m): m");
  std::vector<Face> edges;
  for (int i = 0; i < m; ++i) edges.push_back(Face::singleton(i).with(i + 1));
  return SimplicialComplex(m + 1, std::move(edges));
}

SimplicialComplex isolated_points(int m) {
  require_at_least(m, 1, "isolated_points(m): m");
  std::vector<Face> pts;
  for (int i = 0; i < m; ++i) pts.push_back(Face::singleton(i));
  return SimplicialComplex(m, std::move(pts));
}

SimplicialComplex cycle(int m) {
  require_at_least(m, 3, "cycle(m): m");
  std::vector<Face> edges;
  for (int i = 0; i < m; ++i) edges.push_back(Face::singleton(i).with((i + 1) % m));
  return SimplicialComplex(m, std::move(edges));
}

SimplicialComplex rp2_6() {
  return SimplicialComplex::from_facets(6, {{1, 2, 3},
                                            {1, 3, 4},
                                            {1, 4, 5},
                                            {1, 5, 6},
                                            {1, 2, 6},
                                            {2, 3, 5},
                                            {3, 4, 6},
                                            {2, 4, 5},
                                            {3, 5, 6},
                                            {2, 4, 6}});
}

SimplicialComplex torus7() {
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
    facets.push_back({i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
  }
  return SimplicialComplex::from_facets(7, facets);
}

SimplicialComplex nat_example() {
  const auto t = torus7();
  const auto apex8 = SimplicialComplex::from_facets(9, {{8}});
  const auto apex9 = SimplicialComplex::from_facets(9, {{9}});
  auto facets = join(t, apex8).facets();
  const auto other = join(t, apex9).facets();
  facets.insert(facets.end(), other.begin(), other.end());
  return SimplicialComplex(9, std::move(facets));
}

ComplexStream::ComplexStream(int n) : n_(n) {
  if (n < 0 || n > kMaxEnumerationVertices) {
    throw std::invalid_argument("enumeration refused: n = " + std::to_string(n) +
                                " exceeds the limit of " +
                                std::to_string(kMaxEnumerationVertices) + " vertices");
  }
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) order_.emplace_back(bits);
  std::stable_sort(order_.begin(), order_.end(),
                   [](Face a, Face b) { return a.size() > b.size(); });
}

std::optional<SimplicialComplex> ComplexStream::next() {
  if (done_) return std::nullopt;

  std::size_t start = 0;
  if (!stack_.empty() || !chosen_.empty()) {
    // Backtrack to the deepest include decision and flip it to exclude.
    while (!stack_.empty() && !stack_.back().tried_include) stack_.pop_back();
    if (stack_.empty()) {
      done_ = true;
      return std::nullopt;
    }
    const std::size_t pos = stack_.back().index;
    stack_.pop_back();
    chosen_.pop_back();
    stack_.push_back({pos, false});
    start = pos + 1;
  } else if (order_.empty()) {
    done_ = true;
  }

  for (std::size_t pos = start; pos < order_.size(); ++pos) {
    const Face candidate = order_[pos];
    const bool allowed = std::none_of(chosen_.begin(), chosen_.end(),
                                      [candidate](Face f) { return f.contains(candidate); });
    if (allowed) {
      chosen_.push_back(candidate);
      stack_.push_back({pos, true});
    } else {
      stack_.push_back({pos, false});
    }
  }
  // A leaf where nothing was ever included has no include frames; mark
  // exhaustion for the following call.
  if (std::none_of(stack_.begin(), stack_.end(), [](const Frame& f) { return f.tried_include; })) {
    done_ = true;
  }
  return SimplicialComplex(n_, chosen_);
}

std::uint64_t count_complexes(int n) {
  ComplexStream stream(n);
  std::uint64_t count = 0;
  while (stream.next()) ++count;
  return count;
}

}  // namespace srtrace
