#include "srtrace/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "srtrace/errors.hpp"

namespace srtrace {

Face Face::from_vertices(const std::vector<int>& vertices) {
  std::uint64_t bits = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex index out of range");
    bits |= std::uint64_t{1} << v;
  }
  return Face(bits);
}

std::vector<int> Face::vertices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string Face::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) s += ",";
    s += std::to_string(v + 1);
    first = false;
  }
  return s + "}";
}

namespace {

std::vector<Face> prune_to_antichain(std::vector<Face> raw) {
  std::sort(raw.begin(), raw.end(), [](Face a, Face b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<Face> kept;
  for (Face f : raw) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [f](Face g) { return g.contains(f); });
    if (!dominated) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<Face> raw) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw std::out_of_range("ground set size out of range");
  const std::uint64_t ground = n == kMaxVertices ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (Face f : raw) {
    if ((f.bits() & ~ground) != 0) throw std::out_of_range("vertex outside ground set");
  }
  facets_ = prune_to_antichain(std::move(raw));
  dim_ = -2;
  for (Face f : facets_) dim_ = std::max(dim_, f.dim());
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<std::vector<int>>& raw) {
  std::vector<Face> faces;
  faces.reserve(raw.size());
  for (const auto& verts : raw) {
    std::uint64_t bits = 0;
    for (int v : verts) {
      if (v < 1 || v > n) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      }
      bits |= std::uint64_t{1} << (v - 1);
    }
    faces.emplace_back(bits);
  }
  return SimplicialComplex(n, std::move(faces));
}

bool SimplicialComplex::contains(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return g.contains(f); });
}

Face SimplicialComplex::vertex_set() const {
  Face all;
  for (Face f : facets_) all = all | f;
  return all;
}

std::vector<Face> SimplicialComplex::faces() const {
  std::unordered_set<Face> seen;
  for (Face f : facets_) {
    for_each_subset(f, [&](Face s) { seen.insert(s); });
  }
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int i) const {
  std::vector<Face> out;
  for (Face f : faces()) {
    if (f.dim() == i) out.push_back(f);
  }
  return out;
}

std::vector<long long> SimplicialComplex::f_vector() const {
  if (is_void()) return {};
  std::vector<long long> fv(static_cast<std::size_t>(dim_ + 2), 0);
  for (Face f : faces()) ++fv[static_cast<std::size_t>(f.size())];
  return fv;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  const auto fv = f_vector();
  for (std::size_t k = 1; k < fv.size(); ++k) chi += (k % 2 == 1 ? 1 : -1) * fv[k];
  return chi;
}

std::vector<std::vector<int>> SimplicialComplex::facet_lists() const {
  std::vector<std::vector<int>> out;
  for (Face f : facets_) {
    auto vs = f.vertices();
    for (int& v : vs) ++v;
    out.push_back(std::move(vs));
  }
  return out;
}

std::string SimplicialComplex::canonical_encoding() const {
  std::ostringstream os;
  os << "n=" << n_ << ";";
  bool first_facet = true;
  for (const auto& facet : facet_lists()) {
    if (!first_facet) os << "|";
    first_facet = false;
    for (std::size_t i = 0; i < facet.size(); ++i) os << (i ? "," : "") << facet[i];
  }
  if (is_void()) os << "void";
  return os.str();
}

SimplicialComplex link(const SimplicialComplex& k, Face sigma) {
  if (!k.contains(sigma)) throw PreconditionError("face " + sigma.to_string() + " not in complex");
  std::vector<Face> raw;
  for (Face f : k.facets()) {
    if (f.contains(sigma)) raw.push_back(f - sigma);
  }
  return SimplicialComplex(k.ground_size(), std::move(raw));
}

SimplicialComplex star(const SimplicialComplex& k, Face sigma) {
  if (!k.contains(sigma)) throw PreconditionError("face " + sigma.to_string() + " not in complex");
  std::vector<Face> raw;
  for (Face f : k.facets()) {
    if (f.contains(sigma)) raw.push_back(f);
  }
  return SimplicialComplex(k.ground_size(), std::move(raw));
}

SimplicialComplex costar(const SimplicialComplex& k, Face sigma) {
  if (!k.contains(sigma)) throw PreconditionError("face " + sigma.to_string() + " not in complex");
  std::vector<Face> raw;
  for (Face f : k.facets()) {
    if (!f.contains(sigma)) {
      raw.push_back(f);
      continue;
    }
    // Maximal subfaces of f missing at least one vertex of sigma.
    for (int v : sigma.vertices()) raw.push_back(f.without(v));
  }
  return SimplicialComplex(k.ground_size(), std::move(raw));
}

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Face> raw;
  for (Face f : a.facets()) {
    for (Face g : b.facets()) raw.push_back(f & g);
  }
  return SimplicialComplex(std::max(a.ground_size(), b.ground_size()), std::move(raw));
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (!(k.vertex_set() & l.vertex_set()).empty()) {
    throw std::invalid_argument("join requires disjoint vertex sets");
  }
  std::vector<Face> raw;
  for (Face f : k.facets()) {
    for (Face g : l.facets()) raw.push_back(f | g);
  }
  return SimplicialComplex(std::max(k.ground_size(), l.ground_size()), std::move(raw));
}

SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != k.ground_size()) {
    throw std::invalid_argument("permutation size does not match ground set");
  }
  std::vector<Face> raw;
  for (Face f : k.facets()) {
    std::uint64_t bits = 0;
    for (int v : f.vertices()) bits |= std::uint64_t{1} << perm[static_cast<std::size_t>(v)];
    raw.emplace_back(bits);
  }
  return SimplicialComplex(k.ground_size(), std::move(raw));
}

namespace {

void require_nonvoid(const SimplicialComplex& k) {
  if (k.is_void()) throw VoidComplexError();
}

/// Union-find over small integer ranges.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

bool is_pure(const SimplicialComplex& k) {
  require_nonvoid(k);
  return std::all_of(k.facets().begin(), k.facets().end(),
                     [&](Face f) { return f.dim() == k.dim(); });
}

int connected_components(const SimplicialComplex& k) {
  require_nonvoid(k);
  DisjointSets sets(k.ground_size());
  for (Face f : k.facets()) {
    if (f.empty()) continue;
    const int root = f.min_vertex();
    for (int v : f.vertices()) sets.unite(root, v);
  }
  std::unordered_set<int> roots;
  for (int v : k.vertices()) roots.insert(sets.find(v));
  return static_cast<int>(roots.size());
}

bool is_connected(const SimplicialComplex& k) { return connected_components(k) <= 1; }

bool is_strongly_connected(const SimplicialComplex& k) {
  if (!is_pure(k)) return false;
  const auto& facets = k.facets();
  const int m = static_cast<int>(facets.size());
  DisjointSets sets(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if ((facets[static_cast<std::size_t>(i)] & facets[static_cast<std::size_t>(j)]).dim() ==
          k.dim() - 1) {
        sets.unite(i, j);
      }
    }
  }
  for (int i = 1; i < m; ++i) {
    if (sets.find(i) != sets.find(0)) return false;
  }
  return true;
}

Face cone_face(const SimplicialComplex& k) {
  require_nonvoid(k);
  Face common = k.facets().front();
  for (Face f : k.facets()) common = common & f;
  return common;
}

bool is_pseudomanifold(const SimplicialComplex& k) {
  require_nonvoid(k);
  if (k.dim() <= 0) return false;
  if (!is_strongly_connected(k)) return false;
  for (Face ridge : k.faces_of_dim(k.dim() - 1)) {
    const auto count = std::count_if(k.facets().begin(), k.facets().end(),
                                     [ridge](Face f) { return f.contains(ridge); });
    if (count != 2) return false;
  }
  return true;
}

bool is_normal(const SimplicialComplex& k) {
  require_nonvoid(k);
  for (Face sigma : k.faces()) {
    if (sigma.dim() > k.dim() - 2) continue;
    if (!is_connected(link(k, sigma))) return false;
  }
  return true;
}

}  // namespace srtrace
