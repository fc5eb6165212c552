#include "srtrace/homology.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "srtrace/errors.hpp"

namespace srtrace {

namespace {

std::vector<Face> faces_containing(const std::vector<Face>& all, Face sigma, int dim) {
  std::vector<Face> out;
  for (Face f : all) {
    if (f.dim() == dim && f.contains(sigma)) out.push_back(f);
  }
  return out;
}

template <class F>
ChainBoundary<F> build_boundary(std::vector<Face> source, std::vector<Face> target, int i,
                                const F& field) {
  Matrix<F> m(field, target.size(), source.size());
  std::unordered_map<Face, std::size_t> row_of;
  for (std::size_t r = 0; r < target.size(); ++r) row_of.emplace(target[r], r);
  for (std::size_t c = 0; c < source.size(); ++c) {
    const Face f = source[c];
    int position = 0;
    for (int v : f.vertices()) {
      auto it = row_of.find(f.without(v));
      if (it != row_of.end()) m(it->second, c) = field.from_int(position % 2 == 0 ? 1 : -1);
      ++position;
    }
  }
  return ChainBoundary<F>{i, std::move(source), std::move(target), std::move(m)};
}

}  // namespace

template <class F>
ChainBoundary<F> boundary_matrix(const SimplicialComplex& k, int i, const F& field) {
  return relative_boundary_matrix(k, Face{}, i, field);
}

template <class F>
ChainBoundary<F> relative_boundary_matrix(const SimplicialComplex& k, Face sigma, int i,
                                          const F& field) {
  if (k.is_void()) throw VoidComplexError();
  const auto all = k.faces();
  return build_boundary(faces_containing(all, sigma, i), faces_containing(all, sigma, i - 1), i,
                        field);
}

bool boundary_squares_to_zero(const SimplicialComplex& k, const FieldSpec& spec) {
  return with_field(spec, [&](const auto& field) {
    for (int i = 1; i <= k.dim(); ++i) {
      const auto upper = boundary_matrix(k, i, field);
      const auto lower = boundary_matrix(k, i - 1, field);
      if (!(lower.matrix * upper.matrix).is_zero()) return false;
    }
    return true;
  });
}

template <class F>
std::vector<int> reduced_betti(const SimplicialComplex& k, const F& field) {
  if (k.is_void()) throw VoidComplexError();
  const int d = k.dim();
  const auto all = k.faces();
  // ranks[i + 1] = rank ∂_i for i in 0..d; ∂_{-1} and ∂_{d+1} vanish.
  std::vector<std::size_t> chain_dims(static_cast<std::size_t>(d + 2), 0);
  for (Face f : all) ++chain_dims[static_cast<std::size_t>(f.size())];
  std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(d + 3), 0);
  for (int i = 0; i <= d; ++i) {
    auto b = build_boundary(faces_containing(all, Face{}, i), faces_containing(all, Face{}, i - 1),
                            i, field);
    boundary_rank[static_cast<std::size_t>(i + 1)] = rank(std::move(b.matrix));
  }
  std::vector<int> betti;
  for (int i = -1; i <= d; ++i) {
    const auto idx = static_cast<std::size_t>(i + 1);
    betti.push_back(static_cast<int>(chain_dims[idx] - boundary_rank[idx] - boundary_rank[idx + 1]));
  }
  return betti;
}

std::vector<int> reduced_betti(const SimplicialComplex& k, const FieldSpec& spec) {
  return with_field(spec, [&](const auto& field) { return reduced_betti(k, field); });
}

template <class F>
RelativeCycleBasis<F> relative_top_cycles(const SimplicialComplex& k, Face sigma, const F& field) {
  if (k.is_void()) throw VoidComplexError();
  if (!k.contains(sigma)) throw PreconditionError("face " + sigma.to_string() + " not in complex");
  auto b = relative_boundary_matrix(k, sigma, k.dim(), field);
  auto kernel = kernel_basis(b.matrix);
  auto cycles = span_basis(field, b.source_basis.size(), kernel);
  return RelativeCycleBasis<F>{sigma, std::move(b.source_basis), std::move(cycles)};
}

int relative_top_dim(const SimplicialComplex& k, Face sigma, const FieldSpec& spec) {
  return with_field(spec, [&](const auto& field) { return relative_top_cycles(k, sigma, field).dim(); });
}

template <class F>
Matrix<F> iota_star(const RelativeCycleBasis<F>& from, const RelativeCycleBasis<F>& to,
                    const F& field) {
  if (!to.sigma.contains(from.sigma)) {
    throw PreconditionError("iota_star needs " + from.sigma.to_string() + " ⊆ " + to.sigma.to_string());
  }
  Matrix<F> result(field, to.cycles.size(), from.cycles.size());
  if (from.cycles.empty() || to.cycles.empty()) return result;

  std::unordered_map<Face, std::size_t> target_pos;
  for (std::size_t i = 0; i < to.faces.size(); ++i) target_pos.emplace(to.faces[i], i);

  std::vector<Vec<F>> restricted;
  for (const auto& cyc : from.cycles) {
    Vec<F> r(to.faces.size(), field.zero());
    for (std::size_t i = 0; i < from.faces.size(); ++i) {
      auto it = target_pos.find(from.faces[i]);
      if (it != target_pos.end()) r[it->second] = cyc[i];
    }
    restricted.push_back(std::move(r));
  }
  const auto basis = Matrix<F>::from_columns(field, to.faces.size(), to.cycles);
  const auto coords = solve_many(basis, restricted);
  for (std::size_t c = 0; c < coords.size(); ++c) {
    if (!coords[c]) throw std::logic_error("restricted chain is not a relative cycle");
    for (std::size_t r = 0; r < to.cycles.size(); ++r) result(r, c) = (*coords[c])[r];
  }
  return result;
}

template <class F>
Matrix<F> iota_star(const SimplicialComplex& k, Face tau, Face sigma, const F& field) {
  if (!sigma.contains(tau)) {
    throw PreconditionError("iota_star needs " + tau.to_string() + " ⊆ " + sigma.to_string());
  }
  return iota_star(relative_top_cycles(k, tau, field), relative_top_cycles(k, sigma, field), field);
}

namespace {

bool has_sphere_profile(const std::vector<int>& betti) {
  for (std::size_t i = 0; i < betti.size(); ++i) {
    const int expected = i + 1 == betti.size() ? 1 : 0;
    if (betti[i] != expected) return false;
  }
  return true;
}

}  // namespace

bool is_homology_sphere(const SimplicialComplex& k, const FieldSpec& spec) {
  if (k.is_void()) throw VoidComplexError();
  return with_field(spec, [&](const auto& field) {
    for (Face sigma : k.faces()) {
      if (!has_sphere_profile(reduced_betti(link(k, sigma), field))) return false;
    }
    return true;
  });
}

bool is_homology_manifold(const SimplicialComplex& k, const FieldSpec& spec) {
  if (k.is_void()) throw VoidComplexError();
  if (!is_connected(k)) return false;
  for (int v : k.vertices()) {
    if (!is_homology_sphere(link(k, Face::singleton(v)), spec)) return false;
  }
  return true;
}

std::optional<std::vector<int>> orientable_sign_walk(const SimplicialComplex& k) {
  if (k.is_void()) throw VoidComplexError();
  if (!is_pseudomanifold(k)) throw PreconditionError("orientable_sign_walk needs a pseudomanifold");
  const auto& facets = k.facets();
  std::unordered_map<Face, std::vector<std::size_t>> cofaces;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (int v : facets[i].vertices()) cofaces[facets[i].without(v)].push_back(i);
  }

  std::vector<int> sign(facets.size(), 0);
  sign[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t g = queue.front();
    queue.pop_front();
    const Face gamma = facets[g];
    for (int removed : gamma.vertices()) {
      const Face ridge = gamma.without(removed);
      const int k_pos = gamma.rank_of(removed);
      for (std::size_t b : cofaces.at(ridge)) {
        if (b == g) continue;
        const Face beta = facets[b];
        const int h_pos = beta.rank_of((beta - ridge).min_vertex());
        const int expected = ((k_pos + h_pos + 1) % 2 == 0 ? 1 : -1) * sign[g];
        if (sign[b] == 0) {
          sign[b] = expected;
          queue.push_back(b);
        } else if (sign[b] != expected) {
          return std::nullopt;
        }
      }
    }
  }
  return sign;
}

bool is_k_orientable(const SimplicialComplex& k, const FieldSpec& field) {
  if (k.is_void()) throw VoidComplexError();
  if (!is_pseudomanifold(k)) throw PreconditionError("orientability needs a pseudomanifold");
  return reduced_betti(k, field).back() != 0;
}

bool is_orientable_Z(const SimplicialComplex& k) { return is_k_orientable(k, FieldSpec::rationals()); }

bool is_normal(const SimplicialComplex& k, const FieldSpec&) { return is_normal(k); }

#define SRTRACE_INSTANTIATE_HOMOLOGY(F)                                                          \
  template ChainBoundary<F> boundary_matrix(const SimplicialComplex&, int, const F&);           \
  template ChainBoundary<F> relative_boundary_matrix(const SimplicialComplex&, Face, int,        \
                                                     const F&);                                  \
  template std::vector<int> reduced_betti(const SimplicialComplex&, const F&);                  \
  template RelativeCycleBasis<F> relative_top_cycles(const SimplicialComplex&, Face, const F&); \
  template Matrix<F> iota_star(const RelativeCycleBasis<F>&, const RelativeCycleBasis<F>&,      \
                               const F&);                                                        \
  template Matrix<F> iota_star(const SimplicialComplex&, Face, Face, const F&);

SRTRACE_INSTANTIATE_HOMOLOGY(PrimeField)
SRTRACE_INSTANTIATE_HOMOLOGY(RationalField)

#undef SRTRACE_INSTANTIATE_HOMOLOGY

}  // namespace srtrace
