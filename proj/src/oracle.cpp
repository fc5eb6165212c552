#include "srtrace/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "srtrace/errors.hpp"
#include "srtrace/homology.hpp"

namespace srtrace {

Monomial Monomial::of_face(Face f) {
  Monomial m;
  for (int v : f.vertices()) m.exponents[static_cast<std::size_t>(v)] = 1;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exponents) d += e;
  return d;
}

Face Monomial::support() const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0) bits |= std::uint64_t{1} << i;
  return Face(bits);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const int e = exponents[i] + other.exponents[i];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    m.exponents[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (exponents[i] > 1) s += "^" + std::to_string(exponents[i]);
  }
  return s.empty() ? "1" : s;
}

namespace {

/// Calls fn for each way of writing `total` as an ordered sum of `parts`
/// positive integers.
template <class Fn>
void for_each_composition(int total, int parts, std::vector<int>& acc, Fn&& fn) {
  if (parts == 0) {
    if (total == 0) fn(acc);
    return;
  }
  for (int first = 1; first <= total - (parts - 1); ++first) {
    acc.push_back(first);
    for_each_composition(total - first, parts - 1, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(const SimplicialComplex& k, int deg) {
  if (k.ground_size() > kMaxOracleVertices) {
    throw std::invalid_argument("monomial arithmetic supports at most 16 vertices");
  }
  std::vector<Monomial> out;
  if (deg < 0 || k.is_void()) return out;
  if (deg == 0) return {Monomial{}};
  for (Face sigma : k.faces()) {
    if (sigma.empty() || sigma.size() > deg) continue;
    const auto verts = sigma.vertices();
    std::vector<int> acc;
    for_each_composition(deg, sigma.size(), acc, [&](const std::vector<int>& parts) {
      Monomial m;
      for (std::size_t i = 0; i < verts.size(); ++i)
        m.exponents[static_cast<std::size_t>(verts[i])] = static_cast<std::uint8_t>(parts[i]);
      out.push_back(m);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

StanleyReisnerRing::StanleyReisnerRing(SimplicialComplex k) : complex_(std::move(k)) {
  if (complex_.ground_size() > kMaxOracleVertices) {
    throw std::invalid_argument("monomial arithmetic supports at most 16 vertices");
  }
  face_table_.assign(std::size_t{1} << complex_.ground_size(), false);
  for (Face f : complex_.faces()) face_table_[f.bits()] = true;
}

const std::vector<Monomial>& StanleyReisnerRing::basis(int deg) const {
  auto it = bases_.find(deg);
  if (it == bases_.end()) {
    it = bases_.emplace(deg, monomial_basis(complex_, deg)).first;
    auto& idx = index_[deg];
    for (std::size_t i = 0; i < it->second.size(); ++i) idx.emplace(it->second[i], i);
  }
  return it->second;
}

std::size_t StanleyReisnerRing::index_of(const Monomial& m) const {
  const int deg = m.degree();
  basis(deg);
  return index_.at(deg).at(m);
}

template <class F>
GradedPoly<F> StanleyReisnerRing::multiply(const GradedPoly<F>& a, const GradedPoly<F>& b,
                                           const F& field) const {
  GradedPoly<F> out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      const Monomial m = ma * mb;
      if (!is_face(m.support())) continue;
      auto [it, inserted] = out.try_emplace(m, field.zero());
      it->second = field.add(it->second, field.mul(ca, cb));
      if (field.is_zero(it->second)) out.erase(it);
    }
  }
  return out;
}

template <class F>
Vec<F> StanleyReisnerRing::to_vector(const GradedPoly<F>& p, int deg, const F& field) const {
  Vec<F> v(dim(deg), field.zero());
  for (const auto& [m, c] : p) {
    if (m.degree() != deg) throw std::invalid_argument("polynomial is not homogeneous of the requested degree");
    v[index_of(m)] = c;
  }
  return v;
}

template <class F>
GradedPoly<F> StanleyReisnerRing::from_vector(const Vec<F>& v, int deg, const F& field) const {
  const auto& b = basis(deg);
  GradedPoly<F> p;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!field.is_zero(v[i])) p.emplace(b[i], v[i]);
  return p;
}

template <class F>
Matrix<F> StanleyReisnerRing::multiplication_matrix(const GradedPoly<F>& p, int p_deg, int src,
                                                    const F& field) const {
  const int dst = src + p_deg;
  Matrix<F> m(field, dim(dst), dim(src));
  if (src < 0) return m;
  const auto& src_basis = basis(src);
  basis(dst);
  const auto& dst_index = index_.at(dst);
  for (std::size_t c = 0; c < src_basis.size(); ++c) {
    for (const auto& [mono, coeff] : p) {
      const Monomial prod = mono * src_basis[c];
      if (!is_face(prod.support())) continue;
      auto& entry = m(dst_index.at(prod), c);
      entry = field.add(entry, coeff);
    }
  }
  return m;
}

template <class F>
int GrabeIdeal<F>::max_degree() const {
  int d = 0;
  for (const auto& g : generators) d = std::max(d, g.degree);
  return d;
}

template <class F>
GrabeIdeal<F> grabe_ideal(const SimplicialComplex& k, const F& field, bool keep_all) {
  if (k.is_void()) throw VoidComplexError();
  const FieldSpec spec = field.spec();
  if (!is_cohen_macaulay(k, spec)) {
    throw PreconditionError("Gräbe ideal needs a Cohen-Macaulay complex over " + spec.to_string());
  }
  std::map<Face, int> keep;
  if (!keep_all) {
    keep = grabe_module_generators(k, spec).multiplicity;
  }
  GrabeIdeal<F> ideal;
  const int d = k.dim();
  for (Face sigma : k.faces()) {
    if (!keep_all && !keep.contains(sigma)) continue;
    const auto basis = relative_top_cycles(k, sigma, field);
    const Monomial x_sigma = Monomial::of_face(sigma);
    for (std::size_t c = 0; c < basis.cycles.size(); ++c) {
      GrabeGenerator<F> gen{sigma, static_cast<int>(c), d + 1 + sigma.size(), {}, {}};
      for (std::size_t i = 0; i < basis.faces.size(); ++i) {
        const auto& coeff = basis.cycles[c][i];
        if (field.is_zero(coeff)) continue;
        gen.chain.emplace_back(basis.faces[i], coeff);
        gen.poly.emplace(Monomial::of_face(basis.faces[i]) * x_sigma, coeff);
      }
      ideal.generators.push_back(std::move(gen));
    }
  }
  return ideal;
}

namespace {

template <class F>
GradedPoly<F> scale(const GradedPoly<F>& p, const typename F::value_type& c, const F& field) {
  GradedPoly<F> out;
  if (field.is_zero(c)) return out;
  for (const auto& [m, v] : p) out.emplace(m, field.mul(v, c));
  return out;
}

template <class F>
void add_into(GradedPoly<F>& acc, const GradedPoly<F>& p, const F& field) {
  for (const auto& [m, v] : p) {
    auto [it, inserted] = acc.try_emplace(m, field.zero());
    it->second = field.add(it->second, v);
    if (field.is_zero(it->second)) acc.erase(it);
  }
}

template <class F>
GradedPoly<F> monomial_poly(const Monomial& m, const F& field) {
  return GradedPoly<F>{{m, field.one()}};
}

template <class F>
std::optional<NonzeroDivisor<F>> facet_localized(const GrabeIdeal<F>& ideal,
                                                 const StanleyReisnerRing& ring, const F& field) {
  const auto& facets = ring.complex().facets();
  std::vector<const GrabeGenerator<F>*> chosen;
  int target = 0;
  for (Face facet : facets) {
    const GrabeGenerator<F>* pick = nullptr;
    for (const auto& g : ideal.generators) {
      const bool meets = std::any_of(g.poly.begin(), g.poly.end(), [facet](const auto& term) {
        return facet.contains(term.first.support());
      });
      if (meets) {
        pick = &g;
        break;
      }
    }
    if (pick == nullptr) return std::nullopt;
    chosen.push_back(pick);
    target = std::max(target, facet.size() + pick->degree);
  }
  GradedPoly<F> f;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const Face facet = facets[i];
    Monomial pad = Monomial::of_face(facet);
    const int extra = target - facet.size() - chosen[i]->degree;
    if (!facet.empty()) pad.exponents[static_cast<std::size_t>(facet.min_vertex())] += static_cast<std::uint8_t>(extra);
    add_into(f, ring.multiply(monomial_poly(pad, field), chosen[i]->poly, field), field);
  }
  if (f.empty() || !is_nonzero_divisor(f, ring.complex())) return std::nullopt;
  return NonzeroDivisor<F>{std::move(f), target, NzdStrategy::FacetLocalized};
}

}  // namespace

template <class F>
NonzeroDivisor<F> find_nonzero_divisor(const GrabeIdeal<F>& ideal, const StanleyReisnerRing& ring,
                                       const F& field, NzdStrategy strategy) {
  if (ideal.generators.empty()) throw std::runtime_error("nzd search failed: ideal has no generators");
  const auto& k = ring.complex();

  if (strategy == NzdStrategy::Schedule) {
    const int degree = ideal.max_degree();
    constexpr std::size_t kMaxCandidates = 512;
    std::vector<GradedPoly<F>> candidates;
    for (const auto& g : ideal.generators) {
      for (const auto& m : ring.basis(degree - g.degree)) {
        auto p = ring.multiply(monomial_poly(m, field), g.poly, field);
        if (!p.empty()) candidates.push_back(std::move(p));
        if (candidates.size() >= kMaxCandidates) break;
      }
      if (candidates.size() >= kMaxCandidates) break;
    }
    for (const auto& c : candidates) {
      if (is_nonzero_divisor(c, k)) return {c, degree, NzdStrategy::Schedule};
    }
    // (1, c, c², ..) for c = 1, 2, ..
    const long long max_c = field.characteristic() == 0 ? 8 : std::min<long long>(field.characteristic() - 1, 8);
    for (long long c = 1; c <= max_c; ++c) {
      GradedPoly<F> f;
      auto power = field.one();
      const auto base = field.from_int(c);
      for (const auto& cand : candidates) {
        add_into(f, scale(cand, power, field), field);
        power = field.mul(power, base);
      }
      if (!f.empty() && is_nonzero_divisor(f, k)) return {f, degree, NzdStrategy::Schedule};
    }
    std::mt19937 rng(0x5eed);
    const long long range = field.characteristic() == 0 ? 5 : static_cast<long long>(field.characteristic()) - 1;
    std::uniform_int_distribution<long long> coeff(0, range);
    for (int attempt = 0; attempt < 256; ++attempt) {
      GradedPoly<F> f;
      for (const auto& cand : candidates) add_into(f, scale(cand, field.from_int(coeff(rng)), field), field);
      if (!f.empty() && is_nonzero_divisor(f, k)) return {f, degree, NzdStrategy::Schedule};
    }
  }

  if (auto f = facet_localized(ideal, ring, field)) return *f;
  throw std::runtime_error("nzd search failed for " + k.canonical_encoding() + " (" +
                           std::to_string(ideal.generators.size()) + " generators)");
}

template <class F>
std::vector<Vec<F>> colon_component(const NonzeroDivisor<F>& f, const GrabeIdeal<F>& ideal, int e,
                                    const StanleyReisnerRing& ring, const F& field) {
  const int h_deg = e + f.degree;
  if (h_deg < 0) return {};
  const std::size_t h_dim = ring.dim(h_deg);
  if (h_dim == 0) return {};

  std::vector<Vec<F>> constraints;
  for (const auto& g : ideal.generators) {
    const int target = h_deg + g.degree;
    const auto g_map = ring.multiplication_matrix(g.poly, g.degree, h_deg, field);
    const int quotient_deg = e + g.degree;
    if (quotient_deg < 0) {
      // f·R_{<0} = 0, so h·g must vanish outright.
      for (std::size_t r = 0; r < g_map.rows(); ++r) constraints.push_back(g_map.row(r));
      continue;
    }
    const auto f_map = ring.multiplication_matrix(f.poly, f.degree, quotient_deg, field);
    // Functionals vanishing on the image of f: left kernel of f_map.
    const auto annihilators = kernel_basis(f_map.transpose());
    if (annihilators.empty()) continue;
    const auto p = Matrix<F>::from_rows(field, ring.dim(target), annihilators);
    const auto cond = p * g_map;
    for (std::size_t r = 0; r < cond.rows(); ++r) constraints.push_back(cond.row(r));
  }
  if (constraints.empty()) {
    std::vector<Vec<F>> all;
    for (std::size_t i = 0; i < h_dim; ++i) {
      Vec<F> v(h_dim, field.zero());
      v[i] = field.one();
      all.push_back(std::move(v));
    }
    return all;
  }
  return kernel_basis(Matrix<F>::from_rows(field, h_dim, constraints));
}

std::string_view to_string(TraceVerdict v) {
  switch (v) {
    case TraceVerdict::Unit: return "TrUnit";
    case TraceVerdict::Maximal: return "TrMaximal";
    case TraceVerdict::MaxSquared: return "TrMaxSquared";
    case TraceVerdict::Other: return "Other";
  }
  return "?";
}

std::optional<TraceClass> to_trace_class(TraceVerdict v) {
  switch (v) {
    case TraceVerdict::Unit: return TraceClass::TrUnit;
    case TraceVerdict::Maximal: return TraceClass::TrMaximal;
    case TraceVerdict::MaxSquared: return TraceClass::TrMaxSquared;
    case TraceVerdict::Other: return std::nullopt;
  }
  return std::nullopt;
}

std::string_view to_string(CrosscheckStatus s) {
  switch (s) {
    case CrosscheckStatus::Pass: return "PASS";
    case CrosscheckStatus::Fail: return "FAIL";
    case CrosscheckStatus::NotApplicable: return "N/A";
  }
  return "?";
}

template <class F>
std::optional<std::string> check_generator_module_structure(const GrabeIdeal<F>& ideal,
                                                            const StanleyReisnerRing& ring,
                                                            const F& field) {
  const auto& k = ring.complex();
  for (const auto& g : ideal.generators) {
    for (const auto& term : g.poly) {
      if (!ring.is_face(term.first.support())) {
        return "generator term " + term.first.to_string() + " is zero in k[Δ]";
      }
    }
    for (int l = 0; l < k.ground_size(); ++l) {
      if (g.sigma.contains(l)) continue;
      Monomial x_l;
      x_l.exponents[static_cast<std::size_t>(l)] = 1;
      const auto product = ring.multiply(monomial_poly(x_l, field), g.poly, field);
      const Face bigger = g.sigma.with(l);
      GradedPoly<F> expected;
      if (ring.is_face(bigger)) {
        const Monomial x_bigger = Monomial::of_face(bigger);
        for (const auto& [tau, coeff] : g.chain) {
          if (tau.contains(bigger)) expected.emplace(Monomial::of_face(tau) * x_bigger, coeff);
        }
      }
      if (product != expected) {
        return "x" + std::to_string(l + 1) + " acts wrongly on the generator from " + g.sigma.to_string();
      }
    }
  }
  return std::nullopt;
}

template <class F>
bool multiplication_is_injective(const NonzeroDivisor<F>& f, const StanleyReisnerRing& ring,
                                 const F& field, int max_deg) {
  for (int t = 0; t <= max_deg; ++t) {
    if (rank(ring.multiplication_matrix(f.poly, f.degree, t, field)) != ring.dim(t)) return false;
  }
  return true;
}

namespace {

template <class F>
TraceComponents trace_components_impl(const SimplicialComplex& k, const F& field,
                                      const OracleOptions& options) {
  const StanleyReisnerRing ring(k);
  const auto ideal = grabe_ideal(k, field, options.keep_all_generators);
  const auto f = find_nonzero_divisor(ideal, ring, field, options.strategy);

  if (options.verify_invariants) {
    if (auto err = check_generator_module_structure(ideal, ring, field)) throw std::logic_error(*err);
    if (!multiplication_is_injective(f, ring, field, 2)) {
      throw std::logic_error("multiplication by the chosen nonzero divisor is not injective");
    }
  }

  std::map<int, std::vector<Vec<F>>> colon_cache;
  auto colon = [&](int e) -> const std::vector<Vec<F>>& {
    auto it = colon_cache.find(e);
    if (it == colon_cache.end()) it = colon_cache.emplace(e, colon_component(f, ideal, e, ring, field)).first;
    return it->second;
  };

  TraceComponents out;
  out.r1 = static_cast<int>(ring.dim(1));
  out.r2 = static_cast<int>(ring.dim(2));
  out.generator_count = static_cast<int>(ideal.generators.size());
  out.nzd_degree = f.degree;

  std::array<std::vector<Vec<F>>, 3> trace_basis;
  for (int t = 0; t <= 2; ++t) {
    const auto divide_by_f = ring.multiplication_matrix(f.poly, f.degree, t, field);
    std::vector<Vec<F>> products;
    for (const auto& g : ideal.generators) {
      const int e = t - g.degree;
      const int h_deg = e + f.degree;
      for (const auto& h_vec : colon(e)) {
        const auto h = ring.from_vector(h_vec, h_deg, field);
        products.push_back(ring.to_vector(ring.multiply(h, g.poly, field), t + f.degree, field));
      }
    }
    const auto quotients = solve_many(divide_by_f, products);
    std::vector<Vec<F>> elements;
    for (const auto& q : quotients) {
      if (!q) throw std::logic_error("colon element times generator is not divisible by f");
      elements.push_back(*q);
    }
    trace_basis[static_cast<std::size_t>(t)] = span_basis(field, ring.dim(t), elements);
  }
  out.tr0 = static_cast<int>(trace_basis[0].size());
  out.tr1 = static_cast<int>(trace_basis[1].size());
  out.tr2 = static_cast<int>(trace_basis[2].size());

  if (out.tr0 == 1) {
    out.verdict = TraceVerdict::Unit;
  } else if (out.tr1 == out.r1) {
    out.verdict = TraceVerdict::Maximal;
  } else if (out.tr1 == 0 && out.tr2 == out.r2) {
    out.verdict = TraceVerdict::MaxSquared;
  } else {
    out.verdict = TraceVerdict::Other;
  }

  // Over an infinite field a subspace of R_1 contains a nonzero divisor iff it
  // lies in no minimal prime P_F, i.e. it has a vector touching every facet.
  const auto& r1_basis = ring.basis(1);
  out.tr1_has_nonzero_divisor = !trace_basis[1].empty();
  for (Face facet : k.facets()) {
    bool touches = false;
    for (const auto& v : trace_basis[1]) {
      for (std::size_t i = 0; i < v.size() && !touches; ++i) {
        if (!field.is_zero(v[i]) && facet.contains(r1_basis[i].support())) touches = true;
      }
      if (touches) break;
    }
    if (!touches) {
      out.tr1_has_nonzero_divisor = false;
      break;
    }
  }
  return out;
}

}  // namespace

TraceComponents trace_components(const SimplicialComplex& k, const FieldSpec& spec,
                                 const OracleOptions& options) {
  if (k.is_void()) throw VoidComplexError();
  if (k.num_vertices() > options.max_vertices || k.dim() > options.max_dim) {
    throw PreconditionError("oracle cap exceeded: " + std::to_string(k.num_vertices()) +
                            " vertices, dim " + std::to_string(k.dim()) + " (cap " +
                            std::to_string(options.max_vertices) + " vertices, dim " +
                            std::to_string(options.max_dim) + ")");
  }
  return with_field(spec, [&](const auto& field) { return trace_components_impl(k, field, options); });
}

Crosscheck crosscheck(const SimplicialComplex& k, const FieldSpec& field, const OracleOptions& options) {
  Crosscheck out;
  out.classifier = trace_class(k, field);
  if (out.classifier == TraceClass::NotCohenMacaulay) {
    out.note = "oracle needs a Cohen-Macaulay complex";
    return out;
  }
  if (k.num_vertices() > options.max_vertices || k.dim() > options.max_dim) {
    out.note = "outside oracle cap";
    return out;
  }
  out.oracle = trace_components(k, field, options);
  const auto verdict = to_trace_class(out.oracle->verdict);
  if (out.classifier == TraceClass::NotPuncturedGorenstein) {
    out.status = verdict ? CrosscheckStatus::Fail : CrosscheckStatus::Pass;
    out.note = "not punctured-Gorenstein; trace is no power m^i with i <= 2 expected";
  } else {
    out.status = verdict == out.classifier ? CrosscheckStatus::Pass : CrosscheckStatus::Fail;
  }
  return out;
}

#define SRTRACE_INSTANTIATE_ORACLE(F)                                                                \
  template GradedPoly<F> StanleyReisnerRing::multiply(const GradedPoly<F>&, const GradedPoly<F>&,   \
                                                      const F&) const;                               \
  template Vec<F> StanleyReisnerRing::to_vector(const GradedPoly<F>&, int, const F&) const;          \
  template GradedPoly<F> StanleyReisnerRing::from_vector(const Vec<F>&, int, const F&) const;        \
  template Matrix<F> StanleyReisnerRing::multiplication_matrix(const GradedPoly<F>&, int, int,      \
                                                               const F&) const;                      \
  template struct GrabeIdeal<F>;                                                                     \
  template GrabeIdeal<F> grabe_ideal(const SimplicialComplex&, const F&, bool);                      \
  template NonzeroDivisor<F> find_nonzero_divisor(const GrabeIdeal<F>&, const StanleyReisnerRing&,  \
                                                  const F&, NzdStrategy);                            \
  template std::vector<Vec<F>> colon_component(const NonzeroDivisor<F>&, const GrabeIdeal<F>&, int, \
                                               const StanleyReisnerRing&, const F&);                 \
  template std::optional<std::string> check_generator_module_structure(                              \
      const GrabeIdeal<F>&, const StanleyReisnerRing&, const F&);                                    \
  template bool multiplication_is_injective(const NonzeroDivisor<F>&, const StanleyReisnerRing&,    \
                                            const F&, int);

SRTRACE_INSTANTIATE_ORACLE(PrimeField)
SRTRACE_INSTANTIATE_ORACLE(RationalField)

#undef SRTRACE_INSTANTIATE_ORACLE

}  // namespace srtrace
