#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "srtrace/classifier.hpp"
#include "srtrace/complex.hpp"
#include "srtrace/field.hpp"
#include "srtrace/matrix.hpp"

namespace srtrace {

/// Hard limit on the ground set for exponent-vector arithmetic.
inline constexpr int kMaxOracleVertices = 16;

/// Exponent vector a ∈ ℕⁿ of a monomial x^a.
struct Monomial {
  std::array<std::uint8_t, kMaxOracleVertices> exponents{};

  static Monomial of_face(Face f);
  int degree() const;
  /// s(a) = {i : a_i != 0}.
  Face support() const;
  Monomial operator*(const Monomial& other) const;
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Element of k[Δ]: exponent vector -> nonzero coefficient. Monomials whose
/// support is not a face are zero in k[Δ] and never stored.
template <class F>
using GradedPoly = std::map<Monomial, typename F::value_type>;

/// All a with |a| = deg and s(a) ∈ K, in increasing exponent-vector order.
std::vector<Monomial> monomial_basis(const SimplicialComplex& k, int deg);

/// Homogeneous components of k[Δ] with cached bases and index lookups.
class StanleyReisnerRing {
 public:
  /// Throws std::invalid_argument if the ground set exceeds kMaxOracleVertices.
  explicit StanleyReisnerRing(SimplicialComplex k);

  const SimplicialComplex& complex() const { return complex_; }
  bool is_face(Face f) const { return face_table_[f.bits()]; }

  const std::vector<Monomial>& basis(int deg) const;
  std::size_t dim(int deg) const { return deg < 0 ? 0 : basis(deg).size(); }
  /// Position of m in basis(m.degree()); m must be a nonzero monomial of R.
  std::size_t index_of(const Monomial& m) const;

  template <class F>
  GradedPoly<F> multiply(const GradedPoly<F>& a, const GradedPoly<F>& b, const F& field) const;

  template <class F>
  Vec<F> to_vector(const GradedPoly<F>& p, int deg, const F& field) const;
  template <class F>
  GradedPoly<F> from_vector(const Vec<F>& v, int deg, const F& field) const;

  /// Matrix of multiplication by p : R_src → R_{src + deg p}.
  template <class F>
  Matrix<F> multiplication_matrix(const GradedPoly<F>& p, int p_deg, int src, const F& field) const;

 private:
  SimplicialComplex complex_;
  std::vector<bool> face_table_;
  mutable std::map<int, std::vector<Monomial>> bases_;
  mutable std::map<int, std::map<Monomial, std::size_t>> index_;
};

template <class F>
struct GrabeGenerator {
  Face sigma;
  int cycle_index;
  /// (d + 1) + |σ|
  int degree;
  /// Relative cycle Σ a_τ 1_τ (τ ⊇ σ, dim τ = d) this generator embeds.
  std::vector<std::pair<Face, typename F::value_type>> chain;
  GradedPoly<F> poly;
};

/// Generators of k(Δ) ⊂ R: the images Σ a_τ x_τ x_σ of the relative cycle bases.
template <class F>
struct GrabeIdeal {
  std::vector<GrabeGenerator<F>> generators;
  int max_degree() const;
};

/// Requires Cohen-Macaulay input. With keep_all = false, faces whose Gräbe
/// component is spanned by images from codimension-one subfaces are skipped.
template <class F>
GrabeIdeal<F> grabe_ideal(const SimplicialComplex& k, const F& field, bool keep_all = false);

/// Every facet F has a monomial of f supported inside F (f avoids all
/// minimal primes of k[Δ]). Throws std::invalid_argument on f = 0.
template <class Coeff>
bool is_nonzero_divisor(const std::map<Monomial, Coeff>& f, const SimplicialComplex& k) {
  if (f.empty()) throw std::invalid_argument("is_nonzero_divisor: zero polynomial");
  for (Face facet : k.facets()) {
    bool covered = false;
    for (const auto& term : f) {
      if (facet.contains(term.first.support())) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

enum class NzdStrategy {
  /// Padded generators, then (1, c, c², ..) combinations, then seeded random
  /// combinations; falls back to FacetLocalized.
  Schedule,
  /// Σ_F x_F · x_{min F}^e · g_F with g_F the first generator not in P_F.
  /// Each summand lives on monomials with support exactly F.
  FacetLocalized,
};

template <class F>
struct NonzeroDivisor {
  GradedPoly<F> poly;
  int degree;
  NzdStrategy strategy;
};

/// Throws std::runtime_error("nzd search failed ...") when every strategy fails.
template <class F>
NonzeroDivisor<F> find_nonzero_divisor(const GrabeIdeal<F>& ideal, const StanleyReisnerRing& ring,
                                       const F& field, NzdStrategy strategy);

/// Basis (coordinates over ring.basis(e + deg f)) of
/// {h ∈ R_{e + deg f} : h·g ∈ f·R for every generator g}.
template <class F>
std::vector<Vec<F>> colon_component(const NonzeroDivisor<F>& f, const GrabeIdeal<F>& ideal, int e,
                                    const StanleyReisnerRing& ring, const F& field);

enum class TraceVerdict { Unit, Maximal, MaxSquared, Other };

std::string_view to_string(TraceVerdict v);
std::optional<TraceClass> to_trace_class(TraceVerdict v);

struct TraceComponents {
  int tr0 = 0;
  int tr1 = 0;
  int tr2 = 0;
  int r1 = 0;
  int r2 = 0;
  TraceVerdict verdict = TraceVerdict::Other;
  int generator_count = 0;
  int nzd_degree = 0;
  /// After extending to an infinite field, tr₁ contains a nonzero divisor.
  bool tr1_has_nonzero_divisor = false;
};

struct OracleOptions {
  int max_vertices = 9;
  int max_dim = 3;
  NzdStrategy strategy = NzdStrategy::Schedule;
  bool keep_all_generators = false;
  /// Also check the module-structure and injectivity invariants while running.
  bool verify_invariants = false;
};

/// dim tr(ω)_t for t = 0, 1, 2 computed as k(Δ)·k(Δ)⁻¹ with
/// k(Δ)⁻¹ = (1/f)(fR : k(Δ)). Requires CM input within the caps.
TraceComponents trace_components(const SimplicialComplex& k, const FieldSpec& field,
                                 const OracleOptions& options = {});

/// Independent checks on Gräbe generators: x_l·g = 0 when σ ∪ {l} ∉ K, and
/// x_l·g equals the embedded restricted cycle when l ∉ σ, σ ∪ {l} ∈ K.
/// Returns an error description, or nullopt.
template <class F>
std::optional<std::string> check_generator_module_structure(const GrabeIdeal<F>& ideal,
                                                            const StanleyReisnerRing& ring,
                                                            const F& field);

/// Multiplication by f is injective on R_t for t = 0..max_deg.
template <class F>
bool multiplication_is_injective(const NonzeroDivisor<F>& f, const StanleyReisnerRing& ring,
                                 const F& field, int max_deg);

enum class CrosscheckStatus { Pass, Fail, NotApplicable };

std::string_view to_string(CrosscheckStatus s);

struct Crosscheck {
  CrosscheckStatus status = CrosscheckStatus::NotApplicable;
  TraceClass classifier;
  std::optional<TraceComponents> oracle;
  std::string note;
};

/// Runs the classifier and the oracle. Not applicable when the complex is not
/// CM or exceeds the caps. For CM complexes that are not punctured-Gorenstein
/// the oracle verdict is recorded; a verdict of 𝔪^i (i ≤ 2) there is a Fail.
Crosscheck crosscheck(const SimplicialComplex& k, const FieldSpec& field,
                      const OracleOptions& options = {});

}  // namespace srtrace
