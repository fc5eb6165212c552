#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "srtrace/builders.hpp"
#include "srtrace/errors.hpp"
#include "srtrace/homology.hpp"
#include "support.hpp"

using namespace srtrace;
using srtest::F;
using srtest::K;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec GF2 = FieldSpec::prime(2);
const FieldSpec GF3 = FieldSpec::prime(3);

using Ints = std::vector<int>;

}  // namespace

TEST_CASE("field specifiers") {
  CHECK(FieldSpec::parse("q") == Q);
  CHECK(FieldSpec::parse("gf:7") == FieldSpec::prime(7));
  CHECK(FieldSpec::prime(7).to_string() == "gf:7");
  CHECK_THROWS_WITH_AS(FieldSpec::parse("gf:4"), doctest::Contains("not a prime"), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse("gf:"), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse("r"), ParseError);
  CHECK_THROWS_AS(FieldSpec::prime(2147483659LL), std::invalid_argument);
  CHECK(FieldSpec::prime(2147483647LL).characteristic() == 2147483647U);
}

TEST_CASE("prime field arithmetic") {
  const PrimeField f(5);
  CHECK(f.inv(2) == 3);
  CHECK(f.from_int(-1) == 4);
  CHECK(f.mul(4, 4) == 1);
  const PrimeField big(2147483647U);
  CHECK(big.mul(big.inv(123456789), 123456789) == 1);
}

TEST_CASE("matrix basics") {
  const PrimeField f(5);
  const auto id = Matrix<PrimeField>::identity(f, 3);
  CHECK(rank(id) == 3);
  CHECK(kernel_basis(id).empty());

  const Matrix<PrimeField> zero(f, 2, 3);
  CHECK(rank(zero) == 0);
  CHECK(kernel_basis(zero).size() == 3);

  const auto m = Matrix<PrimeField>::from_ints(f, {{2}});
  CHECK(solve(m, Vec<PrimeField>{1}) == Vec<PrimeField>{3});

  const auto singular = Matrix<RationalField>::from_ints(RationalField{}, {{1, 2}, {2, 4}});
  CHECK_FALSE(solve(singular, Vec<RationalField>{1, 0}).has_value());
  CHECK(solve(singular, Vec<RationalField>{1, 2}).has_value());
  CHECK_THROWS_AS(solve(singular, Vec<RationalField>{1}), std::invalid_argument);
}

TEST_CASE("random matrices: rank-nullity and kernel soundness") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-2, 2), size(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<long long>> rows(static_cast<std::size_t>(size(rng)));
    const int cols = size(rng);
    for (auto& r : rows)
      for (int c = 0; c < cols; ++c) r.push_back(entry(rng));
    const auto q = Matrix<RationalField>::from_ints(RationalField{}, rows);
    const auto p = Matrix<PrimeField>::from_ints(PrimeField(3), rows);
    CHECK(rank(q) == rank(q.transpose()));
    CHECK(rank(p) == rank(p.transpose()));
    const auto kq = kernel_basis(q);
    CHECK(kq.size() + rank(q) == static_cast<std::size_t>(cols));
    for (const auto& v : kq) CHECK(is_zero_vector(RationalField{}, q.apply(v)));
    // A column-space vector is always solvable, and the solution checks out.
    Vec<RationalField> x(static_cast<std::size_t>(cols));
    for (auto& xi : x) xi = entry(rng);
    const auto b = q.apply(x);
    const auto sol = solve(q, b);
    REQUIRE(sol.has_value());
    CHECK(q.apply(*sol) == b);
  }
}

TEST_CASE("boundary maps square to zero") {
  for (const auto& k : {rp2_6(), torus7(), nat_example(), simplex_boundary(4), path(3)}) {
    for (const auto& field : {Q, GF2, GF3}) CHECK(boundary_squares_to_zero(k, field));
  }
}

TEST_CASE("boundary sign convention") {
  const auto tri = solid_simplex(2);
  const auto b = boundary_matrix(tri, 2, RationalField{});
  REQUIRE(b.source_basis == std::vector<Face>{F({1, 2, 3})});
  REQUIRE(b.target_basis == std::vector<Face>{F({1, 2}), F({1, 3}), F({2, 3})});
  // ∂[123] = [23] - [13] + [12]
  CHECK(b.matrix(0, 0) == 1);
  CHECK(b.matrix(1, 0) == -1);
  CHECK(b.matrix(2, 0) == 1);
}

TEST_CASE("reduced betti numbers") {
  CHECK(reduced_betti(cycle(4), Q) == Ints{0, 0, 1});
  CHECK(reduced_betti(rp2_6(), GF2) == Ints{0, 0, 1, 1});
  CHECK(reduced_betti(rp2_6(), Q) == Ints{0, 0, 0, 0});
  CHECK(reduced_betti(rp2_6(), GF3) == Ints{0, 0, 0, 0});
  CHECK(reduced_betti(torus7(), Q) == Ints{0, 0, 2, 1});
  CHECK(reduced_betti(isolated_points(3), Q) == Ints{0, 2});
  CHECK(reduced_betti(SimplicialComplex::irrelevant(2), Q) == Ints{1});
  CHECK(reduced_betti(solid_simplex(3), GF3) == Ints{0, 0, 0, 0, 0});
  CHECK_THROWS_AS((void)reduced_betti(SimplicialComplex::void_complex(2), Q), VoidComplexError);
}

TEST_CASE("GF(2) betti numbers agree with an independent bitset elimination") {
  for (int n = 1; n <= 4; ++n) {
    ComplexStream stream(n);
    while (auto k = stream.next()) {
      if (k->is_void()) continue;
      CHECK(reduced_betti(*k, GF2) == srtest::brute_betti_gf2(*k));
    }
  }
  for (const auto& k : {rp2_6(), torus7(), nat_example()}) CHECK(reduced_betti(k, GF2) == srtest::brute_betti_gf2(k));
}

TEST_CASE("Euler characteristic identity") {
  ComplexStream stream(4);
  while (auto k = stream.next()) {
    if (k->is_void()) continue;
    for (const auto& field : {Q, GF2}) {
      const auto betti = reduced_betti(*k, field);
      long long alt = 0;
      for (std::size_t i = 0; i < betti.size(); ++i) alt += (i % 2 == 0 ? -1 : 1) * betti[i];
      CHECK(alt == k->euler_characteristic() - 1);
    }
  }
}

TEST_CASE("relative top cycles") {
  const auto bd = simplex_boundary(2);
  const auto c = relative_top_cycles(bd, F({1}), RationalField{});
  CHECK(c.faces == std::vector<Face>{F({1, 2}), F({1, 3})});
  REQUIRE(c.dim() == 1);
  CHECK(c.cycles[0][0] == -c.cycles[0][1]);

  CHECK(relative_top_dim(rp2_6(), F({1}), Q) == 1);
  CHECK(relative_top_dim(rp2_6(), Face{}, Q) == 0);
  CHECK(relative_top_dim(rp2_6(), Face{}, GF2) == 1);
  CHECK_THROWS_AS((void)relative_top_dim(bd, F({1, 2, 3}), Q), PreconditionError);
}

TEST_CASE("relative top homology matches the link (excision)") {
  for (const auto& k : {rp2_6(), torus7(), nat_example(), path(3), isolated_points(3),
                        K(5, {{1, 2, 3}, {3, 4}, {4, 5}})}) {
    for (const auto& field : {Q, GF2}) {
      for (Face sigma : k.faces()) {
        const auto lk = reduced_betti(link(k, sigma), field);
        const auto idx = static_cast<std::size_t>(k.dim() - sigma.size() + 1);
        CHECK(relative_top_dim(k, sigma, field) == (idx < lk.size() ? lk[idx] : 0));
      }
    }
  }
}

TEST_CASE("iota star") {
  const RationalField q;
  const auto pts = isolated_points(3);
  const auto m = iota_star(pts, Face{}, F({1}), q);
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 2);
  CHECK(rank(m) == 1);

  const auto same = iota_star(rp2_6(), F({2}), F({2}), q);
  CHECK(same == Matrix<RationalField>::identity(q, 1));

  // Normal pseudomanifold: nonzero source components map isomorphically.
  const auto rp = rp2_6();
  for (Face sigma : rp.faces()) {
    for (int l : sigma.vertices()) {
      const auto map = iota_star(rp, sigma.without(l), sigma, q);
      if (map.cols() == 0) continue;
      CHECK(map.rows() == 1);
      CHECK(rank(map) == 1);
    }
  }
  CHECK_THROWS_AS((void)iota_star(pts, F({1}), F({2}), q), PreconditionError);
}

TEST_CASE("homology spheres and manifolds") {
  CHECK(is_homology_sphere(cycle(5), Q));
  CHECK(is_homology_sphere(SimplicialComplex::irrelevant(1), Q));
  CHECK(is_homology_manifold(rp2_6(), Q));
  CHECK_FALSE(is_homology_sphere(rp2_6(), Q));
  CHECK(is_homology_manifold(rp2_6(), GF2));
  for (const auto& field : {Q, GF2, GF3}) CHECK_FALSE(is_homology_manifold(nat_example(), field));
  CHECK(is_homology_manifold(torus7(), GF3));
}

TEST_CASE("orientability") {
  CHECK(orientable_sign_walk(simplex_boundary(3)).has_value());
  CHECK_FALSE(orientable_sign_walk(rp2_6()).has_value());
  CHECK(orientable_sign_walk(torus7()).has_value());
  CHECK_THROWS_AS((void)orientable_sign_walk(path(3)), PreconditionError);

  CHECK(is_k_orientable(rp2_6(), GF2));
  CHECK_FALSE(is_k_orientable(rp2_6(), GF3));
  CHECK_FALSE(is_orientable_Z(rp2_6()));
  for (const auto& field : {Q, GF2, GF3}) CHECK(is_k_orientable(torus7(), field));
  CHECK_THROWS_AS((void)is_k_orientable(isolated_points(3), Q), PreconditionError);
}

TEST_CASE("sign walk is a genuine cycle when it succeeds") {
  const RationalField q;
  for (const auto& k : {simplex_boundary(3), torus7(), cycle(6)}) {
    const auto signs = orientable_sign_walk(k);
    REQUIRE(signs.has_value());
    const auto b = boundary_matrix(k, k.dim(), q);
    Vec<RationalField> w;
    for (int s : *signs) w.emplace_back(s);
    CHECK(is_zero_vector(q, b.matrix.apply(w)));
  }
}

TEST_CASE("homology is relabeling invariant") {
  std::mt19937 rng(3);
  for (const auto& k : {rp2_6(), torus7(), K(6, {{1, 2, 3}, {3, 4}, {5, 6}})}) {
    for (int t = 0; t < 5; ++t) {
      const auto r = relabel(k, srtest::random_permutation(k.ground_size(), rng));
      for (const auto& field : {Q, GF2}) {
        CHECK(reduced_betti(r, field) == reduced_betti(k, field));
        CHECK(is_homology_manifold(r, field) == is_homology_manifold(k, field));
      }
    }
  }
}
