#include <catch2/catch_amalgamated.hpp>

#include <polareu/ideal_ops.hpp>

#include "test_support.hpp"

using namespace polareu;
using namespace polareu::test;

namespace {

Ideal<Fp> ideal(const PolyRing<Fp>& r, std::vector<std::string> gens,
                std::vector<std::string> names) {
  std::vector<Poly> polys;
  for (const auto& g : gens) polys.push_back(P(r, g, names));
  return Ideal<Fp>(r, std::move(polys));
}

bool same(const Ideal<Fp>& a, const Ideal<Fp>& b) { return ideals_equal(a, b); }

}  // namespace

TEST_CASE("eliminate examples", "[ideal]") {
  std::vector<std::string> tx{"t", "x"};
  auto r = ring(2);
  auto e = eliminate(ideal(r, {"t*x-1", "x"}, tx), 1);
  CHECK(same(e, Ideal<Fp>::unit(ring(1))));

  std::vector<std::string> yx{"y", "x"};
  auto graph = eliminate(ideal(r, {"y-x^2"}, yx), 1);
  CHECK(same(graph, Ideal<Fp>::zero(ring(1))));

  std::vector<std::string> xy{"x", "y"};
  auto lin = eliminate(ideal(r, {"x+y", "x-y"}, xy), 1);
  CHECK(same(lin, ideal(ring(1), {"y"}, {"y"})));

  CHECK_THROWS_AS(eliminate(ideal(r, {"x"}, xy), 2), InvalidInput);
}

TEST_CASE("elimination depends only on the ideal", "[ideal][property]") {
  SeededRng rng(77);
  auto r = ring(3);
  for (int k = 0; k < 40; ++k) {
    std::vector<Poly> gens{random_polynomial(r, rng, 4, 2), random_polynomial(r, rng, 4, 2)};
    // A second generating set: mix the generators with polynomial multipliers.
    auto a = random_polynomial(r, rng, 2, 1);
    std::vector<Poly> mixed{gens[0] + a * gens[1], gens[1], gens[0] * gens[1]};
    auto e1 = eliminate(Ideal<Fp>(r, gens), 1);
    auto e2 = eliminate(Ideal<Fp>(r, mixed), 1);
    REQUIRE(same(e1, e2));
  }
}

TEST_CASE("intersection", "[ideal]") {
  auto r = ring(2);
  auto n = xyz(2);
  CHECK(same(intersect(ideal(r, {"x"}, n), ideal(r, {"y"}, n)), ideal(r, {"x*y"}, n)));
  CHECK(same(intersect(ideal(r, {"x", "y"}, n), ideal(r, {"x-1", "y"}, n)),
             ideal(r, {"x^2-x", "y"}, n)));
}

TEST_CASE("saturation examples", "[ideal]") {
  auto r = ring(2);
  auto n = xyz(2);
  CHECK(same(saturate(ideal(r, {"x*y"}, n), ideal(r, {"x"}, n)), ideal(r, {"y"}, n)));
  CHECK(same(saturate(ideal(r, {"x^2"}, n), ideal(r, {"x"}, n)), Ideal<Fp>::unit(r)));
  CHECK(same(saturate(ideal(r, {"x*y"}, n), ideal(r, {"1"}, n)), ideal(r, {"x*y"}, n)));
  CHECK(same(saturate(ideal(r, {"x*y"}, n), ideal(r, {"0"}, n)), Ideal<Fp>::unit(r)));

  // Cusp y^2 = x^3 with l = 2x + 3y: the Lagrange ideal holds the origin
  // (multiplicity 3) and the point at parameter t0 = -2a/(3b) = -4/9 of
  // (t^2, t^3). Saturating by the singular locus keeps only (t0^2, t0^3).
  auto crit = ideal(r, {"y^2-x^3", "9*x^2+4*y"}, n);
  auto sing = ideal(r, {"y^2-x^3", "-3*x^2", "2*y"}, n);
  auto sat = saturate(crit, sing);
  auto g = groebner(sat, MonomialOrder::grevlex());
  REQUIRE(dimension(g) == 0);
  CHECK(degree_zero_dim(g) == 1);
  const auto& f = r.field;
  auto t0 = f.mul(f.from_int(-4), f.inv(f.from_int(9)));
  auto px = f.mul(t0, t0);
  auto py = f.mul(px, t0);
  CHECK(contains(g, Poly::variable(r, 0) - Poly::constant(r, px)));
  CHECK(contains(g, Poly::variable(r, 1) - Poly::constant(r, py)));
}

TEST_CASE("saturation properties on random ideals", "[ideal][property]") {
  SeededRng rng(4242);
  auto r = ring(2);
  for (int k = 0; k < 60; ++k) {
    std::vector<Poly> gens{random_polynomial(r, rng, 3, 3), random_polynomial(r, rng, 3, 2)};
    Ideal<Fp> I(r, gens);
    Ideal<Fp> J(r, {random_polynomial(r, rng, 2, 1), random_polynomial(r, rng, 2, 2)});
    auto s1 = saturate(I, J);
    REQUIRE(ideal_contains(s1, I));
    auto s2 = saturate(s1, J);
    REQUIRE(same(s1, s2));
  }
}

TEST_CASE("radicality of zero-dimensional ideals", "[ideal]") {
  auto r = ring(2);
  auto n = xyz(2);
  auto verdict = [&](std::vector<std::string> gens, std::uint64_t seed = 1) {
    return is_radical_zero_dim(groebner(ideal(r, gens, n), MonomialOrder::grevlex()), seed);
  };
  CHECK(verdict({"x-1", "y-2"}) == RadicalVerdict::kRadical);
  CHECK(verdict({"x^2", "y"}) == RadicalVerdict::kNotRadical);
  CHECK(verdict({"x^2-1", "y"}) == RadicalVerdict::kRadical);
  CHECK(verdict({"x^2", "x*y", "y^2"}) == RadicalVerdict::kNotRadical);
  CHECK(verdict({"x^2-1", "y^2-4"}) == RadicalVerdict::kRadical);
  CHECK(verdict({"x", "x-1"}) == RadicalVerdict::kRadical);  // empty
  CHECK_THROWS_AS(verdict({"x*y"}), InvalidInput);
}

TEST_CASE("radicality test reports indeterminate when no form separates", "[ideal]") {
  // Over F_p with zero trials nothing can be concluded for a radical ideal.
  auto r = ring(2);
  auto g = groebner(ideal(r, {"x^2-1", "y"}, xyz(2)), MonomialOrder::grevlex());
  CHECK(is_radical_zero_dim(g, 3, 0) == RadicalVerdict::kIndeterminate);
}

TEST_CASE("univariate gcd and squarefreeness", "[ideal]") {
  PrimeField f;
  using U = Univariate<PrimeField>;
  auto c = [&](std::initializer_list<std::int64_t> v) {
    std::vector<std::uint64_t> out;
    for (auto x : v) out.push_back(f.from_int(x));
    return U(f, out);
  };
  CHECK(c({-1, 0, 1}).is_squarefree());      // s^2 - 1
  CHECK_FALSE(c({0, 0, 1}).is_squarefree());  // s^2
  CHECK_FALSE(c({1, 2, 1}).is_squarefree());  // (s+1)^2
  CHECK(gcd(c({-1, 0, 1}), c({1, 1})).coefficients() == c({1, 1}).coefficients());
}
