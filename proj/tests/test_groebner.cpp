#include <catch2/catch_amalgamated.hpp>

#include <polareu/groebner.hpp>

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

}  // namespace

TEST_CASE("groebner examples", "[groebner]") {
  auto r2 = ring(2);
  auto n2 = xyz(2);

  SECTION("principal ideal") {
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      auto g = groebner(ideal(r2, {"3*x"}, n2), order);
      REQUIRE(g.size() == 1);
      CHECK(g.elements()[0] == P(r2, "x", n2));
    }
  }

  SECTION("linear system x+y, x-y") {
    auto g = groebner(ideal(r2, {"x+y", "x-y"}, n2), MonomialOrder::grevlex());
    REQUIRE(g.size() == 2);
    CHECK(g.elements()[0] == P(r2, "x", n2));
    CHECK(g.elements()[1] == P(r2, "y", n2));
    CHECK(dimension(g) == 0);
    CHECK(degree_zero_dim(g) == 1);
  }

  SECTION("twisted cubic under lex z > y > x") {
    auto r3 = ring(3, MonomialOrder::lex());
    std::vector<std::string> names{"z", "y", "x"};
    auto g = groebner(ideal(r3, {"y-x^2", "z-x^3"}, names), MonomialOrder::lex());
    REQUIRE(g.size() == 2);
    CHECK(g.elements()[0] == P(r3, "z-x^3", names));
    CHECK(g.elements()[1] == P(r3, "y-x^2", names));
    CHECK(dimension(g) == 1);  // x is free
    CHECK(contains(g, P(r3, "y^3-z^2", names)));
    CHECK(contains(g, P(r3, "x*z-y^2", names)));
  }

  SECTION("unit and zero ideals") {
    auto unit = groebner(ideal(r2, {"x", "x+1"}, n2), MonomialOrder::grevlex());
    CHECK(unit.is_unit());
    CHECK(dimension(unit) == -1);
    CHECK(degree_zero_dim(unit) == 0);
    auto zero = groebner(Ideal<Fp>::zero(ring(3)), MonomialOrder::grevlex());
    CHECK(zero.size() == 0);
    CHECK(dimension(zero) == 3);
  }
}

TEST_CASE("normal form", "[groebner]") {
  auto r2 = ring(2, MonomialOrder::lex());
  auto n2 = xyz(2);
  // y > x^2 is needed so that y - x^2 rewrites y; lex with y first
  std::vector<std::string> yx{"y", "x"};
  auto g = groebner(ideal(r2, {"y-x^2"}, yx), MonomialOrder::lex());
  CHECK(normal_form(P(r2, "y*(y-x^2)", yx), g).is_zero());
  CHECK(normal_form(P(r2, "1", yx), g) == P(r2, "1", yx));
  CHECK(normal_form(P(r2, "y^2 + x", yx), g) == P(r2, "x^4 + x", yx));
  CHECK(normal_form(P(r2, "x^2", yx), g) == P(r2, "y", yx) - P(r2, "y - x^2", yx));
}

TEST_CASE("dimension examples", "[groebner]") {
  auto r3 = ring(3);
  auto n3 = xyz(3);
  CHECK(dimension(groebner(ideal(r3, {"0"}, n3), MonomialOrder::grevlex())) == 3);
  CHECK(dimension(groebner(ideal(r3, {"x^2+y^2-z^2"}, n3), MonomialOrder::grevlex())) == 2);
  CHECK(dimension(groebner(ideal(r3, {"x*y", "x*z"}, n3), MonomialOrder::grevlex())) == 2);
  CHECK(dimension(groebner(ideal(r3, {"y-x^2", "z-x^3"}, n3), MonomialOrder::grevlex())) == 1);
  auto r2 = ring(2);
  CHECK(dimension(groebner(ideal(r2, {"x", "y"}, xyz(2)), MonomialOrder::grevlex())) == 0);
}

TEST_CASE("degree_zero_dim examples", "[groebner]") {
  auto r2 = ring(2);
  auto n2 = xyz(2);
  CHECK(degree_zero_dim(groebner(ideal(r2, {"x", "y"}, n2), MonomialOrder::grevlex())) == 1);
  CHECK(degree_zero_dim(groebner(ideal(r2, {"x^2", "y"}, n2), MonomialOrder::grevlex())) == 2);
  CHECK(degree_zero_dim(groebner(ideal(r2, {"x^2-1", "y^2-1"}, n2), MonomialOrder::grevlex())) == 4);
  // Cusp critical configuration before saturation: origin with multiplicity 3
  // plus one smooth point (hand elimination: x^3 (81 x - 16) = 0).
  auto crit = groebner(ideal(r2, {"y^2-x^3", "9*x^2+4*y"}, n2), MonomialOrder::grevlex());
  CHECK(degree_zero_dim(crit) == 4);
  CHECK_THROWS_AS(degree_zero_dim(groebner(ideal(r2, {"x*y"}, n2), MonomialOrder::grevlex())),
                  InvalidInput);
}

TEST_CASE("leading-term degree of positive-dimensional ideals", "[groebner]") {
  auto r3 = ring(3);
  auto n3 = xyz(3);
  auto deg = [&](std::vector<std::string> gens) {
    return leading_term_degree(groebner(ideal(r3, gens, n3), MonomialOrder::grevlex()));
  };
  CHECK(deg({"0"}) == 1);
  CHECK(deg({"x+y+z"}) == 1);
  CHECK(deg({"x^2+y^2-z^2"}) == 2);
  CHECK(deg({"y-x^2", "z-x^3"}) == 3);
  CHECK(deg({"x*y*z - 1"}) == 3);
  CHECK(deg({"x*y", "x*z"}) == 1);  // plane x = 0 plus the line y = z = 0
  CHECK_THROWS_AS(leading_term_degree(groebner(ideal(r3, {"x"}, n3), MonomialOrder::lex())),
                  InvalidInput);
}

TEST_CASE("budget exhaustion raises ResourceLimit", "[groebner]") {
  auto r3 = ring(3);
  auto n3 = xyz(3);
  GroebnerOptions tight;
  tight.max_reductions = 3;
  auto hard = ideal(r3, {"x^3-y*z+1", "y^3-x*z", "z^3-x*y-2"}, n3);
  CHECK_THROWS_AS(buchberger(hard, MonomialOrder::lex(), tight), ResourceLimit);
  auto cyclic3 = ideal(r3, {"x+y+z", "x*y+y*z+z*x", "x*y*z-1"}, n3);
  CHECK_THROWS_AS(groebner(cyclic3, MonomialOrder::grevlex(), tight), ResourceLimit);
  GroebnerOptions few_pairs;
  few_pairs.max_pairs = 0;
  CHECK_THROWS_AS(groebner(ideal(r3, {"x^2-y", "x*y-z"}, n3), MonomialOrder::grevlex(), few_pairs),
                  ResourceLimit);
  CHECK(degree_zero_dim(groebner(cyclic3, MonomialOrder::grevlex())) == 6);
}

TEST_CASE("randomized Groebner invariants", "[groebner][property]") {
  SeededRng rng(2024);
  int zero_dim_cases = 0;
  for (int k = 0; k < 250; ++k) {
    const std::size_t n = 2 + rng.below(2);
    auto r = ring(n);
    std::vector<Poly> gens;
    const std::size_t m = n + rng.below(2);
    for (std::size_t j = 0; j < m; ++j) gens.push_back(random_polynomial(r, rng, 4, 3));
    Ideal<Fp> I(r, gens);
    auto grevlex = groebner(I, MonomialOrder::grevlex());
    auto lex = groebner(I, MonomialOrder::lex());
    for (const auto* g : {&grevlex, &lex}) {
      REQUIRE(satisfies_buchberger_criterion(*g));
      REQUIRE(is_reduced(*g));
      for (const auto& f : gens) REQUIRE(contains(*g, f));
    }
    // Each basis lies in the ideal of the other: same ideal.
    for (const auto& f : lex.elements()) REQUIRE(contains(grevlex, f));
    REQUIRE(dimension(grevlex) == dimension(lex));
    if (dimension(grevlex) == 0) {
      ++zero_dim_cases;
      REQUIRE(degree_zero_dim(grevlex) == degree_zero_dim(lex));
    }
  }
  CHECK(zero_dim_cases >= 50);
}

TEST_CASE("FGLM conversion agrees with direct Buchberger", "[groebner][property]") {
  SeededRng rng(99);
  int converted = 0;
  for (int k = 0; k < 120; ++k) {
    auto r = ring(2);
    std::vector<Poly> gens{random_polynomial(r, rng, 4, 3), random_polynomial(r, rng, 4, 3)};
    Ideal<Fp> I(r, gens);
    auto graded = groebner(I, MonomialOrder::grevlex());
    if (dimension(graded) != 0) continue;
    ++converted;
    for (auto order : {MonomialOrder::lex(), MonomialOrder::elimination(1)}) {
      auto via_fglm = fglm(graded, order);
      auto direct = buchberger(I, order);
      REQUIRE(via_fglm.size() == direct.size());
      for (std::size_t j = 0; j < direct.size(); ++j) {
        REQUIRE(via_fglm.elements()[j] == direct.elements()[j]);
      }
    }
  }
  CHECK(converted >= 40);
}
