#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace polareu;
using namespace polareu::test;

TEST_CASE("parse examples", "[parse]") {
  auto r3 = ring(3);
  auto p = P(r3, "x^2+y^2-z^2", xyz(3));
  CHECK(p.size() == 3);
  CHECK(p.degree() == 2);

  auto r1 = ring(1);
  CHECK(P(r1, "0", {"x"}).is_zero());

  auto r2 = ring(2);
  CHECK(P(r2, "(x+y)^2 - x^2 - 2*x*y", xyz(2)) == P(r2, "y^2", xyz(2)));
  CHECK(P(r2, "-(x - 3)*-2", xyz(2)) == P(r2, "2*x - 6", xyz(2)));
  CHECK(P(r2, "  x ^ 0 ", xyz(2)) == Poly::from_int(r2, 1));
}

TEST_CASE("parse errors carry positions", "[parse]") {
  auto r2 = ring(2);
  auto names = xyz(2);
  auto position_of = [&](const std::string& text) -> std::size_t {
    try {
      P(r2, text, names);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("expected a parse error for " << text);
    return 0;
  };
  CHECK(position_of("x + q") == 4);      // unknown variable
  CHECK(position_of("2x") == 1);         // juxtaposition
  CHECK(position_of("x*(y+1") == 6);     // missing ')'
  CHECK(position_of("x^y") == 2);        // exponent must be a literal
  CHECK(position_of("") == 0);
  CHECK(position_of("x +") == 3);
  CHECK(position_of("x $ y") == 2);
}

TEST_CASE("multi-character identifiers", "[parse]") {
  std::vector<std::string> names{"alpha", "b_2"};
  auto r = ring(2);
  auto p = parse_polynomial("alpha*b_2 - alpha^2", r, std::span<const std::string>(names));
  CHECK(to_string(p, std::span<const std::string>(names)) == "-alpha^2 + alpha*b_2");
  CHECK_THROWS_AS(validate_variable_names(std::vector<std::string>{"x", "x"}), InvalidInput);
  CHECK_THROWS_AS(validate_variable_names(std::vector<std::string>{"1x"}), InvalidInput);
}

TEST_CASE("print then parse is the identity", "[parse][property]") {
  SeededRng rng(23);
  auto names = xyz(4);
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    auto r = ring(4, order);
    for (int k = 0; k < 200; ++k) {
      auto p = random_polynomial(r, rng, 7, 5);
      // full-size coefficients too
      p += Poly::constant(r, r.field.random(rng)) * random_polynomial(r, rng, 2, 2);
      auto text = to_string(p, std::span<const std::string>(names));
      REQUIRE(P(r, text, names) == p);
    }
  }
}

TEST_CASE("rational parsing", "[parse]") {
  PolyRing<RationalField> r(RationalField{}, 2);
  auto p = P(r, "(x - 1)*(x + 1) - y*100000000000000000000", xyz(2));
  CHECK(p.size() == 3);
  CHECK(to_string(p, std::span<const std::string>(xyz(2))) ==
        "x^2 - 100000000000000000000*y - 1");
}
