#include <catch2/catch_amalgamated.hpp>

#include <string>

#include <polareu/commands.hpp>

using namespace polareu;

namespace {

std::string catalog(const std::string& name) {
  return std::string(POLAREU_CATALOG_DIR) + "/" + name + ".json";
}

std::string fixture(const std::string& name) {
  return std::string(POLAREU_FIXTURE_DIR) + "/" + name + ".json";
}

const CheckVerdict& verdict(const RunReport& r, const std::string& prefix) {
  for (const auto& c : r.checks) {
    if (c.name.rfind(prefix, 0) == 0) return c;
  }
  FAIL("no check named " << prefix);
  throw;
}

}  // namespace

TEST_CASE("variety files parse with optional sections", "[io]") {
  auto f = parse_variety_file(R"({
    "format_version": 1, "name": "cusp", "variables": ["x", "y"],
    "polynomials": ["y^2 - x^3"], "dimension": 1,
    "strata": [
      {"name": "regular", "top": true, "chi": 0, "chi_slice": 3},
      {"name": "origin", "chi": 1, "local_eu": "unknown"}
    ],
    "expected": {"eu": 2, "alphas": [1, 3]}
  })");
  CHECK(f.name == "cusp");
  CHECK(f.variables == std::vector<std::string>{"x", "y"});
  CHECK(f.dimension == 1);
  REQUIRE(f.strata);
  REQUIRE(f.strata->strata.size() == 2);
  // top stratum without local_eu is filled with 1
  CHECK(f.strata->strata[0].local_eu == 1);
  CHECK_FALSE(f.strata->strata[1].local_eu);
  CHECK_FALSE(f.strata->strata[1].chi_slice);
  REQUIRE(f.expected);
  CHECK(f.expected->eu == 2);
  CHECK(f.expected->alphas == std::vector<std::int64_t>{1, 3});
  CHECK_FALSE(f.expected->chi);

  auto bare = parse_variety_file(
      R"({"format_version": 1, "variables": ["x"], "polynomials": ["x"], "dimension": 0})");
  CHECK(bare.name.empty());
  CHECK_FALSE(bare.strata);
  CHECK_FALSE(bare.expected);
}

TEST_CASE("malformed variety files are parse errors", "[io]") {
  const char* bad[] = {
      "{",
      "[]",
      R"({"variables": ["x"], "polynomials": ["x"], "dimension": 0})",
      R"({"format_version": 2, "variables": ["x"], "polynomials": ["x"], "dimension": 0})",
      R"({"format_version": 1, "polynomials": ["x"], "dimension": 0})",
      R"({"format_version": 1, "variables": ["x"], "polynomials": [], "dimension": 0})",
      R"({"format_version": 1, "variables": ["x"], "polynomials": "x", "dimension": 0})",
      R"({"format_version": 1, "variables": ["x"], "polynomials": ["x"], "dimension": "0"})",
      R"({"format_version": 1, "variables": ["x"], "polynomials": ["x"], "dimension": 0,
          "strata": [{"name": "a", "chi": 1, "local_eu": "maybe", "top": true}]})",
      R"({"format_version": 1, "variables": ["x"], "polynomials": ["x"], "dimension": 0,
          "strata": [{"name": "a", "chi": 1}]})",
      R"({"format_version": 1, "variables": ["x"], "polynomials": ["x"], "dimension": 0,
          "strata": [{"name": "a", "chi": 1, "top": true}, {"name": "b", "chi": 1, "top": true}]})",
      R"({"format_version": 1, "variables": ["x"], "polynomials": ["x"], "dimension": 0,
          "strata": [{"name": "a", "chi": 1, "local_eu": 2, "top": true}]})",
      R"({"format_version": 1, "variables": ["x"], "polynomials": ["x"], "dimension": 0,
          "expected": {"eu": "one"}})",
  };
  for (const char* text : bad) {
    INFO(text);
    CHECK_THROWS_AS(parse_variety_file(text), ParseError);
  }
}

TEST_CASE("JSON syntax errors carry a byte position", "[io]") {
  try {
    parse_variety_file(R"({"format_version": 1,, })");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.position() == 22);
  }
}

TEST_CASE("to_variety rejects bad polynomials, names and dimensions", "[io]") {
  auto base = [] {
    return parse_variety_file(
        R"({"format_version": 1, "variables": ["x", "y"], "polynomials": ["y - x^2"], "dimension": 1})");
  };
  PrimeField fp;
  CHECK_NOTHROW(to_variety(base(), fp));

  auto f = base();
  f.polynomials = {"y - x^^2"};
  CHECK_THROWS_AS(to_variety(f, fp), ParseError);
  f = base();
  f.polynomials = {"y - t"};
  CHECK_THROWS_AS(to_variety(f, fp), ParseError);
  f = base();
  f.variables = {"x", "x"};
  CHECK_THROWS_AS(to_variety(f, fp), InvalidInput);
  f = base();
  f.dimension = 0;
  CHECK_THROWS_AS(to_variety(f, fp), InvalidInput);
  CHECK_THROWS_AS(load_variety_file(fixture("does_not_exist")), ParseError);
}

TEST_CASE("eu and profile on the catalog", "[io][catalog]") {
  struct Row {
    const char* name;
    std::vector<std::int64_t> alphas;
    std::int64_t eu;
  };
  const Row rows[] = {
      {"linear_plane", {0, 0, 1}, 1}, {"parabola", {1, 2}, 1}, {"circle", {2, 2}, 0},
      {"cusp", {1, 3}, 2},            {"node", {0, 2}, 2},     {"cone", {0, 2, 2}, 0},
      {"point", {1}, 1},
  };
  for (const auto& row : rows) {
    INFO(row.name);
    auto file = load_variety_file(catalog(row.name));
    auto r = run_command(Command::kEu, file, {});
    CHECK(r.alphas == row.alphas);
    CHECK(r.eu == row.eu);
    CHECK(r.degree == row.alphas.back());
    CHECK(exit_status(r) == 0);
    CHECK_FALSE(r.certificate.records.empty());

    auto p = run_command(Command::kProfile, file, {});
    CHECK(p.alphas == row.alphas);
    CHECK_FALSE(p.eu);
    CHECK(to_json(p).count("eu") == 0);
  }
}

TEST_CASE("check verdicts", "[io][check]") {
  auto cusp = run_command(Command::kCheck, load_variety_file(catalog("cusp")), {});
  CHECK(exit_status(cusp) == 0);
  CHECK(verdict(cusp, "strata").status == CheckStatus::kPass);
  CHECK(verdict(cusp, "slice").status == CheckStatus::kPass);
  CHECK(verdict(cusp, "recursion").status == CheckStatus::kPass);
  CHECK(verdict(cusp, "smooth").status == CheckStatus::kSkipped);

  auto circle = run_command(Command::kCheck, load_variety_file(catalog("circle")), {});
  CHECK(verdict(circle, "smooth").status == CheckStatus::kPass);
  CHECK(exit_status(circle) == 0);

  auto corrupted = run_command(Command::kCheck, load_variety_file(fixture("cusp_corrupted")), {});
  CHECK(verdict(corrupted, "strata").status == CheckStatus::kFail);
  CHECK(exit_status(corrupted) == 5);

  auto unknown = run_command(Command::kCheck, load_variety_file(catalog("cusp_unknown_origin")), {});
  CHECK(verdict(unknown, "strata").status == CheckStatus::kSkipped);
  CHECK_THAT(verdict(unknown, "strata").detail, Catch::Matchers::ContainsSubstring("fitting Eu is 2"));
  CHECK(exit_status(unknown) == 0);

  auto point = run_command(Command::kCheck, load_variety_file(catalog("point")), {});
  CHECK(verdict(point, "recursion").status == CheckStatus::kSkipped);
  CHECK(exit_status(point) == 0);
}

TEST_CASE("expectation mismatch sets exit status 5", "[io]") {
  auto r = run_command(Command::kEu, load_variety_file(fixture("circle_wrong_expectation")), {});
  CHECK(verdict(r, "expected eu").status == CheckStatus::kFail);
  CHECK(exit_status(r) == 5);
  CHECK(to_json(r)["status"] == "mismatch");
}

TEST_CASE("report JSON mirrors the report and omits wall time", "[io][json]") {
  auto file = load_variety_file(catalog("cone"));
  RunFlags flags;
  flags.seed = 99;
  auto r = run_command(Command::kCheck, file, flags);
  auto j = to_json(r);
  CHECK(j["format_version"] == 1);
  CHECK(j["command"] == "check");
  CHECK(j["name"] == "cone");
  CHECK(j["eu"] == 0);
  CHECK(j["alphas"] == std::vector<std::int64_t>{0, 2, 2});
  CHECK(j["degree"] == 2);
  CHECK(j["prime"] == PrimeField::kDefaultPrime);
  CHECK(j["master_seed"] == 99);
  CHECK(j["certificate"]["records"].size() == r.certificate.records.size());
  CHECK(j["checks"].size() == r.checks.size());
  CHECK(j["status"] == "ok");
  CHECK_FALSE(j.dump().find("wall") != std::string::npos);

  // every accepted morse and degree record carries its value
  for (const auto& rec : j["certificate"]["records"]) {
    if (rec["accepted"] == true && rec["stage"] != "slice") CHECK(rec.contains("value"));
  }

  auto again = run_command(Command::kCheck, file, flags);
  CHECK(to_json(again).dump() == j.dump());
  CHECK(format_human(r).find("note: strata data") != std::string::npos);
}

TEST_CASE("rational mode agrees with the prime field", "[io][rational]") {
  RunFlags q;
  q.rational = true;
  for (const char* name : {"parabola", "cusp", "node"}) {
    INFO(name);
    auto file = load_variety_file(catalog(name));
    auto a = run_command(Command::kEu, file, {});
    auto b = run_command(Command::kEu, file, q);
    CHECK(a.alphas == b.alphas);
    CHECK(a.eu == b.eu);
    CHECK(b.certificate.prime == 0);
    CHECK(b.certificate.field == "Q");
  }
}
