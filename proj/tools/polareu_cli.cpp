// polareu: global Euler obstruction of an affine variety from its polar
// invariants.
//
//   polareu eu      FILE [--seed N] [--prime P] [--trials T] [--json] [--rational]
//   polareu profile FILE ...
//   polareu check   FILE ...
//
// Exit status: 0 ok, 2 parse error, 3 genericity exhausted, 4 resource limit,
// 5 expectation or identity mismatch, 1 anything else.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polareu/polareu.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitParse = 2;
constexpr int kExitGenericity = 3;
constexpr int kExitResource = 4;
constexpr int kExitMismatch = 5;

int fail(bool json, int code, const char* kind, const std::string& message) {
  std::cerr << "polareu: " << kind << ": " << message << "\n";
  if (json) {
    nlohmann::ordered_json doc;
    doc["format_version"] = polareu::kFormatVersion;
    doc["status"] = "error";
    doc["error"] = {{"kind", kind}, {"message", message}, {"exit_code", code}};
    std::cout << doc.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global Euler obstruction via polar invariants", "polareu"};
  app.require_subcommand(1);
  app.fallthrough();

  polareu::RunFlags flags;
  bool json = false;
  app.add_option("--seed", flags.seed, "master seed")->capture_default_str();
  app.add_option("--prime", flags.prime, "prime modulus in (2^20, 2^32)")->capture_default_str();
  app.add_option("--trials", flags.trials, "random trials per stage")
      ->capture_default_str()
      ->check(CLI::Range(1u, 1000u));
  app.add_flag("--json", json, "machine output on standard output");
  app.add_flag("--rational", flags.rational, "exact arithmetic over Q");

  std::string path;
  polareu::Command command = polareu::Command::kEu;
  auto add = [&](const char* name, const char* help, polareu::Command c) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, "variety file")->required();
    sub->callback([&command, c] { command = c; });
  };
  add("eu", "global Euler obstruction and polar profile", polareu::Command::kEu);
  add("profile", "polar profile only", polareu::Command::kProfile);
  add("check", "cross-check identities against strata data", polareu::Command::kCheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    const auto file = polareu::load_variety_file(path);
    const auto report = polareu::run_command(command, file, flags);
    std::cerr << polareu::format_human(report);
    if (json) std::cout << polareu::to_json(report).dump(2) << "\n";
    return polareu::exit_status(report) == 0 ? kExitOk : kExitMismatch;
  } catch (const polareu::ParseError& e) {
    return fail(json, kExitParse, "parse error", e.what());
  } catch (const polareu::InvalidInput& e) {
    return fail(json, kExitParse, "invalid input", e.what());
  } catch (const polareu::GenericityExhausted& e) {
    return fail(json, kExitGenericity, "genericity exhausted", e.what());
  } catch (const polareu::ResourceLimit& e) {
    return fail(json, kExitResource, "resource limit", e.what());
  } catch (const polareu::CrossCheckMismatch& e) {
    return fail(json, kExitMismatch, "cross-check mismatch", e.what());
  } catch (const std::exception& e) {
    return fail(json, kExitOther, "error", e.what());
  }
}
