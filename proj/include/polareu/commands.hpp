#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "crosscheck.hpp"
#include "field.hpp"
#include "invariants.hpp"
#include "report.hpp"
#include "variety_file.hpp"

namespace polareu {

struct RunFlags {
  std::uint64_t seed = 0;
  std::uint64_t prime = PrimeField::kDefaultPrime;
  unsigned trials = 8;
  bool rational = false;
};

enum class Command { kEu, kProfile, kCheck };

inline const char* to_string(Command c) {
  switch (c) {
    case Command::kEu: return "eu";
    case Command::kProfile: return "profile";
    case Command::kCheck: return "check";
  }
  return "?";
}

namespace detail {

inline CheckVerdict compare(const std::string& name, std::int64_t expected, std::int64_t got) {
  return {name, expected == got ? CheckStatus::kPass : CheckStatus::kFail,
          "expected " + std::to_string(expected) + ", got " + std::to_string(got)};
}

inline void expectations(const VarietyFile& file, const RunReport& r, bool with_eu,
                         std::vector<CheckVerdict>& out) {
  if (!file.expected) return;
  const auto& ex = *file.expected;
  if (ex.alphas) {
    out.push_back({"expected alphas", *ex.alphas == r.alphas ? CheckStatus::kPass : CheckStatus::kFail,
                   "expected " + join(*ex.alphas) + ", got " + join(r.alphas)});
  }
  if (with_eu && ex.eu) out.push_back(compare("expected eu", *ex.eu, *r.eu));
}

// Eu(Y) = chi(Y) for non-singular Y.
inline CheckVerdict smooth_check(const VarietyFile& file, std::int64_t eu) {
  const std::string name = "smooth: Eu = chi";
  if (file.expected && file.expected->chi) return compare(name, *file.expected->chi, eu);
  if (file.strata && file.strata->strata.size() == 1) {
    return compare(name, file.strata->strata.front().chi, eu);
  }
  if (file.strata) return {name, CheckStatus::kSkipped, "Y has more than one stratum"};
  return {name, CheckStatus::kSkipped, "no chi given and no strata"};
}

inline CheckVerdict weighted_check(const VarietyFile& file, std::int64_t eu) {
  const std::string name = "strata: Eu = sum chi(W) Eu_Y(W)";
  if (!file.strata) return {name, CheckStatus::kSkipped, "no strata"};
  try {
    return compare(name, weighted_eu(*file.strata), eu);
  } catch (const InvalidInput& e) {
    std::string detail = e.what();
    try {
      detail += "; the value fitting Eu is " +
                std::to_string(solve_unknown_local_eu(*file.strata, eu));
    } catch (const InvalidInput&) {
    }
    return {name, CheckStatus::kSkipped, detail};
  }
}

inline CheckVerdict slice_check(const VarietyFile& file, std::int64_t alpha1, std::int64_t eu) {
  const std::string name = "slice: Eu = sum chi(H ∩ W) Eu_Y(W) + (-1)^d alpha1";
  if (!file.strata) return {name, CheckStatus::kSkipped, "no strata"};
  if (file.dimension < 1) return {name, CheckStatus::kSkipped, "d = 0"};
  try {
    auto v = slice_identity_check(*file.strata, alpha1, eu);
    return {name, v.holds ? CheckStatus::kPass : CheckStatus::kFail,
            "lhs " + std::to_string(v.eu) + ", rhs " + std::to_string(v.slice_part) + " + " +
                std::to_string(v.morse_part)};
  } catch (const InvalidInput& e) {
    return {name, CheckStatus::kSkipped, e.what()};
  }
}

template <Field F>
RunReport run(Command command, const VarietyFile& file, const F& field, const RunFlags& flags) {
  EngineOptions options;
  options.trials = flags.trials;
  auto v = to_variety(file, field, options.groebner);

  RunReport r;
  r.command = to_string(command);
  r.name = file.name;
  r.dimension = v.dim;
  auto [profile, cert] = polar_profile(v, flags.seed, options);
  r.alphas = profile.alphas;
  r.degree = profile.degree();
  r.certificate = std::move(cert);
  if (command == Command::kProfile) {
    expectations(file, r, false, r.checks);
    return r;
  }
  EulerResult result(std::move(profile), r.certificate);
  r.eu = result.eu;
  expectations(file, r, true, r.checks);
  if (command == Command::kEu) return r;

  r.checks.push_back(smooth_check(file, *r.eu));
  r.checks.push_back(weighted_check(file, *r.eu));
  r.checks.push_back(slice_check(file, r.alphas.front(), *r.eu));
  const std::string name = "recursion: Eu(Y) = Eu(Y ∩ H) + (-1)^d alpha1";
  if (v.dim < 1) {
    r.checks.push_back({name, CheckStatus::kSkipped, "d = 0"});
  } else {
    auto rec = recursion_check(v, derive_seed(flags.seed, streams::kRecursion, 100), options);
    r.certificate.append(rec.certificate.records);
    r.checks.push_back({name, rec.holds ? CheckStatus::kPass : CheckStatus::kFail,
                        std::to_string(rec.eu) + " vs " + std::to_string(rec.eu_slice) + " + " +
                            std::to_string(v.dim % 2 == 0 ? rec.alpha1 : -rec.alpha1)});
  }
  return r;
}

}  // namespace detail

/// Runs one subcommand on a parsed file. Wall time is filled in here but is
/// not part of the machine output.
inline RunReport run_command(Command command, const VarietyFile& file, const RunFlags& flags) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r = flags.rational ? detail::run(command, file, RationalField{}, flags)
                               : detail::run(command, file, PrimeField(flags.prime), flags);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// 0 when every check passed or was skipped, 5 on any failure.
inline int exit_status(const RunReport& r) { return r.all_checks_pass() ? 0 : 5; }

}  // namespace polareu
