#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace polareu {

/// User-supplied data for one stratum W_i of a Whitney stratification.
/// Nothing here is verified: the values are trusted fixtures.
struct StratumData {
  std::string name;
  std::int64_t chi = 0;                    // chi(W_i)
  std::optional<std::int64_t> local_eu;    // Eu_Y(W_i); empty when unknown
  std::optional<std::int64_t> chi_slice;   // chi(H ∩ W_i) for a generic H
  bool top = false;                        // W_i = Y_reg
};

struct StrataTable {
  int dim = 0;
  std::vector<StratumData> strata;

  /// Exactly one top stratum, whose local Euler obstruction is 1 (filled in
  /// when left unknown).
  void validate() {
    if (strata.empty()) throw InvalidInput("strata table is empty");
    std::size_t tops = 0;
    for (auto& s : strata) {
      if (!s.top) continue;
      ++tops;
      if (!s.local_eu) s.local_eu = 1;
      if (*s.local_eu != 1) {
        throw InvalidInput("the top stratum '" + s.name + "' must have local Euler obstruction 1");
      }
    }
    if (tops != 1) throw InvalidInput("strata table needs exactly one top stratum");
  }
};

/// sum chi(W_i) * Eu_Y(W_i).
inline std::int64_t weighted_eu(StrataTable table) {
  table.validate();
  std::int64_t total = 0;
  for (const auto& s : table.strata) {
    if (!s.local_eu) throw InvalidInput("stratum '" + s.name + "' has unknown local Euler obstruction");
    total += s.chi * *s.local_eu;
  }
  return total;
}

struct SliceIdentity {
  bool holds = false;
  std::int64_t eu = 0;           // left-hand side
  std::int64_t slice_part = 0;   // sum chi(H ∩ W_i) Eu_Y(W_i)
  std::int64_t morse_part = 0;   // (-1)^d alpha^(1)
  std::int64_t rhs() const { return slice_part + morse_part; }
};

/// Eu(Y) = sum chi(H ∩ W_i) Eu_Y(W_i) + (-1)^d alpha^(1).
inline SliceIdentity slice_identity_check(StrataTable table, std::int64_t alpha1, std::int64_t eu) {
  table.validate();
  SliceIdentity out;
  out.eu = eu;
  for (const auto& s : table.strata) {
    if (!s.chi_slice) throw InvalidInput("stratum '" + s.name + "' has no slice Euler characteristic");
    if (!s.local_eu) throw InvalidInput("stratum '" + s.name + "' has unknown local Euler obstruction");
    out.slice_part += *s.chi_slice * *s.local_eu;
  }
  out.morse_part = (table.dim % 2 == 0) ? alpha1 : -alpha1;
  out.holds = out.eu == out.rhs();
  return out;
}

/// The local Euler obstruction of the single unknown stratum that makes the
/// weighted sum equal `eu`.
inline std::int64_t solve_unknown_local_eu(StrataTable table, std::int64_t eu) {
  table.validate();
  const StratumData* unknown = nullptr;
  std::int64_t known = 0;
  for (const auto& s : table.strata) {
    if (s.local_eu) {
      known += s.chi * *s.local_eu;
    } else if (unknown != nullptr) {
      throw InvalidInput("more than one stratum has an unknown local Euler obstruction");
    } else {
      unknown = &s;
    }
  }
  if (unknown == nullptr) throw InvalidInput("no stratum has an unknown local Euler obstruction");
  if (unknown->chi == 0) {
    throw InvalidInput("stratum '" + unknown->name + "' has chi = 0; its local Euler obstruction is undetermined");
  }
  const std::int64_t rest = eu - known;
  if (rest % unknown->chi != 0) {
    throw InvalidInput("no integral local Euler obstruction fits: " + std::to_string(rest) +
                       " is not divisible by " + std::to_string(unknown->chi));
  }
  return rest / unknown->chi;
}

}  // namespace polareu
