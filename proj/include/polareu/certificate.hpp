#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polareu {

/// One randomized attempt and the genericity checks it went through. A check
/// that does not apply to the stage is left empty.
struct TrialRecord {
  std::string stage;  // "morse", "slice", "degree"
  int level = 0;      // number of hyperplane sections applied before the stage
  std::uint64_t seed = 0;
  std::optional<bool> dimension_drop;
  std::optional<bool> zero_dimensional;
  std::optional<bool> radical;
  bool accepted = false;
  std::optional<std::int64_t> value;
  std::string note;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// Everything needed to replay a computation: the field, the master seed and
/// every trial that was drawn from it.
struct GenericityCertificate {
  std::string field;
  std::uint64_t prime = 0;  // 0 for the rationals
  std::uint64_t master_seed = 0;
  unsigned trials = 0;
  std::vector<TrialRecord> records;

  void append(const std::vector<TrialRecord>& more) {
    records.insert(records.end(), more.begin(), more.end());
  }

  friend bool operator==(const GenericityCertificate&, const GenericityCertificate&) = default;
};

/// Random streams; each stage draws its seeds from its own stream.
namespace streams {
inline constexpr std::uint64_t kMorse = 0x6d6f727365ULL;
inline constexpr std::uint64_t kSlice = 0x736c696365ULL;
inline constexpr std::uint64_t kRadical = 0x72616469ULL;
inline constexpr std::uint64_t kProfileMorse = 0x70726f66ULL;
inline constexpr std::uint64_t kProfileChain = 0x636861696eULL;
inline constexpr std::uint64_t kDegree = 0x646567ULL;
inline constexpr std::uint64_t kRecursion = 0x726563ULL;
}  // namespace streams

}  // namespace polareu
