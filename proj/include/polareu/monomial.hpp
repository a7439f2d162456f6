#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "errors.hpp"

namespace polareu {

/// Hard cap on ring size, including the auxiliary variables introduced by
/// saturation, intersection and the radicality test.
inline constexpr std::size_t kMaxVariables = 24;

/// Dense exponent vector stored inline.
class Monomial {
 public:
  using exponent_type = std::uint16_t;

  Monomial() = default;

  explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVariables) {
      throw InvalidInput("at most " + std::to_string(kMaxVariables) + " variables supported");
    }
  }

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
  }

  std::size_t size() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }

  void set(std::size_t i, unsigned e) {
    if (e > 0xffffu) throw ResourceLimit("exponent overflow");
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<exponent_type>(e);
  }

  bool is_one() const noexcept { return degree_ == 0; }

  /// Bit i set iff variable i occurs.
  std::uint32_t support() const noexcept {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exps_[i] != 0) s |= (1u << i);
    }
    return s;
  }

  bool divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.set(i, a.exps_[i] + b.exps_[i]);
    return r;
  }

  /// Exact quotient; caller guarantees `b` divides `a`.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.set(i, a.exps_[i] - b.exps_[i]);
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.set(i, std::max(a.exps_[i], b.exps_[i]));
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    return (a.support() & b.support()) == 0;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const noexcept {
    std::size_t h = nvars_;
    for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u + exps_[i];
    return h;
  }

 private:
  std::array<exponent_type, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  unsigned degree_ = 0;
};

/// Supported monomial orders. Variable 0 is the largest variable in each.
struct MonomialOrder {
  enum class Kind { kGrevlex, kLex, kBlock };

  Kind kind = Kind::kGrevlex;
  /// For kBlock: the first `block` variables form the eliminated block, each
  /// block is compared by grevlex.
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {Kind::kGrevlex, 0}; }
  static MonomialOrder lex() { return {Kind::kLex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {Kind::kBlock, k}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

  std::string name() const {
    switch (kind) {
      case Kind::kGrevlex: return "grevlex";
      case Kind::kLex: return "lex";
      case Kind::kBlock: return "block(" + std::to_string(block) + ")";
    }
    return "?";
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
    switch (kind) {
      case Kind::kGrevlex: return grevlex_range(a, b, 0, a.size());
      case Kind::kLex:
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i] != b[i]) return a[i] <=> b[i];
        }
        return std::strong_ordering::equal;
      case Kind::kBlock: {
        auto head = grevlex_range(a, b, 0, block);
        if (head != 0) return head;
        return grevlex_range(a, b, block, a.size());
      }
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

 private:
  static std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b,
                                            std::size_t lo, std::size_t hi) noexcept {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
};

}  // namespace polareu

template <>
struct std::hash<polareu::Monomial> {
  std::size_t operator()(const polareu::Monomial& m) const noexcept { return m.hash(); }
};
