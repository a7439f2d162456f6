#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "random.hpp"

namespace polareu {

/// Coefficient field interface shared by the prime field and the rationals.
/// Fields are small value objects; polynomials carry a copy of theirs.
template <class F>
concept Field = std::copyable<F> && requires(const F& f, typename F::value_type a,
                                             SeededRng& rng, std::string_view s) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.neg(a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.from_int(std::int64_t{}) } -> std::convertible_to<typename F::value_type>;
  { f.from_decimal(s) } -> std::convertible_to<typename F::value_type>;
  { f.random(rng) } -> std::convertible_to<typename F::value_type>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.name() } -> std::convertible_to<std::string>;
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 7; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Z/pZ for a runtime prime 2^20 < p < 2^32. Elements are kept in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;

  static constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1

  explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
    if (p <= (1ULL << 20) || p >= (1ULL << 32)) {
      throw InvalidInput("prime must lie in (2^20, 2^32), got " + std::to_string(p));
    }
    if (!is_prime_u64(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  }

  std::uint64_t characteristic() const noexcept { return p_; }
  std::string name() const { return "F_" + std::to_string(p_); }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  bool is_zero(value_type a) const noexcept { return a == 0; }

  value_type add(value_type a, value_type b) const noexcept {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept { return (a * b) % p_; }

  value_type inv(value_type a) const {
    if (a == 0) throw InvalidInput("division by zero in " + name());
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<value_type>(t);
  }

  value_type from_int(std::int64_t v) const noexcept {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return static_cast<value_type>(m);
  }

  /// Non-negative decimal literal of any length, reduced mod p.
  value_type from_decimal(std::string_view digits) const {
    value_type v = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw InvalidInput("bad digit in integer literal");
      v = (v * 10 + static_cast<value_type>(c - '0')) % p_;
    }
    return v;
  }

  value_type random(SeededRng& rng) const { return rng.below(p_); }

  /// Symmetric representative, so that small negative constants print as such.
  std::string to_string(value_type a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// Exact rationals. Random draws are integers in [-2^15, 2^15]; a uniform draw
/// from Q does not exist and small entries keep coefficient growth in check.
class RationalField {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  static constexpr std::int64_t kRandomBound = 1 << 15;

  std::uint64_t characteristic() const noexcept { return 0; }
  std::string name() const { return "Q"; }

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  bool is_zero(const value_type& a) const { return a == 0; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw InvalidInput("division by zero in Q");
    return value_type(1) / a;
  }

  value_type from_int(std::int64_t v) const { return value_type(v); }

  value_type from_decimal(std::string_view digits) const {
    for (char c : digits) {
      if (c < '0' || c > '9') throw InvalidInput("bad digit in integer literal");
    }
    return value_type(boost::multiprecision::cpp_int(std::string(digits)));
  }

  value_type random(SeededRng& rng) const {
    auto span = static_cast<std::uint64_t>(2 * kRandomBound + 1);
    return value_type(static_cast<std::int64_t>(rng.below(span)) - kRandomBound);
  }

  std::string to_string(const value_type& a) const { return a.str(); }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

}  // namespace polareu
