#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace polareu {

/// Dense univariate polynomial, coefficient of x^k at index k, no trailing
/// zeros. The zero polynomial is the empty vector.
template <Field F>
class Univariate {
 public:
  using value_type = typename F::value_type;

  explicit Univariate(F field, std::vector<value_type> coeffs = {})
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
  }

  /// Reads a polynomial in which at most variable `var` occurs.
  static Univariate from_polynomial(const Polynomial<F>& p, std::size_t var) {
    std::vector<value_type> c;
    for (const auto& t : p.terms()) {
      if ((t.monomial.support() & ~(1u << var)) != 0) {
        throw InvalidInput("polynomial is not univariate in the requested variable");
      }
      unsigned e = t.monomial[var];
      if (c.size() <= e) c.resize(e + 1, p.field().zero());
      c[e] = t.coeff;
    }
    return Univariate(p.field(), std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<value_type>& coefficients() const noexcept { return coeffs_; }

  Univariate derivative() const {
    std::vector<value_type> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      d.push_back(field_.mul(coeffs_[k], field_.from_int(static_cast<std::int64_t>(k))));
    }
    return Univariate(field_, std::move(d));
  }

  Univariate monic() const {
    if (is_zero()) return *this;
    auto inv = field_.inv(coeffs_.back());
    std::vector<value_type> c = coeffs_;
    for (auto& v : c) v = field_.mul(v, inv);
    return Univariate(field_, std::move(c));
  }

  /// Remainder of division by a nonzero divisor.
  Univariate mod(const Univariate& divisor) const {
    if (divisor.is_zero()) throw InvalidInput("division by the zero polynomial");
    std::vector<value_type> r = coeffs_;
    const auto& d = divisor.coeffs_;
    auto lead_inv = field_.inv(d.back());
    while (r.size() >= d.size() && !r.empty()) {
      auto q = field_.mul(r.back(), lead_inv);
      std::size_t shift = r.size() - d.size();
      for (std::size_t k = 0; k < d.size(); ++k) {
        r[shift + k] = field_.sub(r[shift + k], field_.mul(q, d[k]));
      }
      r.pop_back();
      while (!r.empty() && field_.is_zero(r.back())) r.pop_back();
    }
    return Univariate(field_, std::move(r));
  }

  friend Univariate gcd(Univariate a, Univariate b) {
    while (!b.is_zero()) {
      Univariate r = a.mod(b);
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// No repeated factor: gcd(q, q') is a constant.
  bool is_squarefree() const {
    if (is_zero()) return false;
    return gcd(*this, derivative()).degree() == 0;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  F field_;
  std::vector<value_type> coeffs_;
};

}  // namespace polareu
