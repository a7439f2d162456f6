#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"
#include "random.hpp"

namespace polareu {

/// Coefficient field, number of variables and the monomial order that keeps
/// terms sorted. Copied into every polynomial.
template <Field F>
struct PolyRing {
  F field{};
  std::size_t nvars = 0;
  MonomialOrder order{};

  PolyRing() = default;
  PolyRing(F f, std::size_t n, MonomialOrder o = MonomialOrder::grevlex())
      : field(std::move(f)), nvars(n), order(o) {
    if (n > kMaxVariables) {
      throw InvalidInput("at most " + std::to_string(kMaxVariables) + " variables supported");
    }
  }

  PolyRing with_order(MonomialOrder o) const { return PolyRing(field, nvars, o); }
  PolyRing with_nvars(std::size_t n, MonomialOrder o) const { return PolyRing(field, n, o); }

  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

template <Field F>
class Polynomial {
 public:
  using field_type = F;
  using value_type = typename F::value_type;

  struct Term {
    Monomial monomial;
    value_type coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  explicit Polynomial(PolyRing<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const PolyRing<F>& ring, value_type c) {
    Polynomial p(ring);
    if (!ring.field.is_zero(c)) p.terms_.push_back({Monomial(ring.nvars), std::move(c)});
    return p;
  }
  static Polynomial from_int(const PolyRing<F>& ring, std::int64_t c) {
    return constant(ring, ring.field.from_int(c));
  }
  static Polynomial term(const PolyRing<F>& ring, const Monomial& m, value_type c) {
    Polynomial p(ring);
    if (!ring.field.is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }
  static Polynomial variable(const PolyRing<F>& ring, std::size_t index) {
    if (index >= ring.nvars) throw InvalidInput("variable index out of range");
    return term(ring, Monomial::variable(ring.nvars, index), ring.field.one());
  }

  /// Canonicalizes arbitrary terms: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(const PolyRing<F>& ring, std::vector<Term> terms) {
    Polynomial p(ring);
    const auto& order = ring.order;
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return order.less(b.monomial, a.monomial);
    });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coeff = ring.field.add(p.terms_.back().coeff, t.coeff);
        if (ring.field.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else if (!ring.field.is_zero(t.coeff)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const PolyRing<F>& ring() const noexcept { return ring_; }
  const F& field() const noexcept { return ring_.field; }
  std::size_t nvars() const noexcept { return ring_.nvars; }

  /// Terms in decreasing monomial order.
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
    return d;
  }

  const Monomial& leading_monomial() const { return lead().monomial; }
  const value_type& leading_coeff() const { return lead().coeff; }

  value_type coefficient(const Monomial& m) const {
    for (const auto& t : terms_) {
      if (t.monomial == m) return t.coeff;
    }
    return ring_.field.zero();
  }

  /// Same polynomial under a different order.
  Polynomial with_order(MonomialOrder order) const {
    if (order == ring_.order) return *this;
    std::vector<Term> copy = terms_;
    return from_terms(ring_.with_order(order), std::move(copy));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_.field.inv(leading_coeff()));
  }

  Polynomial scaled(const value_type& c) const {
    if (ring_.field.is_zero(c)) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = ring_.field.mul(t.coeff, c);
    return r;
  }

  /// this * c * m
  Polynomial mul_term(const Monomial& m, const value_type& c) const {
    if (ring_.field.is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      r.terms_.push_back({t.monomial * m, ring_.field.mul(t.coeff, c)});
    }
    return r;
  }

  /// this - c * m * g, the elementary reduction step.
  Polynomial sub_mul_term(const value_type& c, const Monomial& m, const Polynomial& g) const {
    const auto& f = ring_.field;
    const auto& order = ring_.order;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = g.terms_[j].monomial * m;
      if (i == terms_.size()) {
        r.terms_.push_back({gm, f.neg(f.mul(c, g.terms_[j].coeff))});
        ++j;
        continue;
      }
      auto cmp = order.compare(terms_[i].monomial, gm);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back({gm, f.neg(f.mul(c, g.terms_[j].coeff))});
        ++j;
      } else {
        value_type v = f.sub(terms_[i].coeff, f.mul(c, g.terms_[j].coeff));
        if (!f.is_zero(v)) r.terms_.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Polynomial operator-() const { return scaled(ring_.field.neg(ring_.field.one())); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    return a.sub_mul_term(a.field().neg(a.field().one()), Monomial(a.nvars()), b);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    return a.sub_mul_term(a.field().one(), Monomial(a.nvars()), b);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    const auto& f = a.field();
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        prod.push_back({s.monomial * t.monomial, f.mul(s.coeff, t.coeff)});
      }
    }
    return from_terms(a.ring_, std::move(prod));
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, ring_.field.one());
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// Partial derivative with respect to variable `i`.
  Polynomial derivative(std::size_t i) const {
    const auto& f = ring_.field;
    std::vector<Term> out;
    for (const auto& t : terms_) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      Monomial m = t.monomial;
      m.set(i, e - 1);
      out.push_back({m, f.mul(t.coeff, f.from_int(e))});
    }
    return from_terms(ring_, std::move(out));
  }

  /// Removes and returns the leading term.
  Term pop_leading() {
    Term t = lead();
    terms_.erase(terms_.begin());
    return t;
  }

  /// Appends a term strictly smaller than every stored term; caller keeps the
  /// canonical form.
  void push_trailing(Term t) {
    if (!ring_.field.is_zero(t.coeff)) terms_.push_back(std::move(t));
  }

  /// Bitmask of the variables that occur.
  std::uint32_t support() const noexcept {
    std::uint32_t s = 0;
    for (const auto& t : terms_) s |= t.monomial.support();
    return s;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_.nvars == b.ring_.nvars && a.ring_.field == b.ring_.field &&
           a.with_order(b.ring_.order).terms_ == b.terms_;
  }

 private:
  const Term& lead() const {
    if (terms_.empty()) throw InvalidInput("zero polynomial has no leading term");
    return terms_.front();
  }

  static void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!(a.ring_ == b.ring_)) throw InvalidInput("polynomials live in different rings");
  }

  PolyRing<F> ring_{};
  std::vector<Term> terms_;
};

/// Default variable names x0, x1, ...
inline std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

/// Canonical text form accepted back by parse_polynomial.
template <Field F>
std::string to_string(const Polynomial<F>& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  const auto& f = p.field();
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string c = f.to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = (c == "1");
    bool wrote = false;
    if (!unit || t.monomial.is_one()) {
      out << c;
      wrote = true;
    }
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (wrote) out << '*';
      out << names[i];
      if (e > 1) out << '^' << e;
      wrote = true;
    }
  }
  return out.str();
}

template <Field F>
std::string to_string(const Polynomial<F>& p) {
  auto names = default_names(p.nvars());
  return to_string(p, std::span<const std::string>(names));
}

/// Replaces variable i of `p` by images[i]; all images share one target ring.
template <Field F>
Polynomial<F> substitute(const Polynomial<F>& p, std::span<const Polynomial<F>> images) {
  if (images.size() != p.nvars()) throw InvalidInput("substitution needs one image per variable");
  if (images.empty()) return p;
  const PolyRing<F>& target = images[0].ring();
  // powers[i][e] = images[i]^e, filled lazily
  std::vector<std::vector<Polynomial<F>>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial<F>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial<F>::constant(target, target.field.one()));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial<F> result(target);
  for (const auto& t : p.terms()) {
    Polynomial<F> acc = Polynomial<F>::constant(target, t.coeff);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (t.monomial[i] != 0) acc *= power(i, t.monomial[i]);
    }
    result += acc;
  }
  return result;
}

/// Substitution by affine-linear images (degree <= 1 each).
template <Field F>
Polynomial<F> substitute_linear(const Polynomial<F>& p, std::span<const Polynomial<F>> images) {
  for (const auto& img : images) {
    if (img.degree() > 1) throw InvalidInput("substitute_linear expects images of degree <= 1");
  }
  return substitute(p, images);
}

/// Moves `p` into `target`, sending variable i to variable mapping[i]. Variables
/// mapped to `kDropped` must not occur in `p`.
inline constexpr std::size_t kDropped = static_cast<std::size_t>(-1);

template <Field F>
Polynomial<F> remap(const Polynomial<F>& p, const PolyRing<F>& target,
                    std::span<const std::size_t> mapping) {
  using Term = typename Polynomial<F>::Term;
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target.nvars);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (mapping[i] == kDropped) throw InvalidInput("remap drops a variable that occurs");
      m.set(mapping[i], e);
    }
    out.push_back({m, t.coeff});
  }
  return Polynomial<F>::from_terms(target, std::move(out));
}

/// Random degree-1 polynomial sum(a_i x_i) [+ e] with a nonzero linear part,
/// deterministic in `seed`.
template <Field F>
Polynomial<F> random_linear_form(const PolyRing<F>& ring, std::uint64_t seed, bool affine) {
  if (ring.nvars == 0) throw InvalidInput("random_linear_form needs at least one variable");
  using Term = typename Polynomial<F>::Term;
  SeededRng rng(seed);
  const auto& f = ring.field;
  std::vector<Term> terms;
  bool nonzero = false;
  while (!nonzero) {
    terms.clear();
    for (std::size_t i = 0; i < ring.nvars; ++i) {
      auto c = f.random(rng);
      nonzero = nonzero || !f.is_zero(c);
      terms.push_back({Monomial::variable(ring.nvars, i), std::move(c)});
    }
  }
  if (affine) terms.push_back({Monomial(ring.nvars), f.random(rng)});
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

}  // namespace polareu
