#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <unordered_map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace polareu {

/// Ideal presented by a list of generators in a common ring.
template <Field F>
struct Ideal {
  PolyRing<F> ring;
  std::vector<Polynomial<F>> generators;

  Ideal() = default;
  Ideal(PolyRing<F> r, std::vector<Polynomial<F>> gens) : ring(std::move(r)) {
    if (gens.empty()) gens.push_back(Polynomial<F>(ring));
    generators.reserve(gens.size());
    for (auto& g : gens) {
      if (g.nvars() != ring.nvars || !(g.field() == ring.field)) {
        throw InvalidInput("ideal generators must share the ring");
      }
      generators.push_back(g.with_order(ring.order));
    }
  }

  static Ideal zero(const PolyRing<F>& r) { return Ideal(r, {}); }
  static Ideal unit(const PolyRing<F>& r) {
    return Ideal(r, {Polynomial<F>::constant(r, r.field.one())});
  }

  std::size_t nvars() const noexcept { return ring.nvars; }
};

/// Budgets for a single Groebner computation.
struct GroebnerOptions {
  std::size_t max_pairs = 500'000;
  std::size_t max_reductions = 50'000'000;
  std::size_t max_standard_monomials = 10'000'000;
};

/// Reduced Groebner basis: monic, auto-reduced, sorted by decreasing leading
/// monomial. The empty basis presents the zero ideal.
template <Field F>
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(PolyRing<F> ring, std::vector<Polynomial<F>> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const PolyRing<F>& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return ring_.order; }
  std::size_t nvars() const noexcept { return ring_.nvars; }
  std::span<const Polynomial<F>> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// True iff the ideal is the whole ring.
  bool is_unit() const noexcept {
    return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero();
  }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : elements_) out.push_back(g.leading_monomial());
    return out;
  }

  Ideal<F> ideal() const { return Ideal<F>(ring_, elements_); }

 private:
  PolyRing<F> ring_{};
  std::vector<Polynomial<F>> elements_;
};

namespace detail {

struct ReductionCounter {
  std::size_t steps = 0;
  std::size_t limit = std::numeric_limits<std::size_t>::max();

  void tick() {
    if (++steps > limit) throw ResourceLimit("Groebner reduction budget exhausted");
  }
};

// Full reduction of `f` by the monic polynomials `basis`.
template <Field F>
Polynomial<F> reduce(Polynomial<F> f, const std::vector<const Polynomial<F>*>& basis,
                     ReductionCounter& counter) {
  Polynomial<F> rem(f.ring());
  std::vector<std::uint32_t> supports;
  supports.reserve(basis.size());
  for (const auto* g : basis) supports.push_back(g->leading_monomial().support());
  while (!f.is_zero()) {
    const Monomial& lm = f.leading_monomial();
    const std::uint32_t lm_support = lm.support();
    const Polynomial<F>* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if ((supports[k] & ~lm_support) != 0) continue;
      if (basis[k]->leading_monomial().divides(lm)) {
        divisor = basis[k];
        break;
      }
    }
    if (divisor == nullptr) {
      rem.push_trailing(f.pop_leading());
      continue;
    }
    counter.tick();
    Monomial q = lm / divisor->leading_monomial();
    auto c = f.leading_coeff();
    f = f.sub_mul_term(c, q, *divisor);
  }
  return rem;
}

template <Field F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  const auto& field = f.field();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial<F> a = f.mul_term(l / f.leading_monomial(), field.inv(f.leading_coeff()));
  return a.sub_mul_term(field.inv(g.leading_coeff()), l / g.leading_monomial(), g);
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned sugar;
};

// Buchberger's algorithm with sugar selection; pair bookkeeping follows the
// Gebauer-Moeller update, which applies both the product and chain criteria.
template <Field F>
class Buchberger {
 public:
  Buchberger(PolyRing<F> ring, const GroebnerOptions& options)
      : ring_(std::move(ring)), options_(options) {
    counter_.limit = options.max_reductions;
  }

  GroebnerBasis<F> run(std::span<const Polynomial<F>> generators) {
    std::vector<Polynomial<F>> inputs;
    for (const auto& g : generators) {
      if (!g.is_zero()) inputs.push_back(g.with_order(ring_.order).monic());
    }
    // Low degree first keeps the early basis small.
    std::stable_sort(inputs.begin(), inputs.end(), [](const auto& a, const auto& b) {
      return a.degree() < b.degree();
    });
    for (auto& f : inputs) {
      unsigned sugar = static_cast<unsigned>(f.degree());
      Polynomial<F> h = reduce(std::move(f), active_view(), counter_);
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit_basis();
      insert(h.monic(), std::max(sugar, static_cast<unsigned>(h.degree())));
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > options_.max_pairs) {
        throw ResourceLimit("Groebner pair budget exhausted");
      }
      CriticalPair pair = take_pair();
      Polynomial<F> s = s_polynomial(polys_[pair.i], polys_[pair.j]);
      Polynomial<F> h = reduce(std::move(s), active_view(), counter_);
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit_basis();
      insert(h.monic(), std::max(pair.sugar, static_cast<unsigned>(h.degree())));
    }
    return finish();
  }

 private:
  std::vector<const Polynomial<F>*> active_view() const {
    std::vector<const Polynomial<F>*> view;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) view.push_back(&polys_[k]);
    }
    return view;
  }

  GroebnerBasis<F> unit_basis() const {
    return GroebnerBasis<F>(ring_, {Polynomial<F>::constant(ring_, ring_.field.one())});
  }

  unsigned pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    unsigned di = l.degree() - polys_[i].leading_monomial().degree() + sugar_[i];
    unsigned dj = l.degree() - polys_[j].leading_monomial().degree() + sugar_[j];
    return std::max(di, dj);
  }

  void insert(Polynomial<F> h, unsigned sugar) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
    const Monomial& lh = polys_[hi].leading_monomial();

    // New pairs (g, h); chain criterion among themselves.
    std::vector<CriticalPair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      Monomial l = lcm(polys_[g].leading_monomial(), lh);
      fresh.push_back({g, hi, l, pair_sugar(g, hi, l)});
    }
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const bool a_coprime = coprime(polys_[fresh[a].i].leading_monomial(), lh);
      for (std::size_t b = 0; b < fresh.size() && keep[a] && !a_coprime; ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) &&
            (!(fresh[b].lcm == fresh[a].lcm) || b < a)) {
          keep[a] = false;
        }
      }
    }
    std::vector<CriticalPair> accepted;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (keep[a] && !coprime(polys_[fresh[a].i].leading_monomial(), lh)) {
        accepted.push_back(fresh[a]);
      }
    }

    // Old pairs made redundant by h.
    std::vector<CriticalPair> kept;
    kept.reserve(pairs_.size() + accepted.size());
    for (auto& p : pairs_) {
      bool redundant = lh.divides(p.lcm) &&
                       !(lcm(polys_[p.i].leading_monomial(), lh) == p.lcm) &&
                       !(lcm(polys_[p.j].leading_monomial(), lh) == p.lcm);
      if (!redundant) kept.push_back(std::move(p));
    }
    for (auto& p : accepted) kept.push_back(std::move(p));
    pairs_ = std::move(kept);

    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
    }
  }

  CriticalPair take_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      auto cmp = ring_.order.compare(a.lcm, b.lcm);
      if (cmp < 0 || (cmp == 0 && std::pair(a.j, a.i) < std::pair(b.j, b.i))) best = k;
    }
    CriticalPair p = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return p;
  }

  GroebnerBasis<F> finish() {
    std::vector<Polynomial<F>> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) minimal.push_back(polys_[k]);
    }
    std::vector<Polynomial<F>> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Polynomial<F>*> others;
      for (std::size_t m = 0; m < minimal.size(); ++m) {
        if (m != k) others.push_back(&minimal[m]);
      }
      Polynomial<F> f = minimal[k];
      auto lead = f.pop_leading();
      Polynomial<F> tail = reduce(std::move(f), others, counter_);
      Polynomial<F> g = Polynomial<F>::term(ring_, lead.monomial, lead.coeff) + tail;
      reduced.push_back(g.monic());
    }
    const auto& order = ring_.order;
    std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
      return order.less(b.leading_monomial(), a.leading_monomial());
    });
    return GroebnerBasis<F>(ring_, std::move(reduced));
  }

  PolyRing<F> ring_;
  GroebnerOptions options_;
  ReductionCounter counter_;
  std::vector<Polynomial<F>> polys_;
  std::vector<unsigned> sugar_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
};

}  // namespace detail

/// Reduced Groebner basis of `ideal` under `order` by Buchberger's algorithm
/// run directly in that order.
template <Field F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, MonomialOrder order,
                            const GroebnerOptions& options = {}) {
  detail::Buchberger<F> engine(ideal.ring.with_order(order), options);
  return engine.run(ideal.generators);
}

template <Field F>
GroebnerBasis<F> fglm(const GroebnerBasis<F>& basis, MonomialOrder target,
                      const GroebnerOptions& options = {});

template <Field F>
int dimension(const GroebnerBasis<F>& basis);

/// Reduced Groebner basis of `ideal` under `order`. Non-grevlex orders start
/// from a grevlex basis: zero-dimensional ideals are converted with FGLM,
/// everything else reruns Buchberger in the target order.
template <Field F>
GroebnerBasis<F> groebner(const Ideal<F>& ideal, MonomialOrder order,
                          const GroebnerOptions& options = {}) {
  if (order.kind == MonomialOrder::Kind::kGrevlex) return buchberger(ideal, order, options);
  auto graded = buchberger(ideal, MonomialOrder::grevlex(), options);
  if (graded.is_unit()) {
    PolyRing<F> r = ideal.ring.with_order(order);
    return GroebnerBasis<F>(r, {Polynomial<F>::constant(r, r.field.one())});
  }
  if (dimension(graded) == 0) return fglm(graded, order, options);
  return buchberger(ideal, order, options);
}

/// Remainder of `p` on division by `basis`, expressed in the basis order.
template <Field F>
Polynomial<F> normal_form(const Polynomial<F>& p, const GroebnerBasis<F>& basis) {
  if (p.nvars() != basis.nvars()) throw InvalidInput("normal_form: variable count mismatch");
  std::vector<const Polynomial<F>*> view;
  for (const auto& g : basis.elements()) view.push_back(&g);
  detail::ReductionCounter counter;
  return detail::reduce(p.with_order(basis.order()), view, counter);
}

template <Field F>
bool contains(const GroebnerBasis<F>& basis, const Polynomial<F>& p) {
  return normal_form(p, basis).is_zero();
}

/// Every S-polynomial of the basis reduces to zero.
template <Field F>
bool satisfies_buchberger_criterion(const GroebnerBasis<F>& basis) {
  auto elems = basis.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (!contains(basis, detail::s_polynomial(elems[i], elems[j]))) return false;
    }
  }
  return true;
}

/// Monic, and no leading monomial divides any term of another element.
template <Field F>
bool is_reduced(const GroebnerBasis<F>& basis) {
  auto elems = basis.elements();
  const auto& field = basis.ring().field;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].is_zero() || !field.is_zero(field.sub(elems[i].leading_coeff(), field.one()))) {
      return false;
    }
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : elems[j].terms()) {
        if (elems[i].leading_monomial().divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

/// Krull dimension of the quotient ring: the largest set of variables that
/// supports no leading monomial. -1 for the unit ideal.
template <Field F>
int dimension(const GroebnerBasis<F>& basis) {
  if (basis.is_unit()) return -1;
  const std::size_t n = basis.nvars();
  std::vector<std::uint32_t> supports;
  for (const auto& m : basis.leading_monomials()) supports.push_back(m.support());
  int best = 0;
  const std::uint64_t full = std::uint64_t{1} << n;
  for (std::uint64_t set = 0; set < full; ++set) {
    int size = std::popcount(set);
    if (size <= best) continue;
    bool independent = true;
    for (auto s : supports) {
      if ((s & ~static_cast<std::uint32_t>(set)) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

namespace detail {

// Standard monomials of a zero-dimensional monomial ideal, over the variables
// listed in `vars`.
inline std::size_t count_standard(std::span<const Monomial> lms, std::span<const std::size_t> vars,
                                  std::size_t limit) {
  if (lms.empty()) return vars.empty() ? 1 : limit + 1;
  std::size_t total = 0;
  Monomial m(lms[0].size());
  auto divisible = [&] {
    for (const auto& l : lms) {
      if (l.divides(m)) return true;
    }
    return false;
  };
  auto walk = [&](auto&& self, std::size_t k) -> void {
    if (k == vars.size()) {
      if (++total > limit) throw ResourceLimit("too many standard monomials");
      return;
    }
    for (unsigned e = 0;; ++e) {
      m.set(vars[k], e);
      if (divisible()) break;
      self(self, k + 1);
      if (e > 0xfff0u) throw InvalidInput("monomial ideal is not zero-dimensional");
    }
    m.set(vars[k], 0);
  };
  walk(walk, 0);
  return total;
}

}  // namespace detail

/// Vector-space dimension of the quotient of a zero-dimensional ideal: the
/// number of solutions counted with multiplicity. 0 for the unit ideal.
template <Field F>
std::size_t degree_zero_dim(const GroebnerBasis<F>& basis, const GroebnerOptions& options = {}) {
  int dim = dimension(basis);
  if (dim == -1) return 0;
  if (dim != 0) {
    throw InvalidInput("degree_zero_dim needs a zero-dimensional ideal (dimension " +
                       std::to_string(dim) + ")");
  }
  auto lms = basis.leading_monomials();
  std::vector<std::size_t> vars(basis.nvars());
  for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
  return detail::count_standard(lms, vars, options.max_standard_monomials);
}

/// Degree of the affine variety read off the leading-term ideal of a basis in
/// a degree-compatible order: the sum, over maximal independent variable sets
/// S, of the standard-monomial count once the variables of S are set to 1.
template <Field F>
std::size_t leading_term_degree(const GroebnerBasis<F>& basis, const GroebnerOptions& options = {}) {
  if (basis.order().kind != MonomialOrder::Kind::kGrevlex) {
    throw InvalidInput("leading_term_degree needs a grevlex basis");
  }
  const int dim = dimension(basis);
  if (dim < 0) return 0;
  const std::size_t n = basis.nvars();
  auto lms = basis.leading_monomials();
  std::size_t total = 0;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << n); ++set) {
    if (std::popcount(set) != dim) continue;
    bool independent = true;
    for (const auto& l : lms) {
      if ((l.support() & ~static_cast<std::uint32_t>(set)) == 0) independent = false;
    }
    if (!independent) continue;
    std::vector<Monomial> localized;
    for (const auto& l : lms) {
      Monomial m = l;
      for (std::size_t i = 0; i < n; ++i) {
        if (set & (std::uint64_t{1} << i)) m.set(i, 0);
      }
      localized.push_back(m);
    }
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(set & (std::uint64_t{1} << i))) vars.push_back(i);
    }
    total += detail::count_standard(localized, vars, options.max_standard_monomials);
  }
  return total;
}

/// Converts the reduced basis of a zero-dimensional ideal to another order
/// (Faugere-Gianni-Lazard-Mora): walks monomials upward in the target order,
/// tracking normal forms as vectors over the source standard monomials; the
/// first linear dependency found at each monomial is a new basis element.
template <Field F>
GroebnerBasis<F> fglm(const GroebnerBasis<F>& basis, MonomialOrder target,
                      const GroebnerOptions& options) {
  using value_type = typename F::value_type;
  if (dimension(basis) != 0) throw InvalidInput("fglm needs a zero-dimensional ideal");
  const PolyRing<F> ring = basis.ring().with_order(target);
  const F& field = ring.field;
  const std::size_t n = basis.nvars();

  // Coordinates: standard monomials of the source basis.
  std::vector<Monomial> standard;
  {
    auto lms = basis.leading_monomials();
    Monomial m(n);
    auto walk = [&](auto&& self, std::size_t k) -> void {
      if (k == n) {
        standard.push_back(m);
        if (standard.size() > options.max_standard_monomials) {
          throw ResourceLimit("too many standard monomials");
        }
        return;
      }
      for (unsigned e = 0;; ++e) {
        m.set(k, e);
        bool divisible = false;
        for (const auto& l : lms) divisible = divisible || l.divides(m);
        if (divisible) break;
        self(self, k + 1);
      }
      m.set(k, 0);
    };
    walk(walk, 0);
  }
  std::unordered_map<Monomial, std::size_t> coordinate;
  for (std::size_t k = 0; k < standard.size(); ++k) coordinate.emplace(standard[k], k);
  const std::size_t dim = standard.size();
  auto to_vector = [&](const Polynomial<F>& nf) {
    std::vector<value_type> v(dim, field.zero());
    for (const auto& t : nf.terms()) v[coordinate.at(t.monomial)] = t.coeff;
    return v;
  };

  struct Row {
    std::vector<value_type> reduced;
    std::size_t pivot;
    std::vector<value_type> combination;  // over the staircase found so far
  };
  std::vector<Monomial> staircase;
  std::vector<Polynomial<F>> staircase_nf;  // source normal forms, source order
  std::vector<Row> rows;
  std::vector<Polynomial<F>> result;

  auto cmp = [&](const Monomial& a, const Monomial& b) { return target.less(a, b); };
  std::set<Monomial, decltype(cmp)> candidates(cmp);
  candidates.insert(Monomial(n));
  std::unordered_map<Monomial, std::size_t> position;  // staircase index

  while (!candidates.empty()) {
    Monomial m = *candidates.begin();
    candidates.erase(candidates.begin());
    bool covered = false;
    for (const auto& g : result) covered = covered || g.leading_monomial().divides(m);
    if (covered) continue;

    // Normal form of m from a staircase predecessor m = x_i * b when possible.
    Polynomial<F> nf(basis.ring());
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) {
      if (m[i] == 0) continue;
      Monomial b = m;
      b.set(i, m[i] - 1);
      auto it = position.find(b);
      if (it == position.end()) continue;
      nf = normal_form(staircase_nf[it->second].mul_term(Monomial::variable(n, i),
                                                          field.one()),
                       basis);
      found = true;
    }
    if (!found) nf = normal_form(Polynomial<F>::term(basis.ring(), m, field.one()), basis);

    std::vector<value_type> v = to_vector(nf);
    std::vector<value_type> comb(staircase.size() + 1, field.zero());
    comb.back() = field.one();
    for (const auto& row : rows) {
      if (field.is_zero(v[row.pivot])) continue;
      value_type c = field.mul(v[row.pivot], field.inv(row.reduced[row.pivot]));
      for (std::size_t k = 0; k < dim; ++k) {
        v[k] = field.sub(v[k], field.mul(c, row.reduced[k]));
      }
      for (std::size_t k = 0; k < row.combination.size(); ++k) {
        comb[k] = field.sub(comb[k], field.mul(c, row.combination[k]));
      }
    }
    std::size_t pivot = 0;
    while (pivot < dim && field.is_zero(v[pivot])) ++pivot;
    if (pivot == dim) {
      // m + sum comb[k] * staircase[k] lies in the ideal.
      using Term = typename Polynomial<F>::Term;
      std::vector<Term> terms{{m, field.one()}};
      for (std::size_t k = 0; k < staircase.size(); ++k) {
        terms.push_back({staircase[k], comb[k]});
      }
      result.push_back(Polynomial<F>::from_terms(ring, std::move(terms)));
      continue;
    }
    position.emplace(m, staircase.size());
    staircase.push_back(m);
    staircase_nf.push_back(nf);
    rows.push_back({std::move(v), pivot, std::move(comb)});
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = m;
      next.set(i, m[i] + 1);
      candidates.insert(next);
    }
  }
  std::sort(result.begin(), result.end(), [&](const auto& a, const auto& b) {
    return target.less(b.leading_monomial(), a.leading_monomial());
  });
  return GroebnerBasis<F>(ring, std::move(result));
}

}  // namespace polareu
