#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "random.hpp"
#include "univariate.hpp"

namespace polareu {

/// I ∩ k[x_k, ..., x_{n-1}], presented in a grevlex ring on the n - k
/// surviving variables.
template <Field F>
Ideal<F> eliminate(const Ideal<F>& ideal, std::size_t k, const GroebnerOptions& options = {}) {
  const std::size_t n = ideal.nvars();
  if (k >= n) throw InvalidInput("eliminate: need 0 <= k < number of variables");
  auto basis = groebner(ideal, MonomialOrder::elimination(k), options);
  const std::uint32_t head = (k == 0) ? 0u : ((1u << k) - 1u);
  PolyRing<F> target(ideal.ring.field, n - k, MonomialOrder::grevlex());
  std::vector<std::size_t> mapping(n, kDropped);
  for (std::size_t i = k; i < n; ++i) mapping[i] = i - k;
  std::vector<Polynomial<F>> kept;
  for (const auto& g : basis.elements()) {
    if ((g.support() & head) == 0) kept.push_back(remap(g, target, mapping));
  }
  return Ideal<F>(target, std::move(kept));
}

namespace detail {

// Copy of `p` in a ring with `extra` new variables in front.
template <Field F>
Polynomial<F> shift_up(const Polynomial<F>& p, const PolyRing<F>& target, std::size_t extra) {
  std::vector<std::size_t> mapping(p.nvars());
  for (std::size_t i = 0; i < mapping.size(); ++i) mapping[i] = i + extra;
  return remap(p, target, mapping);
}

template <Field F>
bool is_unit_ideal(const Ideal<F>& ideal) {
  for (const auto& g : ideal.generators) {
    if (g.is_constant() && !g.is_zero()) return true;
  }
  return false;
}

}  // namespace detail

/// I ∩ J by eliminating t from t·I + (1 - t)·J.
template <Field F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b, const GroebnerOptions& options = {}) {
  if (a.nvars() != b.nvars()) throw InvalidInput("intersect: variable count mismatch");
  if (detail::is_unit_ideal(a)) return b;
  if (detail::is_unit_ideal(b)) return a;
  const std::size_t n = a.nvars();
  PolyRing<F> big(a.ring.field, n + 1, MonomialOrder::elimination(1));
  auto t = Polynomial<F>::variable(big, 0);
  auto one_minus_t = Polynomial<F>::constant(big, big.field.one()) - t;
  std::vector<Polynomial<F>> gens;
  for (const auto& f : a.generators) gens.push_back(t * detail::shift_up(f, big, 1));
  for (const auto& g : b.generators) gens.push_back(one_minus_t * detail::shift_up(g, big, 1));
  return eliminate(Ideal<F>(big, std::move(gens)), 1, options);
}

/// I : g^∞ by eliminating t from I + (t·g - 1).
template <Field F>
Ideal<F> saturate_by(const Ideal<F>& ideal, const Polynomial<F>& g,
                     const GroebnerOptions& options = {}) {
  if (g.is_zero()) return Ideal<F>::unit(ideal.ring);
  if (g.is_constant()) return ideal;
  const std::size_t n = ideal.nvars();
  PolyRing<F> big(ideal.ring.field, n + 1, MonomialOrder::elimination(1));
  std::vector<Polynomial<F>> gens;
  for (const auto& f : ideal.generators) gens.push_back(detail::shift_up(f, big, 1));
  gens.push_back(Polynomial<F>::variable(big, 0) * detail::shift_up(g, big, 1) -
                 Polynomial<F>::constant(big, big.field.one()));
  return eliminate(Ideal<F>(big, std::move(gens)), 1, options);
}

/// I : J^∞ = ∩_g (I : g^∞) over the generators g of J.
template <Field F>
Ideal<F> saturate(const Ideal<F>& ideal, const Ideal<F>& by, const GroebnerOptions& options = {}) {
  if (ideal.nvars() != by.nvars()) throw InvalidInput("saturate: variable count mismatch");
  auto basis = groebner(ideal, MonomialOrder::grevlex(), options);
  if (basis.is_unit()) return Ideal<F>::unit(ideal.ring);
  Ideal<F> reduced = basis.ideal();
  std::optional<Ideal<F>> acc;
  for (const auto& g : by.generators) {
    if (contains(basis, g)) continue;  // I : g^∞ = (1)
    Ideal<F> part = saturate_by(reduced, g, options);
    acc = acc ? intersect(*acc, part, options) : part;
  }
  if (!acc) return Ideal<F>::unit(ideal.ring);
  return *acc;
}

/// Equality through mutual membership against reduced grevlex bases.
template <Field F>
bool ideals_equal(const Ideal<F>& a, const Ideal<F>& b, const GroebnerOptions& options = {}) {
  if (a.nvars() != b.nvars()) return false;
  auto ga = groebner(a, MonomialOrder::grevlex(), options);
  auto gb = groebner(b, MonomialOrder::grevlex(), options);
  for (const auto& g : b.generators) {
    if (!contains(ga, g)) return false;
  }
  for (const auto& g : a.generators) {
    if (!contains(gb, g)) return false;
  }
  return true;
}

/// `outer` contains every generator of `inner`.
template <Field F>
bool ideal_contains(const Ideal<F>& outer, const Ideal<F>& inner,
                    const GroebnerOptions& options = {}) {
  auto basis = groebner(outer, MonomialOrder::grevlex(), options);
  for (const auto& g : inner.generators) {
    if (!contains(basis, g)) return false;
  }
  return true;
}

enum class RadicalVerdict { kRadical, kNotRadical, kIndeterminate };

inline const char* to_string(RadicalVerdict v) {
  switch (v) {
    case RadicalVerdict::kRadical: return "radical";
    case RadicalVerdict::kNotRadical: return "not radical";
    case RadicalVerdict::kIndeterminate: return "indeterminate";
  }
  return "?";
}

/// Radicality of a zero-dimensional ideal through the minimal polynomial of a
/// random linear form u. A repeated factor proves the ideal is not radical; a
/// squarefree polynomial of full degree proves it is; a squarefree polynomial
/// of lower degree means u failed to separate the points, and another u is
/// drawn.
template <Field F>
RadicalVerdict is_radical_zero_dim(const GroebnerBasis<F>& basis, std::uint64_t seed,
                                   unsigned trials = 8, const GroebnerOptions& options = {}) {
  const int dim = dimension(basis);
  if (dim == -1) return RadicalVerdict::kRadical;
  if (dim != 0) throw InvalidInput("is_radical_zero_dim needs a zero-dimensional ideal");
  const std::size_t count = degree_zero_dim(basis, options);
  const std::size_t n = basis.nvars();
  if (n == 0) return RadicalVerdict::kRadical;  // the field itself
  PolyRing<F> base(basis.ring().field, n, MonomialOrder::grevlex());
  PolyRing<F> big(base.field, n + 1, MonomialOrder::elimination(n));
  std::vector<std::size_t> identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = i;
  std::vector<Polynomial<F>> embedded;
  for (const auto& g : basis.elements()) embedded.push_back(remap(g, big, identity));

  for (unsigned trial = 0; trial < trials; ++trial) {
    auto u = random_linear_form(base, derive_seed(seed, 0x7261646963616cULL, trial), false);
    auto gens = embedded;
    gens.push_back(Polynomial<F>::variable(big, n) - remap(u, big, identity));
    Ideal<F> projected = eliminate(Ideal<F>(big, std::move(gens)), n, options);
    auto minimal = groebner(projected, MonomialOrder::grevlex(), options);
    if (minimal.size() != 1) throw InvalidInput("univariate elimination is not principal");
    auto q = Univariate<F>::from_polynomial(minimal.elements()[0], 0);
    if (!q.is_squarefree()) return RadicalVerdict::kNotRadical;
    if (static_cast<std::size_t>(q.degree()) == count) return RadicalVerdict::kRadical;
  }
  return RadicalVerdict::kIndeterminate;
}

}  // namespace polareu
