#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "certificate.hpp"
#include "errors.hpp"
#include "groebner.hpp"
#include "ideal_ops.hpp"
#include "parse.hpp"

namespace polareu {

/// Generator cap for Jacobian-minor constructions.
inline constexpr std::size_t kMaxGenerators = 6;

/// Options shared by every randomized stage.
struct EngineOptions {
  unsigned trials = 8;
  GroebnerOptions groebner{};
};

/// Affine variety Y ⊂ C^N presented by generators, with its declared pure
/// dimension d.
template <Field F>
struct VarietySpec {
  std::vector<std::string> variables;
  int dim = 0;
  Ideal<F> ideal;

  std::size_t ambient() const noexcept { return ideal.nvars(); }
  int codim() const noexcept { return static_cast<int>(ambient()) - dim; }
  const PolyRing<F>& ring() const noexcept { return ideal.ring; }
};

/// Checks that the ideal is proper and of Krull dimension `dim`.
template <Field F>
void validate_variety(const VarietySpec<F>& v, const GroebnerOptions& options = {}) {
  if (v.variables.size() != v.ambient()) throw InvalidInput("variable list does not match ring");
  if (v.dim < 0 || v.dim > static_cast<int>(v.ambient())) {
    throw InvalidInput("declared dimension out of range");
  }
  auto basis = groebner(v.ideal, MonomialOrder::grevlex(), options);
  const int actual = dimension(basis);
  if (actual == -1) throw InvalidInput("the variety is empty (1 lies in the ideal)");
  if (actual != v.dim) {
    throw InvalidInput("declared dimension " + std::to_string(v.dim) +
                       " but the ideal has dimension " + std::to_string(actual));
  }
}

/// Parses and validates a variety presentation.
template <Field F>
VarietySpec<F> make_variety(const F& field, std::vector<std::string> variables,
                            std::span<const std::string> polynomials, int dim,
                            const GroebnerOptions& options = {}) {
  validate_variable_names(variables);
  PolyRing<F> ring(field, variables.size());
  std::vector<Polynomial<F>> gens;
  for (const auto& text : polynomials) {
    gens.push_back(parse_polynomial(text, ring, std::span<const std::string>(variables)));
  }
  VarietySpec<F> v{std::move(variables), dim, Ideal<F>(ring, std::move(gens))};
  validate_variety(v, options);
  return v;
}

namespace detail {

template <Field F>
using PolyMatrix = std::vector<std::vector<Polynomial<F>>>;

// Determinant by cofactor expansion along the first row; sizes stay <= 7.
template <Field F>
Polynomial<F> determinant(const PolyMatrix<F>& m, std::span<const std::size_t> rows,
                          std::span<const std::size_t> cols, const PolyRing<F>& ring) {
  const std::size_t k = rows.size();
  if (k == 1) return m[rows[0]][cols[0]];
  Polynomial<F> det(ring);
  std::vector<std::size_t> sub_cols;
  for (std::size_t j = 0; j < k; ++j) {
    const auto& entry = m[rows[0]][cols[j]];
    if (entry.is_zero()) continue;
    sub_cols.clear();
    for (std::size_t c = 0; c < k; ++c) {
      if (c != j) sub_cols.push_back(cols[c]);
    }
    Polynomial<F> minor = determinant(m, rows.subspan(1), std::span<const std::size_t>(sub_cols), ring);
    if (j % 2 == 0) {
      det += entry * minor;
    } else {
      det -= entry * minor;
    }
  }
  return det;
}

template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// All k x k minors of `m` (rows x ncols), zeros dropped.
template <Field F>
std::vector<Polynomial<F>> minors(const PolyMatrix<F>& m, std::size_t ncols, std::size_t k,
                                  const PolyRing<F>& ring) {
  std::vector<Polynomial<F>> out;
  if (k == 0) {
    out.push_back(Polynomial<F>::constant(ring, ring.field.one()));
    return out;
  }
  for_each_subset(m.size(), k, [&](std::span<const std::size_t> rows) {
    for_each_subset(ncols, k, [&](std::span<const std::size_t> cols) {
      auto d = determinant(m, rows, cols, ring);
      if (!d.is_zero()) out.push_back(std::move(d));
    });
  });
  return out;
}

template <Field F>
std::vector<Polynomial<F>> nonzero_generators(const VarietySpec<F>& v) {
  std::vector<Polynomial<F>> gens;
  for (const auto& g : v.ideal.generators) {
    if (!g.is_zero()) gens.push_back(g);
  }
  if (gens.size() > kMaxGenerators) {
    throw InvalidInput("at most " + std::to_string(kMaxGenerators) +
                       " nonzero generators supported for Jacobian minors");
  }
  return gens;
}

template <Field F>
PolyMatrix<F> jacobian(std::span<const Polynomial<F>> gens, std::size_t n) {
  PolyMatrix<F> jac;
  for (const auto& g : gens) {
    std::vector<Polynomial<F>> row;
    for (std::size_t i = 0; i < n; ++i) row.push_back(g.derivative(i));
    jac.push_back(std::move(row));
  }
  return jac;
}

}  // namespace detail

/// V's ideal plus all c x c minors of its Jacobian (c = N - d): vanishes on
/// the points of Y where the presentation does not certify smoothness. The
/// unit ideal when c = 0.
template <Field F>
Ideal<F> singular_locus_ideal(const VarietySpec<F>& v) {
  const int c = v.codim();
  if (c == 0) return Ideal<F>::unit(v.ring());
  auto gens = detail::nonzero_generators(v);
  if (gens.size() < static_cast<std::size_t>(c)) {
    throw InvalidInput("fewer generators than the codimension");
  }
  auto jac = detail::jacobian<F>(gens, v.ambient());
  auto out = gens;
  for (auto& m : detail::minors(jac, v.ambient(), static_cast<std::size_t>(c), v.ring())) {
    out.push_back(std::move(m));
  }
  return Ideal<F>(v.ring(), std::move(out));
}

/// Critical points of a linear form on the regular part of Y.
template <Field F>
struct CriticalScheme {
  Ideal<F> ideal;  // saturated by the singular locus
  Polynomial<F> form;
  GroebnerBasis<F> basis;  // grevlex basis of `ideal`
};

/// V's ideal plus the (c+1)-minors of the Jacobian augmented by the gradient
/// of `form`, before removing the singular locus.
template <Field F>
Ideal<F> lagrange_ideal(const VarietySpec<F>& v, const Polynomial<F>& form) {
  if (form.degree() != 1) throw InvalidInput("critical points need a form of degree 1");
  auto gens = detail::nonzero_generators(v);
  std::vector<Polynomial<F>> rows = gens;
  rows.push_back(form);
  auto jac = detail::jacobian<F>(rows, v.ambient());
  auto out = gens;
  const auto k = static_cast<std::size_t>(v.codim()) + 1;
  if (k <= v.ambient()) {
    for (auto& m : detail::minors(jac, v.ambient(), k, v.ring())) out.push_back(std::move(m));
  }
  return Ideal<F>(v.ring(), std::move(out));
}

template <Field F>
CriticalScheme<F> critical_ideal(const VarietySpec<F>& v, const Polynomial<F>& form,
                                 const GroebnerOptions& options = {}) {
  Ideal<F> sat = saturate(lagrange_ideal(v, form), singular_locus_ideal(v), options);
  auto basis = groebner(sat, MonomialOrder::grevlex(), options);
  return {std::move(sat), form, std::move(basis)};
}

struct MorseCount {
  std::size_t count = 0;
  std::vector<TrialRecord> records;
};

/// Number of Morse points of a generic affine linear form on Y_reg. A trial is
/// accepted when the saturated critical scheme is zero-dimensional and
/// reduced; reducedness of the Lagrange scheme at smooth points is exactly
/// nondegeneracy of the critical points, so no Hessian is evaluated.
template <Field F>
MorseCount morse_count(const VarietySpec<F>& v, std::uint64_t seed,
                       const EngineOptions& options = {}, int level = 0) {
  if (v.dim < 1) throw InvalidInput("morse_count needs a variety of positive dimension");
  MorseCount out;
  for (unsigned trial = 0; trial < options.trials; ++trial) {
    TrialRecord rec;
    rec.stage = "morse";
    rec.level = level;
    rec.seed = derive_seed(seed, streams::kMorse, trial);
    auto form = random_linear_form(v.ring(), rec.seed, true);
    auto scheme = critical_ideal(v, form, options.groebner);
    const int dim = dimension(scheme.basis);
    rec.zero_dimensional = dim <= 0;
    if (dim > 0) {
      rec.note = "critical locus of dimension " + std::to_string(dim);
      out.records.push_back(rec);
      continue;
    }
    auto verdict = is_radical_zero_dim(scheme.basis, derive_seed(rec.seed, streams::kRadical, 0),
                                       options.trials, options.groebner);
    rec.radical = verdict == RadicalVerdict::kRadical;
    if (verdict != RadicalVerdict::kRadical) {
      rec.note = std::string("critical scheme ") + to_string(verdict);
      out.records.push_back(rec);
      continue;
    }
    out.count = degree_zero_dim(scheme.basis, options.groebner);
    rec.accepted = true;
    rec.value = static_cast<std::int64_t>(out.count);
    out.records.push_back(rec);
    return out;
  }
  throw GenericityExhausted("morse_count: all " + std::to_string(options.trials) +
                            " trials failed at level " + std::to_string(level) +
                            " (bad prime, impure dimension or degenerate presentation)");
}

}  // namespace polareu
