#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "certificate.hpp"
#include "polar.hpp"

namespace polareu {

/// Global polar invariants (alpha^(1), ..., alpha^(d+1)); the last entry is
/// the degree of Y.
struct PolarProfile {
  int dim = 0;
  std::vector<std::int64_t> alphas;

  std::int64_t degree() const { return alphas.back(); }
  friend bool operator==(const PolarProfile&, const PolarProfile&) = default;
};

/// Eu(Y) = sum_{i=1}^{d+1} (-1)^{d-i+1} alpha^(i).
inline std::int64_t alternating_sum(const PolarProfile& profile) {
  if (profile.alphas.size() != static_cast<std::size_t>(profile.dim) + 1) {
    throw InvalidInput("polar profile must have d + 1 entries");
  }
  std::int64_t eu = 0;
  for (int i = 1; i <= profile.dim + 1; ++i) {
    const std::int64_t a = profile.alphas[static_cast<std::size_t>(i - 1)];
    eu += ((profile.dim - i + 1) % 2 == 0) ? a : -a;
  }
  return eu;
}

struct EulerResult {
  std::int64_t eu = 0;
  PolarProfile profile;
  GenericityCertificate certificate;

  EulerResult(PolarProfile p, GenericityCertificate cert)
      : eu(alternating_sum(p)), profile(std::move(p)), certificate(std::move(cert)) {
    for (auto a : profile.alphas) {
      if (a < 0) throw InvalidInput("polar invariants are non-negative");
    }
    if (profile.degree() < 1) throw InvalidInput("a nonempty variety has positive degree");
  }
};

template <Field F>
GenericityCertificate empty_certificate(const VarietySpec<F>& v, std::uint64_t seed,
                                        const EngineOptions& options) {
  GenericityCertificate cert;
  cert.field = v.ring().field.name();
  cert.prime = v.ring().field.characteristic();
  cert.master_seed = seed;
  cert.trials = options.trials;
  return cert;
}

template <Field F>
struct SliceResult {
  VarietySpec<F> spec;
  std::vector<TrialRecord> records;
};

/// Y ∩ H for a random affine hyperplane H: the variable of highest index with
/// a nonzero coefficient in H is solved for and substituted away, leaving a
/// presentation in N - 1 variables of declared dimension d - 1.
template <Field F>
SliceResult<F> slice(const VarietySpec<F>& v, std::uint64_t seed, const EngineOptions& options = {},
                     int level = 0) {
  if (v.dim < 1) throw InvalidInput("slice needs a variety of positive dimension");
  const std::size_t n = v.ambient();
  const auto& field = v.ring().field;
  PolyRing<F> target(field, n - 1, MonomialOrder::grevlex());
  SliceResult<F> out;
  for (unsigned trial = 0; trial < options.trials; ++trial) {
    TrialRecord rec;
    rec.stage = "slice";
    rec.level = level;
    rec.seed = derive_seed(seed, streams::kSlice, trial);
    auto h = random_linear_form(v.ring(), rec.seed, true);

    std::size_t solved = n;
    for (std::size_t i = n; i-- > 0;) {
      if (!field.is_zero(h.coefficient(Monomial::variable(n, i)))) {
        solved = i;
        break;
      }
    }
    // x_solved = -(h - a x_solved) / a, written in the remaining variables.
    const auto a = h.coefficient(Monomial::variable(n, solved));
    std::vector<std::size_t> mapping(n);
    for (std::size_t i = 0; i < n; ++i) mapping[i] = i < solved ? i : i - 1;
    mapping[solved] = kDropped;
    auto rest = h - Polynomial<F>::term(v.ring(), Monomial::variable(n, solved), a);
    std::vector<Polynomial<F>> images;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == solved) {
        images.push_back(remap(rest, target, mapping).scaled(field.neg(field.inv(a))));
      } else {
        images.push_back(Polynomial<F>::variable(target, mapping[i]));
      }
    }
    std::vector<Polynomial<F>> gens;
    for (const auto& g : v.ideal.generators) {
      gens.push_back(substitute_linear(g, std::span<const Polynomial<F>>(images)));
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != solved) names.push_back(v.variables[i]);
    }
    VarietySpec<F> sliced{std::move(names), v.dim - 1, Ideal<F>(target, std::move(gens))};
    const int dim = dimension(groebner(sliced.ideal, MonomialOrder::grevlex(), options.groebner));
    rec.dimension_drop = dim == v.dim - 1;
    if (dim != v.dim - 1) {
      rec.note = "section has dimension " + std::to_string(dim);
      out.records.push_back(rec);
      continue;
    }
    rec.accepted = true;
    out.records.push_back(rec);
    out.spec = std::move(sliced);
    return out;
  }
  throw GenericityExhausted("slice: dimension did not drop by one in " +
                            std::to_string(options.trials) + " trials at level " +
                            std::to_string(level));
}

struct DegreeResult {
  std::size_t degree = 0;
  std::vector<TrialRecord> records;
};

/// Number of points of Y_reg on a generic codimension-d affine plane, checked
/// against the degree read from the grevlex leading-term ideal of Y.
template <Field F>
DegreeResult degree_by_slicing(const VarietySpec<F>& v, std::uint64_t seed,
                               const EngineOptions& options = {}) {
  DegreeResult out;
  std::optional<std::size_t> count;
  for (unsigned trial = 0; trial < options.trials && !count; ++trial) {
    const std::uint64_t chain_seed = derive_seed(seed, streams::kDegree, trial);
    VarietySpec<F> cur = v;
    for (int k = 0; k < v.dim; ++k) {
      auto s = slice(cur, derive_seed(chain_seed, streams::kSlice, static_cast<std::uint64_t>(k)),
                     options, k);
      out.records.insert(out.records.end(), s.records.begin(), s.records.end());
      cur = std::move(s.spec);
    }
    TrialRecord rec;
    rec.stage = "degree";
    rec.level = v.dim;
    rec.seed = chain_seed;
    auto sat = saturate(cur.ideal, singular_locus_ideal(cur), options.groebner);
    auto basis = groebner(sat, MonomialOrder::grevlex(), options.groebner);
    const int dim = dimension(basis);
    rec.zero_dimensional = dim <= 0;
    if (dim > 0) {
      rec.note = "section of dimension " + std::to_string(dim);
      out.records.push_back(rec);
      continue;
    }
    auto verdict = is_radical_zero_dim(basis, derive_seed(chain_seed, streams::kRadical, 0),
                                       options.trials, options.groebner);
    rec.radical = verdict == RadicalVerdict::kRadical;
    if (verdict != RadicalVerdict::kRadical) {
      rec.note = std::string("section ") + to_string(verdict);
      out.records.push_back(rec);
      continue;
    }
    count = degree_zero_dim(basis, options.groebner);
    rec.accepted = true;
    rec.value = static_cast<std::int64_t>(*count);
    out.records.push_back(rec);
  }
  if (!count) {
    throw GenericityExhausted("degree_by_slicing: no generic section found in " +
                              std::to_string(options.trials) + " trials");
  }
  const std::size_t from_leading_terms = leading_term_degree(
      groebner(v.ideal, MonomialOrder::grevlex(), options.groebner), options.groebner);
  if (from_leading_terms != *count) {
    throw CrossCheckMismatch("degree by slicing is " + std::to_string(*count) +
                             " but the leading-term ideal gives " +
                             std::to_string(from_leading_terms) +
                             " (bad prime or impure dimension?)");
  }
  out.degree = *count;
  return out;
}

/// alpha^(1) from Y, alpha^(i) from the (i-1)-fold generic section, and the
/// degree as alpha^(d+1).
template <Field F>
std::pair<PolarProfile, GenericityCertificate> polar_profile(const VarietySpec<F>& v,
                                                             std::uint64_t seed,
                                                             const EngineOptions& options = {}) {
  auto cert = empty_certificate(v, seed, options);
  PolarProfile profile;
  profile.dim = v.dim;
  VarietySpec<F> cur = v;
  for (int i = 1; i <= v.dim; ++i) {
    if (i > 1) {
      auto s = slice(cur, derive_seed(seed, streams::kProfileChain, static_cast<std::uint64_t>(i)),
                     options, i - 2);
      cert.append(s.records);
      cur = std::move(s.spec);
    }
    auto m = morse_count(cur, derive_seed(seed, streams::kProfileMorse, static_cast<std::uint64_t>(i)),
                         options, i - 1);
    cert.append(m.records);
    profile.alphas.push_back(static_cast<std::int64_t>(m.count));
  }
  auto deg = degree_by_slicing(v, seed, options);
  cert.append(deg.records);
  profile.alphas.push_back(static_cast<std::int64_t>(deg.degree));
  return {std::move(profile), std::move(cert)};
}

template <Field F>
EulerResult global_euler_obstruction(const VarietySpec<F>& v, std::uint64_t seed,
                                     const EngineOptions& options = {}) {
  auto [profile, cert] = polar_profile(v, seed, options);
  return EulerResult(std::move(profile), std::move(cert));
}

struct RecursionVerdict {
  bool holds = false;
  std::int64_t eu = 0;        // Eu(Y)
  std::int64_t eu_slice = 0;  // Eu(Y ∩ H)
  std::int64_t alpha1 = 0;    // from an independent pencil
  int dim = 0;
  GenericityCertificate certificate;
};

/// Eu(Y) = Eu(Y ∩ H) + (-1)^d alpha^(1), each side drawn from its own seeds.
template <Field F>
RecursionVerdict recursion_check(const VarietySpec<F>& v, std::uint64_t seed,
                                 const EngineOptions& options = {}) {
  if (v.dim < 1) throw InvalidInput("recursion_check needs a variety of positive dimension");
  RecursionVerdict out;
  out.dim = v.dim;
  out.certificate = empty_certificate(v, seed, options);
  auto whole = global_euler_obstruction(v, derive_seed(seed, streams::kRecursion, 0), options);
  out.certificate.append(whole.certificate.records);
  auto s = slice(v, derive_seed(seed, streams::kRecursion, 1), options, 0);
  out.certificate.append(s.records);
  auto part = global_euler_obstruction(s.spec, derive_seed(seed, streams::kRecursion, 2), options);
  out.certificate.append(part.certificate.records);
  auto m = morse_count(v, derive_seed(seed, streams::kRecursion, 3), options, 0);
  out.certificate.append(m.records);
  out.eu = whole.eu;
  out.eu_slice = part.eu;
  out.alpha1 = static_cast<std::int64_t>(m.count);
  const std::int64_t sign = (v.dim % 2 == 0) ? 1 : -1;
  out.holds = out.eu == out.eu_slice + sign * out.alpha1;
  return out;
}

}  // namespace polareu
