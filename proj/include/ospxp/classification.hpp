#pragma once

#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ospxp/errors.hpp"
#include "ospxp/rational.hpp"

namespace ospxp {

/// Casimir eigenvalue branch for the osp(1|2) Casimir C on the even chain.
/// lambda1 means lambda = 2*delta*(2*delta+1); lambda2 means
/// lambda = 2*(delta+1)*(2*delta+1). The lambda2 branch reproduces lambda1
/// under delta -> -delta-1.
enum class Branch { lambda1, lambda2 };

enum class Family { FinalActions, EquivActions, None };

template <class Scalar>
struct RepParams {
  Scalar mu{};
  Scalar delta{};
  Branch branch = Branch::lambda1;
};

namespace detail {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(double x) { return std::abs(x) <= 1e-12; }

}  // namespace detail

/// The delta actually entering the action formulas: the lambda2 branch is the
/// lambda1 branch with delta -> -delta-1.
template <class Scalar>
Scalar effective_delta(const RepParams<Scalar>& p) {
  return p.branch == Branch::lambda2 ? Scalar(-p.delta - 1) : p.delta;
}

/// Coefficients of the general (mu, delta)-parameterized ladder actions on the
/// two-sided basis chain, at offset k:
///   b- v_{2k}    = lower_even * v_{2k-1},   lower_even = mu + k + delta
///   b- v_{2k+1}  = lower_odd  * v_{2k},     lower_odd  = 2(mu + k - delta)
///   b+ v_{-2k}   = raise_even * v_{-2k+1},  raise_even = -(mu - k - delta)
///   b+ v_{-2k-1} = raise_odd  * v_{-2k},    raise_odd  = 2(mu - k + delta)
template <class Scalar>
struct ActionCoeffs {
  Scalar lower_even, lower_odd, raise_even, raise_odd;
};

template <class Scalar>
ActionCoeffs<Scalar> general_action_coeffs(const RepParams<Scalar>& p, long k) {
  const Scalar d = effective_delta(p);
  const Scalar kk = Scalar(k);
  return {Scalar(p.mu + kk + d), Scalar(2 * (p.mu + kk - d)),
          Scalar(-(p.mu - kk - d)), Scalar(2 * (p.mu - kk + d))};
}

/// Norm coefficient a_k = <v_k, v_k> with a_0 = 1, computed by the two-step
/// recurrence a_{2k+1} = 2(mu+k-delta) a_{2k}, a_{2k} = (mu+k+delta)/2 a_{2k-1}.
/// Asserts agreement with the Pochhammer closed form
///   a_k = (3-(-1)^k)/2 * (mu-delta)_{ceil(k/2)} * (mu+delta+1)_{floor(k/2)}.
Rational norm_coefficient(const RepParams<Rational>& p, long k);

/// Closed form only; exposed so tests can exercise both routes independently.
Rational norm_coefficient_closed_form(const RepParams<Rational>& p, long k);

/// Norm coefficients for a stored index range, recurrence-generated upward and
/// downward from a_0 = 1. Downward generation stops at a vanishing action
/// coefficient (lowest-weight truncation).
template <class Scalar>
struct NormSequence {
  RepParams<Scalar> params;
  std::map<long, Scalar> values;
  /// Lowest index with a_k defined; nullopt if the downward chain did not
  /// terminate within the generated range.
  std::optional<long> truncation_bound;
};

template <class Scalar>
struct ClassificationVerdict {
  bool admissible = false;
  std::optional<long> lowest_weight_index;
  std::optional<std::pair<long, Scalar>> first_violation;
  Family family = Family::None;
};

/// Inner-product positivity gate. Evaluates a_k for k = 0..k_max and walks the
/// chain downward detecting the lowest-weight truncation; admissible iff the
/// downward chain terminates and every surviving a_k is strictly positive.
template <class Scalar>
ClassificationVerdict<Scalar> positivity_gate(const RepParams<Scalar>& p,
                                              long k_max);

template <class Scalar>
struct CandidateResult {
  RepParams<Scalar> params;
  ClassificationVerdict<Scalar> verdict;
  Family family = Family::None;
  /// Set on an admissible second-family candidate: equivalent FinalActions
  /// parameter mu - 1/2.
  std::optional<Scalar> equivalent_to_mu;
  /// True when the candidate's effective delta coincides with an earlier
  /// candidate's: all lambda2 candidates, plus delta = mu-1 at mu = 1/2 where
  /// the two lambda1 points merge.
  bool duplicate = false;
};

/// Scans the four candidate parameter points
///   (lambda1, delta=-mu), (lambda1, delta=mu-1),
///   (lambda2, delta=mu-1), (lambda2, delta=-mu)
/// and reports admissibility, duplication, and the mu - 1/2 equivalence.
template <class Scalar>
std::vector<CandidateResult<Scalar>> classify(const Scalar& mu,
                                              long k_max = 200);

template <class Scalar>
struct CasimirValues {
  Scalar lambda;      ///< osp(1|2) Casimir C eigenvalue.
  Scalar omega_even;  ///< su(1,1) Casimir on the even chain: -delta(delta+1).
  Scalar omega_odd;   ///< su(1,1) Casimir on the odd chain: -(delta-1/2)(delta+1/2).
};

template <class Scalar>
CasimirValues<Scalar> casimir_values(const RepParams<Scalar>& p) {
  const Scalar d = p.delta;
  Scalar lambda = p.branch == Branch::lambda1
                      ? Scalar(2 * d * (2 * d + 1))
                      : Scalar(2 * (d + 1) * (2 * d + 1));
  return {lambda, Scalar(-d * (d + 1)),
          Scalar(-(d - Scalar(1) / 2) * (d + Scalar(1) / 2))};
}

/// Squared b+ subdiagonal entries of the orthonormal-basis realization,
/// storage index n = 0..N-2. FinalActions:
///   n even: 2(2mu + n/2), n odd: n+1.
/// EquivActions (paper basis {e_k | k >= -1} stored with offset one) turns out
/// entrywise identical to FinalActions at mu - 1/2.
std::vector<Rational> subdiag_squared(const Rational& mu, int n_dim,
                                      Family family);

/// Theorem-6 collapse: EquivActions at mu equals FinalActions at mu - 1/2 after
/// the one-step re-indexing. Exact on squared entries.
bool equivalence_shift(const Rational& mu, int n_dim);
/// Floating-point variant for irrational mu (tolerance 1e-12 on squares).
bool equivalence_shift(double mu, int n_dim);

// -- template implementations --------------------------------------------

template <class Scalar>
NormSequence<Scalar> norm_sequence(const RepParams<Scalar>& p, long k_min,
                                   long k_max) {
  NormSequence<Scalar> seq{p, {}, std::nullopt};
  const Scalar d = effective_delta(p);
  Scalar a = 1;
  seq.values[0] = a;
  for (long k = 1; k <= k_max; ++k) {
    if (k % 2 != 0) {  // a_{2j+1} = 2(mu + j - delta) a_{2j}, j = (k-1)/2
      a = 2 * (p.mu + Scalar((k - 1) / 2) - d) * a;
    } else {  // a_{2j} = (mu + j + delta)/2 a_{2j-1}, j = k/2
      a = (p.mu + Scalar(k / 2) + d) * a / 2;
    }
    seq.values[k] = a;
  }
  // Downward: invert the recurrence pairing a_{-j} with a_{-j+1}.
  a = 1;
  for (long j = 1; j <= -k_min; ++j) {
    Scalar divisor;
    if (j % 2 != 0) {
      // a_{2m} = (mu + m + delta)/2 a_{2m-1} with 2m = -j+1, 2m-1 = -j.
      divisor = p.mu + Scalar((1 - j) / 2) + d;
      if (detail::is_zero(divisor)) {
        seq.truncation_bound = -j + 1;
        return seq;
      }
      a = 2 * a / divisor;
    } else {
      // a_{2m+1} = 2(mu + m - delta) a_{2m} with 2m+1 = -j+1, 2m = -j.
      divisor = 2 * (p.mu + Scalar(-j / 2) - d);
      if (detail::is_zero(divisor)) {
        seq.truncation_bound = -j + 1;
        return seq;
      }
      a = a / divisor;
    }
    seq.values[-j] = a;
  }
  return seq;
}

template <class Scalar>
ClassificationVerdict<Scalar> positivity_gate(const RepParams<Scalar>& p,
                                              long k_max) {
  if (k_max < 2) throw InvalidParameter("positivity_gate: k_max must be >= 2");
  ClassificationVerdict<Scalar> v;
  const NormSequence<Scalar> seq = norm_sequence(p, -k_max, k_max);
  for (const auto& [k, a] : seq.values) {
    if (!(a > 0)) {
      if (!v.first_violation || std::abs(k) < std::abs(v.first_violation->first))
        v.first_violation = {k, a};
    }
  }
  if (v.first_violation || !seq.truncation_bound) return v;
  v.lowest_weight_index = *seq.truncation_bound;
  // A deeper truncation (index <= -2) is a relabeling of a smaller-mu chain,
  // not a new representation with generating vector v_0; only the two
  // genuine modes count as admissible.
  if (*seq.truncation_bound == 0)
    v.family = Family::FinalActions;
  else if (*seq.truncation_bound == -1)
    v.family = Family::EquivActions;
  v.admissible = v.family != Family::None;
  return v;
}

template <class Scalar>
std::vector<CandidateResult<Scalar>> classify(const Scalar& mu, long k_max) {
  const Scalar half = Scalar(1) / 2;
  std::vector<CandidateResult<Scalar>> out;
  const std::pair<Branch, Scalar> points[4] = {
      {Branch::lambda1, Scalar(-mu)},
      {Branch::lambda1, Scalar(mu - 1)},
      {Branch::lambda2, Scalar(mu - 1)},  // -delta-1 = -mu
      {Branch::lambda2, Scalar(-mu)},     // -delta-1 = mu-1
  };
  std::vector<Scalar> seen;
  for (const auto& [branch, delta] : points) {
    CandidateResult<Scalar> c;
    c.params = {mu, delta, branch};
    c.verdict = positivity_gate(c.params, k_max);
    c.family = c.verdict.family;
    const Scalar d_eff = effective_delta(c.params);
    for (const Scalar& d : seen)
      if (d == d_eff) c.duplicate = true;
    seen.push_back(d_eff);
    if (c.verdict.admissible && c.family == Family::EquivActions && mu > half)
      c.equivalent_to_mu = Scalar(mu - half);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace ospxp
