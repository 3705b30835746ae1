#include "ospxp/classification.hpp"

#include <cmath>
#include <stdexcept>

namespace ospxp {

Rational norm_coefficient_closed_form(const RepParams<Rational>& p, long k) {
  if (k < 0)
    throw InvalidParameter("closed form is stated for k >= 0");
  const Rational d = effective_delta(p);
  const Rational parity_factor = (k % 2 != 0) ? 2 : 1;  // (3 - (-1)^k) / 2
  return parity_factor * pochhammer(p.mu - d, (k + 1) / 2) *
         pochhammer(p.mu + d + 1, k / 2);
}

Rational norm_coefficient(const RepParams<Rational>& p, long k) {
  if (k < 0)
    throw InvalidParameter("norm_coefficient: k must be >= 0");
  const Rational d = effective_delta(p);
  Rational a = 1;
  for (long j = 1; j <= k; ++j) {
    if (j % 2 != 0)
      a *= 2 * (p.mu + Rational((j - 1) / 2) - d);
    else
      a *= (p.mu + Rational(j / 2) + d) / 2;
  }
  if (a != norm_coefficient_closed_form(p, k))
    throw std::logic_error("norm coefficient recurrence/closed-form mismatch");
  return a;
}

std::vector<Rational> subdiag_squared(const Rational& mu, int n_dim,
                                      Family family) {
  if (n_dim < 4) throw DimensionTooSmall("dimension must be at least 4");
  if (family == Family::None)
    throw InvalidParameter("no realization for family None");
  if (mu <= 0) throw InvalidParameter("mu must be positive");
  if (family == Family::EquivActions && mu <= Rational(1, 2))
    throw NotUnitarizable("second family requires mu > 1/2");
  // EquivActions in storage indexing (paper index k stored at k+1) has the
  // same squared entries as FinalActions at mu - 1/2.
  const Rational m =
      family == Family::EquivActions ? Rational(mu - Rational(1, 2)) : mu;
  std::vector<Rational> sq;
  sq.reserve(n_dim - 1);
  for (int n = 0; n + 1 < n_dim; ++n) {
    if (n % 2 == 0)
      sq.push_back(2 * (2 * m + Rational(n / 2)));
    else
      sq.push_back(Rational(n + 1));
  }
  return sq;
}

bool equivalence_shift(const Rational& mu, int n_dim) {
  if (mu <= Rational(1, 2))
    throw InvalidParameter("equivalence_shift requires mu > 1/2");
  const auto shifted = subdiag_squared(mu, n_dim, Family::EquivActions);
  const auto reference =
      subdiag_squared(mu - Rational(1, 2), n_dim, Family::FinalActions);
  return shifted == reference;
}

bool equivalence_shift(double mu, int n_dim) {
  if (!(mu > 0.5))
    throw InvalidParameter("equivalence_shift requires mu > 1/2");
  for (int n = 0; n + 1 < n_dim; ++n) {
    double shifted, reference;
    if (n % 2 == 0) {
      shifted = 2.0 * (2.0 * mu - 1.0 + n / 2);
      reference = 2.0 * (2.0 * (mu - 0.5) + n / 2);
    } else {
      shifted = reference = n + 1.0;
    }
    if (std::abs(shifted - reference) > 1e-12) return false;
  }
  return true;
}

}  // namespace ospxp
