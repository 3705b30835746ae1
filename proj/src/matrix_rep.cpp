#include "ospxp/matrix_rep.hpp"

#include <cmath>

namespace ospxp {

namespace {
using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};
}  // namespace

Eigen::VectorXd rep_subdiagonal(double mu, int n_dim, Family family) {
  if (n_dim < 4) throw DimensionTooSmall("dimension must be at least 4");
  if (!(mu > 0)) throw InvalidParameter("mu must be positive");
  if (family == Family::None)
    throw InvalidParameter("no realization for family None");
  if (family == Family::EquivActions && !(mu > 0.5))
    throw NotUnitarizable("second family requires mu > 1/2");
  // EquivActions in storage indexing coincides with FinalActions at mu - 1/2.
  const double m = family == Family::EquivActions ? mu - 0.5 : mu;
  Eigen::VectorXd beta(n_dim - 1);
  for (int n = 0; n + 1 < n_dim; ++n) {
    const double squared = n % 2 == 0 ? 2.0 * (2.0 * m + n / 2) : n + 1.0;
    beta[n] = std::sqrt(squared);
  }
  return beta;
}

TruncatedRep build_rep(double mu, int n_dim, Family family) {
  const Eigen::VectorXd beta = rep_subdiagonal(mu, n_dim, family);
  TruncatedRep rep;
  rep.mu = mu;
  rep.dimension = n_dim;
  rep.family = family;
  rep.b_plus = Eigen::MatrixXcd::Zero(n_dim, n_dim);
  for (int n = 0; n + 1 < n_dim; ++n) rep.b_plus(n + 1, n) = beta[n];
  rep.b_minus = rep.b_plus.adjoint();
  rep.h = 0.5 * (rep.b_minus * rep.b_plus + rep.b_plus * rep.b_minus);
  rep.e = 0.5 * (rep.b_plus * rep.b_plus);
  rep.f = -0.5 * (rep.b_minus * rep.b_minus);
  return rep;
}

PhysicalOps physical_operators(const TruncatedRep& rep) {
  const double s = 1.0 / std::sqrt(2.0);
  PhysicalOps ops;
  ops.x = s * (rep.b_plus + rep.b_minus);
  ops.p = kI * s * (rep.b_plus - rep.b_minus);
  ops.H = 0.5 * kI * (rep.b_plus * rep.b_plus - rep.b_minus * rep.b_minus);
  return ops;
}

OperatorAssignment make_assignment(const TruncatedRep& rep) {
  const PhysicalOps ops = physical_operators(rep);
  OperatorAssignment a;
  a.dimension = rep.dimension;
  a.matrices["b+"] = rep.b_plus;
  a.matrices["b-"] = rep.b_minus;
  a.matrices["h"] = rep.h;
  a.matrices["e"] = rep.e;
  a.matrices["f"] = rep.f;
  a.matrices["Omega"] =
      -0.25 * (4.0 * rep.f * rep.e + rep.h * rep.h + 2.0 * rep.h);
  a.matrices["C"] =
      -4.0 * a.matrices["Omega"] +
      0.5 * (rep.b_minus * rep.b_plus - rep.b_plus * rep.b_minus);
  a.matrices["x"] = ops.x;
  a.matrices["p"] = ops.p;
  a.matrices["H"] = ops.H;
  return a;
}

std::vector<RelationReport> verify_wigner_compatibility(const PhysicalOps& ops,
                                                        const TruncatedRep& rep,
                                                        double tolerance) {
  OperatorAssignment a;
  a.dimension = rep.dimension;
  a.matrices["b+"] = rep.b_plus;
  a.matrices["b-"] = rep.b_minus;
  a.matrices["x"] = ops.x;
  a.matrices["p"] = ops.p;
  a.matrices["H"] = ops.H;
  std::vector<RelationReport> out;
  for (const auto& identity : defining_relation_suite()) {
    if (identity.name == "wigner-x" || identity.name == "wigner-p" ||
        identity.name == "hamiltonian-bplus" ||
        identity.name == "hamiltonian-bminus" ||
        identity.name == "hamiltonian-def")
      out.push_back(check_identity(identity, a, tolerance));
  }
  return out;
}

}  // namespace ospxp
