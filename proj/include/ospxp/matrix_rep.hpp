#pragma once

#include <Eigen/Dense>

#include <vector>

#include "ospxp/classification.hpp"
#include "ospxp/rational.hpp"
#include "ospxp/relations.hpp"

namespace ospxp {

/// N-dimensional truncation of an admissible lowest-weight realization.
/// b+ couples e_n to e_{n+1} only (lower shift), b- is its exact conjugate
/// transpose, and h, e, f are derived from the anticommutator definitions.
struct TruncatedRep {
  double mu = 0.0;
  int dimension = 0;
  Family family = Family::FinalActions;
  Eigen::MatrixXcd b_plus, b_minus, h, e, f;
};

struct PhysicalOps {
  Eigen::MatrixXcd x, p, H;
};

/// b+ subdiagonal (orthonormal basis), materialized from the exact squared
/// entries by a single square root per entry.
Eigen::VectorXd rep_subdiagonal(double mu, int n_dim, Family family);

TruncatedRep build_rep(double mu, int n_dim,
                       Family family = Family::FinalActions);

/// x = (b+ + b-)/sqrt(2), p = i(b+ - b-)/sqrt(2), H = (i/2)((b+)^2 - (b-)^2).
PhysicalOps physical_operators(const TruncatedRep& rep);

/// Assignment for the identity suite: b+, b- and all derived symbols
/// (h, e, f, Omega, C, x, p, H) built from their defining expressions at the
/// same truncation.
OperatorAssignment make_assignment(const TruncatedRep& rep);

/// Compatibility conditions [{x,p},x] = -2ix, [{x,p},p] = 2ip, the equivalent
/// form [H,b+-] = -i b-+, and H = (xp+px)/2 against the b+- form of H.
std::vector<RelationReport> verify_wigner_compatibility(const PhysicalOps& ops,
                                                        const TruncatedRep& rep,
                                                        double tolerance);

}  // namespace ospxp
