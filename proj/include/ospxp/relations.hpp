#pragma once

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "ospxp/errors.hpp"

namespace ospxp {

/// Scalar multiple of an ordered product of generator symbols. An empty factor
/// list denotes a multiple of the identity operator.
struct OperatorWord {
  std::complex<double> coefficient{1.0, 0.0};
  std::vector<std::string> factors;
};

/// Sum of words; identities are stored fully expanded so evaluation is a pure
/// fold over matrix products.
using Expr = std::vector<OperatorWord>;

/// Degree unit of a generator symbol: b+, b-, x, p count 1; h, e, f, Omega, C,
/// H count 2 (they are quadratic in the ladder operators).
int symbol_degree(const std::string& symbol);

int word_degree(const OperatorWord& w);

struct RelationIdentity {
  std::string name;
  Expr lhs;
  Expr rhs;
  /// Max total word length on either side; fixes the interior margin needed
  /// for truncated verification.
  int degree = 1;
};

struct OperatorAssignment {
  int dimension = 0;
  std::map<std::string, Eigen::MatrixXcd> matrices;
};

struct RelationReport {
  std::string identity;
  int dimension = 0;
  int interior = 0;
  double residual = 0.0;
  bool pass = false;
  double tolerance = 0.0;
};

/// The fixed identity catalog: osp(1|2) defining relations, even-generator
/// definitions and su(1,1) relations, Casimir definitions and identities, and
/// the Wigner compatibility conditions for H = xp.
std::vector<RelationIdentity> defining_relation_suite();

/// Ordered matrix product times the coefficient; empty word gives
/// coefficient * I. Missing symbol -> UnknownGenerator.
Eigen::MatrixXcd evaluate_word(const OperatorWord& word,
                               const OperatorAssignment& assignment);

Eigen::MatrixXcd evaluate_expr(const Expr& expr,
                               const OperatorAssignment& assignment);

/// Evaluates lhs - rhs and reports the max absolute entry over the interior
/// block of size m = N - degree (rows and columns with index < m). Truncation
/// of the infinite-dimensional representation corrupts only entries within
/// `degree` of the cut, so the interior reproduces the exact identity.
RelationReport check_identity(const RelationIdentity& identity,
                              const OperatorAssignment& assignment,
                              double tolerance);

/// Conjugate-transpose relations of the star structure: (b+)^dagger = b-
/// (entrywise, full matrix), and h^dagger = h, e^dagger = -f, f^dagger = -e on
/// interior margin 2.
RelationReport star_adjoint_check(const OperatorAssignment& assignment,
                                  double tolerance);

}  // namespace ospxp
