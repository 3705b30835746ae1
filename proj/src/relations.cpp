#include "ospxp/relations.hpp"

#include <algorithm>
#include <cmath>

namespace ospxp {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

Expr sym(const std::string& s, cd c = 1.0) { return {{c, {s}}}; }

Expr scale(Expr e, cd c) {
  for (auto& w : e) w.coefficient *= c;
  return e;
}

Expr add(Expr a, const Expr& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Expr mul(const Expr& a, const Expr& b) {
  Expr out;
  out.reserve(a.size() * b.size());
  for (const auto& wa : a)
    for (const auto& wb : b) {
      OperatorWord w;
      w.coefficient = wa.coefficient * wb.coefficient;
      w.factors = wa.factors;
      w.factors.insert(w.factors.end(), wb.factors.begin(), wb.factors.end());
      out.push_back(std::move(w));
    }
  return out;
}

Expr commutator(const Expr& a, const Expr& b) {
  return add(mul(a, b), scale(mul(b, a), -1.0));
}

Expr anticommutator(const Expr& a, const Expr& b) {
  return add(mul(a, b), mul(b, a));
}

int expr_degree(const Expr& e) {
  int d = 0;
  for (const auto& w : e) d = std::max(d, word_degree(w));
  return d;
}

RelationIdentity make_identity(std::string name, Expr lhs, Expr rhs) {
  const int degree = std::max(expr_degree(lhs), expr_degree(rhs));
  return {std::move(name), std::move(lhs), std::move(rhs), degree};
}

}  // namespace

int symbol_degree(const std::string& symbol) {
  if (symbol == "b+" || symbol == "b-" || symbol == "x" || symbol == "p")
    return 1;
  if (symbol == "h" || symbol == "e" || symbol == "f" || symbol == "Omega" ||
      symbol == "C" || symbol == "H")
    return 2;
  throw UnknownGenerator("unknown generator symbol: " + symbol);
}

int word_degree(const OperatorWord& w) {
  int d = 0;
  for (const auto& s : w.factors) d += symbol_degree(s);
  return d;
}

std::vector<RelationIdentity> defining_relation_suite() {
  const Expr bp = sym("b+"), bm = sym("b-"), h = sym("h"), e = sym("e"),
             f = sym("f"), om = sym("Omega"), C = sym("C"), x = sym("x"),
             p = sym("p"), H = sym("H");
  const Expr one = {{cd{1.0, 0.0}, {}}};

  std::vector<RelationIdentity> suite;

  // Defining relations of osp(1|2).
  suite.push_back(make_identity("osp-defining-plus",
                                commutator(anticommutator(bm, bp), bp),
                                scale(bp, 2.0)));
  suite.push_back(make_identity("osp-defining-minus",
                                commutator(anticommutator(bm, bp), bm),
                                scale(bm, -2.0)));

  // Even generators as anticommutators of the odd ones.
  suite.push_back(make_identity("h-def", h, scale(anticommutator(bm, bp), 0.5)));
  suite.push_back(make_identity("e-def", e, scale(anticommutator(bp, bp), 0.25)));
  suite.push_back(
      make_identity("f-def", f, scale(anticommutator(bm, bm), -0.25)));

  // su(1,1) relations and the mixed brackets.
  suite.push_back(make_identity("su11-he", commutator(h, e), scale(e, 2.0)));
  suite.push_back(make_identity("su11-hf", commutator(h, f), scale(f, -2.0)));
  suite.push_back(make_identity("su11-ef", commutator(e, f), h));
  suite.push_back(make_identity("h-bplus", commutator(h, bp), bp));
  suite.push_back(make_identity("h-bminus", commutator(h, bm), scale(bm, -1.0)));

  // Casimir definitions.
  suite.push_back(make_identity(
      "omega-def", om,
      scale(add(add(scale(mul(f, e), 4.0), mul(h, h)), scale(h, 2.0)), -0.25)));
  suite.push_back(make_identity(
      "casimir-def", C,
      add(scale(om, -4.0),
          scale(add(mul(bm, bp), scale(mul(bp, bm), -1.0)), 0.5))));

  // 4 Omega b+- = b+- (1 - 2C - 4 Omega).
  suite.push_back(make_identity(
      "omega-bplus", scale(mul(om, bp), 4.0),
      add(add(bp, scale(mul(bp, C), -2.0)), scale(mul(bp, om), -4.0))));
  suite.push_back(make_identity(
      "omega-bminus", scale(mul(om, bm), 4.0),
      add(add(bm, scale(mul(bm, C), -2.0)), scale(mul(bm, om), -4.0))));

  // (b-b+ - b+b-)^2 = 4(b-b+ - b+b-) - 16 Omega.
  const Expr bracket = add(mul(bm, bp), scale(mul(bp, bm), -1.0));
  suite.push_back(make_identity(
      "squared-bracket", mul(bracket, bracket),
      add(scale(bracket, 4.0), scale(om, -16.0))));

  // C^2 = (1 - 4 Omega)(2C + 4 Omega).
  suite.push_back(make_identity(
      "casimir-square", mul(C, C),
      add(add(scale(C, 2.0), scale(om, 4.0)),
          add(scale(mul(om, C), -8.0), scale(mul(om, om), -16.0)))));

  // Wigner compatibility conditions and their ladder form.
  suite.push_back(make_identity(
      "wigner-x", commutator(anticommutator(x, p), x), scale(x, -2.0 * kI)));
  suite.push_back(make_identity(
      "wigner-p", commutator(anticommutator(x, p), p), scale(p, 2.0 * kI)));
  suite.push_back(
      make_identity("hamiltonian-bplus", commutator(H, bp), scale(bm, -kI)));
  suite.push_back(
      make_identity("hamiltonian-bminus", commutator(H, bm), scale(bp, -kI)));

  // Hamiltonian in both forms, and the physical operators in ladder form.
  suite.push_back(make_identity(
      "hamiltonian-def", H, scale(add(mul(x, p), mul(p, x)), 0.5)));
  suite.push_back(make_identity(
      "hamiltonian-ladder-form", H,
      scale(add(mul(bp, bp), scale(mul(bm, bm), -1.0)), 0.5 * kI)));
  suite.push_back(
      make_identity("x-def", x, scale(add(bp, bm), 1.0 / std::sqrt(2.0))));
  suite.push_back(make_identity(
      "p-def", p, scale(add(bp, scale(bm, -1.0)), kI / std::sqrt(2.0))));

  return suite;
}

Eigen::MatrixXcd evaluate_word(const OperatorWord& word,
                               const OperatorAssignment& assignment) {
  const int n = assignment.dimension;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(n, n);
  for (const auto& s : word.factors) {
    const auto it = assignment.matrices.find(s);
    if (it == assignment.matrices.end())
      throw UnknownGenerator("generator not assigned: " + s);
    acc = acc * it->second;
  }
  return word.coefficient * acc;
}

Eigen::MatrixXcd evaluate_expr(const Expr& expr,
                               const OperatorAssignment& assignment) {
  const int n = assignment.dimension;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& w : expr) acc += evaluate_word(w, assignment);
  return acc;
}

RelationReport check_identity(const RelationIdentity& identity,
                              const OperatorAssignment& assignment,
                              double tolerance) {
  const int n = assignment.dimension;
  if (n <= identity.degree)
    throw DimensionTooSmall("dimension " + std::to_string(n) +
                            " does not exceed identity degree " +
                            std::to_string(identity.degree));
  const int m = n - identity.degree;
  const Eigen::MatrixXcd diff = evaluate_expr(identity.lhs, assignment) -
                                evaluate_expr(identity.rhs, assignment);
  const double residual = diff.topLeftCorner(m, m).cwiseAbs().maxCoeff();
  return {identity.name, n, m, residual, residual <= tolerance, tolerance};
}

RelationReport star_adjoint_check(const OperatorAssignment& assignment,
                                  double tolerance) {
  const int n = assignment.dimension;
  if (n <= 2) throw DimensionTooSmall("dimension must exceed 2");
  const int m = n - 2;
  auto get = [&](const char* s) -> const Eigen::MatrixXcd& {
    const auto it = assignment.matrices.find(s);
    if (it == assignment.matrices.end())
      throw UnknownGenerator(std::string("generator not assigned: ") + s);
    return it->second;
  };
  const auto& bp = get("b+");
  const auto& bm = get("b-");
  // The star relation holds entrywise in the orthonormal basis, no masking.
  double residual = (bp.adjoint() - bm).cwiseAbs().maxCoeff();
  auto interior = [&](const Eigen::MatrixXcd& d) {
    return d.topLeftCorner(m, m).cwiseAbs().maxCoeff();
  };
  if (assignment.matrices.count("h")) {
    const auto& h = get("h");
    residual = std::max(residual, interior(h.adjoint() - h));
  }
  if (assignment.matrices.count("e") && assignment.matrices.count("f")) {
    const auto& e = get("e");
    const auto& f = get("f");
    residual = std::max(residual, interior(e.adjoint() + f));
    residual = std::max(residual, interior(f.adjoint() + e));
  }
  return {"star-adjoint", n, m, residual, residual <= tolerance, tolerance};
}

}  // namespace ospxp
