#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ospxp/matrix_rep.hpp"

using namespace ospxp;
using cd = std::complex<double>;

TEST_CASE("b+ subdiagonal entries") {
  // mu = 1/4 reproduces the oscillator raising operator sqrt(n+1)
  const auto beta_quarter = rep_subdiagonal(0.25, 4, Family::FinalActions);
  CHECK(beta_quarter[0] == doctest::Approx(1.0));
  CHECK(beta_quarter[1] == doctest::Approx(std::sqrt(2.0)));
  CHECK(beta_quarter[2] == doctest::Approx(std::sqrt(3.0)));

  const auto beta_one = rep_subdiagonal(1.0, 4, Family::FinalActions);
  CHECK(beta_one[0] == doctest::Approx(2.0));
  CHECK(beta_one[1] == doctest::Approx(std::sqrt(2.0)));
  CHECK(beta_one[2] == doctest::Approx(std::sqrt(6.0)));
}

TEST_CASE("build_rep structure") {
  const auto rep = build_rep(0.25, 8);

  SUBCASE("b- annihilates the lowest weight vector") {
    CHECK(rep.b_minus.col(0).norm() == 0.0);
  }

  SUBCASE("b- is the exact adjoint of b+") {
    CHECK((rep.b_minus - rep.b_plus.adjoint()).norm() == 0.0);
  }

  SUBCASE("b+ is strictly lower shift") {
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        if (i != j + 1) CHECK(rep.b_plus(i, j) == cd{0.0, 0.0});
  }

  SUBCASE("h is diagonal with entries 2mu + n on the interior") {
    for (int n = 0; n < 6; ++n) {
      CHECK(std::abs(rep.h(n, n) - cd{0.5 + n, 0.0}) < 1e-13);
      for (int m = 0; m < 6; ++m)
        if (m != n) CHECK(std::abs(rep.h(n, m)) < 1e-13);
    }
  }
}

TEST_CASE("build_rep errors") {
  CHECK_THROWS_AS(build_rep(0.0, 8), InvalidParameter);
  CHECK_THROWS_AS(build_rep(-1.0, 8), InvalidParameter);
  CHECK_THROWS_AS(build_rep(0.25, 3), DimensionTooSmall);
  CHECK_THROWS_AS(build_rep(0.25, 8, Family::EquivActions), NotUnitarizable);
  CHECK_THROWS_AS(build_rep(0.5, 8, Family::EquivActions), NotUnitarizable);
  CHECK_THROWS_AS(build_rep(1.0, 8, Family::None), InvalidParameter);
}

TEST_CASE("casimir matrices are scalar on the interior") {
  for (const double mu : {0.25, 1.0, 3.0}) {
    const auto assignment = make_assignment(build_rep(mu, 32));
    const auto& omega = assignment.matrices.at("Omega");
    const auto& casimir = assignment.matrices.at("C");
    const double delta = -mu;
    const double omega_even = -delta * (delta + 1.0);
    const double omega_odd = -(delta - 0.5) * (delta + 0.5);
    const double lambda = 2.0 * delta * (2.0 * delta + 1.0);
    const int interior = 32 - 4;
    for (int i = 0; i < interior; ++i) {
      const double expected = i % 2 == 0 ? omega_even : omega_odd;
      CHECK(std::abs(omega(i, i) - cd{expected, 0.0}) < 1e-10);
      CHECK(std::abs(casimir(i, i) - cd{lambda, 0.0}) < 1e-10);
      for (int j = 0; j < interior; ++j)
        if (j != i) {
          CHECK(std::abs(omega(i, j)) < 1e-10);
          CHECK(std::abs(casimir(i, j)) < 1e-10);
        }
    }
  }
}

TEST_CASE("physical operators") {
  const auto rep = build_rep(0.25, 6);
  const auto ops = physical_operators(rep);

  SUBCASE("x offdiagonal is the oscillator position matrix at mu = 1/4") {
    const double expected[] = {std::sqrt(0.5), 1.0, std::sqrt(1.5),
                               std::sqrt(2.0), std::sqrt(2.5)};
    for (int n = 0; n < 5; ++n) {
      CHECK(std::abs(ops.x(n + 1, n) - cd{expected[n], 0.0}) < 1e-14);
      CHECK(std::abs(ops.x(n, n + 1) - cd{expected[n], 0.0}) < 1e-14);
    }
  }

  SUBCASE("diagonals of x and H vanish identically") {
    for (const double mu : {0.25, 1.0, 2.5}) {
      const auto o = physical_operators(build_rep(mu, 8));
      for (int n = 0; n < 8; ++n) {
        CHECK(o.x(n, n) == cd{0.0, 0.0});
        CHECK(o.H(n, n) == cd{0.0, 0.0});
      }
    }
  }

  SUBCASE("H couples only n to n+-2") {
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (std::abs(i - j) != 2) CHECK(ops.H(i, j) == cd{0.0, 0.0});
  }

  SUBCASE("H matrix element composes two raising steps") {
    const auto o = physical_operators(build_rep(1.0, 8));
    // <e_2|H|e_0> = (i/2) sqrt(2(2mu)) sqrt(2) = i sqrt(2) at mu = 1
    CHECK(std::abs(o.H(2, 0) - cd{0.0, std::sqrt(2.0)}) < 1e-14);
  }

  SUBCASE("x and p are Hermitian exactly") {
    CHECK((ops.x - ops.x.adjoint()).norm() == 0.0);
    CHECK((ops.p - ops.p.adjoint()).norm() == 0.0);
  }

  SUBCASE("H is Hermitian on the interior") {
    const auto o = physical_operators(build_rep(1.0, 16));
    const Eigen::MatrixXcd d = o.H - o.H.adjoint();
    CHECK(d.topLeftCorner(14, 14).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("wigner compatibility holds for every admissible mu") {
  for (const double mu : {0.25, 2.0}) {
    const auto rep = build_rep(mu, 32);
    const auto reports =
        verify_wigner_compatibility(physical_operators(rep), rep, 1e-12);
    CHECK(reports.size() == 5);
    for (const auto& r : reports) {
      INFO(r.identity << " mu=" << mu << " residual=" << r.residual);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("canonical commutator appears only at mu = 1/4") {
  auto commutator_defect = [](double mu, int n) {
    const auto ops = physical_operators(build_rep(mu, n));
    const Eigen::MatrixXcd c = ops.x * ops.p - ops.p * ops.x -
                               cd{0.0, 1.0} * Eigen::MatrixXcd::Identity(n, n);
    return c.topLeftCorner(n - 2, n - 2).cwiseAbs().maxCoeff();
  };
  CHECK(commutator_defect(0.25, 32) < 1e-12);
  CHECK(commutator_defect(1.0, 32) > 0.1);
}

TEST_CASE("family equivalence: EquivActions(mu) equals FinalActions(mu - 1/2)") {
  for (const double mu : {0.75, 1.0, 2.0}) {
    const auto second = build_rep(mu, 32, Family::EquivActions);
    const auto first = build_rep(mu - 0.5, 32, Family::FinalActions);
    CHECK((second.b_plus - first.b_plus).norm() == 0.0);
  }
}

TEST_CASE("no invariant coordinate subspace at truncation scale") {
  for (const double mu : {0.25, 1.0, 2.5}) {
    const auto beta = rep_subdiagonal(mu, 32, Family::FinalActions);
    for (int n = 0; n < beta.size(); ++n) CHECK(beta[n] > 0.0);
  }
}
