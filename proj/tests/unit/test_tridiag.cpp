#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "rmt/stream.hpp"
#include "rmt/tridiag.hpp"
#include "support/oracles.hpp"

using rmt::SymTridiagd;

namespace {

SymTridiagd random_matrix(Eigen::Index n, rmt::RandomStream& stream, double scale = 2.0) {
  SymTridiagd t;
  t.diag.resize(n);
  t.sub.resize(n - 1);
  for (Eigen::Index i = 0; i < n; ++i) t.diag[i] = scale * (2.0 * stream.uniform() - 1.0);
  for (Eigen::Index i = 0; i + 1 < n; ++i) t.sub[i] = scale * (2.0 * stream.uniform() - 1.0);
  return t;
}

}  // namespace

TEST_CASE("trivial orders") {
  SymTridiagd one;
  one.diag.resize(1);
  one.diag[0] = 10.0;
  one.sub.resize(0);
  const auto s1 = rmt::eigenvalues(one);
  CHECK(s1.values[0] == 10.0);  // 1x1 block is returned exactly
  CHECK(rmt::trace(one) == 10.0);

  SymTridiagd two;
  two.diag.resize(2);
  two.diag << 3.0, 3.0;
  two.sub.resize(1);
  two.sub << -2.0;
  const auto s2 = rmt::eigenvalues(two);
  CHECK(s2.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s2.values[1] == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("validation errors") {
  SymTridiagd bad;
  bad.diag.resize(2);
  bad.diag << 1.0, std::numeric_limits<double>::quiet_NaN();
  bad.sub.resize(1);
  bad.sub << 0.5;
  CHECK_THROWS_AS(rmt::eigenvalues(bad), rmt::DomainError);
  SymTridiagd mismatched;
  mismatched.diag.resize(3);
  mismatched.diag.setZero();
  mismatched.sub.resize(1);
  mismatched.sub.setZero();
  CHECK_THROWS_AS(rmt::trace(mismatched), rmt::DomainError);
  SymTridiagd ok = mismatched;
  ok.sub.resize(2);
  ok.sub.setZero();
  CHECK_THROWS_AS(rmt::eigenvalues(ok, -1.0), rmt::DomainError);
}

TEST_CASE("bisection agrees with the characteristic-polynomial oracle") {
  rmt::RandomStream stream({101, 0});
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(stream.next_u64() % 11);  // 2..12
    const SymTridiagd t = random_matrix(n, stream);
    const Eigen::VectorXd mine = rmt::eigenvalues(t).values;
    const Eigen::VectorXd ref = oracle::charpoly_eigenvalues(t);
    const double radius = ref.cwiseAbs().maxCoeff();
    const double err = (mine - ref).cwiseAbs().maxCoeff() / std::max(1.0, radius);
    worst = std::max(worst, err);
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("bisection agrees with a dense solver") {
  rmt::RandomStream stream({102, 0});
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(stream.next_u64() % 15);
    const SymTridiagd t = random_matrix(n, stream);
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
    dense.diagonal() = t.diag;
    dense.diagonal(1) = t.sub;
    dense.diagonal(-1) = t.sub;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense, Eigen::EigenvaluesOnly);
    const double err = (rmt::eigenvalues(t).values - es.eigenvalues()).cwiseAbs().maxCoeff();
    worst = std::max(worst, err / std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff()));
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("zero subdiagonals split into independent blocks") {
  SymTridiagd t;
  t.diag.resize(5);
  t.diag << 4.0, 1.0, -3.0, 2.0, 0.5;
  t.sub.resize(4);
  t.sub << 0.7, 0.0, -1.1, 0.0;
  const Eigen::VectorXd mine = rmt::eigenvalues(t).values;
  const Eigen::VectorXd ref = oracle::charpoly_eigenvalues(t);
  CHECK((mine - ref).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("trace equals the eigenvalue sum") {
  rmt::RandomStream stream({103, 0});
  for (int trial = 0; trial < 50; ++trial) {
    const SymTridiagd t = random_matrix(10, stream);
    const double tr = rmt::trace(t);
    const double sum = rmt::eigenvalues(t).values.sum();
    CHECK(std::abs(tr - sum) <= 1e-10 * std::max(1.0, std::abs(tr)));
  }
}

TEST_CASE("gershgorin containment") {
  rmt::RandomStream stream({104, 0});
  bool contained = true;
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(stream.next_u64() % 9);
    const SymTridiagd t = random_matrix(n, stream);
    double bound = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      double row = std::abs(t.diag[i]);
      if (i > 0) row += std::abs(t.sub[i - 1]);
      if (i + 1 < n) row += std::abs(t.sub[i]);
      bound = std::max(bound, row);
    }
    const Eigen::VectorXd vals = rmt::eigenvalues(t).values;
    contained = contained && vals.cwiseAbs().maxCoeff() <= bound * (1.0 + 1e-14);
  }
  CHECK(contained);
}

TEST_CASE("eigenvalues interlace under leading principal truncation") {
  rmt::RandomStream stream({105, 0});
  bool interlaced = true;
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = 3 + static_cast<Eigen::Index>(stream.next_u64() % 6);  // 3..8
    const SymTridiagd t = random_matrix(n, stream);
    SymTridiagd head;
    head.diag = t.diag.head(n - 1);
    head.sub = t.sub.head(n - 2);
    const Eigen::VectorXd full = oracle::charpoly_eigenvalues(t);
    const Eigen::VectorXd trunc = rmt::eigenvalues(head).values;
    for (Eigen::Index i = 0; i + 1 < n; ++i)
      interlaced = interlaced && full[i] <= trunc[i] + 1e-10 && trunc[i] <= full[i + 1] + 1e-10;
  }
  CHECK(interlaced);
}

TEST_CASE("entrywise norm bound") {
  SymTridiagd a, b;
  a.diag.resize(1);
  a.diag << 2.0;
  a.sub.resize(0);
  b = a;
  CHECK(rmt::entrywise_norm_bound(a, a) == 0.0);
  b.diag[0] = -1.5;
  CHECK(rmt::entrywise_norm_bound(a, b) == doctest::Approx(3.5));

  SymTridiagd c;
  c.diag.resize(3);
  c.diag.setZero();
  c.sub.resize(2);
  c.sub.setZero();
  CHECK_THROWS_AS(rmt::entrywise_norm_bound(a, c), rmt::DomainError);

  SUBCASE("dominates the sorted eigenvalue gap (Weyl)") {
    rmt::RandomStream stream({106, 0});
    int violations = 0;
    for (int trial = 0; trial < 10000; ++trial) {
      const SymTridiagd t1 = random_matrix(6, stream);
      SymTridiagd t2 = t1;
      for (Eigen::Index i = 0; i < 6; ++i) t2.diag[i] += 0.3 * (2.0 * stream.uniform() - 1.0);
      for (Eigen::Index i = 0; i < 5; ++i) t2.sub[i] += 0.3 * (2.0 * stream.uniform() - 1.0);
      const double bound = rmt::entrywise_norm_bound(t1, t2);
      const double gap = (rmt::eigenvalues(t1).values - rmt::eigenvalues(t2).values)
                             .cwiseAbs()
                             .maxCoeff();
      if (gap > bound * (1.0 + 1e-12) + 1e-12) ++violations;
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("ensemble-scale matrices solve as accurately as unit-scale ones") {
  // entries of order 2*alpha with a clustered bulk, the regime the
  // concentration experiments live in
  rmt::RandomStream stream({108, 0});
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = 8;
    rmt::SymTridiagd t;
    t.diag.resize(n);
    t.sub.resize(n - 1);
    for (Eigen::Index i = 0; i < n; ++i) t.diag[i] = 160.0 + 20.0 * stream.normal();
    for (Eigen::Index i = 0; i + 1 < n; ++i) t.sub[i] = 30.0 + 5.0 * stream.normal();
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
    dense.diagonal() = t.diag;
    dense.diagonal(1) = t.sub;
    dense.diagonal(-1) = t.sub;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense, Eigen::EigenvaluesOnly);
    const double err = (rmt::eigenvalues(t).values - es.eigenvalues()).cwiseAbs().maxCoeff();
    worst = std::max(worst, err / es.eigenvalues().cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("loose tolerance still brackets correctly") {
  rmt::RandomStream stream({107, 0});
  const SymTridiagd t = random_matrix(8, stream);
  const Eigen::VectorXd fine = rmt::eigenvalues(t, 1e-14).values;
  const Eigen::VectorXd coarse = rmt::eigenvalues(t, 1e-4).values;
  const double radius = fine.cwiseAbs().maxCoeff();
  CHECK((fine - coarse).cwiseAbs().maxCoeff() <= 1e-4 * std::max(1.0, radius));
}
