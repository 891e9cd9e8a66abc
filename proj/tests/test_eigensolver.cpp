#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "kagome/bloch.hpp"
#include "kagome/eigensolver.hpp"

using namespace kagome;

namespace {

HermitianMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = {g(rng), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = {g(rng), g(rng)};
      a(j, i) = std::conj(a(i, j));
    }
  }
  return HermitianMatrix(a);
}

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) e(i, j) = m(i, j);
  return e;
}

std::vector<double> eigen_reference(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(m), Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + m.dim());
  return out;
}

}  // namespace

TEST_CASE("matches Eigen on random Hermitian matrices") {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {1u, 2u, 3u, 5u, 16u, 47u, 90u}) {
    auto h = random_hermitian(n, rng);
    auto ours = eigenvalues(h);
    auto ref = eigen_reference(h.matrix());
    REQUIRE(ours.size() == n);
    CHECK(std::is_sorted(ours.begin(), ours.end()));
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ours[i] - ref[i]) < 1e-11 * (1.0 + n));
  }
}

TEST_CASE("matches Eigen on Bloch matrices") {
  for (Model m : {Model::square, Model::triangular, Model::hexagonal, Model::kagome})
    for (long q : {1L, 4L, 11L}) {
      auto h = bloch_matrix(m, ReducedFlux(1, q), 0.25, BlochPhase(0.4, 0.15));
      auto ours = eigenvalues(h);
      auto ref = eigen_reference(h.matrix());
      for (std::size_t i = 0; i < ours.size(); ++i) CHECK(std::abs(ours[i] - ref[i]) < 1e-12);
    }
}

TEST_CASE("trace and residuals") {
  std::mt19937_64 rng(3);
  auto h = random_hermitian(30, rng);
  auto ev = eigenvalues(h);
  double sum = 0.0;
  for (double x : ev) sum += x;
  CHECK(sum == doctest::Approx(h.matrix().trace().real()).epsilon(1e-12));

  // smallest singular value of (A - lambda I) vanishes at each computed eigenvalue
  Eigen::MatrixXcd a = to_eigen(h.matrix());
  for (double lambda : ev) {
    Eigen::MatrixXcd s = a - lambda * Eigen::MatrixXcd::Identity(30, 30);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s);
    CHECK(svd.singularValues()(29) < 1e-11);
  }
}

TEST_CASE("characteristic polynomial agrees with an LU determinant") {
  std::mt19937_64 rng(9);
  auto h = random_hermitian(6, rng);
  Eigen::MatrixXcd a = to_eigen(h.matrix());
  for (double lambda : {-2.5, -0.3, 0.0, 1.7}) {
    Eigen::MatrixXcd s = lambda * Eigen::MatrixXcd::Identity(6, 6) - a;
    double det = s.partialPivLu().determinant().real();
    CHECK(charpoly_eval(h, lambda) == doctest::Approx(det).epsilon(1e-10));
  }
}

TEST_CASE("degenerate and diagonal inputs") {
  auto id = HermitianMatrix(ComplexMatrix::identity(7));
  for (double x : eigenvalues(id)) CHECK(x == doctest::Approx(1.0).epsilon(1e-15));

  std::vector<Complex> diag{{3, 0}, {-1, 0}, {2, 0}, {-1, 0}};
  auto ev = eigenvalues(HermitianMatrix(ComplexMatrix::diagonal(diag)));
  CHECK(ev == std::vector<double>{-1, -1, 2, 3});
}

TEST_CASE("tridiagonal solver") {
  // 1D Laplacian: eigenvalues 2 - 2 cos(k pi / (n + 1))
  const int n = 12;
  std::vector<double> d(n, 2.0), e(n - 1, -1.0);
  tridiagonal_eigenvalues(d, e);
  for (int k = 1; k <= n; ++k)
    CHECK(d[k - 1] == doctest::Approx(2.0 - 2.0 * std::cos(k * std::numbers::pi / (n + 1))).epsilon(1e-13));
}

TEST_CASE("workspace reuse across sizes") {
  std::mt19937_64 rng(1);
  EigenWorkspace ws;
  std::vector<double> out;
  for (std::size_t n : {10u, 3u, 25u}) {
    auto h = random_hermitian(n, rng);
    ComplexMatrix a = h.matrix();
    eigenvalues_in_place(a, ws, out);
    CHECK(out == eigenvalues(h));
  }
}
