#include "kagome/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace kagome {

double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

double norm(Vec2 a) { return std::hypot(a.x, a.y); }

Vec2 rotate(Vec2 a, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}

IndexPair kappa(IndexPair alpha) { return {-alpha.a2, alpha.a1 + alpha.a2}; }

IndexPair kappa_power(IndexPair alpha, int times) {
  int n = ((times % 6) + 6) % 6;
  for (int i = 0; i < n; ++i) alpha = kappa(alpha);
  return alpha;
}

int wedge(IndexPair alpha, IndexPair beta) { return alpha.a1 * beta.a2 - alpha.a2 * beta.a1; }

int wrap_label(int j) { return ((j - 1) % 6 + 6) % 6 + 1; }

Vec2 nu(int j) {
  // Exact table: the six unit vectors at multiples of pi/3.
  constexpr double h = std::numbers::sqrt3 / 2.0;
  static constexpr Vec2 table[6] = {{1.0, 0.0}, {0.5, h}, {-0.5, h}, {-1.0, 0.0}, {-0.5, -h}, {0.5, -h}};
  return table[wrap_label(j) - 1];
}

LatticePoint::LatticePoint(IndexPair alpha, int ell) : alpha_(alpha), ell_(wrap_label(ell)) {
  if (ell_ % 2 == 0) {
    throw std::invalid_argument("kagome sublattice label must be 1, 3 or 5 (mod 6), got " + std::to_string(ell));
  }
}

Vec2 LatticePoint::cartesian() const {
  return 2.0 * alpha_.a1 * nu(1) + 2.0 * alpha_.a2 * nu(2) + nu(ell_);
}

std::vector<LatticePoint> enumerate_points(int shell_radius) {
  if (shell_radius < 0) throw std::invalid_argument("shell_radius must be nonnegative");
  std::vector<LatticePoint> points;
  const int side = 2 * shell_radius + 1;
  points.reserve(static_cast<std::size_t>(3 * side * side));
  for (int a1 = -shell_radius; a1 <= shell_radius; ++a1)
    for (int a2 = -shell_radius; a2 <= shell_radius; ++a2)
      for (int ell : {1, 3, 5}) points.emplace_back(IndexPair{a1, a2}, ell);
  return points;
}

namespace {

/// 2 * nu~_j = kappa^{j-1}(1,0): the index coordinates of 2 nu_j.
IndexPair twice_nu_index(int j) { return kappa_power({1, 0}, wrap_label(j) - 1); }

}  // namespace

std::array<LatticePoint, 4> nearest_neighbors(const LatticePoint& p) {
  const int j = p.ell();
  const IndexPair a = p.alpha();
  return {LatticePoint(a + twice_nu_index(j), j - 2), LatticePoint(a - twice_nu_index(j - 2), j - 2),
          LatticePoint(a + twice_nu_index(j), j + 2), LatticePoint(a - twice_nu_index(j + 2), j + 2)};
}

LatticePoint rotate_point(const LatticePoint& p) {
  // r m_{alpha,l} = 2 kappa(alpha).B + nu_{l+1}, and nu_{l+1} = 2 nu_{l+1} + nu_{l+4}.
  return LatticePoint(kappa(p.alpha()) + twice_nu_index(p.ell() + 1), p.ell() + 4);
}

}  // namespace kagome
