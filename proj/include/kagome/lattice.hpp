#pragma once

// Kagome lattice geometry.
//
// Points are m_{alpha,ell} = 2 alpha_1 nu_1 + 2 alpha_2 nu_2 + nu_ell with
// ell in {1,3,5}; nu_j = r^{j-1}(1,0) with r the rotation by pi/3. Labels
// keep the odd 1-based convention and are combined modulo 6.

#include <array>
#include <compare>
#include <vector>

namespace kagome {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
};

double dot(Vec2 a, Vec2 b);
double norm(Vec2 a);
/// Rotation of `a` by `angle` radians about the origin.
Vec2 rotate(Vec2 a, double angle);

/// Integer coordinates in the basis {2 nu_1, 2 nu_2}.
struct IndexPair {
  int a1 = 0;
  int a2 = 0;

  friend IndexPair operator+(IndexPair u, IndexPair v) { return {u.a1 + v.a1, u.a2 + v.a2}; }
  friend IndexPair operator-(IndexPair u, IndexPair v) { return {u.a1 - v.a1, u.a2 - v.a2}; }
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// kappa(a1, a2) = (-a2, a1 + a2): the rotation r written in index coordinates.
IndexPair kappa(IndexPair alpha);
/// kappa applied `times` times (any integer, taken modulo 6).
IndexPair kappa_power(IndexPair alpha, int times);
/// a1 b2 - a2 b1.
int wedge(IndexPair alpha, IndexPair beta);

/// nu_j = r^{j-1}(1,0); j is taken modulo 6.
Vec2 nu(int j);

/// Reduce a sublattice label into {1,...,6}.
int wrap_label(int j);

class LatticePoint {
 public:
  /// Throws std::invalid_argument unless wrap_label(ell) is 1, 3 or 5.
  LatticePoint(IndexPair alpha, int ell);

  IndexPair alpha() const { return alpha_; }
  int ell() const { return ell_; }
  Vec2 cartesian() const;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

 private:
  IndexPair alpha_;
  int ell_;
};

/// All points with max(|a1|,|a2|) <= shell_radius, ordered by (alpha, ell).
std::vector<LatticePoint> enumerate_points(int shell_radius);

/// The four Euclidean nearest neighbours of `p`, each at distance 1.
std::array<LatticePoint, 4> nearest_neighbors(const LatticePoint& p);

/// The lattice point at r * p.cartesian() (rotation by pi/3).
LatticePoint rotate_point(const LatticePoint& p);

}  // namespace kagome
