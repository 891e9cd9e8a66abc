#pragma once

// Trigonometric kagome potential and its well validation.
//
//   V_j(x) = [cos(pi x.mu_j + phi) + 2 cos((pi x.mu_j + phi)/3)]^2,  j = 1,3,5
//   Vt     = sum_j V_j^{exponent/2}
//   V      = sup Vt - Vt
//
// with mu_j = sqrt(3) nu_j^perp. The supremum has no closed form in general and
// is found numerically over one fundamental domain {s 2nu_1 + t 2nu_2}.

#include <array>
#include <numbers>
#include <string>
#include <vector>

#include "kagome/lattice.hpp"

namespace kagome {

struct PotentialParams {
  int exponent = 2;                              ///< even, >= 2
  double phase = 1.5 * std::numbers::pi;         ///< phi_j, identical for j = 1,3,5
};

/// sqrt(3) nu_j rotated by pi/2. Throws unless j is 1, 3 or 5.
Vec2 mu(int j);

/// Vt(x): the sum before subtracting from the supremum.
double eval_tilde_V(Vec2 x, const PotentialParams& params);

struct SupOptions {
  int grid = 1024;          ///< samples per fundamental-domain axis
  int ascent_steps = 50;    ///< Newton steps for the local refinement
};

struct SupResult {
  double value = 0.0;
  Vec2 argmax;
};

/// sup Vt over a fundamental domain: grid scan then local ascent.
SupResult find_sup(const PotentialParams& params, const SupOptions& options = {});
double compute_sup(const PotentialParams& params, const SupOptions& options = {});

class KagomePotential {
 public:
  /// Validates the exponent and computes sup Vt.
  explicit KagomePotential(PotentialParams params = {}, SupOptions options = {});

  const PotentialParams& params() const { return params_; }
  int exponent() const { return params_.exponent; }
  double phase() const { return params_.phase; }
  double sup_value() const { return sup_value_; }

  /// V(x) = sup Vt - Vt(x).
  double operator()(Vec2 x) const;

 private:
  PotentialParams params_;
  double sup_value_;
};

/// Central-difference gradient with step h.
Vec2 fd_gradient(const KagomePotential& V, Vec2 x, double h = 1e-4);

/// Central-difference Hessian (row-major 2x2) with step h.
std::array<double, 4> fd_hessian(const KagomePotential& V, Vec2 x, double h = 1e-4);

/// Ascending eigenvalues of a symmetric 2x2 matrix.
std::array<double, 2> symmetric_eigenvalues_2x2(const std::array<double, 4>& m);

struct WellReport {
  Vec2 location;
  double value = 0.0;
  std::array<double, 2> hessian_eigenvalues{};
  LatticePoint nearest_lattice_point{IndexPair{0, 0}, 1};
  double offset = 0.0;              ///< |location - nearest lattice point|
  double gradient_norm = 0.0;       ///< finite-difference gradient at `location`
  double richardson_deviation = 0.0;///< max relative change of Hessian eigenvalues at half step
  bool positive_definite = false;
  bool located = false;             ///< offset < tol
  bool zero_at_minimum = false;     ///< reported only: |V| <= 1e-6 at the minimum
};

/// Runs descent from each lattice point of one fundamental domain
/// (m_{(0,0),1}, m_{(1,0),3}, m_{(0,1),5}). Throws std::runtime_error if a
/// descent leaves the ball of radius 0.4 around its seed.
std::vector<WellReport> verify_wells(const KagomePotential& V, double tol);

struct InvarianceReport {
  double translation1 = 0.0;  ///< max |V(x + 2 nu_1) - V(x)|
  double translation2 = 0.0;  ///< max |V(x + 2 nu_2) - V(x)|
  double rotation = 0.0;      ///< max |V(r x) - V(x)|

  double max_deviation() const;
};

/// Sup-norm deviations at `samples` random points of a few fundamental domains.
InvarianceReport check_invariance(const KagomePotential& V, int samples, unsigned seed = 0);

/// min V over a grid x grid sampling of one fundamental domain.
double grid_minimum(const KagomePotential& V, int grid);

/// h sqrt(lambda_{1,0}^2 + B^2), lambda_{1,0} = (sqrt(l1) + sqrt(l2)) / sqrt(2).
double harmonic_ground_energy(double lambda1, double lambda2, double B, double h);

}  // namespace kagome
