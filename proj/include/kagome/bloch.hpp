#pragma once

// Rational-flux Bloch matrix families.
//
// For flux gamma = 2 pi p / q every model reduces to a (theta1, theta2)-family
// of n q x n q Hermitian matrices built from the shift K_q and the clock
// J_{p,q}:
//
//   (K_q)_{i,i+1 mod q} = 1,   J_{p,q} = diag(exp(2 pi i j p / q)), j = 0..q-1,
//   J K = exp(-2 pi i p / q) K J.
//
// A family is stored as a list of hop terms
//
//   c * exp(2 pi i (k1 theta1 + k2 theta2)) * W   placed in block (r, s),
//
// where W is a monomial q x q matrix (one nonzero per row). Assembly adds each
// term together with its adjoint in block (s, r), so every assembled matrix is
// Hermitian by construction.
//
// Kagome uses block order (v1, v3, v5) with zero diagonal blocks and
// e = exp(i(omega + pi p / (4 q))):
//
//   M13 = e      (e^{i2pi th1} K + e^{-i pi p/q} e^{i2pi(th1+th2)} K J)
//   M15 = conj(e)(e^{i2pi th1} K + e^{-i2pi th2} J*)
//   M35 = e      (e^{-i pi p/q} e^{-i2pi(th1+th2)} K* J* + e^{-i2pi th2} J*)
//
// square:     (e^{i2pi th1} K + e^{i2pi th2} J + h.c.) / 2
// triangular: square + (e^{-i pi p/q} e^{i2pi(th1+th2)} K J + h.c.) / 2
// hexagonal:  [[0, X], [X*, 0]],  X = I + e^{i2pi th1} K + e^{-i2pi th2} J*
//
// At q = 1 the Bloch phase corresponds to the symbol argument
// (x, xi) = (2 pi theta1, -2 pi theta2).

#include <cstddef>
#include <vector>

#include "kagome/flux.hpp"
#include "kagome/matrix.hpp"

namespace kagome {

/// q x q matrix with exactly one nonzero per row: row i holds value[i] at column[i].
struct MonomialMatrix {
  std::vector<std::size_t> column;
  std::vector<Complex> value;

  std::size_t dim() const { return column.size(); }
  ComplexMatrix dense() const;
};

MonomialMatrix monomial_identity(std::size_t q);
MonomialMatrix monomial_shift(std::size_t q);
MonomialMatrix monomial_clock(const ReducedFlux& flux);
/// Product a * b of monomial matrices of equal size.
MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
MonomialMatrix adjoint(const MonomialMatrix& m);

/// exp(2 pi i n / q) with n reduced modulo q first.
Complex root_of_unity(long n, long q);

/// K_q. Throws std::invalid_argument for q < 1.
ComplexMatrix shift_matrix(long q);
/// J_{p,q}. Throws std::invalid_argument unless q >= 1 and gcd(|p|, q) = 1.
ComplexMatrix clock_matrix(long p, long q);

struct HopTerm {
  int row_block = 0;
  int col_block = 0;
  Complex coefficient{1.0, 0.0};
  int k1 = 0;  ///< phase exp(2 pi i (k1 theta1 + k2 theta2))
  int k2 = 0;
  MonomialMatrix block;
};

/// Precomputed hop terms for one (model, flux, omega).
class BlochFamily {
 public:
  BlochFamily(Model model, ReducedFlux flux, double omega = 0.0);

  Model model() const { return model_; }
  const ReducedFlux& flux() const { return flux_; }
  double omega() const { return omega_; }
  std::size_t dim() const { return static_cast<std::size_t>(block_count(model_)) * q_; }
  const std::vector<HopTerm>& terms() const { return terms_; }

  /// Writes M(theta) into `out`, resizing it if needed. Hot-loop entry point.
  void assemble_into(const BlochPhase& phase, ComplexMatrix& out) const;
  HermitianMatrix operator()(const BlochPhase& phase) const;

 private:
  Model model_;
  ReducedFlux flux_;
  double omega_;
  std::size_t q_;
  std::vector<HopTerm> terms_;
};

HermitianMatrix bloch_matrix(Model model, const ReducedFlux& flux, double omega, const BlochPhase& phase);
HermitianMatrix kagome_bloch(const ReducedFlux& flux, double omega, const BlochPhase& phase);
HermitianMatrix square_bloch(const ReducedFlux& flux, const BlochPhase& phase);
HermitianMatrix triangular_bloch(const ReducedFlux& flux, const BlochPhase& phase);
HermitianMatrix hexagonal_bloch(const ReducedFlux& flux, const BlochPhase& phase);

}  // namespace kagome
