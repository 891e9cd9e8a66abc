#pragma once

// Independent check of the kagome Bloch family: the discrete magnetic
// operator on an L1 x L2 torus (q | L1) is assembled hop by hop and its
// spectrum compared, as a multiset, with the Bloch matrices on the matching
// finite phase grid.
//
// Sublattice order (1, 3, 5); e = exp(i(omega + gamma/8)), h = exp(-i gamma/2):
//
//   (Qv)^1_a = e v^3_{a1+1,a2} + e h e^{i gamma (a1+1)} v^3_{a1+1,a2-1}
//            + conj(e) v^5_{a1+1,a2} + conj(e) e^{-i gamma a1} v^5_{a1,a2+1}
//   (Qv)^3_a = conj(e) v^1_{a1-1,a2} + conj(e) h e^{-i gamma (a1-1)} v^1_{a1-1,a2+1}
//            + e h e^{-i gamma (a1-1)} v^5_{a1-1,a2+1} + e e^{-i gamma a1} v^5_{a1,a2+1}
//   (Qv)^5_a = e v^1_{a1-1,a2} + e e^{i gamma a1} v^1_{a1,a2-1}
//            + conj(e) h e^{i gamma (a1+1)} v^3_{a1+1,a2-1} + conj(e) e^{i gamma a1} v^3_{a1,a2-1}
//
// Site indices wrap modulo (L1, L2); the phases use the unwrapped a1, which is
// consistent because q | L1.

#include <span>
#include <vector>

#include "kagome/flux.hpp"
#include "kagome/matrix.hpp"

namespace kagome {

struct TruncatedOperator {
  ReducedFlux flux;
  double omega;
  int L1;
  int L2;
  HermitianMatrix matrix;  ///< dim 3 L1 L2, index s L1 L2 + a1 L2 + a2
};

/// Throws std::invalid_argument unless L1, L2 >= 2 and q | L1.
TruncatedOperator build_truncated(const ReducedFlux& flux, double omega, int L1, int L2);

/// Labeling of the Floquet sectors of the torus by Bloch phases:
/// theta1 = sign1 * j * (scaled ? q : 1) / L1 for 0 <= j < L1/q,
/// theta2 = sign2 * k / L2 for 0 <= k < L2, all taken modulo 1.
struct PhaseGridConvention {
  bool theta1_scaled_by_q = false;
  int sign1 = 1;
  int sign2 = 1;

  friend bool operator==(const PhaseGridConvention&, const PhaseGridConvention&) = default;
};

/// The convention selected by calibration and used by default.
inline constexpr PhaseGridConvention kFrozenPhaseGrid{};

std::vector<BlochPhase> phase_grid(const ReducedFlux& flux, int L1, int L2, const PhaseGridConvention& c);

struct OracleResult {
  double deviation = 0.0;        ///< max |a_i - b_i| over the sorted multisets
  std::size_t size = 0;          ///< 3 L1 L2
  double max_abs_eigenvalue = 0.0;
  std::vector<double> truncated_eigenvalues;
  bool passed = false;
};

inline constexpr double kOracleTolerance = 1e-9;

/// Throws std::logic_error if the two multisets differ in size.
OracleResult isospectrality_check(const ReducedFlux& flux, double omega, int L1, int L2,
                                  const PhaseGridConvention& convention = kFrozenPhaseGrid);

struct CalibrationEntry {
  PhaseGridConvention convention;
  double deviation;
};

/// Deviation of all eight candidate conventions at one flux, best first.
std::vector<CalibrationEntry> calibrate_phase_grid(const ReducedFlux& flux, double omega, int L1, int L2);

}  // namespace kagome
