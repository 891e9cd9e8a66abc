#include "kagome/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kagome/bloch.hpp"
#include "kagome/eigensolver.hpp"

namespace kagome {

namespace {

Complex cis(double a) { return {std::cos(a), std::sin(a)}; }

int wrap(int a, int L) { return ((a % L) + L) % L; }

}  // namespace

TruncatedOperator build_truncated(const ReducedFlux& flux, double omega, int L1, int L2) {
  if (L1 < 2 || L2 < 2) throw std::invalid_argument("torus sides must be >= 2");
  if (L1 % flux.q() != 0) {
    throw std::invalid_argument("q = " + std::to_string(flux.q()) + " does not divide L1 = " + std::to_string(L1));
  }
  const double g = flux.gamma();
  const int N = L1 * L2;
  const Complex e = cis(omega + g / 8.0);
  const Complex ec = std::conj(e);
  const Complex h = cis(-g / 2.0);

  ComplexMatrix H(static_cast<std::size_t>(3 * N));
  auto idx = [&](int s, int a1, int a2) {
    return static_cast<std::size_t>(s * N + wrap(a1, L1) * L2 + wrap(a2, L2));
  };
  for (int a1 = 0; a1 < L1; ++a1) {
    for (int a2 = 0; a2 < L2; ++a2) {
      const std::size_t r1 = idx(0, a1, a2);
      const std::size_t r3 = idx(1, a1, a2);
      const std::size_t r5 = idx(2, a1, a2);

      H(r1, idx(1, a1 + 1, a2)) += e;
      H(r1, idx(1, a1 + 1, a2 - 1)) += e * h * cis(g * (a1 + 1));
      H(r1, idx(2, a1 + 1, a2)) += ec;
      H(r1, idx(2, a1, a2 + 1)) += ec * cis(-g * a1);

      H(r3, idx(0, a1 - 1, a2)) += ec;
      H(r3, idx(0, a1 - 1, a2 + 1)) += ec * h * cis(-g * (a1 - 1));
      H(r3, idx(2, a1 - 1, a2 + 1)) += e * h * cis(-g * (a1 - 1));
      H(r3, idx(2, a1, a2 + 1)) += e * cis(-g * a1);

      H(r5, idx(0, a1 - 1, a2)) += e;
      H(r5, idx(0, a1, a2 - 1)) += e * cis(g * a1);
      H(r5, idx(1, a1 + 1, a2 - 1)) += ec * h * cis(g * (a1 + 1));
      H(r5, idx(1, a1, a2 - 1)) += ec * cis(g * a1);
    }
  }
  return {flux, omega, L1, L2, HermitianMatrix(std::move(H))};
}

std::vector<BlochPhase> phase_grid(const ReducedFlux& flux, int L1, int L2, const PhaseGridConvention& c) {
  const long q = flux.q();
  std::vector<BlochPhase> out;
  for (long j = 0; j < L1 / q; ++j) {
    const double t1 = c.sign1 * static_cast<double>(c.theta1_scaled_by_q ? j * q : j) / L1;
    for (int k = 0; k < L2; ++k) {
      out.push_back(BlochPhase::wrapped(t1, c.sign2 * static_cast<double>(k) / L2));
    }
  }
  return out;
}

OracleResult isospectrality_check(const ReducedFlux& flux, double omega, int L1, int L2,
                                  const PhaseGridConvention& convention) {
  const TruncatedOperator t = build_truncated(flux, omega, L1, L2);
  OracleResult r;
  r.truncated_eigenvalues = eigenvalues(t.matrix);

  const BlochFamily family(Model::kagome, flux, omega);
  std::vector<double> bloch;
  for (const BlochPhase& ph : phase_grid(flux, L1, L2, convention)) {
    const auto ev = eigenvalues(family(ph));
    bloch.insert(bloch.end(), ev.begin(), ev.end());
  }
  std::sort(bloch.begin(), bloch.end());
  if (bloch.size() != r.truncated_eigenvalues.size()) {
    throw std::logic_error("oracle multiset sizes differ: " + std::to_string(bloch.size()) + " vs " +
                           std::to_string(r.truncated_eigenvalues.size()));
  }
  r.size = bloch.size();
  for (std::size_t i = 0; i < r.size; ++i) {
    r.deviation = std::max(r.deviation, std::abs(bloch[i] - r.truncated_eigenvalues[i]));
    r.max_abs_eigenvalue = std::max(r.max_abs_eigenvalue, std::abs(r.truncated_eigenvalues[i]));
  }
  r.passed = r.deviation < kOracleTolerance;
  return r;
}

std::vector<CalibrationEntry> calibrate_phase_grid(const ReducedFlux& flux, double omega, int L1, int L2) {
  std::vector<CalibrationEntry> out;
  for (bool scaled : {false, true}) {
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        const PhaseGridConvention c{scaled, s1, s2};
        out.push_back({c, isospectrality_check(flux, omega, L1, L2, c).deviation});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CalibrationEntry& a, const CalibrationEntry& b) { return a.deviation < b.deviation; });
  return out;
}

}  // namespace kagome
