#pragma once

// Closed-form characteristic polynomials of the kagome family at the
// flat-band fluxes, checked against products over computed eigenvalues.
//
// Every right-hand side depends on theta only through
// P(theta) = ptri(2 pi q theta1, -2 pi q theta2), ptri(x, xi) = cos x + cos xi + cos(x - xi).

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kagome/flux.hpp"
#include "kagome/spectra.hpp"

namespace kagome {

struct FactorizationCase {
  std::string_view id;  ///< "p,q,0" or "p,q,pi8"
  long p;
  long q;
  double omega;
  double flat_value;     ///< root of the flat factor
  int flat_multiplicity;
};

std::span<const FactorizationCase> factorization_cases();
/// Throws std::invalid_argument for an unknown id.
const FactorizationCase& find_factorization_case(std::string_view id);

/// ptri(x, xi) = cos x + cos xi + cos(x - xi).
double ptri(double x, double xi);

/// Closed-form det(lambda I - M) for the case at (theta1, theta2).
double factorization_rhs(const FactorizationCase& c, double lambda, double theta1, double theta2);

struct FactorizationResult {
  std::string id;
  int samples = 0;
  double max_relative_deviation = 0.0;  ///< |lhs - rhs| / max(1, |rhs|)
  double max_abs_eigenvalue = 0.0;
  bool passed = false;
};

inline constexpr double kFactorizationTolerance = 1e-7;

/// Random lambda in [-5, 5] and theta in [0, 1)^2. Throws for samples < 1.
FactorizationResult verify_factorization(std::string_view id, int samples, std::uint64_t seed = 0);

struct FlatBandCaseResult {
  std::string id;
  double expected_value = 0.0;
  int expected_multiplicity = 0;
  std::vector<FlatBand> detected;
  double value_error = 0.0;  ///< |detected - expected| (infinite if nothing was detected)
  double max_width = 0.0;
  double max_stddev = 0.0;
  double max_abs_eigenvalue = 0.0;
  bool passed = false;
};

inline constexpr double kFlatValueTolerance = 1e-9;
inline constexpr double kFlatWidthTolerance = 1e-10;

/// Band spectrum of the case at `grid`; passes iff exactly one flat value is
/// found, it matches the expected value and multiplicity, and its bands are
/// narrower than kFlatWidthTolerance.
FlatBandCaseResult verify_flat_band_case(const FactorizationCase& c, int grid = 60, int threads = 1);

/// Single explicit evaluation point.
double factorization_deviation(const FactorizationCase& c, double lambda, double theta1, double theta2);

}  // namespace kagome
