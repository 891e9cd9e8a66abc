#include "kagome/factorization.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "kagome/bloch.hpp"
#include "kagome/eigensolver.hpp"

namespace kagome {

namespace {

constexpr double pi = std::numbers::pi;
const double s2 = std::numbers::sqrt2;
const double s3 = std::numbers::sqrt3;
const double s6 = std::sqrt(6.0);

/// Ascending coefficients of the degree-12 factors at gamma = -pi/3 and 7pi/3.
const std::array<double, 13> kT = {
    -9726 - 5616 * s3,       9828 * s2 + 5652 * s6, 3024 + 1836 * s3,     -(8244 * s2 + 4596 * s6),
    1584 + 720 * s3,         2970 * s2 + 1350 * s6, -(828 + 540 * s3),    -(612 * s2 + 144 * s6),
    36 + 180 * s3,           38 * s2 + 18 * s6,     6 - 21 * s3,          3 * s2 - 3 * s6,
    1};
const std::array<double, 13> kU = {
    -9726 + 5616 * s3,          36 * s2 * (-273 + 157 * s3), 108 * (28 - 17 * s3), 12 * s2 * (687 - 383 * s3),
    144 * (11 - 5 * s3),        270 * s2 * (-11 + 5 * s3),   36 * (-23 + 15 * s3), 36 * s2 * (17 - 4 * s3),
    36 * (1 - 5 * s3),          2 * s2 * (-19 + 9 * s3),     3 * (2 + 7 * s3),     -3 * s2 * (1 + s3),
    1};

double horner(const std::array<double, 13>& c, double x) {
  double r = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

const std::array<FactorizationCase, 8> kCases = {{
    {"0,1,0", 0, 1, 0.0, -2.0, 1},
    {"2,1,0", 2, 1, 0.0, 0.0, 1},
    {"2,3,0", 2, 3, 0.0, -std::numbers::sqrt3, 3},
    {"4,3,0", 4, 3, 0.0, -1.0, 3},
    {"1,2,pi8", 1, 2, pi / 8.0, -std::numbers::sqrt2, 2},
    {"3,2,pi8", 3, 2, pi / 8.0, -2.0, 2},
    {"-1,6,pi8", -1, 6, pi / 8.0, -(s6 - s2) / 2.0, 6},
    {"7,6,pi8", 7, 6, pi / 8.0, -(s6 + s2) / 2.0, 6},
}};

}  // namespace

std::span<const FactorizationCase> factorization_cases() { return kCases; }

const FactorizationCase& find_factorization_case(std::string_view id) {
  for (const auto& c : kCases) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("unknown factorization case '" + std::string(id) + "'");
}

double ptri(double x, double xi) { return std::cos(x) + std::cos(xi) + std::cos(x - xi); }

double factorization_rhs(const FactorizationCase& c, double l, double theta1, double theta2) {
  const double P = ptri(2.0 * pi * c.q * theta1, -2.0 * pi * c.q * theta2);
  const double flat = std::pow(l - c.flat_value, c.flat_multiplicity);
  const double l2 = l * l, l3 = l2 * l, l4 = l3 * l, l5 = l4 * l, l6 = l5 * l;
  if (c.id == "0,1,0") return flat * ((l - 1) * (l - 1) - (3 + 2 * P));
  if (c.id == "2,1,0") return flat * (l2 - (6 + 2 * P));
  if (c.id == "2,3,0") return flat * (l6 - 3 * s3 * l5 + 18 * s3 * l3 - 36 * l2 + 6 - 2 * P);
  if (c.id == "4,3,0") return flat * (l6 - 3 * l5 - 12 * l4 + 38 * l3 + 24 * l2 - 120 * l + 70 - 2 * P);
  if (c.id == "1,2,pi8") return flat * (l4 - 2 * s2 * l3 - 6 * l2 + 12 * s2 * l - 6 + 2 * P);
  if (c.id == "3,2,pi8") return flat * (l4 - 4 * l3 + 8 * l - 2 + 2 * P);
  if (c.id == "-1,6,pi8") return flat * (horner(kT, l) + 2 * P);
  if (c.id == "7,6,pi8") return flat * (horner(kU, l) + 2 * P);
  throw std::invalid_argument("unknown factorization case '" + std::string(c.id) + "'");
}

double factorization_deviation(const FactorizationCase& c, double lambda, double theta1, double theta2) {
  const auto ev = eigenvalues(kagome_bloch(ReducedFlux(c.p, c.q), c.omega, BlochPhase(theta1, theta2)));
  const double rhs = factorization_rhs(c, lambda, theta1, theta2);
  return std::abs(charpoly_eval(ev, lambda) - rhs) / std::max(1.0, std::abs(rhs));
}

FactorizationResult verify_factorization(std::string_view id, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("factorization check needs at least one sample");
  const FactorizationCase& c = find_factorization_case(id);
  const BlochFamily family(Model::kagome, ReducedFlux(c.p, c.q), c.omega);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> lam(-5.0, 5.0);
  FactorizationResult r;
  r.id = std::string(c.id);
  r.samples = samples;
  for (int s = 0; s < samples; ++s) {
    const double t1 = unit(rng);
    const double t2 = unit(rng);
    const double l = lam(rng);
    const auto ev = eigenvalues(family(BlochPhase(t1, t2)));
    for (double x : ev) r.max_abs_eigenvalue = std::max(r.max_abs_eigenvalue, std::abs(x));
    const double rhs = factorization_rhs(c, l, t1, t2);
    r.max_relative_deviation =
        std::max(r.max_relative_deviation, std::abs(charpoly_eval(ev, l) - rhs) / std::max(1.0, std::abs(rhs)));
  }
  r.passed = r.max_relative_deviation < kFactorizationTolerance;
  return r;
}

FlatBandCaseResult verify_flat_band_case(const FactorizationCase& c, int grid, int threads) {
  SpectrumOptions opt;
  opt.grid = grid;
  opt.threads = threads;
  const SpectrumSet s = band_spectrum(Model::kagome, ReducedFlux(c.p, c.q), c.omega, opt);
  FlatBandCaseResult r;
  r.id = std::string(c.id);
  r.expected_value = c.flat_value;
  r.expected_multiplicity = c.flat_multiplicity;
  r.detected = detect_flat_bands(s);
  for (const Band& b : s.bands) r.max_abs_eigenvalue = std::max({r.max_abs_eigenvalue, std::abs(b.lo), std::abs(b.hi)});
  r.value_error = std::numeric_limits<double>::infinity();
  if (!r.detected.empty()) r.value_error = std::abs(r.detected.front().value - c.flat_value);
  for (const FlatBand& f : r.detected) {
    r.max_width = std::max(r.max_width, f.max_width);
    r.max_stddev = std::max(r.max_stddev, f.max_stddev);
  }
  r.passed = r.detected.size() == 1 && r.value_error <= kFlatValueTolerance &&
             r.detected.front().multiplicity == c.flat_multiplicity && r.max_width < kFlatWidthTolerance;
  return r;
}

}  // namespace kagome
