#include "kagome/symbol.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace kagome {

namespace {

Complex cis(double a) { return {std::cos(a), std::sin(a)}; }

/// S^{-1} A S for the permutation matrix with S(i, s[i]) = 1.
ComplexMatrix permute(const ComplexMatrix& a, const std::array<std::size_t, 3>& s) {
  ComplexMatrix S(3);
  for (std::size_t i = 0; i < 3; ++i) S(i, s[i]) = 1.0;
  return S.adjoint() * a * S;
}

}  // namespace

ComplexMatrix symbol(Model model, double x, double xi, double gamma, double omega) {
  switch (model) {
    case Model::square: {
      ComplexMatrix m(1);
      m(0, 0) = std::cos(x) + std::cos(xi);
      return m;
    }
    case Model::triangular: {
      ComplexMatrix m(1);
      m(0, 0) = std::cos(x) + std::cos(xi) + std::cos(x - xi);
      return m;
    }
    case Model::hexagonal: {
      ComplexMatrix m(2);
      m(0, 1) = 1.0 + cis(x) + cis(xi);
      m(1, 0) = std::conj(m(0, 1));
      return m;
    }
    case Model::kagome: {
      const Complex e = cis(omega + gamma / 8.0);
      const Complex ec = std::conj(e);
      ComplexMatrix m(3);
      m(0, 1) = e * (cis(-x) + cis(-(x - xi)));
      m(0, 2) = ec * (cis(-x) + cis(-xi));
      m(1, 0) = ec * (cis(x) + cis(x - xi));
      m(1, 2) = e * (cis(x - xi) + cis(-xi));
      m(2, 0) = e * (cis(x) + cis(xi));
      m(2, 1) = ec * (cis(-(x - xi)) + cis(xi));
      return m;
    }
  }
  throw std::invalid_argument("unknown model");
}

double SymbolSymmetryReport::max_deviation() const {
  return std::max({translation_x, translation_xi, rotation, conjugation, hermiticity});
}

SymbolSymmetryReport symbol_symmetries_at(double x, double xi, double gamma, double omega,
                                          double omega_perturbation) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double w = omega + omega_perturbation;
  const ComplexMatrix p = symbol(Model::kagome, x, xi, gamma, omega);
  SymbolSymmetryReport r;
  r.translation_x = max_abs_difference(symbol(Model::kagome, x + two_pi, xi, gamma, w), p);
  r.translation_xi = max_abs_difference(symbol(Model::kagome, x, xi + two_pi, gamma, w), p);
  r.rotation = max_abs_difference(permute(symbol(Model::kagome, xi - x, -x, gamma, w), {1, 2, 0}), p);
  r.conjugation = max_abs_difference(permute(symbol(Model::kagome, xi, x, gamma, w).conjugate(), {2, 1, 0}), p);
  r.hermiticity = hermiticity_defect(p);
  return r;
}

SymbolSymmetryReport verify_symbol_symmetries(int samples, std::uint64_t seed, double omega_perturbation) {
  if (samples < 1) throw std::invalid_argument("symbol check needs at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> arg(-10.0, 10.0);
  std::uniform_real_distribution<double> flux(-20.0, 20.0);
  std::uniform_real_distribution<double> phase(-3.0, 3.0);
  SymbolSymmetryReport worst;
  for (int s = 0; s < samples; ++s) {
    const double x = arg(rng);
    const double xi = arg(rng);
    const double g = flux(rng);
    const double w = phase(rng);
    const SymbolSymmetryReport r = symbol_symmetries_at(x, xi, g, w, omega_perturbation);
    worst.translation_x = std::max(worst.translation_x, r.translation_x);
    worst.translation_xi = std::max(worst.translation_xi, r.translation_xi);
    worst.rotation = std::max(worst.rotation, r.rotation);
    worst.conjugation = std::max(worst.conjugation, r.conjugation);
    worst.hermiticity = std::max(worst.hermiticity, r.hermiticity);
  }
  return worst;
}

}  // namespace kagome
