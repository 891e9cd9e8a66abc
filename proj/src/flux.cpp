#include "kagome/flux.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace kagome {

ReducedFlux::ReducedFlux(long p, long q) : p_(p), q_(q) {
  if (q < 1) throw std::invalid_argument("flux denominator must be >= 1, got " + std::to_string(q));
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("flux " + std::to_string(p) + "/" + std::to_string(q) + " is not in lowest terms");
  }
}

ReducedFlux ReducedFlux::reduced(long p, long q) {
  if (q == 0) throw std::invalid_argument("flux denominator must be nonzero");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const long g = std::gcd(p, q);
  return ReducedFlux(p / g, q / g);
}

double ReducedFlux::gamma() const { return 2.0 * std::numbers::pi * static_cast<double>(p_) / static_cast<double>(q_); }

BlochPhase::BlochPhase(double theta1, double theta2) : theta1_(theta1), theta2_(theta2) {
  if (!(theta1 >= 0.0 && theta1 < 1.0 && theta2 >= 0.0 && theta2 < 1.0)) {
    throw std::invalid_argument("Bloch phase components must lie in [0,1)");
  }
}

BlochPhase BlochPhase::wrapped(double theta1, double theta2) {
  auto wrap = [](double t) {
    double r = t - std::floor(t);
    return r >= 1.0 ? 0.0 : r;
  };
  return BlochPhase(wrap(theta1), wrap(theta2));
}

int block_count(Model m) {
  switch (m) {
    case Model::square:
    case Model::triangular:
      return 1;
    case Model::hexagonal:
      return 2;
    case Model::kagome:
      return 3;
  }
  return 0;
}

double range_bound(Model m) {
  switch (m) {
    case Model::square:
      return 2.0;
    case Model::triangular:
    case Model::hexagonal:
      return 3.0;
    case Model::kagome:
      return 4.0;
  }
  return 0.0;
}

int flux_period(Model m) {
  switch (m) {
    case Model::square:
    case Model::hexagonal:
      return 1;
    case Model::triangular:
      return 2;
    case Model::kagome:
      return 8;
  }
  return 0;
}

std::string_view to_string(Model m) {
  switch (m) {
    case Model::square:
      return "square";
    case Model::triangular:
      return "triangular";
    case Model::hexagonal:
      return "hexagonal";
    case Model::kagome:
      return "kagome";
  }
  return "unknown";
}

Model parse_model(std::string_view name) {
  for (Model m : {Model::square, Model::triangular, Model::hexagonal, Model::kagome}) {
    if (name == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

}  // namespace kagome
