#pragma once

#include <string>
#include <string_view>

namespace kagome {

/// Rational flux gamma / 2pi = p / q in lowest terms (p may be negative).
class ReducedFlux {
 public:
  /// Throws std::invalid_argument unless q >= 1 and gcd(|p|, q) = 1.
  ReducedFlux(long p, long q);

  /// Reduces p/q to lowest terms first (q may be negative).
  static ReducedFlux reduced(long p, long q);

  long p() const { return p_; }
  long q() const { return q_; }
  double gamma() const;
  double gamma_over_2pi() const { return static_cast<double>(p_) / static_cast<double>(q_); }

  /// gamma -> gamma + 2 pi k, i.e. (p, q) -> (p + k q, q).
  ReducedFlux shifted(long k) const { return ReducedFlux(p_ + k * q_, q_); }
  ReducedFlux negated() const { return ReducedFlux(-p_, q_); }

  friend bool operator==(const ReducedFlux&, const ReducedFlux&) = default;

 private:
  long p_;
  long q_;
};

/// Floquet phase (theta1, theta2) on the unit torus [0,1)^2.
class BlochPhase {
 public:
  BlochPhase() = default;
  /// Throws std::invalid_argument unless both components lie in [0,1).
  BlochPhase(double theta1, double theta2);
  /// Reduces both components modulo 1.
  static BlochPhase wrapped(double theta1, double theta2);

  double theta1() const { return theta1_; }
  double theta2() const { return theta2_; }

 private:
  double theta1_ = 0.0;
  double theta2_ = 0.0;
};

enum class Model { square, triangular, hexagonal, kagome };

/// Number of q x q blocks per side of the Bloch matrix (1, 1, 2, 3).
int block_count(Model m);
/// Spectral range bound R: spectrum within [-R, R].
double range_bound(Model m);
/// Smallest k with sigma_{gamma + 2 pi k} = sigma_gamma (1, 2, 1, 8).
int flux_period(Model m);

std::string_view to_string(Model m);
/// Throws std::invalid_argument on unknown names.
Model parse_model(std::string_view name);

}  // namespace kagome
