#include "kagome/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace kagome {

namespace {

constexpr double kDescentBall = 0.4;

Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

Vec2 domain_point(double s, double t) { return 2.0 * s * nu(1) + 2.0 * t * nu(2); }

double int_pow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

/// One Newton step for a smooth function using central differences.
template <class F>
std::array<double, 4> hessian_of(const F& f, Vec2 x, double h) {
  const double fxx = (f({x.x + h, x.y}) - 2.0 * f(x) + f({x.x - h, x.y})) / (h * h);
  const double fyy = (f({x.x, x.y + h}) - 2.0 * f(x) + f({x.x, x.y - h})) / (h * h);
  const double fxy = (f({x.x + h, x.y + h}) - f({x.x + h, x.y - h}) - f({x.x - h, x.y + h}) +
                      f({x.x - h, x.y - h})) /
                     (4.0 * h * h);
  return {fxx, fxy, fxy, fyy};
}

template <class F>
Vec2 gradient_of(const F& f, Vec2 x, double h) {
  return {(f({x.x + h, x.y}) - f({x.x - h, x.y})) / (2.0 * h),
          (f({x.x, x.y + h}) - f({x.x, x.y - h})) / (2.0 * h)};
}

/// Solves H d = -g. Returns false if H is not positive definite.
bool newton_direction(const std::array<double, 4>& H, Vec2 g, Vec2& d) {
  const double det = H[0] * H[3] - H[1] * H[2];
  if (!(H[0] > 0.0 && det > 0.0)) return false;
  d = {-(H[3] * g.x - H[1] * g.y) / det, -(-H[2] * g.x + H[0] * g.y) / det};
  return true;
}

/// Minimizes f from `seed`: damped Newton, falling back to coordinate
/// descent with step halving when Newton stalls.
template <class F>
Vec2 descend(const F& f, Vec2 seed, double h) {
  Vec2 x = seed;
  double fx = f(x);
  for (int iter = 0; iter < 200; ++iter) {
    const Vec2 g = gradient_of(f, x, h);
    if (norm(g) < 1e-11) break;
    bool moved = false;
    Vec2 d;
    if (newton_direction(hessian_of(f, x, h), g, d)) {
      double t = 1.0;
      for (int k = 0; k < 40 && !moved; ++k, t *= 0.5) {
        const Vec2 y = x + t * d;
        const double fy = f(y);
        if (fy <= fx) {
          moved = norm(y - x) > 0.0 || fy < fx;
          x = y;
          fx = fy;
        }
      }
      if (moved && norm(t * d) < 1e-15) break;
    }
    if (!moved) {
      double step = 1e-2;
      while (step > 1e-15 && !moved) {
        for (Vec2 e : {Vec2{step, 0}, Vec2{-step, 0}, Vec2{0, step}, Vec2{0, -step}}) {
          const double fy = f(x + e);
          if (fy < fx) {
            x = x + e;
            fx = fy;
            moved = true;
            break;
          }
        }
        if (!moved) step *= 0.5;
      }
      if (!moved) break;
    }
    if (norm(x - seed) > kDescentBall) {
      throw std::runtime_error("well descent left the radius-0.4 ball around seed (" + std::to_string(seed.x) +
                               ", " + std::to_string(seed.y) + ")");
    }
  }
  return x;
}

}  // namespace

Vec2 mu(int j) {
  if (j != 1 && j != 3 && j != 5) throw std::invalid_argument("mu_j is defined for j in {1,3,5}, got " + std::to_string(j));
  return std::numbers::sqrt3 * perp(nu(j));
}

double eval_tilde_V(Vec2 x, const PotentialParams& params) {
  double sum = 0.0;
  for (int j : {1, 3, 5}) {
    const double y = std::numbers::pi * dot(x, mu(j)) + params.phase;
    const double f = std::cos(y) + 2.0 * std::cos(y / 3.0);
    sum += int_pow(f, params.exponent);
  }
  return sum;
}

SupResult find_sup(const PotentialParams& params, const SupOptions& options) {
  if (options.grid < 2) throw std::invalid_argument("sup grid must be >= 2");
  const int n = options.grid;
  double best = -1.0;
  Vec2 arg;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Vec2 x = domain_point(static_cast<double>(i) / n, static_cast<double>(k) / n);
      const double v = eval_tilde_V(x, params);
      if (v > best) {
        best = v;
        arg = x;
      }
    }
  }
  // Local ascent: minimize -Vt from the grid argmax.
  auto neg = [&](Vec2 y) { return -eval_tilde_V(y, params); };
  Vec2 x = arg;
  for (int it = 0; it < options.ascent_steps; ++it) {
    Vec2 d;
    const Vec2 g = gradient_of(neg, x, 1e-5);
    if (norm(g) < 1e-12 || !newton_direction(hessian_of(neg, x, 1e-4), g, d)) break;
    const Vec2 y = x + d;
    const double v = eval_tilde_V(y, params);
    if (!(v > best)) break;
    best = v;
    x = y;
  }
  return {best, x};
}

double compute_sup(const PotentialParams& params, const SupOptions& options) { return find_sup(params, options).value; }

KagomePotential::KagomePotential(PotentialParams params, SupOptions options) : params_(params) {
  if (params_.exponent < 2 || params_.exponent % 2 != 0) {
    throw std::invalid_argument("potential exponent must be even and >= 2, got " + std::to_string(params_.exponent));
  }
  sup_value_ = compute_sup(params_, options);
}

double KagomePotential::operator()(Vec2 x) const { return sup_value_ - eval_tilde_V(x, params_); }

Vec2 fd_gradient(const KagomePotential& V, Vec2 x, double h) { return gradient_of(V, x, h); }

std::array<double, 4> fd_hessian(const KagomePotential& V, Vec2 x, double h) { return hessian_of(V, x, h); }

std::array<double, 2> symmetric_eigenvalues_2x2(const std::array<double, 4>& m) {
  const double mean = 0.5 * (m[0] + m[3]);
  const double r = std::hypot(0.5 * (m[0] - m[3]), 0.5 * (m[1] + m[2]));
  return {mean - r, mean + r};
}

std::vector<WellReport> verify_wells(const KagomePotential& V, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("well tolerance must be positive");
  const std::array<LatticePoint, 3> seeds = {LatticePoint({0, 0}, 1), LatticePoint({1, 0}, 3),
                                             LatticePoint({0, 1}, 5)};
  std::vector<WellReport> reports;
  for (const auto& seed : seeds) {
    WellReport r;
    r.location = descend(V, seed.cartesian(), 1e-4);
    r.value = V(r.location);
    r.nearest_lattice_point = seed;
    r.offset = norm(r.location - seed.cartesian());
    r.gradient_norm = norm(fd_gradient(V, r.location));
    r.hessian_eigenvalues = symmetric_eigenvalues_2x2(fd_hessian(V, r.location, 1e-4));
    const auto half = symmetric_eigenvalues_2x2(fd_hessian(V, r.location, 5e-5));
    for (int i = 0; i < 2; ++i) {
      r.richardson_deviation = std::max(r.richardson_deviation, std::abs(half[i] - r.hessian_eigenvalues[i]) /
                                                                    std::abs(r.hessian_eigenvalues[i]));
    }
    r.positive_definite = r.hessian_eigenvalues[0] > 0.0;
    r.located = r.offset < tol;
    r.zero_at_minimum = std::abs(r.value) <= 1e-6;
    reports.push_back(r);
  }
  return reports;
}

double InvarianceReport::max_deviation() const { return std::max({translation1, translation2, rotation}); }

InvarianceReport check_invariance(const KagomePotential& V, int samples, unsigned seed) {
  if (samples < 1) throw std::invalid_argument("invariance check needs at least one sample");
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const Vec2 t1 = 2.0 * nu(1);
  const Vec2 t2 = 2.0 * nu(2);
  InvarianceReport r;
  for (int i = 0; i < samples; ++i) {
    const Vec2 x = domain_point(u(rng), u(rng));
    const double v = V(x);
    r.translation1 = std::max(r.translation1, std::abs(V(x + t1) - v));
    r.translation2 = std::max(r.translation2, std::abs(V(x + t2) - v));
    r.rotation = std::max(r.rotation, std::abs(V(rotate(x, std::numbers::pi / 3.0)) - v));
  }
  return r;
}

double grid_minimum(const KagomePotential& V, int grid) {
  if (grid < 2) throw std::invalid_argument("grid must be >= 2");
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    for (int k = 0; k < grid; ++k) {
      m = std::min(m, V(domain_point(static_cast<double>(i) / grid, static_cast<double>(k) / grid)));
    }
  }
  return m;
}

double harmonic_ground_energy(double lambda1, double lambda2, double B, double h) {
  if (!(lambda1 > 0.0) || !(lambda2 > 0.0)) throw std::invalid_argument("Hessian eigenvalues must be positive");
  if (!(h > 0.0)) throw std::invalid_argument("semiclassical parameter h must be positive");
  const double lambda10 = (std::sqrt(lambda1) + std::sqrt(lambda2)) / std::numbers::sqrt2;
  return h * std::sqrt(lambda10 * lambda10 + B * B);
}

}  // namespace kagome
