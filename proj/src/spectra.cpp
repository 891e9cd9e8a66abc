#include "kagome/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kagome/eigensolver.hpp"
#include "parallel.hpp"

namespace kagome {

namespace {

constexpr double kRangeSlack = 1e-12;

struct Extremum {
  double value;
  double theta1;
  double theta2;
};

/// Per-row accumulators; combined in row order so results do not depend on threading.
struct RowStats {
  std::vector<Extremum> lo, hi;
  std::vector<double> sum, sumsq;  ///< of (lambda_k - shift_k)
};

class Sampler {
 public:
  explicit Sampler(const BlochFamily& family) : family_(family) {}

  const std::vector<double>& operator()(double theta1, double theta2) {
    family_.assemble_into(BlochPhase::wrapped(theta1, theta2), m_);
    eigenvalues_in_place(m_, ws_, ev_);
    return ev_;
  }

 private:
  const BlochFamily& family_;
  ComplexMatrix m_;
  EigenWorkspace ws_;
  std::vector<double> ev_;
};

/// Golden-section minimization of f on [a, b].
template <class F>
std::pair<double, double> golden_min(const F& f, double a, double b, int iterations) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - r * (b - a);
  double x2 = a + r * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < iterations; ++i) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

/// Polishes a grid extremum of eigenvalue k; sign = +1 for the minimum, -1 for the maximum.
Extremum refine(Sampler& sample, std::size_t k, Extremum start, double radius, double sign) {
  Extremum best = start;
  for (int round = 0; round < 3; ++round) {
    for (int axis = 0; axis < 2; ++axis) {
      auto f = [&](double t) {
        const auto& ev = axis == 0 ? sample(t, best.theta2) : sample(best.theta1, t);
        return sign * ev[k];
      };
      const double c = axis == 0 ? best.theta1 : best.theta2;
      const auto [t, v] = golden_min(f, c - radius, c + radius, 40);
      if (v < sign * best.value) {
        best.value = sign * v;
        (axis == 0 ? best.theta1 : best.theta2) = t;
      }
    }
  }
  return best;
}

}  // namespace

SpectrumSet band_spectrum(Model model, const ReducedFlux& flux, double omega, const SpectrumOptions& options) {
  if (options.grid < 2) throw std::invalid_argument("band grid must be >= 2, got " + std::to_string(options.grid));
  if (options.threads < 1) throw std::invalid_argument("thread count must be >= 1");

  const BlochFamily family(model, flux, omega);
  const std::size_t n = family.dim();
  const int g = options.grid;
  const int reduced = options.use_periodicity ? g / std::gcd(g, static_cast<int>(flux.q())) : g;
  const double bound = range_bound(model) + kRangeSlack;

  std::vector<double> shift;
  {
    Sampler s(family);
    shift = s(0.0, 0.0);
  }

  std::vector<RowStats> rows(static_cast<std::size_t>(reduced));
  detail::parallel_for(rows.size(), options.threads, [&](std::size_t i) {
    Sampler sample(family);
    RowStats& r = rows[i];
    r.lo.assign(n, {std::numeric_limits<double>::infinity(), 0.0, 0.0});
    r.hi.assign(n, {-std::numeric_limits<double>::infinity(), 0.0, 0.0});
    r.sum.assign(n, 0.0);
    r.sumsq.assign(n, 0.0);
    const double t1 = static_cast<double>(i) / g;
    for (int j = 0; j < reduced; ++j) {
      const double t2 = static_cast<double>(j) / g;
      const auto& ev = sample(t1, t2);
      for (std::size_t k = 0; k < n; ++k) {
        const double x = ev[k];
        if (!(std::abs(x) <= bound)) {
          throw std::runtime_error("eigenvalue " + std::to_string(x) + " outside the " +
                                   std::string(to_string(model)) + " range bound");
        }
        if (x < r.lo[k].value) r.lo[k] = {x, t1, t2};
        if (x > r.hi[k].value) r.hi[k] = {x, t1, t2};
        const double dx = x - shift[k];
        r.sum[k] += dx;
        r.sumsq[k] += dx * dx;
      }
    }
  });

  std::vector<Extremum> lo = rows[0].lo;
  std::vector<Extremum> hi = rows[0].hi;
  std::vector<double> sum(n, 0.0);
  std::vector<double> sumsq(n, 0.0);
  for (const RowStats& r : rows) {
    for (std::size_t k = 0; k < n; ++k) {
      if (r.lo[k].value < lo[k].value) lo[k] = r.lo[k];
      if (r.hi[k].value > hi[k].value) hi[k] = r.hi[k];
      sum[k] += r.sum[k];
      sumsq[k] += r.sumsq[k];
    }
  }

  if (options.refine) {
    detail::parallel_for(n, options.threads, [&](std::size_t k) {
      Sampler sample(family);
      const double radius = 1.0 / g;
      lo[k] = refine(sample, k, lo[k], radius, 1.0);
      hi[k] = refine(sample, k, hi[k], radius, -1.0);
    });
  }

  SpectrumSet s;
  s.model = model;
  s.flux = flux;
  s.omega = omega;
  s.grid = g;
  const double count = static_cast<double>(reduced) * reduced;
  std::vector<Interval> intervals;
  for (std::size_t k = 0; k < n; ++k) {
    const double mean = sum[k] / count;
    const double var = std::max(0.0, sumsq[k] / count - mean * mean);
    s.bands.push_back({static_cast<int>(k + 1), lo[k].value, hi[k].value,
                       static_cast<std::size_t>(g) * static_cast<std::size_t>(g), std::sqrt(var)});
    intervals.push_back({lo[k].value, hi[k].value});
  }
  s.merged = merge_intervals(std::move(intervals), options.touch_tol);
  return s;
}

std::vector<Interval> merge_intervals(std::vector<Interval> intervals, double touch_tol) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  std::vector<Interval> out;
  for (const Interval& iv : intervals) {
    if (iv.lo > iv.hi) throw std::invalid_argument("interval with lo > hi");
    if (!out.empty() && iv.lo <= out.back().hi + touch_tol) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

std::vector<Interval> negate(const std::vector<Interval>& set) {
  std::vector<Interval> out;
  out.reserve(set.size());
  for (auto it = set.rbegin(); it != set.rend(); ++it) out.push_back({-it->hi, -it->lo});
  return out;
}

namespace {

double distance_to(const std::vector<Interval>& set, double x) {
  double d = std::numeric_limits<double>::infinity();
  for (const Interval& iv : set) {
    if (x >= iv.lo && x <= iv.hi) return 0.0;
    d = std::min(d, x < iv.lo ? iv.lo - x : x - iv.hi);
  }
  return d;
}

/// sup_{a in A} dist(a, B): attained at an endpoint of A or at a gap midpoint of B inside A.
double directed_hausdorff(const std::vector<Interval>& a, const std::vector<Interval>& b) {
  double d = 0.0;
  for (const Interval& iv : a) {
    d = std::max({d, distance_to(b, iv.lo), distance_to(b, iv.hi)});
  }
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const double mid = 0.5 * (b[i].hi + b[i + 1].lo);
    if (distance_to(a, mid) == 0.0) d = std::max(d, distance_to(b, mid));
  }
  return d;
}

}  // namespace

double hausdorff_distance(const std::vector<Interval>& a, const std::vector<Interval>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("Hausdorff distance of an empty set");
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

std::vector<FlatBand> detect_flat_bands(const SpectrumSet& s, double width_tol, double cluster_tol) {
  std::vector<const Band*> flat;
  for (const Band& b : s.bands) {
    if (b.width() <= width_tol) flat.push_back(&b);
  }
  std::sort(flat.begin(), flat.end(), [](const Band* a, const Band* b) { return a->lo < b->lo; });
  std::vector<FlatBand> out;
  double total = 0.0;
  double last = 0.0;
  for (const Band* b : flat) {
    const double v = 0.5 * (b->lo + b->hi);
    if (out.empty() || v - last > cluster_tol) {
      out.push_back({v, 0, 0.0, 0.0});
      total = 0.0;
    }
    FlatBand& f = out.back();
    total += v;
    f.multiplicity += 1;
    f.value = total / f.multiplicity;
    f.max_width = std::max(f.max_width, b->width());
    f.max_stddev = std::max(f.max_stddev, b->stddev);
    last = v;
  }
  return out;
}

}  // namespace kagome
