#pragma once

// Band structure over the Bloch torus.

#include <cstddef>
#include <vector>

#include "kagome/bloch.hpp"

namespace kagome {

struct Band {
  int index = 0;  ///< 1-based
  double lo = 0.0;
  double hi = 0.0;
  std::size_t samples = 0;
  double stddev = 0.0;  ///< spread of the k-th eigenvalue over the sampled torus

  double width() const { return hi - lo; }
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct SpectrumOptions {
  int grid = 60;             ///< theta sampled on {0, 1/grid, ..., (grid-1)/grid}^2
  int threads = 1;
  bool refine = false;       ///< golden-section polish of every band endpoint
  double touch_tol = 1e-9;   ///< merge intervals whose gap is at most this
  /// Skip torus points equivalent under theta -> theta + 1/q (exact: the
  /// family is unitarily conjugate along those shifts).
  bool use_periodicity = true;
};

struct SpectrumSet {
  Model model = Model::kagome;
  ReducedFlux flux{0, 1};
  double omega = 0.0;
  int grid = 0;
  std::vector<Band> bands;       ///< n q bands, by sorted eigenvalue index
  std::vector<Interval> merged;  ///< disjoint, sorted union of the bands
};

/// Samples the family; throws std::invalid_argument for grid < 2 or threads < 1,
/// std::runtime_error if an eigenvalue leaves the model range bound + 1e-12.
SpectrumSet band_spectrum(Model model, const ReducedFlux& flux, double omega, const SpectrumOptions& options = {});

/// Sorts and unions intervals, joining any pair separated by at most touch_tol.
std::vector<Interval> merge_intervals(std::vector<Interval> intervals, double touch_tol = 1e-9);

/// {-x : x in set}, still sorted.
std::vector<Interval> negate(const std::vector<Interval>& set);

/// Hausdorff distance between two finite unions of closed intervals. Both
/// must be non-empty, sorted and disjoint.
double hausdorff_distance(const std::vector<Interval>& a, const std::vector<Interval>& b);

struct FlatBand {
  double value = 0.0;
  int multiplicity = 0;
  double max_width = 0.0;
  double max_stddev = 0.0;
};

/// Bands of width <= width_tol, clustered by value (gap <= cluster_tol).
std::vector<FlatBand> detect_flat_bands(const SpectrumSet& s, double width_tol = 1e-9, double cluster_tol = 1e-7);

}  // namespace kagome
