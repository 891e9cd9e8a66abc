#pragma once

// Flux sweeps: band edges for every reduced p/q with 0 <= p < period q, q <= qmax.

#include <string>
#include <string_view>
#include <vector>

#include "kagome/flux.hpp"

namespace kagome {

inline constexpr std::string_view kToolVersion = "1.0.0";

struct ButterflyRow {
  long p = 0;
  long q = 1;
  int band_index = 0;  ///< 1-based
  double lo = 0.0;
  double hi = 0.0;

  friend bool operator==(const ButterflyRow&, const ButterflyRow&) = default;
};

struct Manifest {
  std::string tool_version{kToolVersion};
  int qmax = 0;
  int period = 0;  ///< sweep covers 0 <= p/q < period
  int grid = 0;
  std::string timestamp;  ///< ISO 8601 UTC
};

struct ButterflyDataset {
  Model model = Model::kagome;
  double omega = 0.0;
  int grid = 0;
  Manifest manifest;
  std::vector<ButterflyRow> rows;  ///< sorted by (q, p, band_index)
};

/// Reduced fractions 0 <= p < flux_period(model) q, 1 <= q <= qmax, sorted by (q, p).
std::vector<ReducedFlux> sweep_fractions(Model model, int qmax);

struct SweepOptions {
  int qmax = 1;
  int grid = 12;
  int threads = 1;
};

/// Throws std::invalid_argument for qmax < 1, grid < 2 or threads < 1. The
/// rows do not depend on the thread count.
ButterflyDataset sweep(Model model, double omega, const SweepOptions& options);

struct ReflectionReport {
  std::size_t fractions_checked = 0;
  double max_deviation = 0.0;
  bool passed = false;
};

/// Kagome point reflection about (gamma, e) = (4 pi, 0): band k at p/q against
/// minus band n q + 1 - k at (4q - p mod 8q)/q. Throws unless the dataset is kagome.
ReflectionReport reflection_smoke_test(const ButterflyDataset& ds, double tol = 1e-6);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

}  // namespace kagome
