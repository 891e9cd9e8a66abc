#pragma once

// Registry of spectral symmetry relations between two (flux, omega) points.
//
// Each relation maps the input point to a partner; the check compares the two
// merged spectra (the partner negated for anti-relations) in Hausdorff distance.

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "kagome/spectra.hpp"

namespace kagome {

struct SymmetryRelation {
  std::string_view id;
  Model model;
  std::string_view description;
  /// (p, q) -> partner numerator; q is kept.
  long (*partner_p)(long p, long q);
  double omega_shift;              ///< partner omega = omega + omega_shift (or -omega if omega_flips)
  bool omega_flips;
  bool negated;                    ///< compare sigma with -sigma_partner
  std::optional<double> fixed_omega;  ///< relation only holds at this omega
};

std::span<const SymmetryRelation> symmetry_relations();
/// Throws std::invalid_argument for an unknown id.
const SymmetryRelation& find_relation(std::string_view id);

struct SymmetryResult {
  std::string id;
  ReducedFlux flux{0, 1};
  double omega = 0.0;
  ReducedFlux partner_flux{0, 1};
  double partner_omega = 0.0;
  bool negated = false;
  double distance = 0.0;
  double max_abs_eigenvalue = 0.0;  ///< over both spectra
  bool passed = false;
};

inline constexpr double kSymmetryTolerance = 1e-6;

/// Computes both spectra at `grid` and their distance. If the relation has a
/// fixed omega, that value replaces `omega`.
SymmetryResult check_symmetry(std::string_view id, const ReducedFlux& flux, double omega, int grid = 36,
                              int threads = 1);

}  // namespace kagome
