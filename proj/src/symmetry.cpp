#include "kagome/symmetry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kagome {

namespace {

constexpr double pi = std::numbers::pi;

constexpr std::array kRelations{
    // kagome
    SymmetryRelation{"kagtrans", Model::kagome, "sigma(gamma + 16pi, w) = sigma(gamma, w)",
                     [](long p, long q) { return p + 8 * q; }, 0.0, false, false, std::nullopt},
    SymmetryRelation{"kagreflex4", Model::kagome, "e in sigma(gamma + 8pi, w) <=> -e in sigma(gamma, w)",
                     [](long p, long q) { return p + 4 * q; }, 0.0, false, true, std::nullopt},
    SymmetryRelation{"kagreflex1", Model::kagome, "sigma(-gamma, 0) = sigma(gamma, 0)",
                     [](long p, long) { return -p; }, 0.0, false, false, 0.0},
    SymmetryRelation{"kagreflex5", Model::kagome, "e in sigma(8pi - gamma, 0) <=> -e in sigma(gamma, 0)",
                     [](long p, long q) { return 4 * q - p; }, 0.0, false, true, 0.0},
    SymmetryRelation{"kagreflex11", Model::kagome, "sigma(6pi - gamma, pi/8) = sigma(gamma, pi/8)",
                     [](long p, long q) { return 3 * q - p; }, 0.0, false, false, pi / 8.0},
    SymmetryRelation{"kagreflex12", Model::kagome, "e in sigma(-2pi - gamma, pi/8) <=> -e in sigma(gamma, pi/8)",
                     [](long p, long q) { return -q - p; }, 0.0, false, true, pi / 8.0},
    SymmetryRelation{"gammatrans", Model::kagome, "sigma(gamma, w + pi/4) = sigma(gamma - 6pi, w)",
                     [](long p, long q) { return p - 3 * q; }, -pi / 4.0, false, false, std::nullopt},
    SymmetryRelation{"gammasym", Model::kagome, "sigma(gamma, -w) = sigma(-gamma, w)",
                     [](long p, long) { return -p; }, 0.0, true, false, std::nullopt},
    // square
    SymmetryRelation{"sqtrans", Model::square, "sigma(gamma + 2pi) = sigma(gamma)",
                     [](long p, long q) { return p + q; }, 0.0, false, false, std::nullopt},
    SymmetryRelation{"sqreflex1", Model::square, "sigma(-gamma) = sigma(gamma)",
                     [](long p, long) { return -p; }, 0.0, false, false, std::nullopt},
    SymmetryRelation{"sqreflex12", Model::square, "sigma(2pi - gamma) = sigma(gamma)",
                     [](long p, long q) { return q - p; }, 0.0, false, false, std::nullopt},
    SymmetryRelation{"sqreflex2", Model::square, "e in sigma(gamma) <=> -e in sigma(gamma)",
                     [](long p, long) { return p; }, 0.0, false, true, std::nullopt},
    // triangular
    SymmetryRelation{"tritrans", Model::triangular, "sigma(gamma + 4pi) = sigma(gamma)",
                     [](long p, long q) { return p + 2 * q; }, 0.0, false, false, std::nullopt},
    SymmetryRelation{"trireflex1", Model::triangular, "sigma(-gamma) = sigma(gamma)",
                     [](long p, long) { return -p; }, 0.0, false, false, std::nullopt},
    SymmetryRelation{"triantitrans", Model::triangular, "e in sigma(2pi - gamma) <=> -e in sigma(gamma)",
                     [](long p, long q) { return q - p; }, 0.0, false, true, std::nullopt},
    // hexagonal
    SymmetryRelation{"hextrans", Model::hexagonal, "sigma(gamma + 2pi) = sigma(gamma)",
                     [](long p, long q) { return p + q; }, 0.0, false, false, std::nullopt},
    SymmetryRelation{"hexreflex1", Model::hexagonal, "sigma(-gamma) = sigma(gamma)",
                     [](long p, long) { return -p; }, 0.0, false, false, std::nullopt},
    SymmetryRelation{"hexreflex12", Model::hexagonal, "sigma(2pi - gamma) = sigma(gamma)",
                     [](long p, long q) { return q - p; }, 0.0, false, false, std::nullopt},
    SymmetryRelation{"hexreflex2", Model::hexagonal, "e in sigma(gamma) <=> -e in sigma(gamma)",
                     [](long p, long) { return p; }, 0.0, false, true, std::nullopt},
};

}  // namespace

std::span<const SymmetryRelation> symmetry_relations() { return kRelations; }

const SymmetryRelation& find_relation(std::string_view id) {
  for (const auto& r : kRelations) {
    if (r.id == id) return r;
  }
  throw std::invalid_argument("unknown symmetry relation '" + std::string(id) + "'");
}

SymmetryResult check_symmetry(std::string_view id, const ReducedFlux& flux, double omega, int grid, int threads) {
  const SymmetryRelation& rel = find_relation(id);
  SymmetryResult r;
  r.id = std::string(rel.id);
  r.flux = flux;
  r.omega = rel.fixed_omega.value_or(omega);
  r.partner_flux = ReducedFlux(rel.partner_p(flux.p(), flux.q()), flux.q());
  r.partner_omega = rel.omega_flips ? -r.omega : r.omega + rel.omega_shift;
  r.negated = rel.negated;

  SpectrumOptions opt;
  opt.grid = grid;
  opt.threads = threads;
  const SpectrumSet a = band_spectrum(rel.model, r.flux, r.omega, opt);
  const SpectrumSet b = band_spectrum(rel.model, r.partner_flux, r.partner_omega, opt);
  r.distance = hausdorff_distance(a.merged, rel.negated ? negate(b.merged) : b.merged);
  for (const SpectrumSet* s : {&a, &b})
    r.max_abs_eigenvalue = std::max({r.max_abs_eigenvalue, std::abs(s->merged.front().lo), std::abs(s->merged.back().hi)});
  r.passed = r.distance < kSymmetryTolerance;
  return r;
}

}  // namespace kagome
