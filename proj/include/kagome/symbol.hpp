#pragma once

// Matrix-valued symbols of the four tight-binding models.
//
//   square      cos x + cos xi
//   triangular  cos x + cos xi + cos(x - xi)
//   hexagonal   [[0, 1 + e^{ix} + e^{i xi}], [c.c., 0]]
//   kagome      3 x 3 with e = exp(i(omega + gamma/8)):
//     [0,                           e (e^{-ix} + e^{-i(x-xi)}),  conj(e)(e^{-ix} + e^{-i xi})]
//     [conj(e)(e^{ix} + e^{i(x-xi)}), 0,                         e (e^{i(x-xi)} + e^{-i xi})  ]
//     [e (e^{ix} + e^{i xi}),        conj(e)(e^{-i(x-xi)} + e^{i xi}), 0                      ]

#include <cstdint>

#include "kagome/flux.hpp"
#include "kagome/matrix.hpp"

namespace kagome {

/// Evaluates the model symbol at (x, xi). gamma and omega only enter the kagome symbol.
ComplexMatrix symbol(Model model, double x, double xi, double gamma = 0.0, double omega = 0.0);

/// Max entrywise deviation of each kagome symbol identity:
///   p(x + 2pi, xi) = p,  p(x, xi + 2pi) = p,
///   C^{-1} p(xi - x, -x) C = p          (argument map: transpose of kappa, squared),
///   P conj(p(xi, x)) P = p
/// with C the cyclic permutation [[0,1,0],[0,0,1],[1,0,0]] and P the flip.
struct SymbolSymmetryReport {
  double translation_x = 0.0;
  double translation_xi = 0.0;
  double rotation = 0.0;
  double conjugation = 0.0;
  double hermiticity = 0.0;

  double max_deviation() const;
};

/// Evaluates every identity at `samples` random (x, xi, gamma, omega). The
/// right-hand side is evaluated at omega + omega_perturbation, which should
/// make every check fail unless the perturbation is zero.
/// Throws std::invalid_argument for samples < 1.
SymbolSymmetryReport verify_symbol_symmetries(int samples, std::uint64_t seed = 0, double omega_perturbation = 0.0);

/// Same identities at a single explicit point.
SymbolSymmetryReport symbol_symmetries_at(double x, double xi, double gamma, double omega,
                                          double omega_perturbation = 0.0);

}  // namespace kagome
