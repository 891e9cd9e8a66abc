#include "kagome/bloch.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace kagome {

namespace {

Complex unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

ComplexMatrix MonomialMatrix::dense() const {
  ComplexMatrix m(dim());
  for (std::size_t i = 0; i < dim(); ++i) m(i, column[i]) = value[i];
  return m;
}

MonomialMatrix monomial_identity(std::size_t q) {
  MonomialMatrix m{std::vector<std::size_t>(q), std::vector<Complex>(q, 1.0)};
  for (std::size_t i = 0; i < q; ++i) m.column[i] = i;
  return m;
}

MonomialMatrix monomial_shift(std::size_t q) {
  MonomialMatrix m{std::vector<std::size_t>(q), std::vector<Complex>(q, 1.0)};
  for (std::size_t i = 0; i < q; ++i) m.column[i] = (i + 1) % q;
  return m;
}

MonomialMatrix monomial_clock(const ReducedFlux& flux) {
  const auto q = static_cast<std::size_t>(flux.q());
  MonomialMatrix m = monomial_identity(q);
  for (std::size_t j = 0; j < q; ++j) m.value[j] = root_of_unity(static_cast<long>(j) * flux.p(), flux.q());
  return m;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("monomial dimension mismatch");
  MonomialMatrix r{std::vector<std::size_t>(a.dim()), std::vector<Complex>(a.dim())};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const std::size_t k = a.column[i];
    r.column[i] = b.column[k];
    r.value[i] = a.value[i] * b.value[k];
  }
  return r;
}

MonomialMatrix adjoint(const MonomialMatrix& m) {
  MonomialMatrix r{std::vector<std::size_t>(m.dim()), std::vector<Complex>(m.dim())};
  for (std::size_t i = 0; i < m.dim(); ++i) {
    r.column[m.column[i]] = i;
    r.value[m.column[i]] = std::conj(m.value[i]);
  }
  return r;
}

Complex root_of_unity(long n, long q) {
  long r = n % q;
  if (r < 0) r += q;
  return unit_phase(2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q));
}

ComplexMatrix shift_matrix(long q) {
  if (q < 1) throw std::invalid_argument("shift matrix needs q >= 1, got " + std::to_string(q));
  return monomial_shift(static_cast<std::size_t>(q)).dense();
}

ComplexMatrix clock_matrix(long p, long q) { return monomial_clock(ReducedFlux(p, q)).dense(); }

BlochFamily::BlochFamily(Model model, ReducedFlux flux, double omega)
    : model_(model), flux_(flux), omega_(omega), q_(static_cast<std::size_t>(flux.q())) {
  const MonomialMatrix I = monomial_identity(q_);
  const MonomialMatrix K = monomial_shift(q_);
  const MonomialMatrix J = monomial_clock(flux_);
  const MonomialMatrix Jc = adjoint(J);
  // e^{-i pi p / q}, reduced through the 2q-th roots of unity.
  const Complex half_twist = root_of_unity(-flux_.p(), 2 * flux_.q());

  switch (model_) {
    case Model::square:
      terms_ = {{0, 0, 0.5, 1, 0, K}, {0, 0, 0.5, 0, 1, J}};
      break;
    case Model::triangular:
      terms_ = {{0, 0, 0.5, 1, 0, K}, {0, 0, 0.5, 0, 1, J}, {0, 0, 0.5 * half_twist, 1, 1, K * J}};
      break;
    case Model::hexagonal:
      terms_ = {{0, 1, 1.0, 0, 0, I}, {0, 1, 1.0, 1, 0, K}, {0, 1, 1.0, 0, -1, Jc}};
      break;
    case Model::kagome: {
      const Complex c13 = unit_phase(omega_ + std::numbers::pi * static_cast<double>(flux_.p()) /
                                                  (4.0 * static_cast<double>(flux_.q())));
      const Complex c15 = std::conj(c13);
      terms_ = {
          {0, 1, c13, 1, 0, K},
          {0, 1, c13 * half_twist, 1, 1, K * J},
          {0, 2, c15, 1, 0, K},
          {0, 2, c15, 0, -1, Jc},
          {1, 2, c13 * half_twist, -1, -1, adjoint(K) * Jc},
          {1, 2, c13, 0, -1, Jc},
      };
      break;
    }
  }
}

void BlochFamily::assemble_into(const BlochPhase& phase, ComplexMatrix& out) const {
  const std::size_t n = dim();
  if (out.dim() != n) {
    out = ComplexMatrix(n);
  } else {
    for (auto& z : out.data()) z = Complex{};
  }
  const double two_pi = 2.0 * std::numbers::pi;
  for (const HopTerm& t : terms_) {
    const Complex c =
        t.coefficient * unit_phase(two_pi * (t.k1 * phase.theta1() + t.k2 * phase.theta2()));
    const std::size_t r0 = static_cast<std::size_t>(t.row_block) * q_;
    const std::size_t c0 = static_cast<std::size_t>(t.col_block) * q_;
    for (std::size_t i = 0; i < q_; ++i) {
      const Complex z = c * t.block.value[i];
      const std::size_t j = t.block.column[i];
      out(r0 + i, c0 + j) += z;
      out(c0 + j, r0 + i) += std::conj(z);
    }
  }
}

HermitianMatrix BlochFamily::operator()(const BlochPhase& phase) const {
  ComplexMatrix m;
  assemble_into(phase, m);
  return HermitianMatrix(std::move(m));
}

HermitianMatrix bloch_matrix(Model model, const ReducedFlux& flux, double omega, const BlochPhase& phase) {
  return BlochFamily(model, flux, omega)(phase);
}

HermitianMatrix kagome_bloch(const ReducedFlux& flux, double omega, const BlochPhase& phase) {
  return bloch_matrix(Model::kagome, flux, omega, phase);
}

HermitianMatrix square_bloch(const ReducedFlux& flux, const BlochPhase& phase) {
  return bloch_matrix(Model::square, flux, 0.0, phase);
}

HermitianMatrix triangular_bloch(const ReducedFlux& flux, const BlochPhase& phase) {
  return bloch_matrix(Model::triangular, flux, 0.0, phase);
}

HermitianMatrix hexagonal_bloch(const ReducedFlux& flux, const BlochPhase& phase) {
  return bloch_matrix(Model::hexagonal, flux, 0.0, phase);
}

}  // namespace kagome
