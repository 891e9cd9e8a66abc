#include "kagome/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kagome {

namespace {

/// Reduces `a` to tridiagonal form; d gets the diagonal, e the (real) subdiagonal.
void tridiagonalize(ComplexMatrix& a, EigenWorkspace& ws, const KernelTable& k) {
  const std::size_t n = a.dim();
  ws.d.assign(n, 0.0);
  ws.e.assign(n > 0 ? n - 1 : 0, 0.0);
  ws.v.resize(n);
  ws.y.resize(n);
  ws.w.resize(n);

  for (std::size_t c = 0; c + 1 < n; ++c) {
    const std::size_t m = n - c - 1;  // length of the reflector
    // Column c below the diagonal is conj of row c right of the diagonal.
    Complex* v = ws.v.data();
    for (std::size_t i = 0; i < m; ++i) v[i] = std::conj(a(c, c + 1 + i));
    const Complex alpha = v[0];
    double tail = 0.0;
    for (std::size_t i = 1; i < m; ++i) tail += std::norm(v[i]);

    ws.d[c] = a(c, c).real();
    if (tail == 0.0 && alpha.imag() == 0.0) {
      ws.e[c] = alpha.real();
      continue;
    }
    const double beta = -std::copysign(std::sqrt(std::norm(alpha) + tail), alpha.real());
    const Complex tau((beta - alpha.real()) / beta, -alpha.imag() / beta);
    const Complex scale = 1.0 / (alpha - beta);
    v[0] = 1.0;
    for (std::size_t i = 1; i < m; ++i) v[i] *= scale;
    ws.e[c] = beta;

    // y = A22 v, mu = v^H y (real), w = tau y - |tau|^2 mu / 2 v.
    Complex* y = ws.y.data();
    Complex* w = ws.w.data();
    for (std::size_t i = 0; i < m; ++i) y[i] = k.dotu(&a(c + 1 + i, c + 1), v, m);
    double mu = 0.0;
    for (std::size_t i = 0; i < m; ++i) mu += (std::conj(v[i]) * y[i]).real();
    const Complex half = 0.5 * std::norm(tau) * mu;
    for (std::size_t i = 0; i < m; ++i) w[i] = tau * y[i] - half * v[i];

    // A22 -= v w^H + w v^H
    for (std::size_t i = 0; i < m; ++i) k.her2_row(&a(c + 1 + i, c + 1), v[i], w[i], v, w, m);
  }
  if (n > 0) ws.d[n - 1] = a(n - 1, n - 1).real();
}

}  // namespace

void tridiagonal_eigenvalues(std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = d.size();
  if (n == 0) return;
  if (e.size() + 1 != n) throw std::invalid_argument("subdiagonal length must be n - 1");
  e.push_back(0.0);
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (++iter > 60) throw std::runtime_error("tridiagonal QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        std::size_t i = m;
        bool underflow = false;
        while (i-- > l) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  e.pop_back();
  std::sort(d.begin(), d.end());
}

void eigenvalues_in_place(ComplexMatrix& a, EigenWorkspace& ws, std::vector<double>& out, const KernelTable& kernels) {
  tridiagonalize(a, ws, kernels);
  tridiagonal_eigenvalues(ws.d, ws.e);
  out.assign(ws.d.begin(), ws.d.end());
}

std::vector<double> eigenvalues(const HermitianMatrix& m) {
  ComplexMatrix a = m.matrix();
  EigenWorkspace ws;
  std::vector<double> out;
  eigenvalues_in_place(a, ws, out);
  return out;
}

double charpoly_eval(const std::vector<double>& eigenvalues, double lambda) {
  double prod = 1.0;
  for (double ev : eigenvalues) prod *= lambda - ev;
  return prod;
}

double charpoly_eval(const HermitianMatrix& m, double lambda) { return charpoly_eval(eigenvalues(m), lambda); }

}  // namespace kagome
