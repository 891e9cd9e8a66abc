#pragma once

// Dense Hermitian eigenvalues: Householder reduction to a real symmetric
// tridiagonal matrix, then implicit QL with Wilkinson shifts.

#include <vector>

#include "kagome/kernels.hpp"
#include "kagome/matrix.hpp"

namespace kagome {

/// Scratch buffers reused across solves of the same size.
struct EigenWorkspace {
  std::vector<Complex> v, y, w;
  std::vector<double> d, e;
};

/// Ascending eigenvalues, repeated with multiplicity.
std::vector<double> eigenvalues(const HermitianMatrix& m);

/// Destroys `a` (assumed Hermitian, not checked) and writes the ascending
/// eigenvalues into `out`. Throws std::runtime_error if QL fails to converge.
void eigenvalues_in_place(ComplexMatrix& a, EigenWorkspace& ws, std::vector<double>& out,
                          const KernelTable& kernels = active_kernels());

/// Real symmetric tridiagonal eigenvalues (diagonal d, subdiagonal e with
/// e.size() == d.size() - 1), sorted ascending, in place in d.
void tridiagonal_eigenvalues(std::vector<double>& d, std::vector<double>& e);

/// prod_k (lambda - lambda_k) over the computed eigenvalues of m.
double charpoly_eval(const HermitianMatrix& m, double lambda);
double charpoly_eval(const std::vector<double>& eigenvalues, double lambda);

}  // namespace kagome
