#pragma once

#include <array>
#include <complex>
#include <vector>

namespace tetragme {

/// Eigenvalues of a real symmetric n x n matrix (n <= 8), cyclic Jacobi,
/// ascending order. A is row-major, only the data for n*n entries is read.
std::vector<double> symmetric_eigenvalues(int n, const double* a);

/// Eigenvalues of a complex Hermitian dim x dim matrix (dim <= 4) via the
/// real embedding [[Re, -Im], [Im, Re]]; each eigenvalue appears doubled in
/// the embedding, collapsed back here. Ascending order.
std::vector<double> hermitian_eigenvalues(int dim, const std::complex<double>* a);

/// Determinant of a 5 x 5 matrix by LU with partial pivoting.
double det5(const std::array<std::array<double, 5>, 5>& m);

}  // namespace tetragme
