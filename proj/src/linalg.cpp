#include "tetragme/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tetragme {

std::vector<double> symmetric_eigenvalues(int n, const double* a) {
  if (n < 1 || n > 8) throw std::invalid_argument("symmetric_eigenvalues: n out of range");
  double m[8][8];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a[i * n + j];

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += m[i][j] * m[i][j];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(m[p][q]) < 1e-300) continue;
        const double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          const double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
      }
    }
  }
  std::vector<double> eig(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<size_t>(i)] = m[i][i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> hermitian_eigenvalues(int dim, const std::complex<double>* a) {
  if (dim < 1 || dim > 4) throw std::invalid_argument("hermitian_eigenvalues: dim out of range");
  const int n = 2 * dim;
  double emb[64] = {};
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const auto z = a[i * dim + j];
      emb[i * n + j] = z.real();
      emb[i * n + (dim + j)] = -z.imag();
      emb[(dim + i) * n + j] = z.imag();
      emb[(dim + i) * n + (dim + j)] = z.real();
    }
  }
  auto doubled = symmetric_eigenvalues(n, emb);  // each eigenvalue twice
  std::vector<double> eig(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) eig[static_cast<size_t>(i)] = doubled[static_cast<size_t>(2 * i)];
  return eig;
}

double det5(const std::array<std::array<double, 5>, 5>& in) {
  std::array<std::array<double, 5>, 5> m = in;
  double det = 1.0;
  for (int col = 0; col < 5; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 5; ++r)
      if (std::abs(m[static_cast<size_t>(r)][static_cast<size_t>(col)]) >
          std::abs(m[static_cast<size_t>(pivot)][static_cast<size_t>(col)]))
        pivot = r;
    if (m[static_cast<size_t>(pivot)][static_cast<size_t>(col)] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(col)]);
      det = -det;
    }
    const double d = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
    det *= d;
    for (int r = col + 1; r < 5; ++r) {
      const double f = m[static_cast<size_t>(r)][static_cast<size_t>(col)] / d;
      for (int c = col; c < 5; ++c)
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            f * m[static_cast<size_t>(col)][static_cast<size_t>(c)];
    }
  }
  return det;
}

}  // namespace tetragme
