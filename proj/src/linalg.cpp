// Copyright 2026 The tanglelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tanglelab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tanglelab {

ComplexMatrix permutation_map(const std::vector<int>& perm, const Dims& dims) {
  const int n = int(dims.size());
  if (int(perm.size()) != n) throw DimensionError("permutation length differs from factor count");
  std::vector<int> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw DimensionError("invalid permutation");
    seen[p] = 1;
  }
  Dims out_dims(n);
  for (int k = 0; k < n; ++k) out_dims[perm[k]] = dims[k];

  std::vector<long> out_stride(n, 1);
  for (int k = n - 2; k >= 0; --k) out_stride[k] = out_stride[k + 1] * out_dims[k + 1];

  const long total = dims_product(dims);
  MatrixXc m = MatrixXc::Zero(total, total);
  std::vector<int> idx(n, 0);
  for (long col = 0; col < total; ++col) {
    long row = 0;
    for (int k = 0; k < n; ++k) row += idx[k] * out_stride[perm[k]];
    m(row, col) = 1.0;
    for (int k = n - 1; k >= 0; --k) {
      if (++idx[k] < dims[k]) break;
      idx[k] = 0;
    }
  }
  return ComplexMatrix(std::move(m), out_dims, dims);
}

ComplexMatrix random_unitary(int d, Seed seed) {
  if (d < 1) throw DimensionError("random_unitary: d must be positive");
  std::mt19937_64 rng(seed.value);
  std::normal_distribution<double> gauss(0.0, 1.0);
  MatrixXc g(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      double re = gauss(rng);
      double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<MatrixXc> qr(g);
  MatrixXc q = qr.householderQ() * MatrixXc::Identity(d, d);
  MatrixXc r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    Complex rjj = r(j, j);
    double mag = std::abs(rjj);
    Complex phase = mag > 0 ? rjj / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return ComplexMatrix(std::move(q));
}

double unitarity_residual(const MatrixXc& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  MatrixXc e = u.adjoint() * u - MatrixXc::Identity(u.rows(), u.cols());
  return e.cwiseAbs().maxCoeff();
}

Proportionality proportionality(const MatrixXc& a, const MatrixXc& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("proportional_equal: shapes differ");
  Proportionality p;
  const double a_max = a.size() ? a.cwiseAbs().maxCoeff() : 0.0;
  const double b_max = b.size() ? b.cwiseAbs().maxCoeff() : 0.0;
  const double scale = std::max(1.0, a_max);
  if (a_max <= tol && b_max <= tol) {
    p.candidate = 1.0;
    p.residual = a_max / scale;
    p.scalar = p.candidate;
    return p;
  }
  if (b_max <= tol) {
    p.residual = a_max / scale;
    return p;
  }
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  p.candidate = a(r, c) / b(r, c);
  p.residual = (a - p.candidate * b).cwiseAbs().maxCoeff() / scale;
  if (p.residual <= tol) p.scalar = p.candidate;
  return p;
}

std::optional<Complex> proportional_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                                          double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("proportional_equal: total dimensions differ");
  Proportionality p = proportionality(a.matrix(), b.matrix(), tol);
  if (!p.scalar) return std::nullopt;
  const bool both_zero = a.max_abs() <= tol && b.max_abs() <= tol;
  if (!both_zero && std::abs(*p.scalar) <= tol) return std::nullopt;
  return p.scalar;
}

}  // namespace tanglelab
