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

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "tanglelab/errors.hpp"

namespace tanglelab {

using Complex = std::complex<double>;
using Dims = std::vector<int>;

struct Seed {
  std::uint64_t value = 0;
};

inline long dims_product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1L, std::multiplies<long>());
}

// A dense matrix whose rows and columns carry a tensor-factor decomposition.
// Scalars are 1x1 with dims [1]/[1]; the dimension lists are never empty.
template <typename Scalar>
class TensorMatrix {
 public:
  using Storage = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  TensorMatrix() : TensorMatrix(Storage::Ones(1, 1)) {}

  explicit TensorMatrix(Storage m)
      : m_(std::move(m)), out_dims_{int(m_.rows())}, in_dims_{int(m_.cols())} {
    if (m_.rows() == 0 || m_.cols() == 0) throw DimensionError("empty matrix");
  }

  TensorMatrix(Storage m, Dims out_dims, Dims in_dims)
      : m_(std::move(m)), out_dims_(std::move(out_dims)), in_dims_(std::move(in_dims)) {
    if (out_dims_.empty()) out_dims_ = {1};
    if (in_dims_.empty()) in_dims_ = {1};
    for (int d : out_dims_)
      if (d <= 0) throw DimensionError("non-positive output dimension");
    for (int d : in_dims_)
      if (d <= 0) throw DimensionError("non-positive input dimension");
    if (dims_product(out_dims_) != m_.rows() || dims_product(in_dims_) != m_.cols())
      throw DimensionError("entries do not match declared dimensions");
  }

  static TensorMatrix identity(const Dims& dims) {
    long n = dims_product(dims);
    return TensorMatrix(Storage::Identity(n, n), dims, dims);
  }

  static TensorMatrix scalar(Scalar s) {
    Storage m(1, 1);
    m(0, 0) = s;
    return TensorMatrix(std::move(m));
  }

  const Storage& matrix() const { return m_; }
  Storage& matrix() { return m_; }
  const Dims& out_dims() const { return out_dims_; }
  const Dims& in_dims() const { return in_dims_; }
  Eigen::Index rows() const { return m_.rows(); }
  Eigen::Index cols() const { return m_.cols(); }
  Scalar operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }
  Scalar& operator()(Eigen::Index r, Eigen::Index c) { return m_(r, c); }

  double max_abs() const { return m_.size() ? m_.cwiseAbs().maxCoeff() : 0.0; }
  bool all_finite() const { return m_.allFinite(); }

 private:
  Storage m_;
  Dims out_dims_;
  Dims in_dims_;
};

using ComplexMatrix = TensorMatrix<Complex>;
using MatrixXc = ComplexMatrix::Storage;

template <typename Scalar>
TensorMatrix<Scalar> matmul(const TensorMatrix<Scalar>& a, const TensorMatrix<Scalar>& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matmul: inner dimensions " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
  return TensorMatrix<Scalar>(a.matrix() * b.matrix(), a.out_dims(), b.in_dims());
}

template <typename Scalar>
TensorMatrix<Scalar> kron(const TensorMatrix<Scalar>& a, const TensorMatrix<Scalar>& b) {
  const auto& x = a.matrix();
  const auto& y = b.matrix();
  typename TensorMatrix<Scalar>::Storage k(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      k.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  Dims out = a.out_dims(), in = a.in_dims();
  out.insert(out.end(), b.out_dims().begin(), b.out_dims().end());
  in.insert(in.end(), b.in_dims().begin(), b.in_dims().end());
  return TensorMatrix<Scalar>(std::move(k), std::move(out), std::move(in));
}

template <typename Scalar>
TensorMatrix<Scalar> adjoint(const TensorMatrix<Scalar>& a) {
  return TensorMatrix<Scalar>(a.matrix().adjoint(), a.in_dims(), a.out_dims());
}

// The unitary sending factor k of the input to position perm[k] of the output:
// |i_0 ... i_{n-1}> maps to the basis vector whose factor perm[k] holds i_k.
ComplexMatrix permutation_map(const std::vector<int>& perm, const Dims& dims);

// Seeded complex Gaussian matrix orthonormalized by QR, with the diagonal of R
// made real positive so the sample does not depend on the QR sign convention.
ComplexMatrix random_unitary(int d, Seed seed);

// Unitarity residual ||U^dagger U - I||_max.
double unitarity_residual(const MatrixXc& u);

// The scalar c with ||a - c b||_max <= tol * max(1, ||a||_max), if any.
// Two (numerically) zero maps are proportional with c = 1.
std::optional<Complex> proportional_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                                          double tol);

// Residual ||a - c b||_max / max(1, ||a||_max) for the best-guess c above.
struct Proportionality {
  std::optional<Complex> scalar;
  Complex candidate{0.0, 0.0};
  double residual = 0.0;
};
Proportionality proportionality(const MatrixXc& a, const MatrixXc& b, double tol);

}  // namespace tanglelab
