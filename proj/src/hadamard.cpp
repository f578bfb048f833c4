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

#include "tanglelab/hadamard.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace tanglelab {

namespace {

constexpr double kPi = std::numbers::pi;

Complex expi(double theta) { return std::polar(1.0, theta); }

// xi^m with xi = -exp(i pi / d) = exp(i pi (d+1)/d), reduced mod 2d first.
Complex xi_power(int d, long m) {
  long e = (m % (2L * d)) * (d + 1) % (2L * d);
  return expi(kPi * double(e) / double(d));
}

std::string format_complex(Complex z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

std::string Provenance::label() const {
  switch (family) {
    case HadamardFamily::fourier:
      return "fourier";
    case HadamardFamily::potts:
      return "potts(" + format_complex(lambda.value_or(0.0)) + ")";
    case HadamardFamily::metaplectic:
      return branch == Branch::principal ? "metaplectic" : "metaplectic(neg)";
    case HadamardFamily::user:
      return source.empty() ? "user" : "user(" + source + ")";
  }
  return "user";
}

Hadamard::Hadamard(ComplexMatrix matrix, Provenance provenance)
    : dim_(int(matrix.rows())), matrix_(std::move(matrix)), provenance_(std::move(provenance)) {
  if (matrix_.rows() != matrix_.cols()) throw DimensionError("Hadamard must be square");
  matrix_ = ComplexMatrix(matrix_.matrix(), {dim_}, {dim_});
}

MatrixXc Hadamard::h() const { return std::sqrt(double(dim_)) * matrix_.matrix(); }

Hadamard fourier(int d) {
  if (d < 1) throw PreconditionError("fourier: d must be positive");
  MatrixXc m(d, d);
  const double s = 1.0 / std::sqrt(double(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) m(a, b) = s * expi(2.0 * kPi * double((a * b) % d) / d);
  return Hadamard(ComplexMatrix(std::move(m)), {HadamardFamily::fourier, {}, {}, {}});
}

std::vector<Complex> potts_lambdas(int d) {
  switch (d) {
    case 2:
      return {expi(3 * kPi / 8), expi(-3 * kPi / 8), expi(-5 * kPi / 8), expi(5 * kPi / 8)};
    case 3:
      return {expi(5 * kPi / 12), expi(-5 * kPi / 12), expi(-7 * kPi / 12), expi(7 * kPi / 12)};
    case 4:
      return {Complex(0, 1), Complex(0, -1)};
    default:
      throw PreconditionError("potts: no Potts-Hadamard exists in dimension " + std::to_string(d) +
                              " (only d = 2, 3, 4)");
  }
}

PottsParams potts_params(int d, Complex lambda, double tol) {
  const auto admissible = potts_lambdas(d);
  bool found = false;
  for (Complex l : admissible) found = found || std::abs(l - lambda) <= tol;
  if (!found)
    throw PreconditionError("potts: lambda " + format_complex(lambda) +
                            " is not an admissible solution for d = " + std::to_string(d));
  return {lambda, std::conj(lambda) / std::sqrt(double(d))};
}

Hadamard potts(int d, Complex lambda, double tol) {
  PottsParams p = potts_params(d, lambda, tol);
  MatrixXc m = MatrixXc::Constant(d, d, p.mu);
  m.diagonal().array() += p.lambda;
  return Hadamard(ComplexMatrix(std::move(m)), {HadamardFamily::potts, p.lambda, {}, {}});
}

Hadamard potts_by_index(int d, int k) {
  const auto admissible = potts_lambdas(d);
  if (k < 0 || k >= int(admissible.size()))
    throw PreconditionError("potts: index " + std::to_string(k) + " out of range for d = " +
                            std::to_string(d) + " (" + std::to_string(admissible.size()) +
                            " solutions)");
  return potts(d, admissible[k]);
}

MetaplecticParams metaplectic_params(int d, Branch branch) {
  if (d < 1) throw PreconditionError("metaplectic: d must be positive");
  MetaplecticParams p;
  p.xi = xi_power(d, 1);
  Complex sum = 0.0;
  for (long k = 0; k < d; ++k) sum += xi_power(d, k * k);
  p.omega = sum / std::sqrt(double(d));
  p.lambda = std::sqrt(p.omega);
  if (branch == Branch::negated) p.lambda = -p.lambda;
  p.branch = branch;
  return p;
}

Hadamard metaplectic(int d, Branch branch) {
  MetaplecticParams p = metaplectic_params(d, branch);
  const Complex pre = std::conj(p.lambda) / std::sqrt(double(d));
  MatrixXc m(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) m(a, b) = pre * xi_power(d, long(a - b) * long(a - b));
  return Hadamard(ComplexMatrix(std::move(m)),
                  {HadamardFamily::metaplectic, p.lambda, branch, {}});
}

Hadamard hadamard_from_matrix(const ComplexMatrix& m, double tol, std::string source) {
  if (m.rows() != m.cols()) throw PreconditionError("matrix is not square");
  CalculusReport r = check_basic(m.matrix(), tol);
  if (!r.is_hadamard)
    throw PreconditionError("matrix is not a Hadamard matrix (unitarity residual " +
                            std::to_string(r.unitary.residual) + ", equimodularity residual " +
                            std::to_string(r.equimodular.residual) + ")");
  return Hadamard(m, {HadamardFamily::user, {}, {}, std::move(source)});
}

CalculusReport check_basic(const MatrixXc& h, double tol) {
  CalculusReport r;
  if (h.rows() != h.cols() || h.rows() == 0) {
    r.unitary.residual = r.equimodular.residual = r.self_transpose.residual =
        std::numeric_limits<double>::infinity();
    return r;
  }
  const double d = double(h.rows());
  r.unitary.residual = unitarity_residual(h);
  r.equimodular.residual = (h.cwiseAbs().array() - 1.0 / std::sqrt(d)).abs().maxCoeff();
  r.self_transpose.residual = (h - h.transpose()).cwiseAbs().maxCoeff();
  r.unitary.ok = r.unitary.residual < tol;
  r.equimodular.ok = r.equimodular.residual < tol;
  r.self_transpose.ok = r.self_transpose.residual < tol;
  r.is_hadamard = r.unitary.ok && r.equimodular.ok;
  r.passes_basic = r.is_hadamard && r.self_transpose.ok;
  return r;
}

double riii_residual(const MatrixXc& h) {
  const int d = int(h.rows());
  const double sd = std::sqrt(double(d));
  const MatrixXc hc = h.conjugate();
  double worst = 0.0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        Complex lhs = 0.0;
        for (int r = 0; r < d; ++r) lhs += hc(a, r) * h(b, r) * h(c, r);
        Complex rhs = sd * hc(a, b) * hc(a, c) * h(b, c);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
  return worst;
}

double ri_residual(const MatrixXc& h) {
  Eigen::VectorXcd sums = h.rowwise().sum();
  return (sums.array() - sums(0)).abs().maxCoeff();
}

CalculusReport check_extended(const MatrixXc& h, double tol) {
  CalculusReport r = check_basic(h, tol);
  if (h.rows() != h.cols() || h.rows() == 0) return r;
  r.riii_residual = riii_residual(h);
  r.ri_residual = ri_residual(h);
  r.passes_extended = r.passes_basic && *r.riii_residual < tol && *r.ri_residual < tol;
  return r;
}

}  // namespace tanglelab
