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

#include "tanglelab/ueb.hpp"

#include <cmath>
#include <numbers>

namespace tanglelab {

UnitaryErrorBasis pauli_ueb(int d) {
  if (d < 1) throw PreconditionError("pauli_ueb: d must be positive");
  MatrixXc x = MatrixXc::Zero(d, d);
  MatrixXc z = MatrixXc::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    x((k + 1) % d, k) = 1.0;
    z(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
  }
  UnitaryErrorBasis basis;
  basis.dim = d;
  MatrixXc xp = MatrixXc::Identity(d, d);
  for (int p = 0; p < d; ++p) {
    MatrixXc zq = MatrixXc::Identity(d, d);
    for (int q = 0; q < d; ++q) {
      basis.members.emplace_back(MatrixXc(xp * zq));
      zq = zq * z;
    }
    xp = xp * x;
  }
  return basis;
}

UebCheck is_ueb(const std::vector<ComplexMatrix>& family, double tol) {
  UebCheck c;
  if (family.empty()) return c;
  const long d = family.front().rows();
  for (const auto& m : family)
    if (m.rows() != d || m.cols() != d) throw DimensionError("is_ueb: ragged member dimensions");
  c.cardinality_ok = long(family.size()) == d * d;
  for (const auto& m : family)
    c.unitarity_residual = std::max(c.unitarity_residual, unitarity_residual(m.matrix()));
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = 0; j < family.size(); ++j) {
      Complex tr = (family[i].matrix().adjoint() * family[j].matrix()).trace();
      const double expect = i == j ? double(d) : 0.0;
      c.orthogonality_residual = std::max(c.orthogonality_residual, std::abs(tr - expect));
    }
  c.ok = c.cardinality_ok && c.unitarity_residual < tol && c.orthogonality_residual < tol;
  return c;
}

UnitaryErrorBasis make_ueb(std::vector<ComplexMatrix> family, double tol) {
  UebCheck c = is_ueb(family, tol);
  if (!c.ok)
    throw PreconditionError("family is not a unitary error basis (cardinality " +
                            std::string(c.cardinality_ok ? "ok" : "wrong") +
                            ", orthogonality residual " + std::to_string(c.orthogonality_residual) +
                            ")");
  UnitaryErrorBasis basis;
  basis.dim = int(family.front().rows());
  for (auto& m : family) basis.members.emplace_back(m.matrix(), Dims{basis.dim}, Dims{basis.dim});
  return basis;
}

MatrixXc ueb_vertex(const UnitaryErrorBasis& basis, Complex scale) {
  const int d = basis.dim;
  MatrixXc v(d * d, d * d);
  for (int i = 0; i < d * d; ++i)
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) v(i, x * d + y) = scale * basis.members[i](x, y);
  return v;
}

Complex calibrate_ueb_scale(const UnitaryErrorBasis& basis) {
  const double candidate = 1.0 / std::sqrt(double(basis.dim));
  MatrixXc v = ueb_vertex(basis, candidate);
  // V^dagger V = |s|^2 * (sum of trace-orthogonal outer products) is a positive
  // multiple of the identity for any basis, so a real rescaling suffices.
  const double c = (v.adjoint() * v).diagonal().real().mean();
  return candidate / std::sqrt(c);
}

UebGenerator ueb_generator(const UnitaryErrorBasis& basis) {
  return ueb_generator(basis, calibrate_ueb_scale(basis));
}

UebGenerator ueb_generator(const UnitaryErrorBasis& basis, Complex scale) {
  const int d = basis.dim;
  MatrixXc g = MatrixXc::Zero(d * d * d, d * d * d);
  for (int i = 0; i < d * d; ++i) g.block(i * d, i * d, d, d) = scale * basis.members[i].matrix();
  return {basis, ComplexMatrix(std::move(g), {d, d, d}, {d, d, d}), scale};
}

}  // namespace tanglelab
