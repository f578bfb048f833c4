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

#include <vector>

#include "tanglelab/linalg.hpp"

namespace tanglelab {

struct UnitaryErrorBasis {
  int dim = 1;
  std::vector<ComplexMatrix> members;  // d^2 members, each d x d
};

struct UebCheck {
  bool ok = false;
  bool cardinality_ok = false;
  double unitarity_residual = 0.0;
  double orthogonality_residual = 0.0;  // max |Tr(U_i^dagger U_j) - delta_ij d|
};

// X^p Z^q with X|k> = |k+1>, Z|k> = e^{2 pi i k / d}|k>, indexed by i = p*d + q.
UnitaryErrorBasis pauli_ueb(int d);

UebCheck is_ueb(const std::vector<ComplexMatrix>& family, double tol);

// Validates and wraps a family loaded from elsewhere.
UnitaryErrorBasis make_ueb(std::vector<ComplexMatrix> family, double tol);

// Controlled family on C^{d^2} (x) C^d: |i>|psi> -> s |i> U_i|psi>. The index
// factor is split as two d-dimensional factors (i = i1*d + i2) so that every
// wire of a circuit has the same dimension; tensor dims are [d, d, d].
struct UebGenerator {
  UnitaryErrorBasis basis;
  ComplexMatrix tensor;
  Complex scale;
};

// The bent vertex V : C^d (x) C^d -> C^{d^2}, V|x,y> = sum_i s (U_i)_{xy} |i>.
MatrixXc ueb_vertex(const UnitaryErrorBasis& basis, Complex scale);

// Starts from s = d^(-1/2) and rescales so that V^dagger V is exactly the identity.
Complex calibrate_ueb_scale(const UnitaryErrorBasis& basis);

UebGenerator ueb_generator(const UnitaryErrorBasis& basis);
UebGenerator ueb_generator(const UnitaryErrorBasis& basis, Complex scale);

}  // namespace tanglelab
