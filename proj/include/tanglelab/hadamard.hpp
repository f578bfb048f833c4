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

#include <optional>
#include <string>
#include <vector>

#include "tanglelab/linalg.hpp"

namespace tanglelab {

enum class HadamardFamily { fourier, potts, metaplectic, user };
enum class Branch { principal, negated };

struct Provenance {
  HadamardFamily family = HadamardFamily::user;
  std::optional<Complex> lambda;  // potts and metaplectic
  Branch branch = Branch::principal;
  std::string source;  // file path for user matrices

  std::string label() const;
};

// A unitary matrix whose entries all have modulus d^(-1/2). The rescaled table
// with unit-modulus entries is h() = sqrt(d) * matrix().
class Hadamard {
 public:
  Hadamard(ComplexMatrix matrix, Provenance provenance);

  int dim() const { return dim_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  const MatrixXc& H() const { return matrix_.matrix(); }
  MatrixXc h() const;
  const Provenance& provenance() const { return provenance_; }

 private:
  int dim_;
  ComplexMatrix matrix_;
  Provenance provenance_;
};

struct PottsParams {
  Complex lambda;
  Complex mu;
};

struct MetaplecticParams {
  Complex xi;
  Complex omega;
  Complex lambda;
  Branch branch;
};

Hadamard fourier(int d);

// Admissible lambda for the Potts form lambda*delta + conj(lambda)/sqrt(d);
// solutions exist only for d in {2, 3, 4}.
std::vector<Complex> potts_lambdas(int d);
PottsParams potts_params(int d, Complex lambda, double tol = 1e-8);
Hadamard potts(int d, Complex lambda, double tol = 1e-8);
Hadamard potts_by_index(int d, int k);

MetaplecticParams metaplectic_params(int d, Branch branch = Branch::principal);
Hadamard metaplectic(int d, Branch branch = Branch::principal);

// Wraps an arbitrary square matrix, checking unitarity and equimodularity.
Hadamard hadamard_from_matrix(const ComplexMatrix& m, double tol, std::string source = {});

struct Check {
  bool ok = false;
  double residual = 0.0;
};

struct CalculusReport {
  Check unitary;
  Check equimodular;
  Check self_transpose;
  bool is_hadamard = false;
  std::optional<double> riii_residual;
  std::optional<double> ri_residual;
  bool passes_basic = false;
  bool passes_extended = false;
};

CalculusReport check_basic(const MatrixXc& h, double tol);
CalculusReport check_extended(const MatrixXc& h, double tol);

// max |sum_r conj(H)_ar H_br H_cr - sqrt(d) conj(H)_ab conj(H)_ac H_bc| over a, b, c.
double riii_residual(const MatrixXc& h);
// max_c |rowsum(c) - rowsum(0)|.
double ri_residual(const MatrixXc& h);

}  // namespace tanglelab
