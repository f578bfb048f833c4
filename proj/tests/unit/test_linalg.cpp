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

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tanglelab/linalg.hpp"

using namespace tanglelab;

TEST(TensorMatrix, RejectsInconsistentDims) {
  EXPECT_THROW(ComplexMatrix(MatrixXc::Zero(4, 2), {2, 2}, {3}), DimensionError);
  EXPECT_THROW(ComplexMatrix(MatrixXc::Zero(0, 0)), DimensionError);
  EXPECT_THROW(ComplexMatrix(MatrixXc::Zero(2, 2), {-2}, {2}), DimensionError);
}

TEST(TensorMatrix, ScalarHasUnitDims) {
  ComplexMatrix s = ComplexMatrix::scalar({2.0, -1.0});
  EXPECT_EQ(s.out_dims(), Dims{1});
  EXPECT_EQ(s.in_dims(), Dims{1});
  EXPECT_EQ(s(0, 0), Complex(2.0, -1.0));
}

TEST(TensorMatrix, KronMatchesHandFormula) {
  MatrixXc a(2, 2), b(3, 1);
  a << 1.0, Complex(0, 2), -1.0, 3.0;
  b << 1.0, 2.0, Complex(0, -1);
  ComplexMatrix k = kron(ComplexMatrix(a), ComplexMatrix(b));
  EXPECT_EQ(k.out_dims(), (Dims{2, 3}));
  EXPECT_EQ(k.in_dims(), (Dims{2, 1}));
  EXPECT_LT((k.matrix() - oracle::kron(a, b)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(TensorMatrix, MatmulChecksInnerDims) {
  ComplexMatrix a(MatrixXc::Identity(2, 3));
  EXPECT_THROW(matmul(a, a), DimensionError);
  ComplexMatrix b(MatrixXc::Ones(3, 1));
  EXPECT_EQ(matmul(a, b).rows(), 2);
}

TEST(PermutationMap, MovesFactors) {
  // Dims 2 x 3: input |i0, i1> goes to output |i1, i0> of dims 3 x 2.
  ComplexMatrix p = permutation_map({1, 0}, {2, 3});
  ASSERT_EQ(p.rows(), 6);
  for (int i0 = 0; i0 < 2; ++i0)
    for (int i1 = 0; i1 < 3; ++i1) {
      const int col = i0 * 3 + i1;
      const int row = i1 * 2 + i0;
      for (int r = 0; r < 6; ++r) EXPECT_EQ(p(r, col), Complex(r == row ? 1.0 : 0.0));
    }
}

TEST(PermutationMap, ThreeCycle) {
  // Factor k of the input lands at position perm[k].
  ComplexMatrix p = permutation_map({2, 0, 1}, {2, 2, 2});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        int out[3];
        out[2] = a;
        out[0] = b;
        out[1] = c;
        const int row = out[0] * 4 + out[1] * 2 + out[2];
        EXPECT_EQ(p(row, a * 4 + b * 2 + c), Complex(1.0));
      }
}

TEST(RandomUnitary, IsUnitaryAndSeeded) {
  for (int d : {1, 2, 3, 5}) {
    ComplexMatrix u = random_unitary(d, Seed{42});
    const MatrixXc& m = u.matrix();
    EXPECT_LT((m.adjoint() * m - MatrixXc::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(m, random_unitary(d, Seed{42}).matrix());
  }
  EXPECT_NE(random_unitary(3, Seed{1}).matrix(), random_unitary(3, Seed{2}).matrix());
}

TEST(Proportionality, FindsScalar) {
  MatrixXc a(2, 2);
  a << 1.0, Complex(0, 1), 2.0, 0.5;
  const Complex c(0.3, -1.2);
  auto s = proportional_equal(ComplexMatrix(MatrixXc(c * a)), ComplexMatrix(a), 1e-12);
  ASSERT_TRUE(s);
  EXPECT_LT(std::abs(*s - c), 1e-14);
}

TEST(Proportionality, RejectsNonMultiples) {
  MatrixXc a = MatrixXc::Identity(2, 2);
  MatrixXc b = a;
  b(1, 1) = -1.0;
  EXPECT_FALSE(proportional_equal(ComplexMatrix(a), ComplexMatrix(b), 1e-9));
  Proportionality p = proportionality(a, b, 1e-9);
  EXPECT_FALSE(p.scalar);
  EXPECT_NEAR(p.residual, 2.0, 1e-12);
}

TEST(Proportionality, ZeroAgainstNonzeroFails) {
  MatrixXc z = MatrixXc::Zero(2, 2);
  EXPECT_FALSE(proportional_equal(ComplexMatrix(z), ComplexMatrix(MatrixXc::Identity(2, 2)), 1e-9));
  auto s = proportional_equal(ComplexMatrix(z), ComplexMatrix(z), 1e-9);
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, Complex(1.0));
}

TEST(Proportionality, AgreesWithOracle) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    MatrixXc a = random_unitary(3, Seed{seed}).matrix();
    MatrixXc b = seed % 2 ? MatrixXc(Complex(0.0, 2.0) * a) : random_unitary(3, Seed{seed + 100}).matrix();
    EXPECT_EQ(bool(proportional_equal(ComplexMatrix(b), ComplexMatrix(a), 1e-9)),
              oracle::proportional(b, a, 1e-9));
  }
}

TEST(UnitarityResidual, Basic) {
  EXPECT_EQ(unitarity_residual(MatrixXc::Identity(3, 3)), 0.0);
  EXPECT_NEAR(unitarity_residual(MatrixXc(2.0 * MatrixXc::Identity(2, 2))), 3.0, 1e-15);
}
