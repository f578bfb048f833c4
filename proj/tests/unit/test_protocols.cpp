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
#include "tanglelab/protocols.hpp"

using namespace tanglelab;

namespace {

using oracle::Mat;

double diff(const MatrixXc& a, const MatrixXc& b) { return (a - b).cwiseAbs().maxCoeff(); }

Mat ghz_vector(int d, int n) {
  long size = 1;
  for (int i = 0; i < n; ++i) size *= d;
  Mat v = Mat::Zero(size, 1);
  for (int k = 0; k < d; ++k) {
    long idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * d + k;
    v(idx, 0) = 1.0;
  }
  return v;
}

// sum_a prod_i conj(H)_{a_i a_{i+1}} |a_1 ... a_n>.
Mat cluster_vector(const MatrixXc& h, int n) {
  const int d = int(h.rows());
  long size = 1;
  for (int i = 0; i < n; ++i) size *= d;
  Mat v(size, 1);
  for (long idx = 0; idx < size; ++idx) {
    std::vector<int> a(n);
    long x = idx;
    for (int i = n - 1; i >= 0; --i) {
      a[i] = int(x % d);
      x /= d;
    }
    Complex p = 1.0;
    for (int i = 0; i + 1 < n; ++i) p *= std::conj(h(a[i], a[i + 1]));
    v(idx, 0) = p;
  }
  return v;
}

Mat plus(int d) { return Mat::Ones(d, 1); }

bool prop(const MatrixXc& a, const MatrixXc& b) { return oracle::proportional(a, b, 1e-9); }

const BuildOptions kForce{false, 1e-9};

}  // namespace

TEST(Names, RoundTrip) {
  for (ProtocolId id : all_protocols()) {
    EXPECT_EQ(protocol_from_name(protocol_name(id)), id);
  }
  EXPECT_EQ(protocol_from_name("mb_ghz_teleport"), ProtocolId::mb_ghz_teleport);
  EXPECT_FALSE(protocol_from_name("teleport"));
  EXPECT_EQ(all_protocols().size(), 15u);
}

TEST(Ghz, CircuitMakesGhzState) {
  for (int d = 2; d <= 3; ++d)
    for (int n = 2; n <= 5; ++n)
      for (const Hadamard& h : {fourier(d), metaplectic(d)}) {
        EXPECT_TRUE(prop(evaluate(ghz_circuit(n, h)).matrix(), ghz_vector(d, n))) << d << " " << n;
        EXPECT_TRUE(prop(evaluate(ghz_spec(d, n)).matrix(), ghz_vector(d, n)));
      }
}

TEST(Ghz, CircuitAgreesWithBruteForce) {
  Circuit c = ghz_circuit(3, metaplectic(2));
  EXPECT_LT(diff(evaluate(c).matrix(), oracle::contract(c)), 1e-12);
}

TEST(Cluster, CircuitMakesClusterState) {
  for (int d = 2; d <= 3; ++d)
    for (int n = 2; n <= 4; ++n)
      for (const Hadamard& h : {fourier(d), metaplectic(d)}) {
        const Mat want = cluster_vector(h.H(), n);
        EXPECT_TRUE(prop(evaluate(cluster_circuit(n, h)).matrix(), want));
        EXPECT_TRUE(prop(evaluate(cluster_spec(n, h)).matrix(), want));
      }
}

TEST(Cluster, RefusesNonSelfTranspose) {
  MatrixXc m = oracle::fourier(3);
  MatrixXc dmat = MatrixXc::Identity(3, 3);
  dmat(2, 2) = std::polar(1.0, 1.1);
  Hadamard h = hadamard_from_matrix(ComplexMatrix(MatrixXc(m * dmat)), 1e-9);
  EXPECT_THROW(cluster_pair(3, h), PreconditionError);
  EXPECT_NO_THROW(cluster_pair(3, h, kForce));
}

TEST(LocalEquiv, ClusterUpToLocalHadamardsIsGhz) {
  for (int d = 2; d <= 3; ++d)
    for (int n : {2, 3}) {
      ProtocolPair p = local_equiv_pair(n, metaplectic(d));
      EXPECT_TRUE(prop(evaluate(p.circuit).matrix(), ghz_vector(d, n)));
      EXPECT_TRUE(verify_pair(p.circuit, p.spec, 1e-9).equal);
    }
  EXPECT_THROW(local_equiv_pair(4, fourier(2)), PreconditionError);
  EXPECT_THROW(local_equiv_pair(1, fourier(2)), PreconditionError);
}

TEST(Cut, SplitsTheChain) {
  for (const Hadamard& h : {fourier(2), metaplectic(3)}) {
    const int d = h.dim();
    ProtocolPair p = cut_pair(h);
    const Mat pair = cluster_vector(h.H(), 2);
    const Mat want = oracle::kron(oracle::kron(pair, plus(d)), pair);
    EXPECT_TRUE(prop(evaluate(p.circuit).matrix(), want));
    EXPECT_TRUE(prop(evaluate(p.spec).matrix(), want));
  }
}

TEST(Splice, JoinsAroundTheTarget) {
  for (const Hadamard& h : {metaplectic(2), metaplectic(3), potts_by_index(2, 0)}) {
    const int d = h.dim();
    ProtocolPair p = splice_pair(h);
    // Chain q0-q1-q3-q4 with q2 unentangled, output order q0..q4.
    const Mat chain = cluster_vector(h.H(), 4);
    Mat want(chain.rows() * d, 1);
    for (long i = 0; i < chain.rows(); ++i)
      for (int m = 0; m < d; ++m) {
        const long hi = i / (d * d), lo = i % (d * d);
        want((hi * d + m) * d * d + lo, 0) = chain(i, 0);
      }
    EXPECT_TRUE(prop(evaluate(p.circuit).matrix(), want));
    EXPECT_TRUE(prop(evaluate(p.spec).matrix(), want));
  }
}

TEST(Splice, RefusesFourierAndFailsWhenForced) {
  EXPECT_THROW(splice_pair(fourier(2)), PreconditionError);
  ProtocolPair p = splice_pair(fourier(2), kForce);
  EXPECT_FALSE(verify_pair(p.circuit, p.spec, 1e-9).equal);
}

TEST(Teleport, DeliversTheInputState) {
  for (TeleportKind kind : {TeleportKind::mb_ghz, TeleportKind::mb_cluster}) {
    for (const Hadamard& h : {fourier(2), metaplectic(3)})
      for (int n : {2, 3, 4}) {
        const int d = h.dim();
        ProtocolPair p = teleport_pair(kind, n, h);
        // The input wire and the n-1 measured shares, then Charlie's qudit.
        Mat dits = Mat::Ones(1, 1);
        for (int i = 0; i < n; ++i) dits = oracle::kron(dits, plus(d));
        const Mat want = oracle::kron(dits, Mat::Identity(d, d));
        EXPECT_TRUE(prop(evaluate(p.circuit).matrix(), want)) << n;
      }
  }
}

TEST(Teleport, RobustToTangleErrors) {
  const Hadamard h = metaplectic(2);
  for (std::uint64_t s = 1; s <= 4; ++s) {
    ProtocolPair p = teleport_pair(TeleportKind::robust_ghz, 3, h, random_tangle_gate(2, 5, h, Seed{s}));
    EXPECT_TRUE(verify_pair(p.circuit, p.spec, 1e-9).equal) << s;
  }
  EXPECT_THROW(teleport_pair(TeleportKind::robust_ghz, 3, fourier(2), random_tangle_gate(2, 3, fourier(2), Seed{1})),
               PreconditionError);
}

TEST(StateTransfer, OracleWithoutError) {
  for (const Hadamard& h : {metaplectic(2), potts_by_index(3, 0)}) {
    const int d = h.dim();
    ProtocolPair p = state_transfer_pair(3, h, std::nullopt);
    const Mat want = oracle::kron(cluster_vector(h.H(), 3), Mat::Identity(d, d));
    EXPECT_TRUE(prop(evaluate(p.circuit).matrix(), want));
  }
}

TEST(StateTransfer, OracleWithError) {
  const Hadamard h = metaplectic(2);
  for (std::uint64_t s = 1; s <= 5; ++s) {
    Circuit err = random_tangle_gate(3, 6, h, Seed{s});
    ProtocolPair p = state_transfer_pair(3, h, err);
    const Mat state = oracle::contract(err) * cluster_vector(h.H(), 3);
    const Mat want = oracle::kron(state, Mat::Identity(2, 2));
    EXPECT_TRUE(prop(evaluate(p.circuit).matrix(), want)) << s;
  }
}

TEST(NonlocalCu, AppliesTheControlledFamily) {
  for (const Hadamard& h : {fourier(2), metaplectic(3)}) {
    const int d = h.dim();
    std::vector<MatrixXc> u;
    for (int i = 0; i < d; ++i) u.push_back(random_unitary(d, Seed{std::uint64_t(10 + i)}).matrix());
    // C|x, i> = U_i|x> (x) |i>, with Alice first and Bob the control.
    Mat c = Mat::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) c(x * d + i, y * d + i) = u[i](x, y);
    EXPECT_LT(diff(controlled_family(u), c), 1e-14);
    // Outputs (Alice, mediator, Bob) with the mediator returned to |+>.
    Mat want = Mat::Zero(d * d * d, d * d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int m = 0; m < d; ++m)
          for (int col = 0; col < d * d; ++col) want((a * d + m) * d + b, col) = c(a * d + b, col);
    ProtocolPair p = nonlocal_cu_pair(h, u);
    EXPECT_TRUE(prop(evaluate(p.circuit).matrix(), want));
    EXPECT_TRUE(verify_pair(p.circuit, p.spec, 1e-9).equal);
  }
}

TEST(ReverseShading, SwapsHadAndCz) {
  const Hadamard h = metaplectic(2);
  Circuit g(2, "g");
  auto w = g.add_inputs(2);
  g.had(w[0], h.H());
  g.cz(w[0], w[1], h.H(), true);
  g.set_outputs(w);
  Circuit r = reverse_shading(g);
  ASSERT_EQ(r.inputs().size(), 3u);
  ASSERT_EQ(r.ops().size(), 2u);
  EXPECT_EQ(r.ops()[0].kind, OpKind::cz);
  EXPECT_EQ(r.ops()[0].ins, (std::vector<WireId>{r.inputs()[0], r.inputs()[1]}));
  EXPECT_EQ(r.ops()[1].kind, OpKind::had);
  EXPECT_EQ(r.ops()[1].ins, (std::vector<WireId>{r.inputs()[1]}));
  EXPECT_TRUE(r.ops()[1].dagger);
}
