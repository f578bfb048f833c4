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

#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tanglelab/hadamard.hpp"
#include "tanglelab/ir.hpp"

using namespace tanglelab;

namespace {

double diff(const MatrixXc& a, const MatrixXc& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Random circuit using every op kind, kept small enough for brute force.
Circuit random_circuit(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Hadamard h = seed % 2 ? metaplectic(d) : fourier(d);
  Circuit c(d, "random");
  std::vector<WireId> live = c.add_inputs(2);
  auto pick = [&](std::vector<WireId>& ws) { return ws[rng() % ws.size()]; };
  for (int step = 0; step < 7; ++step) {
    const int kind = int(rng() % 9);
    if (kind == 0 && live.size() < 4) {
      live.push_back(c.prep());
    } else if (kind == 1 && live.size() < 4) {
      live.push_back(c.copy(pick(live)));
    } else if (kind == 2 && live.size() > 2) {
      WireId a = live.back();
      live.pop_back();
      c.merge(pick(live), a);
    } else if (kind == 3) {
      c.had(pick(live), h.H(), rng() % 2);
    } else if (kind == 4 && live.size() >= 2) {
      c.cz(live[0], live[1], h.H(), rng() % 2);
    } else if (kind == 5 && live.size() >= 2) {
      c.swap(live[0], live.back());
    } else if (kind == 6) {
      c.gate({pick(live)}, random_unitary(d, Seed{rng()}).matrix());
    } else if (kind == 7 && live.size() < 3) {
      auto [a, b] = c.bell();
      live.push_back(a);
      live.push_back(b);
    } else if (kind == 8 && live.size() > 2) {
      WireId a = live.back();
      live.pop_back();
      c.prep_effect(a);
    }
  }
  c.set_outputs(live);
  return c;
}

}  // namespace

TEST(Evaluate, MatchesBruteForceContraction) {
  for (int d = 2; d <= 3; ++d)
    for (std::uint64_t s = 1; s <= 30; ++s) {
      Circuit c = random_circuit(d, s * 7 + d);
      ComplexMatrix m = evaluate(c);
      EXPECT_LT(diff(m.matrix(), oracle::contract(c)), 1e-12) << "d=" << d << " seed=" << s;
    }
}

TEST(Evaluate, PrimitiveSemantics) {
  const int d = 3;
  Circuit c(d, "bell_state");
  auto [a, b] = c.bell();
  c.set_outputs({a, b});
  ComplexMatrix m = evaluate(c);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) EXPECT_EQ(m(i * d + j, 0), Complex(i == j ? 1.0 : 0.0));

  Circuit z(d, "cz");
  auto in = z.add_inputs(2);
  z.cz(in[0], in[1], fourier(d).H());
  z.set_outputs(in);
  ComplexMatrix cz = evaluate(z);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      EXPECT_LT(std::abs(cz(i * d + j, i * d + j) - std::polar(1.0, -2 * M_PI * i * j / d)), 1e-12);
}

TEST(Evaluate, OutputOrderFollowsDeclaration) {
  Circuit c(2, "swapped");
  auto in = c.add_inputs(2);
  c.set_outputs({in[1], in[0]});
  EXPECT_LT(diff(evaluate(c).matrix(), oracle::contract(c)), 1e-15);
  EXPECT_EQ(evaluate(c)(1, 2), Complex(1.0));
}

TEST(Evaluate, ScalarCircle) {
  for (int d = 1; d <= 5; ++d) {
    Circuit c(d, "circle");
    c.prep_effect(c.prep());
    c.set_outputs({});
    ComplexMatrix m = evaluate(c);
    EXPECT_EQ(m.rows(), 1);
    EXPECT_NEAR(m(0, 0).real(), d, 1e-15);
  }
}

TEST(Evaluate, WireCapIsEnforced) {
  Circuit c(2, "wide");
  std::vector<WireId> ws;
  for (int i = 0; i < 6; ++i) ws.push_back(c.prep());
  c.set_outputs(ws);
  EXPECT_THROW(evaluate(c, {32}), EvaluationError);
  EXPECT_NO_THROW(evaluate(c, {64}));
}

TEST(Circuit, RejectsMisuse) {
  Circuit c(2, "bad");
  auto in = c.add_inputs(1);
  EXPECT_THROW(c.had(in[0] + 5, fourier(2).H()), DimensionError);
  EXPECT_THROW(c.cz(in[0], in[0], fourier(2).H()), DimensionError);
  EXPECT_THROW(c.had(in[0], fourier(3).H()), DimensionError);
  c.prep_effect(in[0]);
  EXPECT_THROW(c.had(in[0], fourier(2).H()), DimensionError);
  EXPECT_THROW(Circuit(0), DimensionError);
}

TEST(VerifyPair, BoundaryMismatchThrows) {
  Circuit a(2, "a");
  a.set_outputs({a.prep()});
  Circuit b(2, "b");
  WireId w = b.prep();
  b.set_outputs({w, b.copy(w)});
  EXPECT_THROW(verify_pair(a, b, 1e-9), DimensionError);
}

TEST(VerifyPair, ProportionalCircuits) {
  // H followed by H^dagger is the identity; compared to a bare wire.
  Circuit a(3, "hhdag");
  auto in = a.add_inputs(1);
  a.had(in[0], metaplectic(3).H());
  a.had(in[0], metaplectic(3).H(), true);
  a.set_outputs(in);
  Circuit b(3, "wire");
  b.set_outputs(b.add_inputs(1));
  Verdict v = verify_pair(a, b, 1e-9);
  EXPECT_TRUE(v.equal);
  ASSERT_TRUE(v.scalar);
  EXPECT_LT(std::abs(*v.scalar - 1.0), 1e-12);
}

TEST(RandomTangleGate, DeterministicAndUnitary) {
  const Hadamard h = metaplectic(2);
  for (std::uint64_t s = 1; s <= 5; ++s) {
    Circuit g = random_tangle_gate(3, 6, h, Seed{s});
    EXPECT_EQ(g.ops().size(), 6u);
    const MatrixXc m = evaluate(g).matrix();
    EXPECT_LT(diff(m.adjoint() * m, MatrixXc::Identity(8, 8)), 1e-12);
    EXPECT_EQ(m, evaluate(random_tangle_gate(3, 6, h, Seed{s})).matrix());
    for (const auto& op : g.ops()) EXPECT_TRUE(op.kind == OpKind::had || op.kind == OpKind::cz);
  }
}

TEST(CirText, ParsesAndEvaluates) {
  const std::string text =
      "# comment\n"
      "circuit ghz2 dim 2\n"
      "hadamard fourier\n"
      "prep\n"
      "prep\n"
      "cz 0 1\n"
      "had 1\n"
      "out 0 1\n"
      "end\n";
  Circuit c = parse_cir(text);
  EXPECT_EQ(c.name(), "ghz2");
  MatrixXc want = MatrixXc::Zero(4, 1);
  want(0, 0) = want(3, 0) = 1.0;
  EXPECT_TRUE(oracle::proportional(evaluate(c).matrix(), want, 1e-12));
}

TEST(CirText, ReportsLineAndColumn) {
  auto error_at = [](const std::string& text) {
    try {
      parse_cir(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(-1, -1);
  };
  EXPECT_EQ(error_at("circuit x dim 2\nprep\n  frob 0\nend\n"), std::make_pair(3, 3));
  EXPECT_EQ(error_at("circuit x dim 2\nprep\nhad 0\nend\n").first, 3);  // no hadamard declared
  EXPECT_EQ(error_at("circuit x dim 2\nprep\nhad 7\nend\n").first, 3);
  EXPECT_EQ(error_at("circuit x dim 2\nprep\nout 0\n").first, 3);       // missing end
  EXPECT_EQ(error_at("wire 0\n"), std::make_pair(1, 1));
  EXPECT_EQ(error_at("circuit x dim 2\nprep\nin 1\nend\n").first, 3);
}

TEST(CirText, RejectsUndeclaredOutputs) {
  EXPECT_THROW(parse_cir("circuit x dim 2\nprep\nprep\nout 0\nend\n"), Error);
}
