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
#include <json.hpp>

#include "oracle.hpp"
#include "tanglelab/protocols.hpp"

using namespace tanglelab;

namespace {

using oracle::Mat;

// Isometry of the encoder scaled so that M^dagger M = I.
Mat isometry(const Circuit& enc) {
  EvalOptions opts{1L << 20};
  Mat m = evaluate(enc, opts).matrix();
  const Mat g = m.adjoint() * m;
  return m / std::sqrt(g(0, 0).real());
}

Mat random_diag(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(0, 2 * M_PI);
  Mat m = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = std::polar(1.0, ang(rng));
  return m;
}

Mat random_full(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

// Error acting as e1 on site a, e2 on site b, identity elsewhere.
Mat two_site_error(int sites, int site_dim, int a, const Mat& e1, int b, const Mat& e2) {
  Mat e = Mat::Ones(1, 1);
  for (int s = 0; s < sites; ++s)
    e = oracle::kron(e, s == a ? e1 : s == b ? e2 : Mat::Identity(site_dim, site_dim));
  return e;
}

// Knill-Laflamme oracle over random errors on every pair of sites.
int kl_failures(const Circuit& enc, int sites, int site_dim, bool full, int trials) {
  const Mat m = isometry(enc);
  std::mt19937_64 rng(99);
  int failures = 0;
  for (int a = 0; a < sites; ++a)
    for (int b = a + 1; b < sites; ++b)
      for (int t = 0; t < trials; ++t) {
        Mat e1 = full ? random_full(site_dim, rng) : random_diag(site_dim, rng);
        Mat e2 = full ? random_full(site_dim, rng) : random_diag(site_dim, rng);
        const Mat k = m.adjoint() * two_site_error(sites, site_dim, a, e1, b, e2) * m;
        const Complex c = k.trace() / double(k.rows());
        if ((k - c * Mat::Identity(k.rows(), k.cols())).cwiseAbs().maxCoeff() > 1e-9) ++failures;
      }
  return failures;
}

}  // namespace

TEST(CodeSpec, LabelsAndSizes) {
  CodeSpec s = shor_code_spec({fourier(2), fourier(2), fourier(2)});
  EXPECT_EQ(s.sites(), 9);
  EXPECT_EQ(s.label(), "shor [[9,1,3]]^F_2");
  CodeSpec u = ueb_phase_code_spec(pauli_ueb(2), 3);
  EXPECT_EQ(u.wires_per_site(), 2);
  EXPECT_EQ(u.dim, 4);
  EXPECT_EQ(u.wire_dim(), 2);
  EXPECT_THROW(phase_code_spec({fourier(2), fourier(3)}), DimensionError);
}

TEST(KlRowCount, Combinatorics) {
  auto phase = [](int d) { return phase_code_spec({fourier(d), fourier(d), fourier(d)}); };
  // Diagonal units: C(3,2) d^2 + 3 d + 1.
  EXPECT_EQ(kl_row_count(phase(2)), 3 * 4 + 3 * 2 + 1);
  EXPECT_EQ(kl_row_count(phase(3)), 3 * 9 + 3 * 3 + 1);
  // All units on 9 sites: C(9,2) 16 + 9 * 4 + 1.
  EXPECT_EQ(kl_row_count(shor_code_spec({fourier(2), fourier(2), fourier(2)})), 36 * 16 + 36 + 1);
  EXPECT_EQ(kl_row_count(ueb_phase_code_spec(pauli_ueb(2), 3)), 3 * 16 + 3 * 4 + 1);
}

TEST(PhaseCode, OracleAgreesWithVerifier) {
  for (int d = 2; d <= 3; ++d) {
    CodeSpec s = phase_code_spec({metaplectic(d), fourier(d), metaplectic(d, Branch::negated)});
    Circuit enc = code_encoder(s);
    EXPECT_EQ(kl_failures(enc, 3, d, false, 5), 0);
    KLReport r = kl_verify(enc, s);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(long(r.rows.size()), kl_row_count(s));
    EXPECT_LT(r.isometry_residual, 1e-12);
  }
}

TEST(PhaseCode, GateFormMatchesDrawnEncoder) {
  std::vector<Hadamard> hs{fourier(2), metaplectic(2), fourier(2)};
  Mat a = isometry(code_encoder(phase_code_spec(hs)));
  Mat b = isometry(phase_encoder_gates(hs));
  EXPECT_TRUE(oracle::proportional(b, a, 1e-9));
}

TEST(PhaseCode, OmittedCzBreaksTheCode) {
  std::vector<Hadamard> hs{fourier(2), fourier(2), fourier(2)};
  Circuit broken = phase_encoder_gates(hs, 2);
  EXPECT_GT(kl_failures(broken, 3, 2, false, 5), 0);
  KLReport r = kl_verify(broken, phase_code_spec(hs));
  EXPECT_FALSE(r.pass);
  int failing = 0;
  for (const auto& row : r.rows)
    if (!row.scalar) {
      ++failing;
      EXPECT_NE(row.error.find("⊗"), std::string::npos) << row.error;
    }
  EXPECT_GT(failing, 0);
}

TEST(ShorCode, OracleAgreesWithVerifier) {
  CodeSpec s = shor_code_spec({fourier(2), fourier(2), fourier(2)});
  Circuit enc = code_encoder(s);
  EXPECT_EQ(kl_failures(enc, 9, 2, true, 1), 0);
  KLReport r = kl_verify(enc, s);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.rows.size(), 613u);
}

TEST(UebPhaseCode, OracleAgreesWithVerifier) {
  CodeSpec s = ueb_phase_code_spec(pauli_ueb(2), 3);
  Circuit enc = code_encoder(s);
  EXPECT_EQ(enc.outputs().size(), 6u);
  EXPECT_EQ(kl_failures(enc, 3, 4, false, 4), 0);
  KLReport r = kl_verify(enc, s);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.rows.size(), 61u);
}

TEST(Kl, RejectsBoundaryMismatch) {
  CodeSpec s = phase_code_spec({fourier(2), fourier(2), fourier(2)});
  EXPECT_THROW(kl_verify(ghz_circuit(3, fourier(2)), s), Error);
}

TEST(Kl, SampledModeAndJson) {
  CodeSpec s = phase_code_spec({fourier(3), fourier(3), fourier(3)});
  KLReport r = kl_verify_sampled(code_encoder(s), s, 12, Seed{3});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.rows.size(), 12u);
  auto j = nlohmann::json::parse(kl_verify(code_encoder(s), s).to_json());
  EXPECT_EQ(j["rows"].size(), 37u);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["rows"][0]["error"], "identity");
}

TEST(Kl, WorkerCountDoesNotChangeTheReport) {
  CodeSpec s = phase_code_spec({fourier(3), metaplectic(3), fourier(3)});
  Circuit enc = code_encoder(s);
  KLOptions one;
  one.workers = 1;
  KLOptions four;
  four.workers = 4;
  EXPECT_EQ(kl_verify(enc, s, one).to_json(), kl_verify(enc, s, four).to_json());
}
