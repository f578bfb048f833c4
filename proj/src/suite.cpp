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

#include "tanglelab/suite.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "parallel.hpp"
#include "tanglelab/hadamard.hpp"
#include "tanglelab/ir.hpp"
#include "tanglelab/protocols.hpp"
#include "tanglelab/tangle.hpp"
#include "tanglelab/ueb.hpp"

namespace tanglelab {

namespace {

constexpr double kDefaultTolerance = 1e-9;
constexpr double kGoldenTolerance = 1e-12;

struct Outcome {
  bool pass = false;
  double residual = 0.0;
  std::string detail;
  // Negative controls pass by failing, so their residual says nothing about
  // tolerance.
  bool tolerance_sensitive = true;
};

struct Task {
  int criterion;
  std::string name;
  std::function<Outcome()> run;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome verdict_outcome(const Verdict& v) {
  Outcome o;
  o.pass = v.equal;
  o.residual = v.residual;
  if (v.scalar) {
    o.detail = "scalar " + fmt(v.scalar->real()) + (v.scalar->imag() < 0 ? "" : "+") +
               fmt(v.scalar->imag()) + "i";
  } else {
    o.detail = "not proportional";
  }
  return o;
}

Outcome expect_refusal(const std::function<void()>& build) {
  Outcome o;
  o.tolerance_sensitive = false;
  try {
    build();
    o.detail = "built without refusal";
  } catch (const PreconditionError& e) {
    o.pass = true;
    o.detail = std::string("refused: ") + e.what();
  }
  return o;
}

Outcome expect_failure(const ProtocolPair& p, double tol) {
  Verdict v = verify_pair(p.circuit, p.spec, tol);
  Outcome o;
  o.tolerance_sensitive = false;
  o.pass = !v.equal;
  o.residual = v.residual;
  o.detail = v.equal ? "unexpectedly equal" : "fails as expected, residual " + fmt(v.residual);
  return o;
}

std::string hname(const Hadamard& h) {
  return h.provenance().label() + " d=" + std::to_string(h.dim());
}

Circuit crossing_circuit(const Hadamard& h, bool bowtie) {
  PlanarTangle t;
  t.name = bowtie ? "bowtie" : "hourglass";
  t.dim = h.dim();
  t.bottom = bowtie ? 4 : 2;
  SliceEvent e;
  e.kind = SliceKind::cross;
  e.index = bowtie ? 1 : 0;
  e.over = true;
  t.slices.push_back(e);
  return compile(infer_shading(t), h);
}

Outcome golden(const MatrixXc& got, const MatrixXc& want, double tol) {
  Outcome o;
  o.residual = (got - want).cwiseAbs().maxCoeff();
  o.pass = o.residual < tol;
  o.detail = "max entry error " + fmt(o.residual);
  return o;
}

Circuit identity_on(int d, int wires) {
  Circuit c(d, "identity");
  c.set_outputs(c.add_inputs(wires));
  return c;
}

Outcome exact_outcome(const Verdict& v, double tol) {
  Outcome o = verdict_outcome(v);
  const double off = v.scalar ? std::abs(*v.scalar - Complex(1.0)) : 1.0;
  o.residual = std::max(v.residual, off);
  o.pass = v.equal && o.residual <= tol;
  return o;
}

Outcome classification(const Hadamard& h, bool want_extended, double tol) {
  CalculusReport m = check_extended(h.H(), tol);
  DiagrammaticReport g = reidemeister_suite(h.H(), tol);
  Outcome o;
  const bool agree = m.passes_basic == g.passes_basic && m.passes_extended == g.passes_extended;
  o.pass = agree && m.passes_basic && m.passes_extended == want_extended;
  if (want_extended)
    o.residual = std::max(m.riii_residual.value_or(1.0), m.ri_residual.value_or(1.0));
  else
    o.residual = std::max({m.unitary.residual, m.equimodular.residual, m.self_transpose.residual});
  o.detail = std::string("matrix basic/extended ") + (m.passes_basic ? "pass" : "fail") + "/" +
             (m.passes_extended ? "pass" : "fail") + ", diagrammatic " +
             (g.passes_basic ? "pass" : "fail") + "/" + (g.passes_extended ? "pass" : "fail");
  return o;
}

Outcome kl_outcome(const Circuit& enc, const CodeSpec& spec, long rows, const SuiteConfig& cfg) {
  KLOptions opts;
  opts.tol = cfg.tolerance;
  opts.eval.max_state_dim = std::max(cfg.wire_cap, cfg.code_wire_cap);
  opts.workers = cfg.workers;
  KLReport r = kl_verify(enc, spec, opts);
  Outcome o;
  long zeros = 0, failed = 0;
  o.residual = r.isometry_residual;
  for (const auto& row : r.rows) {
    o.residual = std::max(o.residual, row.residual);
    if (!row.scalar)
      ++failed;
    else if (std::abs(*row.scalar) <= cfg.tolerance)
      ++zeros;
  }
  o.pass = r.pass && long(r.rows.size()) == rows;
  o.detail = std::to_string(r.rows.size()) + " rows (" + std::to_string(zeros) + " with scalar 0, " +
             std::to_string(failed) + " failing)";
  return o;
}

std::vector<MatrixXc> seeded_unitaries(int d, std::uint64_t base) {
  std::vector<MatrixXc> u;
  for (int i = 0; i < d; ++i) u.push_back(random_unitary(d, Seed{base + std::uint64_t(i)}).matrix());
  return u;
}

void add_golden(std::vector<Task>& t, const SuiteConfig& cfg) {
  const double tol = std::min(kGoldenTolerance, cfg.tolerance);
  const double r2 = 1.0 / std::sqrt(2.0);
  t.push_back({1, "fourier2-crossing", [=] {
                 MatrixXc want(2, 2);
                 want << r2, r2, r2, -r2;
                 return golden(evaluate(crossing_circuit(fourier(2), false)).matrix(), want, tol);
               }});
  t.push_back({1, "fourier2-gate", [=] {
                 Eigen::VectorXcd diag(4);
                 diag << 1, 1, 1, -1;
                 return golden(evaluate(crossing_circuit(fourier(2), true)).matrix(),
                               MatrixXc(diag.asDiagonal()), tol);
               }});
  t.push_back({1, "metaplectic2-crossing", [=] {
                 const Complex i(0, 1);
                 MatrixXc want(2, 2);
                 want << 1.0, -i, -i, 1.0;
                 want *= std::polar(r2, std::numbers::pi / 8);
                 return golden(evaluate(crossing_circuit(metaplectic(2), false)).matrix(), want,
                               tol);
               }});
  t.push_back({1, "metaplectic2-gate", [=] {
                 const Complex i(0, 1);
                 Eigen::VectorXcd diag(4);
                 diag << 1.0, i, i, 1.0;
                 diag *= std::polar(1.0, -std::numbers::pi / 8);
                 return golden(evaluate(crossing_circuit(metaplectic(2), true)).matrix(),
                               MatrixXc(diag.asDiagonal()), tol);
               }});
}

void add_classification(std::vector<Task>& t, const SuiteConfig& cfg) {
  const double tol = cfg.tolerance;
  for (int d = 2; d <= 8; ++d) {
    t.push_back({2, "metaplectic d=" + std::to_string(d),
                 [=] { return classification(metaplectic(d), true, tol); }});
    t.push_back({2, "metaplectic-neg d=" + std::to_string(d),
                 [=] { return classification(metaplectic(d, Branch::negated), true, tol); }});
    t.push_back({2, "fourier d=" + std::to_string(d),
                 [=] { return classification(fourier(d), false, tol); }});
  }
  for (int d = 2; d <= 4; ++d)
    for (int k = 0; k < int(potts_lambdas(d).size()); ++k)
      t.push_back({2, "potts d=" + std::to_string(d) + " k=" + std::to_string(k),
                   [=] { return classification(potts_by_index(d, k), true, tol); }});
  for (int d : {1, 5, 6, 7, 8})
    t.push_back({2, "potts refuses d=" + std::to_string(d),
                 [=] { return expect_refusal([=] { potts_lambdas(d); }); }});
}

void add_identities(std::vector<Task>& t, const SuiteConfig& cfg) {
  const double tol = std::min(kGoldenTolerance, cfg.tolerance);
  const std::uint64_t seed = cfg.seed.value;
  for (int d = 2; d <= 4; ++d) {
    const std::string sd = " d=" + std::to_string(d);
    t.push_back({3, "snake-left" + sd, [=] {
                   Circuit c(d, "snake_left");
                   WireId in = c.add_input();
                   auto [a, b] = c.bell();
                   c.bell_effect(b, in);
                   c.set_outputs({a});
                   return exact_outcome(verify_pair(c, identity_on(d, 1), tol), tol);
                 }});
    t.push_back({3, "snake-right" + sd, [=] {
                   Circuit c(d, "snake_right");
                   WireId in = c.add_input();
                   auto [a, b] = c.bell();
                   c.bell_effect(in, a);
                   c.set_outputs({b});
                   return exact_outcome(verify_pair(c, identity_on(d, 1), tol), tol);
                 }});
    t.push_back({3, "bubble-removal" + sd, [=] {
                   Circuit c(d, "bubble");
                   WireId in = c.add_input();
                   WireId x = c.copy(in);
                   c.merge(in, x);
                   c.set_outputs({in});
                   return exact_outcome(verify_pair(c, identity_on(d, 1), tol), tol);
                 }});
    t.push_back({3, "circle" + sd, [=] {
                   Circuit c(d, "circle");
                   c.prep_effect(c.prep());
                   c.set_outputs({});
                   Outcome o;
                   o.residual = std::abs(evaluate(c)(0, 0) - Complex(d));
                   o.pass = o.residual <= tol;
                   o.detail = "loop value " + fmt(evaluate(c)(0, 0).real());
                   return o;
                 }});
    t.push_back({3, "vertex-sliding" + sd, [=] {
                   const MatrixXc g = random_unitary(d, Seed{seed * 31 + std::uint64_t(d)}).matrix();
                   Circuit lhs(d, "slide_lhs");
                   auto [a, b] = lhs.bell();
                   lhs.gate({a}, g);
                   lhs.set_outputs({a, b});
                   Circuit rhs(d, "slide_rhs");
                   auto [x, y] = rhs.bell();
                   rhs.gate({y}, g.transpose());
                   rhs.set_outputs({x, y});
                   return exact_outcome(verify_pair(lhs, rhs, tol), tol);
                 }});
    t.push_back({3, "scalar-absorption" + sd, [=] {
                   const Hadamard h = fourier(d);
                   const Complex lambda = std::polar(1.7, 0.3);
                   Circuit base = ghz_circuit(3, h);
                   Circuit c(d, "absorbed");
                   auto outs = c.append(base, {});
                   MatrixXc s(1, 1);
                   s(0, 0) = lambda;
                   c.box({}, 0, s);
                   c.prep_effect(c.prep());
                   c.set_outputs(outs);
                   const MatrixXc want = lambda * double(d) * evaluate(base).matrix();
                   Outcome o;
                   o.residual = (evaluate(c).matrix() - want).cwiseAbs().maxCoeff() /
                                std::max(1.0, want.cwiseAbs().maxCoeff());
                   o.pass = o.residual <= tol;
                   o.detail = "lambda d times the bare diagram";
                   return o;
                 }});
  }
}

void add_protocols(std::vector<Task>& t, const SuiteConfig& cfg) {
  const double tol = cfg.tolerance;
  const std::uint64_t seed = cfg.seed.value;
  auto check = [tol](const ProtocolPair& p) { return verdict_outcome(verify_pair(p.circuit, p.spec, tol)); };
  for (int d : {2, 3}) {
    for (const Hadamard& h : {fourier(d), metaplectic(d)}) {
      const std::string hn = " " + hname(h);
      for (int n : {2, 3, 4, 5})
        t.push_back({4, "ghz-create n=" + std::to_string(n) + hn, [=] { return check(ghz_pair(n, h)); }});
      for (int n : {2, 3, 4})
        t.push_back({4, "cluster-create n=" + std::to_string(n) + hn,
                     [=] { return check(cluster_pair(n, h)); }});
      t.push_back({4, "local-equiv-2" + hn, [=] { return check(local_equiv_pair(2, h)); }});
      t.push_back({4, "local-equiv-3" + hn, [=] { return check(local_equiv_pair(3, h)); }});
      t.push_back({4, "cut" + hn, [=] { return check(cut_pair(h)); }});
      for (int n : {3, 4}) {
        t.push_back({4, "mb-ghz-teleport n=" + std::to_string(n) + hn,
                     [=] { return check(teleport_pair(TeleportKind::mb_ghz, n, h)); }});
        t.push_back({4, "mb-cluster-teleport n=" + std::to_string(n) + hn,
                     [=] { return check(teleport_pair(TeleportKind::mb_cluster, n, h)); }});
      }
      t.push_back({4, "nonlocal-controlled-u" + hn, [=] {
                     return check(nonlocal_cu_pair(h, seeded_unitaries(d, seed * 1000 + 11)));
                   }});
    }
  }
  {
    const Hadamard h = fourier(2);
    t.push_back({4, "nonlocal-controlled-u U={I,Z} " + hname(h), [=] {
                   MatrixXc z = MatrixXc::Identity(2, 2);
                   z(1, 1) = -1.0;
                   return check(nonlocal_cu_pair(h, {MatrixXc::Identity(2, 2), z}));
                 }});
  }
  const std::vector<Hadamard> extended{metaplectic(2), metaplectic(3), potts_by_index(2, 0),
                                       potts_by_index(3, 0), potts_by_index(4, 0)};
  for (const Hadamard& h : extended) {
    const std::string hn = " " + hname(h);
    t.push_back({4, "splice" + hn, [=] { return check(splice_pair(h)); }});
    t.push_back({4, "state-transfer n=4 seeds 1-10 depth<=6" + hn, [=] {
                   Outcome all{true, 0.0, "", true};
                   int passed = 0;
                   for (std::uint64_t s = 1; s <= 10; ++s) {
                     const int depth = int(s % 7);
                     Outcome o = check(state_transfer_pair(4, h, Seed{s}, depth));
                     all.pass = all.pass && o.pass;
                     all.residual = std::max(all.residual, o.residual);
                     passed += o.pass;
                   }
                   all.detail = std::to_string(passed) + "/10 seeds pass";
                   return all;
                 }});
    t.push_back({4, "robust-ghz-teleport n=3 seeds 1-10 depth 5" + hn, [=] {
                   Outcome all{true, 0.0, "", true};
                   int passed = 0;
                   for (std::uint64_t s = 1; s <= 10; ++s) {
                     Circuit err = random_tangle_gate(2, 5, h, Seed{s});
                     Outcome o = check(teleport_pair(TeleportKind::robust_ghz, 3, h, err));
                     all.pass = all.pass && o.pass;
                     all.residual = std::max(all.residual, o.residual);
                     passed += o.pass;
                   }
                   all.detail = std::to_string(passed) + "/10 seeds pass";
                   return all;
                 }});
  }
}

void add_negative(std::vector<Task>& t, const SuiteConfig& cfg) {
  const double tol = cfg.tolerance;
  const BuildOptions force{false, tol};
  t.push_back({5, "splice refuses fourier d=2",
               [=] { return expect_refusal([=] { splice_pair(fourier(2)); }); }});
  for (int d : {2, 3})
    t.push_back({5, "splice --force fails fourier d=" + std::to_string(d),
                 [=] { return expect_failure(splice_pair(fourier(d), force), tol); }});
  t.push_back({5, "state-transfer refuses fourier d=2", [=] {
                 return expect_refusal([=] { state_transfer_pair(4, fourier(2), Seed{1}, 6); });
               }});
  t.push_back({5, "state-transfer --force fails fourier d=2 seeds 1-10 depth 6", [=] {
                 const Hadamard h = fourier(2);
                 Outcome all{true, 1e300, "", false};
                 int failed = 0;
                 for (std::uint64_t s = 1; s <= 10; ++s) {
                   Outcome o = expect_failure(state_transfer_pair(4, h, Seed{s}, 6, force), tol);
                   all.pass = all.pass && o.pass;
                   all.residual = std::min(all.residual, o.residual);
                   failed += o.pass;
                 }
                 all.detail = std::to_string(failed) + "/10 seeds fail";
                 return all;
               }});
  t.push_back({5, "robust-ghz-teleport refuses fourier d=2 with an error", [=] {
                 const Hadamard h = fourier(2);
                 return expect_refusal([=] {
                   teleport_pair(TeleportKind::robust_ghz, 3, h, random_tangle_gate(2, 5, h, Seed{1}));
                 });
               }});
  t.push_back({5, "robust-ghz-teleport --force fails fourier d=2 seeds 1-10 depth 5", [=] {
                 const Hadamard h = fourier(2);
                 Outcome all{true, 1e300, "", false};
                 int failed = 0;
                 for (std::uint64_t s = 1; s <= 10; ++s) {
                   Circuit err = random_tangle_gate(2, 5, h, Seed{s});
                   Outcome o = expect_failure(
                       teleport_pair(TeleportKind::robust_ghz, 3, h, err, force), tol);
                   all.pass = all.pass && o.pass;
                   all.residual = std::min(all.residual, o.residual);
                   failed += o.pass;
                 }
                 all.detail = std::to_string(failed) + "/10 seeds fail";
                 return all;
               }});
  t.push_back({5, "phase encoder without one CZ fails KL", [=] {
                 const std::vector<Hadamard> hs{fourier(2), fourier(2), fourier(2)};
                 const CodeSpec spec = phase_code_spec(hs);
                 KLOptions opts;
                 opts.tol = tol;
                 KLReport r = kl_verify(phase_encoder_gates(hs, 2), spec, opts);
                 int two_site_failures = 0;
                 for (const auto& row : r.rows)
                   if (!row.scalar && row.error.find("⊗") != std::string::npos) ++two_site_failures;
                 Outcome o;
                 o.tolerance_sensitive = false;
                 o.pass = !r.pass && two_site_failures > 0;
                 o.detail = std::to_string(two_site_failures) + " failing 2-site rows";
                 return o;
               }});
  t.push_back({5, "local-equiv refuses n=4",
               [=] { return expect_refusal([=] { local_equiv_pair(4, metaplectic(2)); }); }});
  t.push_back({5, "cluster refuses a non-self-transpose Hadamard", [=] {
                 return expect_refusal([=] {
                   MatrixXc m(2, 2);
                   m << 1, -1, 1, 1;
                   m /= std::sqrt(2.0);
                   cluster_pair(2, hadamard_from_matrix(ComplexMatrix(m), tol));
                 });
               }});
}

void add_codes(std::vector<Task>& t, const SuiteConfig& cfg) {
  for (int d : {2, 3}) {
    t.push_back({6, "phase-code n=3 fourier d=" + std::to_string(d), [=] {
                   CodeSpec s = phase_code_spec({fourier(d), fourier(d), fourier(d)});
                   return kl_outcome(code_encoder(s), s, kl_row_count(s), cfg);
                 }});
  }
  t.push_back({6, "phase-code n=3 d=2 fourier/metaplectic/potts", [=] {
                 CodeSpec s = phase_code_spec({fourier(2), metaplectic(2), potts_by_index(2, 0)});
                 return kl_outcome(code_encoder(s), s, 19, cfg);
               }});
  t.push_back({6, "phase-code n=3 fourier d=2 gate form (19 rows)", [=] {
                 CodeSpec s = phase_code_spec({fourier(2), fourier(2), fourier(2)});
                 return kl_outcome(phase_encoder_gates(s.hadamards), s, 19, cfg);
               }});
  t.push_back({6, "shor-code n=3 fourier d=2 (613 rows)", [=] {
                 CodeSpec s = shor_code_spec({fourier(2), fourier(2), fourier(2)});
                 return kl_outcome(code_encoder(s), s, 613, cfg);
               }});
  t.push_back({6, "ueb-phase-code n=3 pauli d=2 (61 rows)", [=] {
                 CodeSpec s = ueb_phase_code_spec(pauli_ueb(2), 3);
                 return kl_outcome(code_encoder(s), s, 61, cfg);
               }});
  t.push_back({6, "ueb-shor-code n=3 pauli d=2 (9361 rows)", [=] {
                 CodeSpec s = ueb_shor_code_spec(pauli_ueb(2), 3);
                 return kl_outcome(code_encoder(s), s, 9361, cfg);
               }});
}

void add_cross_validation(std::vector<Task>& t, const SuiteConfig& cfg) {
  const double tol = cfg.tolerance;
  const std::uint64_t seed = cfg.seed.value;
  for (int d = 2; d <= 4; ++d)
    t.push_back({7, "random self-transpose hadamards d=" + std::to_string(d) + " x50", [=] {
                   int agree = 0, extended = 0;
                   for (int i = 0; i < 50; ++i) {
                     const MatrixXc h = random_self_transpose_hadamard(
                         d, Seed{seed * 100000 + std::uint64_t(d) * 1000 + std::uint64_t(i)});
                     CalculusReport m = check_extended(h, tol);
                     DiagrammaticReport g = reidemeister_suite(h, tol);
                     agree += m.passes_basic == g.passes_basic &&
                              m.passes_extended == g.passes_extended;
                     extended += m.passes_extended;
                   }
                   Outcome o;
                   o.pass = agree == 50;
                   o.residual = 50 - agree;
                   o.detail = std::to_string(agree) + "/50 agree, " + std::to_string(extended) +
                              " satisfy the extended calculus";
                   return o;
                 }});
}

void add_determinism(std::vector<Task>& t, const SuiteConfig& cfg) {
  t.push_back({8, "rerun is byte-identical (criteria 1, 3, 7)", [=] {
                 SuiteConfig sub = cfg;
                 sub.criteria = {1, 3, 7};
                 const std::string a = run_suite(sub).to_json(false);
                 const std::string b = run_suite(sub).to_json(false);
                 Outcome o;
                 o.tolerance_sensitive = false;
                 o.pass = a == b;
                 o.detail = std::to_string(a.size()) + " bytes, " + (o.pass ? "identical" : "differ");
                 return o;
               }});
}

bool selected(const SuiteConfig& cfg, int criterion) {
  if (cfg.criteria.empty()) return true;
  return std::find(cfg.criteria.begin(), cfg.criteria.end(), criterion) != cfg.criteria.end();
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
  if (!(cfg.tolerance > 0)) throw PreconditionError("suite: tolerance must be positive");
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  std::vector<Task> tasks;
  if (selected(cfg, 1)) add_golden(tasks, cfg);
  if (selected(cfg, 2)) add_classification(tasks, cfg);
  if (selected(cfg, 3)) add_identities(tasks, cfg);
  if (selected(cfg, 4)) add_protocols(tasks, cfg);
  if (selected(cfg, 5)) add_negative(tasks, cfg);
  if (selected(cfg, 6)) add_codes(tasks, cfg);
  if (selected(cfg, 7)) add_cross_validation(tasks, cfg);
  if (selected(cfg, 8)) add_determinism(tasks, cfg);

  SuiteReport report;
  report.config = cfg;
  report.items.resize(tasks.size());
  detail::parallel_for(long(tasks.size()), cfg.workers, [&](long i) {
    const Task& task = tasks[i];
    SuiteItem& item = report.items[i];
    item.criterion = task.criterion;
    item.name = task.name;
    const auto t0 = clock::now();
    try {
      Outcome o = task.run();
      item.pass = o.pass;
      item.residual = o.residual;
      item.detail = o.detail;
      item.tolerance_related = !o.pass && o.tolerance_sensitive &&
                               cfg.tolerance < kDefaultTolerance &&
                               o.residual <= kDefaultTolerance;
    } catch (const std::exception& e) {
      item.pass = false;
      item.detail = std::string("error: ") + e.what();
    }
    item.seconds = std::chrono::duration<double>(clock::now() - t0).count();
  });
  report.pass = true;
  for (const auto& item : report.items) report.pass = report.pass && item.pass;
  report.seconds = std::chrono::duration<double>(clock::now() - start).count();
  return report;
}

std::string SuiteReport::to_json(bool include_timing) const {
  nlohmann::ordered_json j;
  j["schema"] = kSuiteSchema;
  j["config"] = {{"tolerance", config.tolerance},
                 {"seed", config.seed.value},
                 {"wire_cap", config.wire_cap},
                 {"code_wire_cap", config.code_wire_cap}};
  j["items"] = nlohmann::ordered_json::array();
  int passed = 0;
  for (const auto& item : items) {
    nlohmann::ordered_json row;
    row["criterion"] = item.criterion;
    row["name"] = item.name;
    row["pass"] = item.pass;
    row["residual"] = item.residual;
    row["detail"] = item.detail;
    if (!item.pass) row["failure"] = item.tolerance_related ? "tolerance" : "verification";
    j["items"].push_back(row);
    passed += item.pass;
  }
  j["summary"] = {{"items", items.size()}, {"passed", passed}, {"pass", pass}};
  if (include_timing) {
    nlohmann::ordered_json timing;
    timing["total_seconds"] = seconds;
    nlohmann::ordered_json per = nlohmann::ordered_json::array();
    for (const auto& item : items) per.push_back({{"name", item.name}, {"seconds", item.seconds}});
    timing["items"] = per;
    j["timing"] = timing;
  }
  return j.dump(2) + "\n";
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  int passed = 0;
  for (const auto& item : items) {
    os << (item.pass ? "[PASS] " : "[FAIL] ") << item.criterion << "  " << item.name << "  "
       << item.detail;
    if (item.tolerance_related) os << "  (tolerance-related)";
    char buf[64];
    std::snprintf(buf, sizeof buf, "  residual %.2e  %.3f s", item.residual, item.seconds);
    os << buf << "\n";
    passed += item.pass;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d/%zu items pass, %.2f s wall clock\n", passed, items.size(),
                seconds);
  os << buf;
  return os.str();
}

}  // namespace tanglelab
