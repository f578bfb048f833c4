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

#include "tanglelab/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace tanglelab {

namespace {

struct NamedProtocol {
  ProtocolId id;
  const char* name;
};

constexpr NamedProtocol kProtocols[] = {
    {ProtocolId::ghz_create, "ghz-create"},
    {ProtocolId::cluster_create, "cluster-create"},
    {ProtocolId::local_equiv_2, "local-equiv-2"},
    {ProtocolId::local_equiv_3, "local-equiv-3"},
    {ProtocolId::cut, "cut"},
    {ProtocolId::splice, "splice"},
    {ProtocolId::state_transfer, "state-transfer"},
    {ProtocolId::mb_ghz_teleport, "mb-ghz-teleport"},
    {ProtocolId::mb_cluster_teleport, "mb-cluster-teleport"},
    {ProtocolId::robust_ghz_teleport, "robust-ghz-teleport"},
    {ProtocolId::nonlocal_controlled_u, "nonlocal-controlled-u"},
    {ProtocolId::phase_code, "phase-code"},
    {ProtocolId::shor_code, "shor-code"},
    {ProtocolId::ueb_phase_code, "ueb-phase-code"},
    {ProtocolId::ueb_shor_code, "ueb-shor-code"},
};

}  // namespace

std::string protocol_name(ProtocolId id) {
  for (const auto& p : kProtocols)
    if (p.id == id) return p.name;
  return "?";
}

std::optional<ProtocolId> protocol_from_name(const std::string& name) {
  std::string norm = name;
  std::replace(norm.begin(), norm.end(), '_', '-');
  for (const auto& p : kProtocols)
    if (norm == p.name) return p.id;
  return std::nullopt;
}

std::vector<ProtocolId> all_protocols() {
  std::vector<ProtocolId> out;
  for (const auto& p : kProtocols) out.push_back(p.id);
  return out;
}

bool is_code(ProtocolId id) {
  return id == ProtocolId::phase_code || id == ProtocolId::shor_code ||
         id == ProtocolId::ueb_phase_code || id == ProtocolId::ueb_shor_code;
}

void require_basic(const Hadamard& h, const std::string& who, const BuildOptions& opts) {
  if (!opts.enforce) return;
  CalculusReport r = check_basic(h.H(), opts.tol);
  if (!r.passes_basic)
    throw PreconditionError(who + " requires the basic calculus (a self-transpose Hadamard); " +
                            h.provenance().label() + " does not satisfy it");
}

void require_extended(const Hadamard& h, const std::string& who, const BuildOptions& opts) {
  if (!opts.enforce) return;
  CalculusReport r = check_extended(h.H(), opts.tol);
  if (!r.passes_extended)
    throw PreconditionError(who + " requires the extended calculus (shaded RI and RIII); " +
                            h.provenance().label() + " does not satisfy it");
}

Circuit ghz_circuit(int n, const Hadamard& h) {
  if (n < 1) throw PreconditionError("ghz: n must be at least 1");
  Circuit c(h.dim(), "ghz" + std::to_string(n));
  std::vector<WireId> q;
  for (int k = 0; k < n; ++k) q.push_back(c.prep());
  for (int k = 1; k < n; ++k) {
    c.cz(q[k - 1], q[k], h);
    c.had(q[k], h);
  }
  c.set_outputs(q);
  return c;
}

Circuit ghz_spec(int d, int n) {
  if (n < 1) throw PreconditionError("ghz: n must be at least 1");
  Circuit c(d, "ghz" + std::to_string(n) + "_spec");
  std::vector<WireId> q{c.prep()};
  for (int k = 1; k < n; ++k) q.push_back(c.copy(q[0]));
  c.set_outputs(q);
  return c;
}

ProtocolPair ghz_pair(int n, const Hadamard& h) {
  if (n < 2) throw PreconditionError("ghz: n must be at least 2");
  return {ghz_circuit(n, h), ghz_spec(h.dim(), n)};
}

Circuit cluster_circuit(int n, const Hadamard& h) {
  Circuit c(h.dim(), "cluster" + std::to_string(n));
  std::vector<WireId> q;
  for (int k = 0; k < n; ++k) q.push_back(c.prep());
  for (int k = 0; k + 1 < n; ++k) c.cz(q[k], q[k + 1], h);
  c.set_outputs(q);
  return c;
}

Circuit cluster_spec(int n, const Hadamard& h) {
  const int d = h.dim();
  long size = 1;
  for (int k = 0; k < n; ++k) size *= d;
  MatrixXc state(size, 1);
  std::vector<int> a(n, 0);
  for (long idx = 0; idx < size; ++idx) {
    long rem = idx;
    for (int k = n - 1; k >= 0; --k) {
      a[k] = int(rem % d);
      rem /= d;
    }
    Complex v = 1.0;
    for (int k = 0; k + 1 < n; ++k) v *= std::conj(h.H()(a[k], a[k + 1]));
    state(idx, 0) = v;
  }
  Circuit c(d, "cluster" + std::to_string(n) + "_spec");
  c.set_outputs(c.box({}, n, state));
  return c;
}

ProtocolPair cluster_pair(int n, const Hadamard& h, const BuildOptions& opts) {
  if (n < 2) throw PreconditionError("cluster: n must be at least 2");
  require_basic(h, "cluster-create", opts);
  return {cluster_circuit(n, h), cluster_spec(n, h)};
}

ProtocolPair local_equiv_pair(int n, const Hadamard& h, const BuildOptions& opts) {
  if (n != 2 && n != 3)
    throw PreconditionError("local-equiv: cluster and GHZ states are locally equivalent only for "
                            "2 or 3 parties, got n = " + std::to_string(n));
  require_basic(h, "local-equiv", opts);
  Circuit c = cluster_circuit(n, h);
  c.set_name("local_equiv" + std::to_string(n));
  std::vector<WireId> q = c.live();
  c.had(q[0], h);
  if (n == 3) c.had(q[2], h);
  c.set_outputs(q);
  return {c, ghz_spec(h.dim(), n)};
}

ProtocolPair cut_pair(const Hadamard& h, const BuildOptions& opts) {
  require_basic(h, "cut", opts);
  Circuit c = cluster_circuit(5, h);
  c.set_name("cut");
  std::vector<WireId> q = c.live();
  c.cz(q[1], q[2], h, true);
  c.cz(q[2], q[3], h, true);
  c.set_outputs(q);

  Circuit s(h.dim(), "cut_spec");
  std::vector<WireId> p;
  for (int k = 0; k < 5; ++k) p.push_back(s.prep());
  s.cz(p[0], p[1], h);
  s.cz(p[3], p[4], h);
  s.set_outputs(p);
  return {c, s};
}

ProtocolPair splice_pair(const Hadamard& h, const BuildOptions& opts) {
  require_basic(h, "splice", opts);
  require_extended(h, "splice", opts);
  Circuit c = cluster_circuit(5, h);
  c.set_name("splice");
  std::vector<WireId> q = c.live();
  c.had(q[2], h);
  c.cz(q[1], q[2], h);
  c.cz(q[2], q[3], h);
  c.set_outputs(q);

  Circuit s(h.dim(), "splice_spec");
  std::vector<WireId> p;
  for (int k = 0; k < 5; ++k) p.push_back(s.prep());
  s.cz(p[0], p[1], h);
  s.cz(p[1], p[3], h);
  s.cz(p[3], p[4], h);
  s.set_outputs(p);
  return {c, s};
}

ProtocolPair state_transfer_pair(int n, const Hadamard& h, const std::optional<Circuit>& error,
                                 const BuildOptions& opts) {
  if (n < 1) throw PreconditionError("state-transfer: n must be at least 1");
  require_basic(h, "state-transfer", opts);
  require_extended(h, "state-transfer", opts);
  if (error && (int(error->inputs().size()) != n || int(error->outputs().size()) != n))
    throw DimensionError("state-transfer: the error must act on the " + std::to_string(n) +
                         " chain qudits");

  Circuit c(h.dim(), "state_transfer");
  std::vector<WireId> w{c.add_input()};
  Circuit chain = cluster_circuit(n, h);
  std::vector<WireId> cw = c.append(chain, {});
  if (error) cw = c.append(*error, cw);
  w.insert(w.end(), cw.begin(), cw.end());
  for (int k = 1; k <= n; ++k) {
    c.cz(w[k - 1], w[k], h);
    c.had(w[k - 1], h);
    c.had(w[k], h);
    c.cz(w[k - 1], w[k], h);
  }
  c.set_outputs(w);

  Circuit s(h.dim(), "state_transfer_spec");
  WireId t = s.add_input();
  std::vector<WireId> sw = s.append(chain, {});
  if (error) sw = s.append(*error, sw);
  sw.push_back(t);
  s.set_outputs(sw);
  return {c, s};
}

ProtocolPair state_transfer_pair(int n, const Hadamard& h, Seed error_seed, int error_depth,
                                 const BuildOptions& opts) {
  return state_transfer_pair(n, h, random_tangle_gate(n, error_depth, h, error_seed), opts);
}

Circuit reverse_shading(const Circuit& t) {
  Circuit r(t.dim(), t.name() + "_reversed");
  std::vector<WireId> s = r.add_inputs(int(t.inputs().size()) + 1);
  auto index = [&](WireId w) {
    auto it = std::find(t.inputs().begin(), t.inputs().end(), w);
    if (it == t.inputs().end())
      throw PreconditionError("reverse_shading: ops must act on the input wires");
    return int(it - t.inputs().begin());
  };
  for (const IrOp& op : t.ops()) {
    if (op.kind == OpKind::had) {
      const int i = index(op.ins[0]);
      r.cz(s[i], s[i + 1], op.matrix, op.dagger);
    } else if (op.kind == OpKind::cz) {
      const int i = index(op.ins[0]);
      const int j = index(op.ins[1]);
      if (std::abs(i - j) != 1)
        throw PreconditionError("reverse_shading: CZ must act on adjacent wires");
      r.had(s[std::max(i, j)], op.matrix, op.dagger);
    } else {
      throw PreconditionError(std::string("reverse_shading: unsupported op ") + op_name(op.kind));
    }
  }
  r.set_outputs(s);
  return r;
}

namespace {

ProtocolPair teleport_spec_only(const std::string& name, int d, int dits,
                                const std::optional<Circuit>& error) {
  Circuit s(d, name + "_spec");
  WireId psi = s.add_input();
  std::vector<WireId> out;
  if (error) {
    out.push_back(s.prep());
    std::vector<WireId> q;
    for (int k = 0; k < int(error->inputs().size()); ++k) q.push_back(s.prep());
    q = s.append(*error, q);
    out.insert(out.end(), q.begin(), q.end());
  } else {
    for (int k = 0; k < dits; ++k) out.push_back(s.prep());
  }
  out.push_back(psi);
  s.set_outputs(out);
  return {Circuit(d), s};
}

}  // namespace

ProtocolPair teleport_pair(TeleportKind kind, int n, const Hadamard& h,
                           const std::optional<Circuit>& error, const BuildOptions& opts) {
  if (n < 2) throw PreconditionError("teleport: at least 2 agents are required");
  const int d = h.dim();
  const char* name = kind == TeleportKind::mb_ghz       ? "mb-ghz-teleport"
                     : kind == TeleportKind::mb_cluster ? "mb-cluster-teleport"
                                                        : "robust-ghz-teleport";
  require_basic(h, name, opts);
  if (error && kind != TeleportKind::robust_ghz)
    throw PreconditionError(std::string(name) + " does not take an error");
  if (kind == TeleportKind::robust_ghz && error) {
    require_extended(h, name, opts);
    if (int(error->inputs().size()) != n - 1 || int(error->outputs().size()) != n - 1)
      throw DimensionError("robust-ghz-teleport: the error must act on n-1 = " +
                           std::to_string(n - 1) + " wires");
  }

  Circuit c(d, name);
  WireId psi = c.add_input();
  std::vector<WireId> share;
  if (kind == TeleportKind::mb_cluster) {
    share = c.append(cluster_circuit(n, h), {});
  } else {
    share = c.append(ghz_spec(d, n), {});
  }
  if (error) share = c.append(reverse_shading(*error), share);
  const WireId alice = share.front();
  const WireId charlie = share.back();

  c.cz(psi, alice, h);
  c.had(psi, h);
  c.had(alice, h);
  switch (kind) {
    case TeleportKind::mb_ghz:
      for (int j = 1; j + 1 < n; ++j) c.had(share[j], h);
      for (int j = 1; j + 1 < n; ++j) c.cz(share[j], charlie, h);
      c.cz(alice, charlie, h);
      c.had(charlie, h);
      c.cz(psi, charlie, h);
      break;
    case TeleportKind::mb_cluster:
      for (int j = 1; j + 1 < n; ++j) c.had(share[j], h);
      c.had(charlie, h);
      for (int j = n - 2; j >= 0; --j) {
        c.cz(share[j], charlie, h);
        c.had(charlie, h);
      }
      c.cz(psi, charlie, h);
      break;
    case TeleportKind::robust_ghz:
      for (int j = 1; j + 1 < n; ++j) {
        c.cz(share[j - 1], share[j], h);
        c.had(share[j], h);
      }
      c.cz(share[n - 2], charlie, h);
      c.had(charlie, h);
      c.cz(psi, charlie, h);
      break;
  }
  std::vector<WireId> outs{psi};
  outs.insert(outs.end(), share.begin(), share.end());
  c.set_outputs(outs);

  ProtocolPair p = teleport_spec_only(name, d, n, error);
  p.circuit = std::move(c);
  return p;
}

MatrixXc controlled_family(const std::vector<MatrixXc>& u) {
  const int d = int(u.size());
  MatrixXc c = MatrixXc::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) c(x * d + i, y * d + i) = u[i](x, y);
  return c;
}

ProtocolPair nonlocal_cu_pair(const Hadamard& h, const std::vector<MatrixXc>& unitaries,
                              const BuildOptions& opts) {
  const int d = h.dim();
  if (int(unitaries.size()) != d)
    throw PreconditionError("nonlocal-controlled-u: expected " + std::to_string(d) +
                            " unitaries, got " + std::to_string(unitaries.size()));
  for (const auto& u : unitaries) {
    if (u.rows() != d || u.cols() != d)
      throw DimensionError("nonlocal-controlled-u: unitaries must be d x d");
    if (unitarity_residual(u) > opts.tol)
      throw PreconditionError("nonlocal-controlled-u: U_i must be unitary");
  }
  require_basic(h, "nonlocal-controlled-u", opts);
  const MatrixXc cu = controlled_family(unitaries);

  Circuit c(d, "nonlocal_cu");
  auto in = c.add_inputs(2);
  const WireId a = in[0], b = in[1];
  WireId m = c.prep();
  c.cz(b, m, h);
  c.had(m, h);
  c.gate({a, m}, cu);
  c.had(m, h);
  c.cz(m, b, h);
  c.set_outputs({a, m, b});

  Circuit s(d, "nonlocal_cu_spec");
  auto sin = s.add_inputs(2);
  s.swap(sin[0], sin[1]);
  s.gate({sin[1], sin[0]}, cu);
  s.swap(sin[0], sin[1]);
  WireId dit = s.prep();
  s.set_outputs({sin[0], dit, sin[1]});
  return {c, s};
}

namespace {

double unit_angle(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53 * 2.0 * std::numbers::pi;
}

}  // namespace

MatrixXc random_self_transpose_hadamard(int d, Seed seed) {
  std::mt19937_64 rng(seed.value);
  std::vector<MatrixXc> bases{fourier(d).H(), metaplectic(d).H(),
                              metaplectic(d, Branch::negated).H()};
  if (d >= 2 && d <= 4)
    for (const Complex& l : potts_lambdas(d)) bases.push_back(potts(d, l).H());
  if (d == 4) {
    ComplexMatrix f2 = fourier(2).matrix();
    bases.push_back(kron(f2, f2).matrix());
  }
  MatrixXc h = bases[rng() % bases.size()];

  std::vector<int> perm(d);
  for (int i = 0; i < d; ++i) perm[i] = i;
  for (int i = d - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
  MatrixXc p = MatrixXc::Zero(d, d);
  for (int i = 0; i < d; ++i) p(perm[i], i) = 1.0;

  // Half the samples keep D = I and a real global phase, which preserves the
  // extended calculus for extended bases.
  Eigen::VectorXcd phases = Eigen::VectorXcd::Ones(d);
  Complex global = (rng() % 2) ? 1.0 : -1.0;
  if (rng() % 2) {
    for (int i = 0; i < d; ++i) phases(i) = std::polar(1.0, unit_angle(rng));
    global = std::polar(1.0, unit_angle(rng));
  }
  return global * p * phases.asDiagonal() * h * phases.asDiagonal() * p.transpose();
}

}  // namespace tanglelab
