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

#include "tanglelab/ir.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

namespace tanglelab {

const char* op_name(OpKind kind) {
  switch (kind) {
    case OpKind::prep: return "prep";
    case OpKind::prep_effect: return "prep_eff";
    case OpKind::bell: return "bell";
    case OpKind::bell_effect: return "bell_eff";
    case OpKind::copy: return "copy";
    case OpKind::merge: return "merge";
    case OpKind::had: return "had";
    case OpKind::cz: return "cz";
    case OpKind::swap: return "swap";
    case OpKind::box: return "gate";
    case OpKind::diag: return "diag";
  }
  return "?";
}

Circuit::Circuit(int dim, std::string name) : dim_(dim), name_(std::move(name)) {
  if (dim < 1) throw DimensionError("circuit dimension must be positive");
}

WireId Circuit::fresh() {
  WireId w = next_++;
  live_.push_back(w);
  return w;
}

void Circuit::require_live(WireId w, const char* what) const {
  if (std::find(live_.begin(), live_.end(), w) == live_.end())
    throw DimensionError(std::string(what) + ": wire " + std::to_string(w) + " is not live");
}

void Circuit::retire(WireId w) { live_.erase(std::find(live_.begin(), live_.end(), w)); }

void Circuit::push(IrOp op) {
  outputs_set_ = false;
  ops_.push_back(std::move(op));
}

WireId Circuit::add_input() {
  if (!ops_.empty()) throw DimensionError("inputs must be declared before any op");
  WireId w = fresh();
  inputs_.push_back(w);
  return w;
}

std::vector<WireId> Circuit::add_inputs(int k) {
  std::vector<WireId> ws;
  for (int i = 0; i < k; ++i) ws.push_back(add_input());
  return ws;
}

WireId Circuit::prep() {
  WireId w = fresh();
  push({OpKind::prep, {}, {w}, false, {}});
  return w;
}

void Circuit::prep_effect(WireId w) {
  require_live(w, "prep_eff");
  retire(w);
  push({OpKind::prep_effect, {w}, {}, false, {}});
}

std::pair<WireId, WireId> Circuit::bell() {
  WireId a = fresh();
  WireId b = fresh();
  push({OpKind::bell, {}, {a, b}, false, {}});
  return {a, b};
}

void Circuit::bell_effect(WireId a, WireId b) {
  require_live(a, "bell_eff");
  require_live(b, "bell_eff");
  if (a == b) throw DimensionError("bell_eff: wires must differ");
  retire(a);
  retire(b);
  push({OpKind::bell_effect, {a, b}, {}, false, {}});
}

WireId Circuit::copy(WireId w) {
  require_live(w, "copy");
  WireId n = fresh();
  push({OpKind::copy, {w}, {w, n}, false, {}});
  return n;
}

void Circuit::merge(WireId keep, WireId other) {
  require_live(keep, "merge");
  require_live(other, "merge");
  if (keep == other) throw DimensionError("merge: wires must differ");
  retire(other);
  push({OpKind::merge, {keep, other}, {keep}, false, {}});
}

void Circuit::had(WireId w, const MatrixXc& h, bool dagger) {
  require_live(w, "had");
  if (h.rows() != dim_ || h.cols() != dim_) throw DimensionError("had: matrix is not d x d");
  push({OpKind::had, {w}, {w}, dagger, h});
}

void Circuit::cz(WireId a, WireId b, const MatrixXc& h, bool dagger) {
  require_live(a, "cz");
  require_live(b, "cz");
  if (a == b) throw DimensionError("cz: wires must differ");
  if (h.rows() != dim_ || h.cols() != dim_) throw DimensionError("cz: matrix is not d x d");
  push({OpKind::cz, {a, b}, {a, b}, dagger, h});
}

void Circuit::swap(WireId a, WireId b) {
  require_live(a, "swap");
  require_live(b, "swap");
  if (a == b) throw DimensionError("swap: wires must differ");
  push({OpKind::swap, {a, b}, {a, b}, false, {}});
}

void Circuit::gate(const std::vector<WireId>& wires, const MatrixXc& m) {
  box(wires, int(wires.size()), m);
}

std::vector<WireId> Circuit::box(const std::vector<WireId>& ins, int n_out, const MatrixXc& m) {
  for (size_t i = 0; i < ins.size(); ++i) {
    require_live(ins[i], "gate");
    for (size_t j = 0; j < i; ++j)
      if (ins[i] == ins[j]) throw DimensionError("gate: repeated wire");
  }
  const long expect_rows = long(std::pow(dim_, n_out));
  const long expect_cols = long(std::pow(dim_, ins.size()));
  if (m.rows() != expect_rows || m.cols() != expect_cols)
    throw DimensionError("gate: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " + std::to_string(expect_rows) +
                         "x" + std::to_string(expect_cols));
  std::vector<WireId> outs;
  const int reuse = std::min<int>(n_out, int(ins.size()));
  for (int i = 0; i < reuse; ++i) outs.push_back(ins[i]);
  for (size_t i = reuse; i < ins.size(); ++i) retire(ins[i]);
  for (int i = reuse; i < n_out; ++i) outs.push_back(fresh());
  push({OpKind::box, ins, outs, false, m});
  return outs;
}

void Circuit::diag(WireId w, const Eigen::VectorXcd& entries) {
  require_live(w, "diag");
  if (entries.size() != dim_) throw DimensionError("diag: expected d entries");
  push({OpKind::diag, {w}, {w}, false, MatrixXc(entries)});
}

std::vector<WireId> Circuit::append(const Circuit& other, const std::vector<WireId>& feed) {
  if (other.dim() != dim_) throw DimensionError("append: dimensions differ");
  if (feed.size() != other.inputs().size())
    throw DimensionError("append: expected " + std::to_string(other.inputs().size()) +
                         " feed wires");
  std::unordered_map<WireId, WireId> map;
  for (size_t i = 0; i < feed.size(); ++i) {
    require_live(feed[i], "append");
    map[other.inputs()[i]] = feed[i];
  }
  auto mapped = [&](WireId w) {
    auto it = map.find(w);
    if (it == map.end()) throw DimensionError("append: unmapped wire");
    return it->second;
  };
  for (const IrOp& op : other.ops()) {
    std::vector<WireId> ins;
    for (WireId w : op.ins) ins.push_back(mapped(w));
    switch (op.kind) {
      case OpKind::prep: map[op.outs[0]] = prep(); break;
      case OpKind::prep_effect: prep_effect(ins[0]); break;
      case OpKind::bell: {
        auto [a, b] = bell();
        map[op.outs[0]] = a;
        map[op.outs[1]] = b;
        break;
      }
      case OpKind::bell_effect: bell_effect(ins[0], ins[1]); break;
      case OpKind::copy: map[op.outs[1]] = copy(ins[0]); break;
      case OpKind::merge: merge(ins[0], ins[1]); break;
      case OpKind::had: had(ins[0], op.matrix, op.dagger); break;
      case OpKind::cz: cz(ins[0], ins[1], op.matrix, op.dagger); break;
      case OpKind::swap: swap(ins[0], ins[1]); break;
      case OpKind::box: {
        auto outs = box(ins, int(op.outs.size()), op.matrix);
        for (size_t i = 0; i < outs.size(); ++i) map[op.outs[i]] = outs[i];
        break;
      }
      case OpKind::diag: diag(ins[0], op.matrix.col(0)); break;
    }
  }
  std::vector<WireId> outs;
  for (WireId w : other.outputs()) outs.push_back(mapped(w));
  return outs;
}

void Circuit::set_outputs(std::vector<WireId> outs) {
  outputs_ = std::move(outs);
  outputs_set_ = true;
  validate();
}

void Circuit::validate() const {
  if (!outputs_set_)
    throw DimensionError("circuit '" + name_ + "': outputs not declared after last op");
  std::vector<WireId> a = outputs_, b = live_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end())
    throw DimensionError("circuit '" + name_ + "': repeated output wire");
  if (a != b)
    throw DimensionError("circuit '" + name_ + "': outputs do not match the " +
                         std::to_string(live_.size()) + " live wires");
}

MatrixXc op_matrix(const IrOp& op, int d) {
  const double sd = std::sqrt(double(d));
  switch (op.kind) {
    case OpKind::prep: return MatrixXc::Ones(d, 1);
    case OpKind::prep_effect: return MatrixXc::Ones(1, d);
    case OpKind::bell: {
      MatrixXc m = MatrixXc::Zero(d * d, 1);
      for (int i = 0; i < d; ++i) m(i * d + i, 0) = 1.0;
      return m;
    }
    case OpKind::bell_effect: {
      MatrixXc m = MatrixXc::Zero(1, d * d);
      for (int i = 0; i < d; ++i) m(0, i * d + i) = 1.0;
      return m;
    }
    case OpKind::copy: {
      MatrixXc m = MatrixXc::Zero(d * d, d);
      for (int s = 0; s < d; ++s) m(s * d + s, s) = 1.0;
      return m;
    }
    case OpKind::merge: {
      MatrixXc m = MatrixXc::Zero(d, d * d);
      for (int s = 0; s < d; ++s) m(s, s * d + s) = 1.0;
      return m;
    }
    case OpKind::had: return op.dagger ? MatrixXc(op.matrix.adjoint()) : op.matrix;
    case OpKind::cz: {
      MatrixXc m = MatrixXc::Zero(d * d, d * d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          Complex h = sd * op.matrix(i, j);
          m(i * d + j, i * d + j) = op.dagger ? h : std::conj(h);
        }
      return m;
    }
    case OpKind::swap: return permutation_map({1, 0}, {d, d}).matrix();
    case OpKind::box: return op.matrix;
    case OpKind::diag: return MatrixXc(op.matrix.col(0).asDiagonal());
  }
  return {};
}

namespace {

long ipow(int d, size_t k) {
  long r = 1;
  for (size_t i = 0; i < k; ++i) r *= d;
  return r;
}

// Offsets of all index combinations of the given positions, first position
// most significant, in a register of n wires.
std::vector<long> offsets(const std::vector<int>& positions, int n, int d) {
  std::vector<long> stride(n, 1);
  for (int p = n - 2; p >= 0; --p) stride[p] = stride[p + 1] * d;
  std::vector<long> out{0};
  for (int p : positions) {
    std::vector<long> next;
    next.reserve(out.size() * d);
    for (long b : out)
      for (int v = 0; v < d; ++v) next.push_back(b + v * stride[p]);
    out.swap(next);
  }
  return out;
}

struct State {
  MatrixXc m;
  std::vector<WireId> order;
};

int position(const std::vector<WireId>& order, WireId w) {
  auto it = std::find(order.begin(), order.end(), w);
  if (it == order.end()) throw EvaluationError("wire " + std::to_string(w) + " not in state");
  return int(it - order.begin());
}

void apply(State& s, const std::vector<WireId>& ins, const std::vector<WireId>& outs,
           const MatrixXc& local, int d, long cap) {
  const int n = int(s.order.size());
  std::vector<int> in_pos;
  for (WireId w : ins) in_pos.push_back(position(s.order, w));
  std::vector<int> rest_pos;
  std::vector<WireId> new_order;
  for (int p = 0; p < n; ++p)
    if (std::find(in_pos.begin(), in_pos.end(), p) == in_pos.end()) {
      rest_pos.push_back(p);
      new_order.push_back(s.order[p]);
    }
  new_order.insert(new_order.end(), outs.begin(), outs.end());

  const long out_local = ipow(d, outs.size());
  const std::vector<long> base = offsets(rest_pos, n, d);
  const std::vector<long> toff = offsets(in_pos, n, d);
  const long n_rest = long(base.size());
  const long new_rows = n_rest * out_local;
  if (new_rows > cap)
    throw EvaluationError("state dimension " + std::to_string(new_rows) +
                          " exceeds the wire cap " + std::to_string(cap));

  MatrixXc next(new_rows, s.m.cols());
  MatrixXc gathered(toff.size(), n_rest);
  for (Eigen::Index c = 0; c < s.m.cols(); ++c) {
    for (long r = 0; r < n_rest; ++r)
      for (size_t t = 0; t < toff.size(); ++t) gathered(t, r) = s.m(base[r] + toff[t], c);
    Eigen::Map<MatrixXc>(next.col(c).data(), out_local, n_rest).noalias() = local * gathered;
  }
  s.m.swap(next);
  s.order.swap(new_order);
}

void reorder(State& s, const std::vector<WireId>& target, int d) {
  if (s.order == target) return;
  std::vector<int> pos;
  for (WireId w : target) pos.push_back(position(s.order, w));
  const std::vector<long> src = offsets(pos, int(s.order.size()), d);
  MatrixXc next(s.m.rows(), s.m.cols());
  for (size_t r = 0; r < src.size(); ++r) next.row(r) = s.m.row(src[r]);
  s.m.swap(next);
  s.order = target;
}

}  // namespace

ComplexMatrix evaluate(const Circuit& c, const EvalOptions& opts) {
  c.validate();
  const int d = c.dim();
  State s;
  const long in_dim = ipow(d, c.inputs().size());
  if (in_dim > opts.max_state_dim)
    throw EvaluationError("input dimension " + std::to_string(in_dim) + " exceeds the wire cap " +
                          std::to_string(opts.max_state_dim));
  s.m = MatrixXc::Identity(in_dim, in_dim);
  s.order = c.inputs();
  for (const IrOp& op : c.ops()) apply(s, op.ins, op.outs, op_matrix(op, d), d, opts.max_state_dim);
  reorder(s, c.outputs(), d);
  return ComplexMatrix(std::move(s.m), Dims(c.outputs().size(), d), Dims(c.inputs().size(), d));
}

Verdict compare_maps(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.out_dims() != b.out_dims() || a.in_dims() != b.in_dims())
    throw DimensionError("boundary mismatch: maps have different input/output signatures");
  Verdict v;
  Proportionality p = proportionality(a.matrix(), b.matrix(), tol);
  v.residual = p.residual;
  v.scalar = proportional_equal(a, b, tol);
  v.equal = v.scalar.has_value();
  return v;
}

Verdict verify_pair(const Circuit& circuit, const Circuit& spec, double tol,
                    const EvalOptions& opts) {
  if (circuit.dim() != spec.dim() || circuit.inputs().size() != spec.inputs().size() ||
      circuit.outputs().size() != spec.outputs().size())
    throw DimensionError("boundary mismatch: circuit has " +
                         std::to_string(circuit.inputs().size()) + " -> " +
                         std::to_string(circuit.outputs().size()) + " wires, spec has " +
                         std::to_string(spec.inputs().size()) + " -> " +
                         std::to_string(spec.outputs().size()));
  return compare_maps(evaluate(circuit, opts), evaluate(spec, opts), tol);
}

Circuit random_tangle_gate(int wires, int depth, const Hadamard& h, Seed seed) {
  if (wires < 1) throw PreconditionError("random_tangle_gate: wires must be positive");
  Circuit c(h.dim(), "tangle_gate");
  auto ws = c.add_inputs(wires);
  std::mt19937_64 rng(seed.value);
  for (int i = 0; i < depth; ++i) {
    const int kinds = wires == 1 ? 2 : 4;
    const int kind = int(rng() % kinds);
    if (kind < 2) {
      c.had(ws[rng() % wires], h, kind == 1);
    } else {
      const int w = int(rng() % (wires - 1));
      c.cz(ws[w], ws[w + 1], h, kind == 3);
    }
  }
  c.set_outputs(ws);
  return c;
}

namespace {

bool exact(const Verdict& v, double tol) {
  return v.equal && std::abs(*v.scalar - Complex(1.0)) <= tol;
}

Circuit identity_circuit(int d, int wires) {
  Circuit c(d, "identity");
  c.set_outputs(c.add_inputs(wires));
  return c;
}

// Crossing turned on its side: a copy of B, the hourglass on it, merged into A.
void rotated_crossing(Circuit& c, WireId a, WireId b, const MatrixXc& h, bool dagger,
                      bool right) {
  if (right) {
    WireId t = c.copy(b);
    c.had(t, h, dagger);
    c.merge(a, t);
  } else {
    WireId t = c.copy(a);
    c.had(t, h, dagger);
    c.merge(b, t);
  }
}

}  // namespace

DiagrammaticReport reidemeister_suite(const MatrixXc& h, double tol) {
  DiagrammaticReport rep;
  const int d = int(h.rows());
  auto add = [&](std::string name, const Circuit& lhs, const Circuit& rhs, bool need_exact) {
    MoveResult m;
    m.name = std::move(name);
    m.verdict = verify_pair(lhs, rhs, tol);
    m.holds = need_exact ? exact(m.verdict, tol) : m.verdict.equal;
    rep.moves.push_back(m);
    return m.holds;
  };
  const Circuit id1 = identity_circuit(d, 1);
  const Circuit id2 = identity_circuit(d, 2);

  Circuit bowtie_under(d, "bowtie_under");
  {
    auto w = bowtie_under.add_inputs(2);
    bowtie_under.cz(w[0], w[1], h, true);
    bowtie_under.set_outputs(w);
  }
  bool basic = true;
  for (bool right : {true, false}) {
    Circuit c(d, "rotated");
    auto w = c.add_inputs(2);
    rotated_crossing(c, w[0], w[1], h, false, right);
    c.set_outputs(w);
    basic &= add(right ? "a:rotated-right" : "a:rotated-left", c, bowtie_under, false);
  }
  for (bool first_dagger : {false, true}) {
    Circuit c(d, "hourglass_rii");
    WireId w = c.add_input();
    c.had(w, h, first_dagger);
    c.had(w, h, !first_dagger);
    c.set_outputs({w});
    basic &= add(first_dagger ? "b:hourglass-under-over" : "b:hourglass-over-under", c, id1, true);
  }
  for (bool first_dagger : {false, true}) {
    Circuit c(d, "bowtie_rii");
    auto w = c.add_inputs(2);
    c.cz(w[0], w[1], h, first_dagger);
    c.cz(w[0], w[1], h, !first_dagger);
    c.set_outputs(w);
    basic &= add(first_dagger ? "c:bowtie-under-over" : "c:bowtie-over-under", c, id2, true);
  }
  for (bool first_dagger : {false, true}) {
    Circuit c(d, "sideways_rii");
    auto w = c.add_inputs(2);
    rotated_crossing(c, w[0], w[1], h, first_dagger, true);
    rotated_crossing(c, w[0], w[1], h, !first_dagger, true);
    c.set_outputs(w);
    basic &= add(first_dagger ? "d:sideways-under-over" : "d:sideways-over-under", c, id2, false);
  }
  rep.passes_basic = basic;

  bool extended = basic;
  for (bool dagger : {false, true}) {
    Circuit c(d, "ri_kink");
    WireId a = c.add_input();
    WireId b = c.prep();
    c.cz(a, b, h, dagger);
    c.prep_effect(b);
    c.set_outputs({a});
    extended &= add(dagger ? "e:kink-under" : "e:kink-over", c, id1, false);
  }
  for (bool dagger : {false, true}) {
    Circuit lhs(d, "riii_lhs");
    auto w = lhs.add_inputs(2);
    lhs.had(w[0], h, dagger);
    lhs.cz(w[0], w[1], h, dagger);
    lhs.had(w[0], h, dagger);
    lhs.set_outputs(w);
    Circuit rhs(d, "riii_rhs");
    auto v = rhs.add_inputs(2);
    rhs.cz(v[0], v[1], h, dagger);
    rhs.had(v[0], h, dagger);
    rhs.cz(v[0], v[1], h, dagger);
    rhs.set_outputs(v);
    extended &= add(dagger ? "f:riii-under" : "f:riii-over", lhs, rhs, true);
  }
  rep.passes_extended = extended;
  return rep;
}

}  // namespace tanglelab
