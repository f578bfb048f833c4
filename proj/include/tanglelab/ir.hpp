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

#include "tanglelab/hadamard.hpp"
#include "tanglelab/linalg.hpp"

namespace tanglelab {

using WireId = int;

enum class OpKind {
  prep,         // 0 -> 1, sum_i |i>
  prep_effect,  // 1 -> 0, sum_i <i|
  bell,         // 0 -> 2, sum_i |ii>
  bell_effect,  // 2 -> 0, sum_i <ii|
  copy,         // 1 -> 2, |s> -> |ss>
  merge,        // 2 -> 1, sum_s |s><ss|
  had,          // 1 -> 1, H (dagger: H^dagger)
  cz,           // 2 -> 2, diag conj(h_ij) (dagger: diag h_ij), h = sqrt(d) H
  swap,         // 2 -> 2
  box,          // k -> m, arbitrary matrix
  diag,         // 1 -> 1, diagonal matrix
};

const char* op_name(OpKind kind);

struct IrOp {
  OpKind kind;
  std::vector<WireId> ins;
  std::vector<WireId> outs;
  bool dagger = false;
  MatrixXc matrix;  // H for had/cz, the box matrix, or the diagonal as a column
};

// A tensor network over d-dimensional wires, listed in time order. Wires are
// named by integer ids; every op consumes and produces live wires, and the
// outputs must be exactly the live set at the end.
class Circuit {
 public:
  explicit Circuit(int dim, std::string name = {});

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  WireId add_input();
  std::vector<WireId> add_inputs(int k);

  WireId prep();
  void prep_effect(WireId w);
  std::pair<WireId, WireId> bell();
  void bell_effect(WireId a, WireId b);
  WireId copy(WireId w);
  void merge(WireId keep, WireId other);
  void had(WireId w, const MatrixXc& h, bool dagger = false);
  void had(WireId w, const Hadamard& h, bool dagger = false) { had(w, h.H(), dagger); }
  void cz(WireId a, WireId b, const MatrixXc& h, bool dagger = false);
  void cz(WireId a, WireId b, const Hadamard& h, bool dagger = false) { cz(a, b, h.H(), dagger); }
  void swap(WireId a, WireId b);
  // k -> k gate on the listed wires.
  void gate(const std::vector<WireId>& wires, const MatrixXc& m);
  // k -> n_out box; the first min(k, n_out) outputs reuse the input ids.
  std::vector<WireId> box(const std::vector<WireId>& ins, int n_out, const MatrixXc& m);
  void diag(WireId w, const Eigen::VectorXcd& entries);

  // Appends another circuit, feeding its inputs from the given live wires.
  // Returns the wires now holding its outputs.
  std::vector<WireId> append(const Circuit& other, const std::vector<WireId>& feed);

  void set_outputs(std::vector<WireId> outs);
  const std::vector<WireId>& inputs() const { return inputs_; }
  const std::vector<WireId>& outputs() const { return outputs_; }
  const std::vector<WireId>& live() const { return live_; }
  const std::vector<IrOp>& ops() const { return ops_; }

  // Throws unless the declared outputs are exactly the live wires.
  void validate() const;

 private:
  WireId fresh();
  void require_live(WireId w, const char* what) const;
  void retire(WireId w);
  void push(IrOp op);

  int dim_;
  std::string name_;
  std::vector<WireId> inputs_;
  std::vector<WireId> outputs_;
  std::vector<WireId> live_;
  std::vector<IrOp> ops_;
  WireId next_ = 0;
  bool outputs_set_ = false;
};

struct EvalOptions {
  long max_state_dim = 4096;
};

// Local action of one op as a (d^outs) x (d^ins) matrix.
MatrixXc op_matrix(const IrOp& op, int d);

// Streams the ops in order over the identity on the inputs. Rows are indexed
// by the outputs in declared order, columns by the inputs.
ComplexMatrix evaluate(const Circuit& c, const EvalOptions& opts = {});

struct Verdict {
  bool equal = false;
  std::optional<Complex> scalar;
  double residual = 0.0;
};

Verdict verify_pair(const Circuit& circuit, const Circuit& spec, double tol,
                    const EvalOptions& opts = {});
Verdict compare_maps(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

// Word of `depth` crossing gates (Had, Had^dagger, CZ, CZ^dagger on adjacent
// wires) on `wires` inputs, deterministic per seed.
Circuit random_tangle_gate(int wires, int depth, const Hadamard& h, Seed seed);

struct MoveResult {
  std::string name;
  bool holds = false;
  Verdict verdict;
};

struct DiagrammaticReport {
  std::vector<MoveResult> moves;  // (a) .. (f), RII moves split by orientation
  bool passes_basic = false;
  bool passes_extended = false;
};

DiagrammaticReport reidemeister_suite(const MatrixXc& h, double tol);

// Textual IR. `base_dir` resolves `file` references.
Circuit parse_cir(const std::string& text, const std::string& base_dir = ".");
Circuit load_cir(const std::string& path);

}  // namespace tanglelab
