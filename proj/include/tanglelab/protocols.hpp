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
#include "tanglelab/ir.hpp"
#include "tanglelab/ueb.hpp"

namespace tanglelab {

enum class ProtocolId {
  ghz_create,
  cluster_create,
  local_equiv_2,
  local_equiv_3,
  cut,
  splice,
  state_transfer,
  mb_ghz_teleport,
  mb_cluster_teleport,
  robust_ghz_teleport,
  nonlocal_controlled_u,
  phase_code,
  shor_code,
  ueb_phase_code,
  ueb_shor_code,
};

// Command-line spelling, e.g. "mb-ghz-teleport".
std::string protocol_name(ProtocolId id);
std::optional<ProtocolId> protocol_from_name(const std::string& name);
std::vector<ProtocolId> all_protocols();
bool is_code(ProtocolId id);

struct ProtocolPair {
  Circuit circuit;
  Circuit spec;
};

struct BuildOptions {
  // When false, calculus requirements on the Hadamard are not checked, so the
  // pair can be built and shown to fail.
  bool enforce = true;
  double tol = 1e-9;
};

// Throws PreconditionError naming the missing calculus.
void require_basic(const Hadamard& h, const std::string& who, const BuildOptions& opts);
void require_extended(const Hadamard& h, const std::string& who, const BuildOptions& opts);

// n preparations, joined pairwise by a CZ followed by a Had on the newer qudit.
Circuit ghz_circuit(int n, const Hadamard& h);
// sum_k |k...k>, from one preparation and n-1 copies.
Circuit ghz_spec(int d, int n);
ProtocolPair ghz_pair(int n, const Hadamard& h);

// n preparations joined by n-1 CZ gates.
Circuit cluster_circuit(int n, const Hadamard& h);
// The state sum conj(H)_{a1 a2} ... conj(H)_{a(n-1) an} |a1 ... an> as one box.
Circuit cluster_spec(int n, const Hadamard& h);
ProtocolPair cluster_pair(int n, const Hadamard& h, const BuildOptions& opts = {});

ProtocolPair local_equiv_pair(int n, const Hadamard& h, const BuildOptions& opts = {});

// Five-node window q0..q4 of a chain with target q2.
ProtocolPair cut_pair(const Hadamard& h, const BuildOptions& opts = {});
ProtocolPair splice_pair(const Hadamard& h, const BuildOptions& opts = {});

// Moves an input qudit along an n-node chain carrying `error` (a tangle gate
// on n wires, or none).
ProtocolPair state_transfer_pair(int n, const Hadamard& h, const std::optional<Circuit>& error,
                                 const BuildOptions& opts = {});
ProtocolPair state_transfer_pair(int n, const Hadamard& h, Seed error_seed, int error_depth,
                                 const BuildOptions& opts = {});

enum class TeleportKind { mb_ghz, mb_cluster, robust_ghz };

// n agents: Alice, n-2 middle agents and Charlie, who receives the state. The
// robust variant accepts a tangle gate on n-1 wires as the error.
ProtocolPair teleport_pair(TeleportKind kind, int n, const Hadamard& h,
                           const std::optional<Circuit>& error = std::nullopt,
                           const BuildOptions& opts = {});

// C = sum_i U_i (x) |i><i| on (Alice, Bob), with Bob's qudit the control.
ProtocolPair nonlocal_cu_pair(const Hadamard& h, const std::vector<MatrixXc>& unitaries,
                              const BuildOptions& opts = {});
MatrixXc controlled_family(const std::vector<MatrixXc>& unitaries);

// The same word with the shading of every region reversed: Had on wire i
// becomes CZ on wires (i, i+1) and CZ on (i, i+1) becomes Had on wire i+1.
// The result acts on one more wire than the input.
Circuit reverse_shading(const Circuit& tangle_gate);

// --- codes -----------------------------------------------------------------

enum class CodeKind { phase, shor, ueb_phase, ueb_shor };
enum class ErrorClass { phase, full };

const char* code_kind_name(CodeKind kind);

// [[n, 1, p]] code on physical qudits of dimension `dim`, guarding against
// errors of `error_class` on at most p-1 sites.
struct CodeSpec {
  CodeKind kind = CodeKind::phase;
  int n = 1;
  int k = 1;
  int p = 1;
  int dim = 2;
  ErrorClass error_class = ErrorClass::phase;
  std::vector<Hadamard> hadamards;
  std::optional<UnitaryErrorBasis> basis;

  int sites() const;
  int wires_per_site() const;
  int wire_dim() const;
  std::string label() const;
};

CodeSpec phase_code_spec(std::vector<Hadamard> hadamards);
CodeSpec shor_code_spec(std::vector<Hadamard> hadamards);
CodeSpec ueb_phase_code_spec(const UnitaryErrorBasis& basis, int n);
CodeSpec ueb_shor_code_spec(const UnitaryErrorBasis& basis, int n);

Circuit code_encoder(const CodeSpec& spec);

// The phase encoder written as a 1- and 2-qudit gate circuit (a GHZ ladder
// followed by the site Hadamards). `omit_cz` drops the CZ feeding that site.
Circuit phase_encoder_gates(const std::vector<Hadamard>& hadamards,
                            std::optional<int> omit_cz = std::nullopt);

// The UEB vertex |x,y> -> sum_i s (U_i)_xy |i>, with |i> split over two wires.
// Consumes x and y and returns the index wires.
std::pair<WireId, WireId> ueb_vertex(Circuit& c, const UebGenerator& g, WireId x, WireId y);
std::pair<WireId, WireId> ueb_vertex_adjoint(Circuit& c, const UebGenerator& g, WireId i1,
                                             WireId i2);

// The two RII-analog closure diagrams of the vertex: V followed by V^dagger on
// (x, y), and V^dagger followed by V on the index wires. Both must be the
// identity exactly (scalar 1) for the calibrated scale.
std::vector<MoveResult> ueb_closure_checks(const UebGenerator& g, double tol);

struct KLRow {
  std::string error;
  std::optional<Complex> scalar;
  double residual = 0.0;
};

struct KLReport {
  std::string code;
  std::vector<KLRow> rows;
  double isometry_residual = 0.0;
  bool pass = false;

  std::string to_json() const;
};

struct KLOptions {
  double tol = 1e-9;
  EvalOptions eval;
  int workers = 0;  // 0: hardware concurrency
};

// Knill-Laflamme condition i^dagger e i proportional to the identity (scalar 0
// allowed), for e ranging over a basis of the errors supported on at most p-1
// sites: diagonal matrix units for the phase class, all matrix units for the
// full class. By linearity this covers every (p, E)-local error.
KLReport kl_verify(const Circuit& encoder, const CodeSpec& spec, const KLOptions& opts = {});

// Number of rows kl_verify enumerates.
long kl_row_count(const CodeSpec& spec);

// Sanity mode: seeded random unitaries (diagonal for the phase class) on
// random site subsets instead of the matrix-unit basis.
KLReport kl_verify_sampled(const Circuit& encoder, const CodeSpec& spec, int samples, Seed seed,
                           const KLOptions& opts = {});

// --- cross-validation ------------------------------------------------------

// A random self-transpose Hadamard P D H D P^T e^{i phi} built from a base
// self-transpose Hadamard of dimension d, with D a random diagonal phase and P
// a random permutation.
MatrixXc random_self_transpose_hadamard(int d, Seed seed);

}  // namespace tanglelab
