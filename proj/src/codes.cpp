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

#include <cmath>
#include <sstream>

#include "tanglelab/protocols.hpp"

namespace tanglelab {

const char* code_kind_name(CodeKind kind) {
  switch (kind) {
    case CodeKind::phase: return "phase";
    case CodeKind::shor: return "shor";
    case CodeKind::ueb_phase: return "ueb-phase";
    case CodeKind::ueb_shor: return "ueb-shor";
  }
  return "?";
}

int CodeSpec::sites() const {
  return (kind == CodeKind::shor || kind == CodeKind::ueb_shor) ? n * n : n;
}

int CodeSpec::wires_per_site() const {
  return (kind == CodeKind::ueb_phase || kind == CodeKind::ueb_shor) ? 2 : 1;
}

int CodeSpec::wire_dim() const { return basis ? basis->dim : dim; }

std::string CodeSpec::label() const {
  std::ostringstream os;
  os << code_kind_name(kind) << " [[" << sites() << "," << k << "," << p << "]]^"
     << (error_class == ErrorClass::phase ? "P" : "F") << "_" << dim;
  return os.str();
}

namespace {

void check_hadamards(const std::vector<Hadamard>& hs, const char* who) {
  if (hs.empty()) throw PreconditionError(std::string(who) + ": at least one Hadamard is required");
  for (const auto& h : hs)
    if (h.dim() != hs.front().dim())
      throw DimensionError(std::string(who) + ": Hadamards of different dimensions");
}

}  // namespace

CodeSpec phase_code_spec(std::vector<Hadamard> hadamards) {
  check_hadamards(hadamards, "phase code");
  CodeSpec s;
  s.kind = CodeKind::phase;
  s.n = s.p = int(hadamards.size());
  s.dim = hadamards.front().dim();
  s.error_class = ErrorClass::phase;
  s.hadamards = std::move(hadamards);
  return s;
}

CodeSpec shor_code_spec(std::vector<Hadamard> hadamards) {
  check_hadamards(hadamards, "shor code");
  CodeSpec s;
  s.kind = CodeKind::shor;
  s.n = s.p = int(hadamards.size());
  s.dim = hadamards.front().dim();
  s.error_class = ErrorClass::full;
  s.hadamards = std::move(hadamards);
  return s;
}

CodeSpec ueb_phase_code_spec(const UnitaryErrorBasis& basis, int n) {
  if (n < 1) throw PreconditionError("ueb phase code: n must be positive");
  CodeSpec s;
  s.kind = CodeKind::ueb_phase;
  s.n = s.p = n;
  s.dim = basis.dim * basis.dim;
  s.error_class = ErrorClass::phase;
  s.basis = basis;
  return s;
}

CodeSpec ueb_shor_code_spec(const UnitaryErrorBasis& basis, int n) {
  CodeSpec s = ueb_phase_code_spec(basis, n);
  s.kind = CodeKind::ueb_shor;
  s.error_class = ErrorClass::full;
  return s;
}

std::pair<WireId, WireId> ueb_vertex(Circuit& c, const UebGenerator& g, WireId x, WireId y) {
  WireId i1 = c.prep();
  WireId i2 = c.prep();
  c.gate({i1, i2, y}, g.tensor.matrix());
  c.bell_effect(x, y);
  return {i1, i2};
}

std::pair<WireId, WireId> ueb_vertex_adjoint(Circuit& c, const UebGenerator& g, WireId i1,
                                             WireId i2) {
  auto [x, y] = c.bell();
  c.gate({i1, i2, y}, g.tensor.matrix().adjoint());
  c.prep_effect(i1);
  c.prep_effect(i2);
  return {x, y};
}

std::vector<MoveResult> ueb_closure_checks(const UebGenerator& g, double tol) {
  const int d = g.basis.dim;
  Circuit id(d, "identity");
  id.set_outputs(id.add_inputs(2));
  auto judge = [&](std::string name, const Circuit& c) {
    MoveResult m;
    m.name = std::move(name);
    m.verdict = verify_pair(c, id, tol);
    m.holds = m.verdict.equal && std::abs(*m.verdict.scalar - Complex(1.0)) <= tol;
    return m;
  };
  Circuit vv(d, "vertex_then_adjoint");
  {
    auto in = vv.add_inputs(2);
    auto [i1, i2] = ueb_vertex(vv, g, in[0], in[1]);
    auto [x, y] = ueb_vertex_adjoint(vv, g, i1, i2);
    vv.set_outputs({x, y});
  }
  Circuit ww(d, "adjoint_then_vertex");
  {
    auto in = ww.add_inputs(2);
    auto [x, y] = ueb_vertex_adjoint(ww, g, in[0], in[1]);
    auto [i1, i2] = ueb_vertex(ww, g, x, y);
    ww.set_outputs({i1, i2});
  }
  return {judge("vertex-adjoint", vv), judge("adjoint-vertex", ww)};
}

namespace {

// Logical pair (t1, t2) spread over n sites: bells between consecutive
// vertices, one vertex per site.
std::vector<WireId> ueb_phase_chain(Circuit& c, const UebGenerator& g, int n, WireId t1,
                                    WireId t2) {
  std::vector<WireId> strands{t1};
  for (int k = 1; k < n; ++k) {
    auto [a, b] = c.bell();
    strands.push_back(a);
    strands.push_back(b);
  }
  strands.push_back(t2);
  std::vector<WireId> sites;
  for (int k = 0; k < n; ++k) {
    auto [i1, i2] = ueb_vertex(c, g, strands[2 * k], strands[2 * k + 1]);
    sites.push_back(i1);
    sites.push_back(i2);
  }
  return sites;
}

}  // namespace

Circuit code_encoder(const CodeSpec& spec) {
  const int n = spec.n;
  switch (spec.kind) {
    case CodeKind::phase:
    case CodeKind::shor: {
      if (int(spec.hadamards.size()) != n)
        throw DimensionError("code_encoder: expected " + std::to_string(n) + " Hadamards");
      Circuit c(spec.dim, std::string(code_kind_name(spec.kind)) + "_encoder");
      WireId in = c.add_input();
      std::vector<WireId> pieces{in};
      for (int k = 1; k < n; ++k) pieces.push_back(c.copy(in));
      for (int k = 0; k < n; ++k) c.had(pieces[k], spec.hadamards[k]);
      if (spec.kind == CodeKind::phase) {
        c.set_outputs(pieces);
        return c;
      }
      std::vector<WireId> sites;
      for (WireId p : pieces) {
        sites.push_back(p);
        for (int k = 1; k < n; ++k) sites.push_back(c.copy(p));
      }
      c.set_outputs(sites);
      return c;
    }
    case CodeKind::ueb_phase:
    case CodeKind::ueb_shor: {
      if (!spec.basis) throw PreconditionError("code_encoder: UEB codes need a basis");
      const UebGenerator g = ueb_generator(*spec.basis);
      Circuit c(spec.basis->dim, std::string(code_kind_name(spec.kind)) + "_encoder");
      auto in = c.add_inputs(2);
      if (spec.kind == CodeKind::ueb_phase) {
        c.set_outputs(ueb_phase_chain(c, g, n, in[0], in[1]));
        return c;
      }
      auto [x, y] = ueb_vertex_adjoint(c, g, in[0], in[1]);
      std::vector<WireId> inner = ueb_phase_chain(c, g, n, x, y);
      std::vector<WireId> sites;
      for (int s = 0; s < n; ++s) {
        const WireId a = inner[2 * s], b = inner[2 * s + 1];
        sites.push_back(a);
        sites.push_back(b);
        for (int k = 1; k < n; ++k) {
          sites.push_back(c.copy(a));
          sites.push_back(c.copy(b));
        }
      }
      c.set_outputs(sites);
      return c;
    }
  }
  throw PreconditionError("code_encoder: unknown code");
}

Circuit phase_encoder_gates(const std::vector<Hadamard>& hadamards, std::optional<int> omit_cz) {
  check_hadamards(hadamards, "phase encoder");
  const int n = int(hadamards.size());
  const Hadamard& ladder = hadamards.front();
  Circuit c(ladder.dim(), omit_cz ? "phase_encoder_broken" : "phase_encoder_gates");
  std::vector<WireId> q{c.add_input()};
  for (int k = 1; k < n; ++k) {
    q.push_back(c.prep());
    if (omit_cz != k) c.cz(q[k - 1], q[k], ladder);
    c.had(q[k], ladder);
  }
  for (int k = 0; k < n; ++k) c.had(q[k], hadamards[k]);
  c.set_outputs(q);
  return c;
}

}  // namespace tanglelab
