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

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tanglelab/hadamard.hpp"
#include "tanglelab/io.hpp"
#include "tanglelab/ir.hpp"
#include "tanglelab/protocols.hpp"
#include "tanglelab/suite.hpp"
#include "tanglelab/tangle.hpp"
#include "tanglelab/ueb.hpp"

#ifndef TANGLELAB_FIXTURES_DIR
#define TANGLELAB_FIXTURES_DIR "fixtures"
#endif

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace tanglelab;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kRefused = 3 };

struct RunConfig {
  double tolerance = 1e-9;
  long wire_cap = 4096;
  bool wire_cap_set = false;
  std::uint64_t seed = 7;
  std::string output = "text";
  bool force = false;
  std::string command;

  bool as_json() const { return output == "json"; }
  EvalOptions eval() const { return {wire_cap}; }
  BuildOptions build() const { return {!force, tolerance}; }
};

std::string fixtures_dir() {
  if (const char* env = std::getenv("TANGLELAB_FIXTURES"); env && *env) return env;
  return TANGLELAB_FIXTURES_DIR;
}

// A path as given, else relative to the fixtures directory, trying the .cir and
// .tng extensions for bare names.
std::string resolve(const std::string& path) {
  std::vector<fs::path> candidates{path};
  const fs::path fix = fs::path(fixtures_dir()) / path;
  candidates.push_back(fix);
  if (!fs::path(path).has_extension())
    for (const char* ext : {".cir", ".tng"}) {
      candidates.push_back(fs::path(path + ext));
      candidates.push_back(fs::path(fix.string() + ext));
    }
  for (const auto& c : candidates)
    if (fs::is_regular_file(c)) return c.string();
  throw ParseError("cannot find '" + path + "' (fixtures directory " + fixtures_dir() + ")", 0, 0);
}

Circuit load_any(const std::string& given) {
  const std::string path = resolve(given);
  const std::string base = fs::path(path).parent_path().string();
  if (fs::path(path).extension() == ".tng") {
    PlanarTangle t = load_tangle(path);
    return compile(infer_shading(t), tangle_hadamard(t, base.empty() ? "." : base));
  }
  return load_cir(path);
}

// "metaplectic:neg" -> {"metaplectic", "neg"}.
std::vector<std::string> selector_words(const std::string& sel) {
  std::vector<std::string> words;
  std::string cur;
  for (char ch : sel) {
    if (ch == ':') {
      words.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  words.push_back(cur);
  return words;
}

Hadamard hadamard_from_selector(const std::string& sel, int d, double tol) {
  auto words = selector_words(sel);
  if (words.size() == 2 && words[0] == "file") words[1] = resolve(words[1]);
  return hadamard_from_words(words, d, ".", tol);
}

std::string complex_text(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f%+.9fi", z.real(), z.imag());
  return buf;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json verdict_json(const Verdict& v) {
  json j;
  j["equal"] = v.equal;
  j["scalar"] = v.scalar ? complex_json(*v.scalar) : json(nullptr);
  j["residual"] = v.residual;
  return j;
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << "equal: " << (v.equal ? "yes" : "no");
  if (v.scalar) os << "  scalar: " << complex_text(*v.scalar);
  char buf[48];
  std::snprintf(buf, sizeof buf, "  residual: %.3e", v.residual);
  os << buf;
  return os.str();
}

json matrix_json(const ComplexMatrix& m) {
  json j;
  j["out_dims"] = m.out_dims();
  j["in_dims"] = m.in_dims();
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

void print_matrix(const ComplexMatrix& m) {
  auto dims = [](const Dims& d) {
    std::string s;
    for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s;
  };
  std::cout << "map [" << dims(m.in_dims()) << "] -> [" << dims(m.out_dims()) << "]\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) std::cout << (c ? "  " : "") << complex_text(m(r, c));
    std::cout << "\n";
  }
}

// Wraps a command result with the common report fields; timing goes last.
void emit_json(const RunConfig& cfg, const std::string& schema, json body, int status,
               double seconds) {
  json j;
  j["schema"] = schema;
  j["command"] = cfg.command;
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  j["exit_status"] = status;
  j["timing"] = {{"seconds", seconds}};
  std::cout << j.dump(2) << "\n";
}

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// --- check-hadamard --------------------------------------------------------

struct HadamardArgs {
  std::string kind = "fourier";
  int dim = 2;
  int lambda_index = 0;
  std::string branch = "principal";
  std::string file;
  std::string require = "none";
};

int cmd_check_hadamard(const HadamardArgs& a, const RunConfig& cfg) {
  const auto t0 = Clock::now();
  Hadamard h = [&] {
    if (a.kind == "fourier") return fourier(a.dim);
    if (a.kind == "potts") return potts_by_index(a.dim, a.lambda_index);
    if (a.kind == "metaplectic")
      return metaplectic(a.dim, a.branch == "negated" ? Branch::negated : Branch::principal);
    if (a.file.empty()) throw ParseError("--kind file needs --file", 0, 0);
    const std::string path = resolve(a.file);
    return hadamard_from_matrix(load_matrix_json(path), cfg.tolerance, path);
  }();
  const CalculusReport m = check_extended(h.H(), cfg.tolerance);
  const DiagrammaticReport g = reidemeister_suite(h.H(), cfg.tolerance);
  const bool agree = m.passes_basic == g.passes_basic && m.passes_extended == g.passes_extended;
  bool required = true;
  if (a.require == "basic") required = m.passes_basic;
  if (a.require == "extended") required = m.passes_extended;
  const int status = agree && required ? kPass : kFail;

  if (cfg.as_json()) {
    json j;
    j["hadamard"] = {{"provenance", h.provenance().label()}, {"dim", h.dim()}};
    auto check = [](const Check& c) { return json{{"ok", c.ok}, {"residual", c.residual}}; };
    j["matrix"] = {{"unitary", check(m.unitary)},
                   {"equimodular", check(m.equimodular)},
                   {"self_transpose", check(m.self_transpose)},
                   {"riii_residual", m.riii_residual ? json(*m.riii_residual) : json(nullptr)},
                   {"ri_residual", m.ri_residual ? json(*m.ri_residual) : json(nullptr)},
                   {"passes_basic", m.passes_basic},
                   {"passes_extended", m.passes_extended}};
    json moves = json::array();
    for (const auto& mv : g.moves)
      moves.push_back({{"move", mv.name}, {"holds", mv.holds}, {"verdict", verdict_json(mv.verdict)}});
    j["diagrammatic"] = {
        {"moves", moves}, {"passes_basic", g.passes_basic}, {"passes_extended", g.passes_extended}};
    j["agree"] = agree;
    emit_json(cfg, "tanglelab.check-hadamard/1", j, status, since(t0));
    return status;
  }
  auto flag = [](bool b) { return b ? "pass" : "fail"; };
  std::printf("hadamard: %s d=%d\n", h.provenance().label().c_str(), h.dim());
  std::printf("unitary:        %s (residual %.3e)\n", flag(m.unitary.ok), m.unitary.residual);
  std::printf("equimodular:    %s (residual %.3e)\n", flag(m.equimodular.ok), m.equimodular.residual);
  std::printf("self-transpose: %s (residual %.3e)\n", flag(m.self_transpose.ok),
              m.self_transpose.residual);
  std::printf("basic: %s\n", flag(m.passes_basic));
  std::printf("extended: %s (RIII residual %.3e, RI residual %.3e)\n", flag(m.passes_extended),
              m.riii_residual.value_or(-1), m.ri_residual.value_or(-1));
  std::printf("diagrammatic: basic %s, extended %s\n", flag(g.passes_basic), flag(g.passes_extended));
  for (const auto& mv : g.moves)
    std::printf("  %-24s %s  %s\n", mv.name.c_str(), mv.holds ? "holds" : "fails",
                verdict_text(mv.verdict).c_str());
  std::printf("agreement: %s\n", agree ? "yes" : "NO");
  return status;
}

// --- check-ueb -------------------------------------------------------------

int cmd_check_ueb(int pauli, const std::string& file, const RunConfig& cfg) {
  const auto t0 = Clock::now();
  std::vector<ComplexMatrix> family;
  std::string source;
  if (!file.empty()) {
    source = resolve(file);
    family = load_ueb_json(source);
  } else {
    family = pauli_ueb(pauli).members;
    source = "pauli(" + std::to_string(pauli) + ")";
  }
  const UebCheck c = is_ueb(family, cfg.tolerance);
  std::vector<MoveResult> closure;
  Complex scale = 0.0;
  if (c.ok) {
    UnitaryErrorBasis b = make_ueb(family, cfg.tolerance);
    UebGenerator g = ueb_generator(b);
    scale = g.scale;
    closure = ueb_closure_checks(g, cfg.tolerance);
  }
  bool ok = c.ok;
  for (const auto& m : closure) ok = ok && m.holds;
  const int status = ok ? kPass : kFail;
  if (cfg.as_json()) {
    json j;
    j["basis"] = {{"source", source}, {"members", family.size()}};
    j["is_ueb"] = c.ok;
    j["cardinality_ok"] = c.cardinality_ok;
    j["unitarity_residual"] = c.unitarity_residual;
    j["orthogonality_residual"] = c.orthogonality_residual;
    j["scale"] = complex_json(scale);
    json moves = json::array();
    for (const auto& m : closure)
      moves.push_back({{"move", m.name}, {"holds", m.holds}, {"verdict", verdict_json(m.verdict)}});
    j["closure"] = moves;
    emit_json(cfg, "tanglelab.check-ueb/1", j, status, since(t0));
    return status;
  }
  std::printf("basis: %s, %zu members\n", source.c_str(), family.size());
  std::printf("unitary error basis: %s (cardinality %s, unitarity %.3e, orthogonality %.3e)\n",
              c.ok ? "yes" : "no", c.cardinality_ok ? "ok" : "wrong", c.unitarity_residual,
              c.orthogonality_residual);
  if (c.ok) {
    std::printf("vertex scale: %s\n", complex_text(scale).c_str());
    for (const auto& m : closure)
      std::printf("  %-16s %s  %s\n", m.name.c_str(), m.holds ? "holds" : "fails",
                  verdict_text(m.verdict).c_str());
  }
  return status;
}

// --- eval / verify / render ------------------------------------------------

int cmd_eval(const std::string& file, const RunConfig& cfg) {
  const auto t0 = Clock::now();
  Circuit c = load_any(file);
  ComplexMatrix m = evaluate(c, cfg.eval());
  if (cfg.as_json()) {
    json j;
    j["circuit"] = c.name();
    j["map"] = matrix_json(m);
    emit_json(cfg, "tanglelab.eval/1", j, kPass, since(t0));
  } else {
    std::cout << "circuit: " << c.name() << "\n";
    print_matrix(m);
  }
  return kPass;
}

int cmd_verify(const std::string& circuit, const std::string& spec, const RunConfig& cfg) {
  const auto t0 = Clock::now();
  Circuit a = load_any(circuit);
  Circuit b = load_any(spec);
  Verdict v = verify_pair(a, b, cfg.tolerance, cfg.eval());
  const int status = v.equal ? kPass : kFail;
  if (cfg.as_json()) {
    json j;
    j["circuit"] = a.name();
    j["spec"] = b.name();
    j["verdict"] = verdict_json(v);
    emit_json(cfg, "tanglelab.verify/1", j, status, since(t0));
  } else {
    std::cout << a.name() << " vs " << b.name() << ": " << verdict_text(v) << "\n";
  }
  return status;
}

int cmd_render(const std::string& file, const std::string& format, const RunConfig& cfg) {
  PlanarTangle t = load_tangle(resolve(file));
  if (format == "tng") {
    std::cout << render_tangle(t);
    return kPass;
  }
  ShadedTangle s = infer_shading(t);
  if (cfg.as_json()) {
    json j;
    j["tangle"] = t.name;
    json heights = json::array();
    for (size_t h = 0; h < s.shading.size(); ++h) heights.push_back(s.strips(h));
    j["strips"] = heights;
    json classes = json::array();
    for (auto c : s.classes) classes.push_back(event_class_name(c));
    j["events"] = classes;
    j["ascii"] = render_ascii(s);
    emit_json(cfg, "tanglelab.render/1", j, kPass, 0.0);
  } else {
    std::cout << "tangle " << t.name << ": " << s.input_count() << " -> " << s.output_count()
              << " qudits\n"
              << render_ascii(s);
  }
  return kPass;
}

// --- protocol / kl ---------------------------------------------------------

struct ProtocolArgs {
  std::string id;
  int n = 0;
  int dim = 2;
  std::vector<std::string> hadamards;
  int depth = -1;
  std::string unitaries = "random";
  std::string ueb_file;
  std::string encoder_file;
  int omit_cz = -1;
  int sampled = 0;
  bool rows = false;
};

std::vector<Hadamard> site_hadamards(const ProtocolArgs& a, int n, const RunConfig& cfg) {
  std::vector<std::string> sel = a.hadamards.empty() ? std::vector<std::string>{"fourier"} : a.hadamards;
  if (sel.size() == 1) sel.assign(n, sel.front());
  if (int(sel.size()) != n)
    throw ParseError("expected 1 or " + std::to_string(n) + " --hadamard selectors", 0, 0);
  std::vector<Hadamard> hs;
  for (const auto& s : sel) hs.push_back(hadamard_from_selector(s, a.dim, cfg.tolerance));
  return hs;
}

int run_code(ProtocolId id, const ProtocolArgs& a, const RunConfig& cfg) {
  const auto t0 = Clock::now();
  const int n = a.n > 0 ? a.n : 3;
  CodeSpec spec;
  if (id == ProtocolId::phase_code || id == ProtocolId::shor_code) {
    auto hs = site_hadamards(a, n, cfg);
    spec = id == ProtocolId::phase_code ? phase_code_spec(hs) : shor_code_spec(hs);
  } else {
    UnitaryErrorBasis basis =
        a.ueb_file.empty() ? pauli_ueb(a.dim) : make_ueb(load_ueb_json(resolve(a.ueb_file)), cfg.tolerance);
    spec = id == ProtocolId::ueb_phase_code ? ueb_phase_code_spec(basis, n)
                                            : ueb_shor_code_spec(basis, n);
  }
  Circuit enc = [&] {
    if (!a.encoder_file.empty()) return load_any(a.encoder_file);
    if (a.omit_cz >= 0) {
      if (id != ProtocolId::phase_code) throw ParseError("--omit-cz applies to the phase code", 0, 0);
      return phase_encoder_gates(spec.hadamards, a.omit_cz);
    }
    return code_encoder(spec);
  }();
  KLOptions opts;
  opts.tol = cfg.tolerance;
  // Concatenated encoders outgrow the default cap; raise it unless set explicitly.
  opts.eval.max_state_dim = cfg.wire_cap_set ? cfg.wire_cap : std::max(cfg.wire_cap, 1L << 20);
  KLReport r = a.sampled > 0 ? kl_verify_sampled(enc, spec, a.sampled, Seed{cfg.seed}, opts)
                             : kl_verify(enc, spec, opts);
  const int status = r.pass ? kPass : kFail;
  long failing = 0, zeros = 0;
  for (const auto& row : r.rows) {
    if (!row.scalar)
      ++failing;
    else if (std::abs(*row.scalar) <= cfg.tolerance)
      ++zeros;
  }
  if (cfg.as_json()) {
    json j;
    j["protocol"] = protocol_name(id);
    j["report"] = json::parse(r.to_json());
    emit_json(cfg, "tanglelab.kl/1", j, status, since(t0));
    return status;
  }
  std::printf("%s: KL %s, %zu rows (%ld scalar 0, %ld failing), isometry residual %.3e\n",
              r.code.c_str(), r.pass ? "pass" : "FAIL", r.rows.size(), zeros, failing,
              r.isometry_residual);
  for (const auto& row : r.rows)
    if (a.rows || !row.scalar)
      std::printf("  %-40s %s  residual %.3e\n", row.error.c_str(),
                  row.scalar ? complex_text(*row.scalar).c_str() : "FAIL", row.residual);
  return status;
}

int cmd_protocol(const ProtocolArgs& a, const RunConfig& cfg) {
  const auto id = protocol_from_name(a.id);
  if (!id) throw ParseError("unknown protocol '" + a.id + "'", 0, 0);
  if (is_code(*id)) return run_code(*id, a, cfg);
  const auto t0 = Clock::now();
  const Hadamard h = hadamard_from_selector(a.hadamards.empty() ? "fourier" : a.hadamards.front(),
                                            a.dim, cfg.tolerance);
  const BuildOptions b = cfg.build();
  const Seed seed{cfg.seed};
  auto n_or = [&](int def) { return a.n > 0 ? a.n : def; };
  ProtocolPair p = [&]() -> ProtocolPair {
    switch (*id) {
      case ProtocolId::ghz_create: return ghz_pair(n_or(3), h);
      case ProtocolId::cluster_create: return cluster_pair(n_or(3), h, b);
      case ProtocolId::local_equiv_2: return local_equiv_pair(n_or(2), h, b);
      case ProtocolId::local_equiv_3: return local_equiv_pair(n_or(3), h, b);
      case ProtocolId::cut: return cut_pair(h, b);
      case ProtocolId::splice: return splice_pair(h, b);
      case ProtocolId::state_transfer:
        return state_transfer_pair(n_or(4), h, seed, a.depth >= 0 ? a.depth : 6, b);
      case ProtocolId::mb_ghz_teleport: return teleport_pair(TeleportKind::mb_ghz, n_or(3), h, {}, b);
      case ProtocolId::mb_cluster_teleport:
        return teleport_pair(TeleportKind::mb_cluster, n_or(3), h, {}, b);
      case ProtocolId::robust_ghz_teleport: {
        const int n = n_or(3);
        const int depth = a.depth >= 0 ? a.depth : 5;
        std::optional<Circuit> err;
        if (depth > 0) err = random_tangle_gate(n - 1, depth, h, seed);
        return teleport_pair(TeleportKind::robust_ghz, n, h, err, b);
      }
      case ProtocolId::nonlocal_controlled_u: {
        const int d = h.dim();
        std::vector<MatrixXc> u;
        for (int i = 0; i < d; ++i) {
          if (a.unitaries == "identity") {
            u.push_back(MatrixXc::Identity(d, d));
          } else if (a.unitaries == "z") {
            MatrixXc z = MatrixXc::Zero(d, d);
            for (int k = 0; k < d; ++k) z(k, k) = std::polar(1.0, 2.0 * M_PI * i * k / d);
            u.push_back(z);
          } else {
            u.push_back(random_unitary(d, Seed{cfg.seed * 1000 + 11 + std::uint64_t(i)}).matrix());
          }
        }
        return nonlocal_cu_pair(h, u, b);
      }
      default: break;
    }
    throw ParseError("unhandled protocol", 0, 0);
  }();
  Verdict v = verify_pair(p.circuit, p.spec, cfg.tolerance, cfg.eval());
  const int status = v.equal ? kPass : kFail;
  if (cfg.as_json()) {
    json j;
    j["protocol"] = protocol_name(*id);
    j["hadamard"] = {{"provenance", h.provenance().label()}, {"dim", h.dim()}};
    j["forced"] = cfg.force;
    j["verdict"] = verdict_json(v);
    emit_json(cfg, "tanglelab.protocol/1", j, status, since(t0));
  } else {
    std::cout << protocol_name(*id) << " with " << h.provenance().label() << " d=" << h.dim()
              << (cfg.force ? " (forced)" : "") << ": " << (v.equal ? "pass" : "FAIL") << "  "
              << verdict_text(v) << "\n";
  }
  return status;
}

// --- suite -----------------------------------------------------------------

int cmd_suite(const std::vector<int>& criteria, int workers, const RunConfig& cfg) {
  SuiteConfig sc;
  sc.tolerance = cfg.tolerance;
  sc.seed = Seed{cfg.seed};
  sc.wire_cap = cfg.wire_cap;
  sc.workers = workers;
  sc.criteria = criteria;
  SuiteReport r = run_suite(sc);
  const int status = r.pass ? kPass : kFail;
  if (cfg.as_json()) {
    json lib = json::parse(r.to_json(true));
    json j;
    j["schema"] = lib["schema"];
    j["command"] = cfg.command;
    for (auto it = lib.begin(); it != lib.end(); ++it)
      if (it.key() != "schema" && it.key() != "timing") j[it.key()] = it.value();
    j["exit_status"] = status;
    j["timing"] = lib["timing"];
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << r.to_text();
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shaded-tangle circuit compiler and verifier"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  for (int i = 1; i < argc; ++i) cfg.command += (i > 1 ? " " : "") + std::string(argv[i]);

  app.add_option("--tolerance", cfg.tolerance, "comparison tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* cap = app.add_option("--wire-cap", cfg.wire_cap, "largest state dimension during evaluation")
                  ->check(CLI::PositiveNumber)
                  ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for random errors and unitaries")->capture_default_str();
  app.add_option("--output", cfg.output, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--force", cfg.force, "build even when the calculus requirement fails");

  HadamardArgs ha;
  auto* chk = app.add_subcommand("check-hadamard", "classify a Hadamard against the calculus");
  chk->add_option("--kind", ha.kind)->check(CLI::IsMember({"fourier", "potts", "metaplectic", "file"}));
  chk->add_option("--dim", ha.dim)->check(CLI::PositiveNumber);
  chk->add_option("--lambda-index", ha.lambda_index)->check(CLI::NonNegativeNumber);
  chk->add_option("--branch", ha.branch)->check(CLI::IsMember({"principal", "negated"}));
  chk->add_option("--file", ha.file, "JSON matrix for --kind file");
  chk->add_option("--require", ha.require)->check(CLI::IsMember({"none", "basic", "extended"}));

  int pauli = 2;
  std::string ueb_file;
  auto* ueb = app.add_subcommand("check-ueb", "validate a unitary error basis and its vertex");
  ueb->add_option("--pauli", pauli, "shift-and-multiply basis of this dimension")
      ->check(CLI::PositiveNumber);
  ueb->add_option("--file", ueb_file, "JSON basis file");

  std::string eval_file;
  auto* ev = app.add_subcommand("eval", "evaluate a .tng or .cir file");
  ev->add_option("file", eval_file)->required();

  std::string v_circuit, v_spec;
  auto* ver = app.add_subcommand("verify", "compare two diagrams up to a scalar");
  ver->add_option("circuit", v_circuit)->required();
  ver->add_option("spec", v_spec)->required();

  ProtocolArgs pa;
  auto add_protocol_options = [&](CLI::App* sub) {
    sub->add_option("--n", pa.n, "parties, chain length or code size")->check(CLI::PositiveNumber);
    sub->add_option("--dim", pa.dim, "qudit dimension (basis dimension for UEB codes)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--hadamard", pa.hadamards,
                    "fourier | metaplectic[:neg] | potts:K | file:PATH; repeat for distinct sites");
    sub->add_option("--ueb", pa.ueb_file, "JSON basis file for UEB codes");
  };
  auto* pro = app.add_subcommand("protocol", "build and verify one procedure");
  pro->add_option("id", pa.id)->required();
  add_protocol_options(pro);
  pro->add_option("--depth", pa.depth, "random tangle-gate error depth")->check(CLI::NonNegativeNumber);
  pro->add_option("--unitaries", pa.unitaries)->check(CLI::IsMember({"random", "identity", "z"}));

  auto* kl = app.add_subcommand("kl", "Knill-Laflamme check of a code");
  kl->add_option("code", pa.id, "phase | shor | ueb-phase | ueb-shor")
      ->required()
      ->check(CLI::IsMember({"phase", "shor", "ueb-phase", "ueb-shor"}));
  add_protocol_options(kl);
  kl->add_option("--encoder", pa.encoder_file, "custom encoder (.cir or .tng)");
  kl->add_option("--omit-cz", pa.omit_cz, "gate-form phase encoder without this CZ")
      ->check(CLI::PositiveNumber);
  kl->add_option("--sampled", pa.sampled, "random errors instead of the matrix-unit basis")
      ->check(CLI::PositiveNumber);
  kl->add_flag("--rows", pa.rows, "list every row");

  std::vector<int> criteria;
  int workers = 0;
  auto* su = app.add_subcommand("suite", "run the acceptance matrix");
  su->add_option("--criteria", criteria, "criterion numbers to run (default all)")->delimiter(',');
  su->add_option("--workers", workers, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);

  std::string render_file, render_format = "ascii";
  auto* ren = app.add_subcommand("render", "show the shading of a .tng file");
  ren->add_option("file", render_file)->required();
  ren->add_option("--format", render_format)->check(CLI::IsMember({"ascii", "tng"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  cfg.wire_cap_set = cap->count() > 0;

  try {
    if (*chk) return cmd_check_hadamard(ha, cfg);
    if (*ueb) return cmd_check_ueb(pauli, ueb_file, cfg);
    if (*ev) return cmd_eval(eval_file, cfg);
    if (*ver) return cmd_verify(v_circuit, v_spec, cfg);
    if (*pro) return cmd_protocol(pa, cfg);
    if (*kl) {
      pa.id += "-code";
      return cmd_protocol(pa, cfg);
    }
    if (*su) return cmd_suite(criteria, workers, cfg);
    if (*ren) return cmd_render(render_file, render_format, cfg);
  } catch (const PreconditionError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
