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

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <optional>
#include <sstream>

#include "tanglelab/io.hpp"
#include "tanglelab/ir.hpp"
#include "text_util.hpp"

namespace tanglelab {

using detail::parse_int;
using detail::Token;
using detail::tokenize;

Circuit parse_cir(const std::string& text, const std::string& base_dir) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::optional<Circuit> c;
  std::optional<Hadamard> h;
  bool ended = false;
  bool inputs_done = false;

  auto need = [&](const std::vector<Token>& t, size_t n, int line) {
    if (t.size() != n)
      throw ParseError("'" + t[0].text + "' expects " + std::to_string(n - 1) + " argument(s)",
                       line, t[0].column);
  };
  auto wire = [&](const Token& t, int line) {
    int w = parse_int(t, line);
    const auto& live = c->live();
    if (std::find(live.begin(), live.end(), w) == live.end())
      throw ParseError("wire " + std::to_string(w) + " is not live", line, t.column);
    return w;
  };
  auto hadamard = [&](const Token& t, int line) -> const Hadamard& {
    if (!h) throw ParseError("'" + t.text + "' needs a hadamard declaration", line, t.column);
    return *h;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    auto t = tokenize(raw);
    if (t.empty()) continue;
    const std::string& kw = t[0].text;
    if (ended) throw ParseError("content after 'end'", line_no, t[0].column);
    if (!c) {
      if (kw != "circuit" || t.size() != 4 || t[2].text != "dim")
        throw ParseError("expected 'circuit <name> dim <d>'", line_no, t[0].column);
      int d = parse_int(t[3], line_no);
      if (d < 1) throw ParseError("dimension must be positive", line_no, t[3].column);
      c.emplace(d, t[1].text);
      continue;
    }
    try {
      if (kw == "hadamard") {
        std::vector<std::string> words;
        for (size_t i = 1; i < t.size(); ++i) words.push_back(t[i].text);
        h = hadamard_from_words(words, c->dim(), base_dir);
      } else if (kw == "in") {
        need(t, 2, line_no);
        if (inputs_done || !c->ops().empty())
          throw ParseError("'in' must precede all ops", line_no, t[0].column);
        int k = parse_int(t[1], line_no);
        if (k < 0) throw ParseError("negative input count", line_no, t[1].column);
        c->add_inputs(k);
        inputs_done = true;
      } else if (kw == "prep") {
        need(t, 1, line_no);
        c->prep();
      } else if (kw == "prep_eff") {
        need(t, 2, line_no);
        c->prep_effect(wire(t[1], line_no));
      } else if (kw == "bell") {
        need(t, 1, line_no);
        c->bell();
      } else if (kw == "bell_eff") {
        need(t, 3, line_no);
        c->bell_effect(wire(t[1], line_no), wire(t[2], line_no));
      } else if (kw == "copy") {
        need(t, 2, line_no);
        c->copy(wire(t[1], line_no));
      } else if (kw == "merge") {
        need(t, 3, line_no);
        c->merge(wire(t[1], line_no), wire(t[2], line_no));
      } else if (kw == "had") {
        if (t.size() != 2 && !(t.size() == 3 && t[2].text == "dag"))
          throw ParseError("expected 'had <w> [dag]'", line_no, t[0].column);
        c->had(wire(t[1], line_no), hadamard(t[0], line_no), t.size() == 3);
      } else if (kw == "cz") {
        if (t.size() != 3 && !(t.size() == 4 && t[3].text == "dag"))
          throw ParseError("expected 'cz <w1> <w2> [dag]'", line_no, t[0].column);
        c->cz(wire(t[1], line_no), wire(t[2], line_no), hadamard(t[0], line_no), t.size() == 4);
      } else if (kw == "swap") {
        need(t, 3, line_no);
        c->swap(wire(t[1], line_no), wire(t[2], line_no));
      } else if (kw == "gate" || kw == "diag") {
        size_t file_at = t.size();
        for (size_t i = 1; i < t.size(); ++i)
          if (t[i].text == "file") file_at = i;
        if (file_at + 2 != t.size() || file_at < 2)
          throw ParseError("expected '" + kw + " <w...> file <path>'", line_no, t[0].column);
        std::vector<WireId> ws;
        for (size_t i = 1; i < file_at; ++i) ws.push_back(wire(t[i], line_no));
        ComplexMatrix m = load_matrix_json(join_path(base_dir, t.back().text));
        if (kw == "diag") {
          if (ws.size() != 1) throw ParseError("diag takes one wire", line_no, t[0].column);
          if (!m.matrix().isDiagonal(0.0))
            throw ParseError("diag file is not diagonal", line_no, t.back().column);
          c->diag(ws[0], m.matrix().diagonal());
        } else {
          c->gate(ws, m.matrix());
        }
      } else if (kw == "out") {
        std::vector<WireId> ws;
        for (size_t i = 1; i < t.size(); ++i) ws.push_back(wire(t[i], line_no));
        c->set_outputs(ws);
      } else if (kw == "end") {
        need(t, 1, line_no);
        ended = true;
      } else {
        throw ParseError("unknown op '" + kw + "'", line_no, t[0].column);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const PreconditionError&) {
      throw;
    } catch (const Error& err) {
      throw ParseError(err.what(), line_no, t[0].column);
    }
  }
  if (!c) throw ParseError("empty circuit file", line_no, 1);
  if (!ended) throw ParseError("missing 'end'", line_no, 1);
  try {
    c->validate();
  } catch (const Error& err) {
    throw ParseError(err.what(), line_no, 1);
  }
  return *c;
}

Circuit load_cir(const std::string& path) {
  return parse_cir(read_file(path), std::filesystem::path(path).parent_path().string());
}

}  // namespace tanglelab
