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

#include "tanglelab/tangle.hpp"

#include <filesystem>
#include <optional>
#include <sstream>

#include "tanglelab/io.hpp"
#include "text_util.hpp"

namespace tanglelab {

using detail::parse_int;
using detail::Token;
using detail::tokenize;

bool PlanarTangle::operator==(const PlanarTangle& o) const {
  if (name != o.name || dim != o.dim || hadamard != o.hadamard || left_shaded != o.left_shaded ||
      bottom != o.bottom || slices.size() != o.slices.size())
    return false;
  for (size_t i = 0; i < slices.size(); ++i) {
    const auto& a = slices[i];
    const auto& b = o.slices[i];
    if (a.kind != b.kind || a.index != b.index) return false;
    if (a.kind == SliceKind::cross && a.over != b.over) return false;
  }
  return true;
}

const char* event_class_name(EventClass c) {
  switch (c) {
    case EventClass::prep_cup: return "prep-cup";
    case EventClass::copy_cup: return "copy-cup";
    case EventClass::effect_cap: return "effect-cap";
    case EventClass::merge_cap: return "merge-cap";
    case EventClass::hourglass: return "hourglass";
    case EventClass::bowtie: return "bowtie";
  }
  return "?";
}

std::vector<int> ShadedTangle::strips(size_t height) const {
  std::vector<int> out;
  const auto& word = shading.at(height);
  for (size_t k = 0; k < word.size(); ++k)
    if (word[k]) out.push_back(int(k));
  return out;
}

PlanarTangle parse_tangle(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  PlanarTangle t;
  bool have_name = false, have_dim = false, ended = false;
  int strands = 0;
  bool in_body = false;

  while (std::getline(in, raw)) {
    ++line_no;
    auto tok = tokenize(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok[0].text;
    auto need = [&](size_t n) {
      if (tok.size() != n)
        throw ParseError("'" + kw + "' expects " + std::to_string(n - 1) + " argument(s)", line_no,
                         tok[0].column);
    };
    if (ended) throw ParseError("content after 'end'", line_no, tok[0].column);
    if (!have_name) {
      if (kw != "tangle" || tok.size() != 2)
        throw ParseError("expected 'tangle <name>'", line_no, tok[0].column);
      t.name = tok[1].text;
      have_name = true;
      continue;
    }
    auto header_only = [&] {
      if (in_body) throw ParseError("'" + kw + "' must precede all slices", line_no, tok[0].column);
    };
    if (kw == "dim") {
      header_only();
      need(2);
      t.dim = parse_int(tok[1], line_no);
      if (t.dim < 1) throw ParseError("dimension must be positive", line_no, tok[1].column);
      have_dim = true;
    } else if (kw == "hadamard") {
      header_only();
      if (tok.size() < 2) throw ParseError("missing hadamard kind", line_no, tok[0].column);
      t.hadamard.clear();
      for (size_t i = 1; i < tok.size(); ++i) t.hadamard.push_back(tok[i].text);
    } else if (kw == "left-shading") {
      header_only();
      need(2);
      if (tok[1].text != "shaded" && tok[1].text != "unshaded")
        throw ParseError("expected 'shaded' or 'unshaded'", line_no, tok[1].column);
      t.left_shaded = tok[1].text == "shaded";
    } else if (kw == "bottom") {
      header_only();
      need(2);
      t.bottom = parse_int(tok[1], line_no);
      if (t.bottom < 0) throw ParseError("negative strand count", line_no, tok[1].column);
      strands = t.bottom;
    } else if (kw == "slice") {
      in_body = true;
      if (tok.size() < 3) throw ParseError("expected 'slice <kind> <index>'", line_no, tok[0].column);
      SliceEvent e;
      e.line = line_no;
      e.index = parse_int(tok[2], line_no);
      const std::string& kind = tok[1].text;
      if (kind == "cup") {
        need(3);
        e.kind = SliceKind::cup;
        if (e.index < 0 || e.index > strands)
          throw ParseError("cup gap " + std::to_string(e.index) + " out of range with " +
                               std::to_string(strands) + " strands",
                           line_no, tok[2].column);
        strands += 2;
      } else if (kind == "cap") {
        need(3);
        e.kind = SliceKind::cap;
        if (e.index < 0 || e.index + 1 >= strands)
          throw ParseError("cap " + std::to_string(e.index) + " out of range with " +
                               std::to_string(strands) + " strands",
                           line_no, tok[2].column);
        strands -= 2;
      } else if (kind == "cross") {
        e.kind = SliceKind::cross;
        if (tok.size() == 4) {
          if (tok[3].text != "over" && tok[3].text != "under")
            throw ParseError("expected 'over' or 'under'", line_no, tok[3].column);
          e.over = tok[3].text == "over";
        } else {
          need(3);
        }
        if (e.index < 0 || e.index + 1 >= strands)
          throw ParseError("cross " + std::to_string(e.index) + " out of range with " +
                               std::to_string(strands) + " strands",
                           line_no, tok[2].column);
      } else {
        throw ParseError("unknown slice kind '" + kind + "'", line_no, tok[1].column);
      }
      t.slices.push_back(e);
    } else if (kw == "end") {
      need(1);
      ended = true;
    } else {
      throw ParseError("unknown directive '" + kw + "'", line_no, tok[0].column);
    }
  }
  if (!have_name) throw ParseError("empty tangle file", line_no, 1);
  if (!have_dim) throw ParseError("missing 'dim'", line_no, 1);
  if (!ended) throw ParseError("missing 'end'", line_no, 1);
  return t;
}

PlanarTangle load_tangle(const std::string& path) { return parse_tangle(read_file(path)); }

std::string render_tangle(const PlanarTangle& t) {
  std::ostringstream os;
  os << "tangle " << t.name << "\n";
  os << "dim " << t.dim << "\n";
  if (!t.hadamard.empty()) {
    os << "hadamard";
    for (const auto& w : t.hadamard) os << " " << w;
    os << "\n";
  }
  os << "left-shading " << (t.left_shaded ? "shaded" : "unshaded") << "\n";
  os << "bottom " << t.bottom << "\n";
  for (const auto& e : t.slices) {
    switch (e.kind) {
      case SliceKind::cup: os << "slice cup " << e.index << "\n"; break;
      case SliceKind::cap: os << "slice cap " << e.index << "\n"; break;
      case SliceKind::cross:
        os << "slice cross " << e.index << (e.over ? " over" : " under") << "\n";
        break;
    }
  }
  os << "end\n";
  return os.str();
}

ShadedTangle infer_shading(const PlanarTangle& t) {
  ShadedTangle s;
  s.tangle = t;
  std::vector<bool> word(t.bottom + 1);
  for (int k = 0; k <= t.bottom; ++k) word[k] = t.left_shaded != (k % 2 == 1);
  s.shading.push_back(word);
  for (const auto& e : t.slices) {
    switch (e.kind) {
      case SliceKind::cup: {
        const bool outer = word[e.index];
        s.classes.push_back(outer ? EventClass::copy_cup : EventClass::prep_cup);
        word.insert(word.begin() + e.index + 1, {!outer, outer});
        break;
      }
      case SliceKind::cap: {
        const bool inner = word[e.index + 1];
        s.classes.push_back(inner ? EventClass::effect_cap : EventClass::merge_cap);
        word.erase(word.begin() + e.index + 1, word.begin() + e.index + 3);
        break;
      }
      case SliceKind::cross:
        s.classes.push_back(word[e.index + 1] ? EventClass::hourglass : EventClass::bowtie);
        break;
    }
    s.shading.push_back(word);
  }
  return s;
}

std::string render_ascii(const ShadedTangle& s) {
  std::ostringstream os;
  for (size_t h = s.shading.size(); h-- > 0;) {
    const auto& word = s.shading[h];
    std::string row;
    for (size_t k = 0; k < word.size(); ++k) {
      if (k) row += '|';
      row += word[k] ? "##" : "  ";
    }
    os << row;
    if (h > 0) {
      const auto& e = s.tangle.slices[h - 1];
      os << "    ^ " << event_class_name(s.classes[h - 1]) << " @" << e.index;
      if (e.kind == SliceKind::cross) os << (e.over ? " over" : " under");
    } else {
      os << "    (bottom)";
    }
    os << "\n";
  }
  return os.str();
}

Hadamard tangle_hadamard(const PlanarTangle& t, const std::string& base_dir) {
  if (!t.hadamard.empty()) return hadamard_from_words(t.hadamard, t.dim, base_dir);
  for (const auto& e : t.slices)
    if (e.kind == SliceKind::cross)
      throw ParseError("tangle '" + t.name + "' has crossings but no hadamard declaration", e.line,
                       1);
  return fourier(t.dim);
}

Circuit compile(const ShadedTangle& s, const Hadamard& h) {
  const PlanarTangle& t = s.tangle;
  if (h.dim() != t.dim)
    throw DimensionError("compile: hadamard dimension " + std::to_string(h.dim()) +
                         " differs from tangle dimension " + std::to_string(t.dim));
  Circuit c(t.dim, t.name);
  std::vector<std::optional<WireId>> regions;
  for (bool shaded : s.shading.front())
    regions.push_back(shaded ? std::optional<WireId>(c.add_input()) : std::nullopt);

  for (size_t i = 0; i < t.slices.size(); ++i) {
    const SliceEvent& e = t.slices[i];
    const int k = e.index;
    switch (s.classes[i]) {
      case EventClass::prep_cup:
        regions.insert(regions.begin() + k + 1, {c.prep(), std::nullopt});
        break;
      case EventClass::copy_cup: {
        WireId right = c.copy(*regions[k]);
        regions.insert(regions.begin() + k + 1, {std::nullopt, right});
        break;
      }
      case EventClass::effect_cap:
        c.prep_effect(*regions[k + 1]);
        regions.erase(regions.begin() + k + 1, regions.begin() + k + 3);
        break;
      case EventClass::merge_cap:
        c.merge(*regions[k], *regions[k + 2]);
        regions.erase(regions.begin() + k + 1, regions.begin() + k + 3);
        break;
      case EventClass::hourglass:
        c.had(*regions[k + 1], h, !e.over);
        break;
      case EventClass::bowtie:
        c.cz(*regions[k], *regions[k + 2], h, !e.over);
        break;
    }
  }
  std::vector<WireId> outs;
  for (const auto& r : regions)
    if (r) outs.push_back(*r);
  c.set_outputs(outs);
  return c;
}

}  // namespace tanglelab
