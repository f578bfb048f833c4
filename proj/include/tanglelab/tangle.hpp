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

#include <string>
#include <vector>

#include "tanglelab/hadamard.hpp"
#include "tanglelab/ir.hpp"

namespace tanglelab {

enum class SliceKind { cup, cap, cross };

// cup takes a gap index (gap i lies between strands i-1 and i); cap and cross
// take the index of the left strand of an adjacent pair.
struct SliceEvent {
  SliceKind kind = SliceKind::cup;
  int index = 0;
  bool over = true;  // cross only: the bottom-left to top-right strand is in front
  int line = 0;
};

struct PlanarTangle {
  std::string name;
  int dim = 2;
  std::vector<std::string> hadamard;  // selector words, e.g. {"metaplectic", "neg"}
  bool left_shaded = false;
  int bottom = 0;
  std::vector<SliceEvent> slices;

  bool operator==(const PlanarTangle& o) const;
};

enum class EventClass { prep_cup, copy_cup, effect_cap, merge_cap, hourglass, bowtie };

const char* event_class_name(EventClass c);

struct ShadedTangle {
  PlanarTangle tangle;
  // shading[h][k] is true when region k is shaded at height h; height 0 is the
  // bottom boundary and height h+1 lies just above slice h.
  std::vector<std::vector<bool>> shading;
  std::vector<EventClass> classes;

  // Shaded regions (qudits) at a height, as region indices.
  std::vector<int> strips(size_t height) const;
  int input_count() const { return int(strips(0).size()); }
  int output_count() const { return int(strips(shading.size() - 1).size()); }
};

PlanarTangle parse_tangle(const std::string& text);
PlanarTangle load_tangle(const std::string& path);
std::string render_tangle(const PlanarTangle& t);

ShadedTangle infer_shading(const PlanarTangle& t);

// Debug picture: one row per height, strands as '|', shaded regions as '#'.
std::string render_ascii(const ShadedTangle& s);

// Resolves the header's hadamard selector; without one the Fourier matrix is
// used, which is only allowed when the tangle has no crossings.
Hadamard tangle_hadamard(const PlanarTangle& t, const std::string& base_dir = ".");

Circuit compile(const ShadedTangle& s, const Hadamard& h);

}  // namespace tanglelab
