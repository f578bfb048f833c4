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
#include "tanglelab/linalg.hpp"
#include "tanglelab/ueb.hpp"

namespace tanglelab {

// Matrix files: {"dim": n, "entries": [[re, im], ...]} with n*n entries in
// row-major order, or n entries for a diagonal.
ComplexMatrix parse_matrix_json(const std::string& text);
ComplexMatrix load_matrix_json(const std::string& path);
std::string matrix_to_json(const MatrixXc& m);

// UEB files: {"dim": d, "members": [matrix, ...]}.
std::vector<ComplexMatrix> parse_ueb_json(const std::string& text);
std::vector<ComplexMatrix> load_ueb_json(const std::string& path);

// "fourier" | "potts <k>" | "metaplectic [neg]" | "file <path>".
Hadamard hadamard_from_words(const std::vector<std::string>& words, int d,
                             const std::string& base_dir, double tol = 1e-9);

std::string read_file(const std::string& path);
std::string join_path(const std::string& base_dir, const std::string& path);

}  // namespace tanglelab
