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

#include "tanglelab/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tanglelab {

namespace {

using nlohmann::json;

ComplexMatrix matrix_from(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw ParseError("matrix object needs \"dim\" and \"entries\"", 1, 1);
  const long n = j.at("dim").get<long>();
  const json& e = j.at("entries");
  if (n < 1 || !e.is_array()) throw ParseError("bad matrix dimension or entries", 1, 1);
  auto value = [&](const json& z) {
    if (!z.is_array() || z.size() != 2) throw ParseError("entry must be [re, im]", 1, 1);
    return Complex(z[0].get<double>(), z[1].get<double>());
  };
  if (long(e.size()) == n * n) {
    MatrixXc m(n, n);
    for (long r = 0; r < n; ++r)
      for (long c = 0; c < n; ++c) m(r, c) = value(e[r * n + c]);
    return ComplexMatrix(std::move(m));
  }
  if (long(e.size()) == n) {
    MatrixXc m = MatrixXc::Zero(n, n);
    for (long r = 0; r < n; ++r) m(r, r) = value(e[r]);
    return ComplexMatrix(std::move(m));
  }
  throw ParseError("expected " + std::to_string(n * n) + " or " + std::to_string(n) +
                       " entries, found " + std::to_string(e.size()),
                   1, 1);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what(), 1, int(err.byte));
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string join_path(const std::string& base_dir, const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute() || base_dir.empty()) return p.string();
  return (std::filesystem::path(base_dir) / p).string();
}

ComplexMatrix parse_matrix_json(const std::string& text) {
  try {
    return matrix_from(parse_json(text));
  } catch (const json::exception& err) {
    throw ParseError(std::string("malformed matrix: ") + err.what(), 1, 1);
  }
}

ComplexMatrix load_matrix_json(const std::string& path) { return parse_matrix_json(read_file(path)); }

std::string matrix_to_json(const MatrixXc& m) {
  json e = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) e.push_back({m(r, c).real(), m(r, c).imag()});
  return json{{"dim", m.rows()}, {"entries", e}}.dump();
}

std::vector<ComplexMatrix> parse_ueb_json(const std::string& text) {
  try {
    json j = parse_json(text);
    if (!j.contains("members") || !j.at("members").is_array())
      throw ParseError("UEB object needs a \"members\" array", 1, 1);
    std::vector<ComplexMatrix> out;
    for (const json& m : j.at("members")) out.push_back(matrix_from(m));
    if (j.contains("dim"))
      for (const auto& m : out)
        if (m.rows() != j.at("dim").get<long>())
          throw ParseError("member dimension differs from declared dim", 1, 1);
    return out;
  } catch (const json::exception& err) {
    throw ParseError(std::string("malformed UEB: ") + err.what(), 1, 1);
  }
}

std::vector<ComplexMatrix> load_ueb_json(const std::string& path) {
  return parse_ueb_json(read_file(path));
}

Hadamard hadamard_from_words(const std::vector<std::string>& words, int d,
                             const std::string& base_dir, double tol) {
  if (words.empty()) throw ParseError("missing hadamard kind", 0, 0);
  const std::string& kind = words[0];
  if (kind == "fourier" && words.size() == 1) return fourier(d);
  if (kind == "metaplectic" && words.size() == 1) return metaplectic(d, Branch::principal);
  if (kind == "metaplectic" && words.size() == 2 && words[1] == "neg")
    return metaplectic(d, Branch::negated);
  if (kind == "potts" && words.size() == 2) {
    int k = 0;
    try {
      k = std::stoi(words[1]);
    } catch (const std::exception&) {
      throw ParseError("potts index must be an integer", 0, 0);
    }
    return potts_by_index(d, k);
  }
  if (kind == "file" && words.size() == 2) {
    const std::string path = join_path(base_dir, words[1]);
    ComplexMatrix m = load_matrix_json(path);
    if (m.rows() != d)
      throw DimensionError("hadamard file " + path + " has dimension " + std::to_string(m.rows()) +
                           ", expected " + std::to_string(d));
    return hadamard_from_matrix(m, tol, words[1]);
  }
  throw ParseError("unknown hadamard selector '" + kind + "'", 0, 0);
}

}  // namespace tanglelab
