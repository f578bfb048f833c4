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
#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "parallel.hpp"
#include "tanglelab/protocols.hpp"

namespace tanglelab {

namespace {

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Site subsets of size 0..max_size, by size and then lexicographically.
std::vector<std::vector<int>> subsets(int n, int max_size) {
  std::vector<std::vector<int>> out{{}};
  for (int size = 1; size <= std::min(n, max_size); ++size) {
    std::vector<int> s(size);
    for (int i = 0; i < size; ++i) s[i] = i;
    while (true) {
      out.push_back(s);
      int i = size - 1;
      while (i >= 0 && s[i] == n - size + i) --i;
      if (i < 0) break;
      ++s[i];
      for (int j = i + 1; j < size; ++j) s[j] = s[j - 1] + 1;
    }
  }
  return out;
}

std::string unit_name(int a, int b, int dim) {
  if (dim <= 10) return "E" + std::to_string(a) + std::to_string(b);
  return "E" + std::to_string(a) + "," + std::to_string(b);
}

// Row offsets of M (site index most significant first) for every value of
// the listed sites, and for every value of the remaining sites.
struct SiteSplit {
  std::vector<long> chosen;
  std::vector<long> rest;
};

SiteSplit split_sites(const std::vector<int>& chosen, int sites, long site_dim) {
  std::vector<long> stride(sites, 1);
  for (int s = sites - 2; s >= 0; --s) stride[s] = stride[s + 1] * site_dim;
  auto expand = [&](const std::vector<int>& which) {
    std::vector<long> out{0};
    for (int s : which) {
      std::vector<long> next;
      next.reserve(out.size() * site_dim);
      for (long base : out)
        for (long v = 0; v < site_dim; ++v) next.push_back(base + v * stride[s]);
      out.swap(next);
    }
    return out;
  };
  std::vector<int> rest;
  for (int s = 0; s < sites; ++s)
    if (std::find(chosen.begin(), chosen.end(), s) == chosen.end()) rest.push_back(s);
  return {expand(chosen), expand(rest)};
}

// G[(a, l'), (b, l)] = sum_r conj(M[a, r, l']) M[b, r, l], so that the KL
// matrix of the unit error |a><b| on the chosen sites is the (a, b) block.
MatrixXc reduced_gram(const MatrixXc& m, const SiteSplit& split) {
  const long na = long(split.chosen.size());
  const long nr = long(split.rest.size());
  const long L = m.cols();
  MatrixXc a(na * L, nr);
  for (long i = 0; i < na; ++i)
    for (long r = 0; r < nr; ++r)
      for (long l = 0; l < L; ++l) a(i * L + l, r) = m(split.chosen[i] + split.rest[r], l);
  return a.conjugate() * a.transpose();
}

KLRow judge(std::string name, const MatrixXc& k, double tol) {
  KLRow row;
  row.error = std::move(name);
  const MatrixXc id = MatrixXc::Identity(k.rows(), k.cols());
  Proportionality p = proportionality(k, id, tol);
  row.residual = p.residual;
  // A vanishing KL matrix is proportional to the identity with scalar 0.
  if (p.residual <= tol) row.scalar = p.candidate;
  return row;
}

struct Prepared {
  MatrixXc m;  // normalized so that M^dagger M = I
  double isometry_residual = 0.0;
  long site_dim = 0;
  int sites = 0;
};

Prepared prepare(const Circuit& encoder, const CodeSpec& spec, const KLOptions& opts) {
  const int wps = spec.wires_per_site();
  if (encoder.dim() != spec.wire_dim())
    throw DimensionError("kl_verify: encoder wire dimension " + std::to_string(encoder.dim()) +
                         " does not match the code");
  if (int(encoder.inputs().size()) != wps ||
      int(encoder.outputs().size()) != spec.sites() * wps)
    throw DimensionError("kl_verify: encoder boundary " +
                         std::to_string(encoder.inputs().size()) + " -> " +
                         std::to_string(encoder.outputs().size()) + " does not match " +
                         spec.label());
  Prepared p;
  p.m = evaluate(encoder, opts.eval).matrix();
  p.site_dim = ipow(encoder.dim(), wps);
  p.sites = spec.sites();
  const MatrixXc g = p.m.adjoint() * p.m;
  const double scale = g.diagonal().real().mean();
  if (!(scale > 0)) throw EvaluationError("kl_verify: encoder evaluates to zero");
  p.m /= std::sqrt(scale);
  p.isometry_residual =
      (p.m.adjoint() * p.m - MatrixXc::Identity(p.m.cols(), p.m.cols())).cwiseAbs().maxCoeff();
  return p;
}

}  // namespace

long kl_row_count(const CodeSpec& spec) {
  const long site_dim = spec.dim;
  const long per_site = spec.error_class == ErrorClass::phase ? site_dim : site_dim * site_dim;
  long total = 0;
  for (int k = 0; k <= std::min(spec.p - 1, spec.sites()); ++k)
    total += binomial(spec.sites(), k) * ipow(per_site, k);
  return total;
}

KLReport kl_verify(const Circuit& encoder, const CodeSpec& spec, const KLOptions& opts) {
  KLReport report;
  report.code = spec.label();
  const Prepared prep = prepare(encoder, spec, opts);
  report.isometry_residual = prep.isometry_residual;

  const auto subs = subsets(prep.sites, spec.p - 1);
  const long L = prep.m.cols();
  const long D = prep.site_dim;
  const bool diagonal = spec.error_class == ErrorClass::phase;
  std::vector<std::vector<KLRow>> per_subset(subs.size());

  detail::parallel_for(long(subs.size()), opts.workers, [&](long si) {
    const auto& sub = subs[si];
    const MatrixXc g = reduced_gram(prep.m, split_sites(sub, prep.sites, D));
    const int k = int(sub.size());
    const long units = diagonal ? ipow(D, k) : ipow(D * D, k);
    auto& rows = per_subset[si];
    rows.reserve(units);
    for (long u = 0; u < units; ++u) {
      // Decode the unit assignment, first chosen site most significant.
      long rem = u, a = 0, b = 0, place = 1;
      std::vector<std::pair<long, long>> ab(k);
      for (int j = k - 1; j >= 0; --j) {
        long x, y;
        if (diagonal) {
          x = y = rem % D;
          rem /= D;
        } else {
          y = rem % D;
          rem /= D;
          x = rem % D;
          rem /= D;
        }
        ab[j] = {x, y};
        a += x * place;
        b += y * place;
        place *= D;
      }
      std::string name;
      for (int j = 0; j < k; ++j) {
        if (j) name += "⊗";
        name += "site" + std::to_string(sub[j]) + ":" + unit_name(int(ab[j].first),
                                                                   int(ab[j].second), int(D));
      }
      if (name.empty()) name = "identity";
      rows.push_back(judge(std::move(name), g.block(a * L, b * L, L, L), opts.tol));
    }
  });

  report.pass = report.isometry_residual <= opts.tol;
  for (auto& rows : per_subset)
    for (auto& r : rows) {
      report.pass = report.pass && r.scalar.has_value();
      report.rows.push_back(std::move(r));
    }
  return report;
}

KLReport kl_verify_sampled(const Circuit& encoder, const CodeSpec& spec, int samples, Seed seed,
                           const KLOptions& opts) {
  KLReport report;
  report.code = spec.label() + " (sampled)";
  const Prepared prep = prepare(encoder, spec, opts);
  report.isometry_residual = prep.isometry_residual;
  const long D = prep.site_dim;
  const long L = prep.m.cols();
  std::mt19937_64 rng(seed.value);
  report.pass = report.isometry_residual <= opts.tol;
  for (int t = 0; t < samples; ++t) {
    std::vector<int> sites(prep.sites);
    for (int i = 0; i < prep.sites; ++i) sites[i] = i;
    for (int i = prep.sites - 1; i > 0; --i) std::swap(sites[i], sites[rng() % (i + 1)]);
    const int k = int(rng() % std::min(spec.p, prep.sites + 1));
    std::vector<int> sub(sites.begin(), sites.begin() + k);
    std::sort(sub.begin(), sub.end());
    std::string name;
    MatrixXc e = MatrixXc::Identity(1, 1);
    for (int j = 0; j < k; ++j) {
      MatrixXc u = random_unitary(int(D), Seed{rng()}).matrix();
      if (spec.error_class == ErrorClass::phase) u = MatrixXc(u.diagonal().asDiagonal());
      e = kron(ComplexMatrix(e), ComplexMatrix(u)).matrix();
      if (j) name += "⊗";
      name += "site" + std::to_string(sub[j]) + ":U";
    }
    if (name.empty()) name = "identity";
    const MatrixXc g = reduced_gram(prep.m, split_sites(sub, prep.sites, D));
    MatrixXc kmat = MatrixXc::Zero(L, L);
    for (long a = 0; a < e.rows(); ++a)
      for (long b = 0; b < e.cols(); ++b)
        if (e(a, b) != Complex(0.0)) kmat += e(a, b) * g.block(a * L, b * L, L, L);
    KLRow row = judge(std::move(name), kmat, opts.tol);
    report.pass = report.pass && row.scalar.has_value();
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string KLReport::to_json() const {
  nlohmann::ordered_json j;
  j["code"] = code;
  j["isometry_residual"] = isometry_residual;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["error"] = r.error;
    if (r.scalar)
      row["scalar"] = {r.scalar->real(), r.scalar->imag()};
    else
      row["scalar"] = nullptr;
    row["residual"] = r.residual;
    j["rows"].push_back(row);
  }
  j["pass"] = pass;
  return j.dump(2);
}

}  // namespace tanglelab
