// Copyright 2026 The Expander Rewire Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "expander/spectral.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "expander/errors.h"

namespace expander {

namespace {

void require_connected(const Graph& g, const char* what) {
  if (g.node_count() < 2) {
    throw DomainError(std::string(what) + " needs at least 2 nodes");
  }
  if (!is_connected(g)) {
    throw DomainError(std::string(what) + " is undefined on a disconnected graph");
  }
}

std::vector<double> descending_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw DomainError("symmetric eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const int n = g.node_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Node u = 0; u < n; ++u) {
    for (Node v : g.neighbors(u)) a(u, v) = 1.0;
  }
  return a;
}

Eigen::MatrixXd laplacian_matrix(const Graph& g) {
  Eigen::MatrixXd l = -adjacency_matrix(g);
  for (Node u = 0; u < g.node_count(); ++u) l(u, u) = g.degree(u);
  return l;
}

double normalized_spectral_gap(const Graph& g) {
  require_connected(g, "normalized spectral gap");
  const int n = g.node_count();
  // D^{-1/2} A D^{-1/2} is similar to D^{-1} A, so it shares the spectrum.
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  for (Node u = 0; u < n; ++u) {
    for (Node v : g.neighbors(u)) {
      s(u, v) = 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
    }
  }
  const auto ev = descending_eigenvalues(s);
  return 1.0 - ev[1];
}

SpectrumReport spectrum(const Graph& g) {
  require_connected(g, "spectrum");
  SpectrumReport report;
  report.eigenvalues = descending_eigenvalues(adjacency_matrix(g));
  const auto& mu = report.eigenvalues;
  report.gap = mu[0] - mu[1];
  report.mu_abs = std::max(std::abs(mu[1]), std::abs(mu.back()));
  report.regular_degree = g.regular_degree();
  if (report.regular_degree) {
    report.normalized_gap = 1.0 - mu[1] / *report.regular_degree;
  } else {
    report.normalized_gap = normalized_spectral_gap(g);
  }
  return report;
}

bool is_spectral_expander(const SpectrumReport& report, double alpha) {
  if (!report.regular_degree || *report.regular_degree == 0) {
    throw DomainError("spectral-expander test is defined for regular graphs only");
  }
  return report.mu_abs / *report.regular_degree <= alpha;
}

CheegerReport cheeger_exact(const Graph& g) {
  const int n = g.node_count();
  if (n > kCheegerExactMaxNodes) {
    throw CapacityError("cheeger_exact enumerates subsets and is limited to n <= " +
                        std::to_string(kCheegerExactMaxNodes) + "; use cheeger_bounds for n = " +
                        std::to_string(n));
  }
  require_connected(g, "cheeger_exact");

  std::vector<std::uint32_t> nbr_mask(static_cast<std::size_t>(n), 0);
  for (Node u = 0; u < n; ++u) {
    for (Node v : g.neighbors(u)) nbr_mask[static_cast<std::size_t>(u)] |= 1u << v;
  }

  const int max_size = n / 2;
  std::int64_t best_num = std::numeric_limits<std::int64_t>::max();
  std::int64_t best_den = 1;
  std::uint32_t best_set = 0;
  const std::uint32_t end = 1u << n;
  for (std::uint32_t set = 1; set < end; ++set) {
    const int size = std::popcount(set);
    if (size > max_size) continue;
    // Each member contributes its edges leaving S; partial sums only grow,
    // so stop once the ratio cannot beat the current best.
    std::int64_t boundary = 0;
    bool pruned = false;
    for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      boundary += std::popcount(nbr_mask[static_cast<std::size_t>(u)] & ~set);
      if (best_num != std::numeric_limits<std::int64_t>::max() && boundary * best_den >= best_num * size) {
        pruned = true;
        break;
      }
    }
    if (pruned) continue;
    best_num = boundary;
    best_den = size;
    best_set = set;
  }

  CheegerExact exact;
  const std::int64_t common = std::gcd(best_num, best_den);
  exact.ratio = {best_num / common, best_den / common};
  for (std::uint32_t rest = best_set; rest != 0; rest &= rest - 1) {
    exact.witness.push_back(std::countr_zero(rest));
  }
  CheegerReport report;
  report.exact = std::move(exact);
  return report;
}

CheegerReport cheeger_bounds(const Graph& g) {
  const auto degree = g.regular_degree();
  if (!degree) {
    throw DomainError("cheeger_bounds requires a regular graph");
  }
  const SpectrumReport s = spectrum(g);
  const double d = *degree;
  const double gap = d - s.eigenvalues[1];
  CheegerReport report;
  report.spectral_lower = gap / 2.0;
  report.spectral_upper = std::sqrt(2.0 * d * std::max(gap, 0.0));
  return report;
}

std::int64_t triangle_count(const Graph& g) {
  std::int64_t per_edge_sum = 0;
  for (const Edge& e : g.edges()) per_edge_sum += common_neighbors(g, e.first, e.second);
  return per_edge_sum / 3;
}

ResistanceCalculator::ResistanceCalculator(const Graph& g) : component_(component_labels(g)) {
  const int n = g.node_count();
  if (n == 0) return;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian_matrix(g));
  if (solver.info() != Eigen::Success) {
    throw DomainError("Laplacian eigensolver did not converge");
  }
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const Eigen::MatrixXd& q = solver.eigenvectors();
  // Kernel dimension equals the component count; its eigenvalues are zero up
  // to rounding, well below the smallest nonzero Laplacian eigenvalue.
  const double cutoff = 1e-9 * std::max(1.0, lambda.cwiseAbs().maxCoeff());
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(n);
  for (int k = 0; k < n; ++k) {
    if (lambda(k) > cutoff) inv(k) = 1.0 / lambda(k);
  }
  pinv_ = q * inv.asDiagonal() * q.transpose();
}

double ResistanceCalculator::resistance(Node u, Node v) const {
  const int n = static_cast<int>(component_.size());
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw IndexError("node out of range in effective resistance");
  }
  if (u == v) {
    throw DomainError("effective resistance needs distinct nodes");
  }
  if (component_[static_cast<std::size_t>(u)] != component_[static_cast<std::size_t>(v)]) {
    return std::numeric_limits<double>::infinity();
  }
  return pinv_(u, u) + pinv_(v, v) - 2.0 * pinv_(u, v);
}

double effective_resistance(const Graph& g, Node u, Node v) {
  return ResistanceCalculator(g).resistance(u, v);
}

double triangle_resistance_bound(const Graph& g, Node u, Node v) {
  return 2.0 / (2.0 + common_neighbors(g, u, v));
}

}  // namespace expander
