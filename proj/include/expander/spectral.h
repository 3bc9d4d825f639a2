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

#ifndef EXPANDER_SPECTRAL_H_
#define EXPANDER_SPECTRAL_H_

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "expander/graph.h"

namespace expander {

// Normalization used for every "normalized spectral gap" in this library:
// the second-smallest eigenvalue of the random-walk Laplacian I - D^{-1}A.
// For a d-regular graph this equals 1 - mu_2/d.
inline constexpr const char* kNormalizedGapConvention =
    "lambda_2 of the random-walk Laplacian I - D^-1 A (equals 1 - mu_2/d on d-regular graphs)";

struct SpectrumReport {
  std::vector<double> eigenvalues;  // adjacency eigenvalues, descending
  double gap = 0.0;                 // mu_1 - mu_2
  double normalized_gap = 0.0;
  double mu_abs = 0.0;              // max(|mu_2|, |mu_n|)
  std::optional<int> regular_degree;
};

// Dense eigensolve of the adjacency matrix. Requires a connected graph with
// n >= 2 (DomainError otherwise).
SpectrumReport spectrum(const Graph& g);

// (n, d, alpha)-spectral-expander test mu(A)/d <= alpha. DomainError for
// reports of irregular graphs.
bool is_spectral_expander(const SpectrumReport& report, double alpha);

// Normalized gap alone, without the adjacency spectrum. Same preconditions
// as spectrum().
double normalized_spectral_gap(const Graph& g);

Eigen::MatrixXd adjacency_matrix(const Graph& g);
Eigen::MatrixXd laplacian_matrix(const Graph& g);

struct Rational {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct CheegerExact {
  Rational ratio;            // |boundary(S)| / |S|, reduced
  std::vector<Node> witness; // a minimizing S, |S| <= n/2
};

struct CheegerReport {
  std::optional<CheegerExact> exact;
  std::optional<double> spectral_lower;  // (d - mu_2) / 2
  std::optional<double> spectral_upper;  // sqrt(2 d (d - mu_2))
};

inline constexpr int kCheegerExactMaxNodes = 20;

// Exhaustive minimum of |boundary(S)|/|S| over nonempty S with |S| <= n/2.
// CapacityError above kCheegerExactMaxNodes; DomainError when disconnected
// or n < 2.
CheegerReport cheeger_exact(const Graph& g);

// Discrete Cheeger inequality bounds for connected d-regular graphs.
CheegerReport cheeger_bounds(const Graph& g);

// Number of triangles, Trace(A^3)/6, counted edge by edge.
std::int64_t triangle_count(const Graph& g);

// Effective resistances on one graph snapshot. The Laplacian pseudoinverse is
// computed once in the constructor; later edits to the source graph are not
// seen, so build a new calculator after every rewiring step.
class ResistanceCalculator {
 public:
  explicit ResistanceCalculator(const Graph& g);

  // (chi_u - chi_v)^T L^+ (chi_u - chi_v); +infinity across components.
  // DomainError for u == v.
  double resistance(Node u, Node v) const;

  const Eigen::MatrixXd& pseudoinverse() const { return pinv_; }

 private:
  Eigen::MatrixXd pinv_;
  std::vector<int> component_;
};

double effective_resistance(const Graph& g, Node u, Node v);

// 2 / (2 + #common neighbours); an upper bound on R_uv for every edge.
double triangle_resistance_bound(const Graph& g, Node u, Node v);

}  // namespace expander

#endif  // EXPANDER_SPECTRAL_H_
