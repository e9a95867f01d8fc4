#pragma once

#include <utility>
#include <vector>

#include "spline_gauss/knots.hpp"
#include "spline_gauss/summation.hpp"

namespace spline_gauss {

enum class Parity { Even, Odd };

struct NodeWeight {
  double node;
  double weight;
};

/// Running quantities of the left-to-right recursion after node k:
/// theta = x_k - tau_k, rho = x_{k+1} - tau_k, and the residuals
///   A = 1/4 - w_k D_{2k+1}(tau_k),  B = 1/4 - w_k D_{2k+2}(tau_k)
/// that node k + 1 still has to supply.
struct RecursionState {
  int k;
  double theta;
  double rho;
  double A;
  double B;
};

struct RecursionStep {
  RecursionState state;
  NodeWeight point;
};

/// An (n + 1)-point rule exact on the C1 cubic spline space over `knots`.
/// Nodes ascend strictly, weights are positive, and the right half is the
/// exact mirror image of the left half.
struct QuadratureRule {
  KnotSequence knots;
  std::vector<double> nodes;
  std::vector<double> weights;
  Parity parity;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// tau_1 = x_1 - 3/4 h_1, w_1 = 16/27 h_1 and the state for k = 1.
/// Requires n >= 2 (Error DomainTooSmall otherwise).
RecursionStep first_node(const KnotSequence& knots);

/// Node k + 1 from the state after node k, for k <= floor(n/2) - 1.
/// Throws Error(RecursionBreakdown) if the step leaves its interval.
RecursionStep step(const RecursionState& state, const KnotSequence& knots);

/// Middle node (a + b) / 2 and its weight for n = 2m, given the state at
/// k = m.
NodeWeight close_even(const RecursionState& state, const KnotSequence& knots);

/// Left node of the middle-interval pair for n = 2m - 1, given the state at
/// k = m - 1. theta_m is the largest root in (0, h_m) of the closing cubic;
/// throws Error(NoRootInInterval) when there is none.
NodeWeight close_odd(const RecursionState& state, const KnotSequence& knots);

/// Full rule: explicit recursion up to the midpoint, parity-specific closing
/// step, then reflection. n = 1 falls back to the two-point Gauss rule.
QuadratureRule compute_rule(const KnotSequence& knots);

/// Two-point Gauss-Legendre rule on [a, b].
QuadratureRule classical_two_point(double a, double b);

/// Sum of w_i f(tau_i), compensated.
template <typename F>
double apply(const QuadratureRule& rule, F&& f) {
  CompensatedSum sum;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum.add(rule.weights[i] * f(rule.nodes[i]));
  }
  return sum.value();
}

/// Nodes per interval k = 1..n. Nodes left of the midpoint c belong to
/// [x_{k-1}, x_k), nodes right of it to (x_{k-1}, x_k], so the count is
/// mirror-symmetric; a node equal to c is counted in `at_midpoint` instead.
/// `near_knots` counts the other nodes within rounding distance of a knot.
struct NodePlacement {
  std::vector<int> per_interval;
  int at_midpoint = 0;
  int near_knots = 0;
};

NodePlacement node_placement(const QuadratureRule& rule);

/// True when the placement is one node per interval plus the midpoint (even
/// n), or one node per interval except two in the middle one (odd n).
bool has_gaussian_placement(const QuadratureRule& rule);

/// Whether the weights increase strictly from the ends to the middle. Purely
/// observational; the property is conjectured, not guaranteed.
struct WeightTrend {
  bool increasing = true;
  std::vector<int> violations;  // 1-based i with w_i >= w_{i+1}
};

WeightTrend observe_weight_trend(const QuadratureRule& rule);

}  // namespace spline_gauss
