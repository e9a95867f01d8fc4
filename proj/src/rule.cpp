#include "spline_gauss/rule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "spline_gauss/basis.hpp"
#include "spline_gauss/cubic.hpp"
#include "spline_gauss/error.hpp"

namespace spline_gauss {

namespace {

constexpr double kRoundingSlack = 16 * std::numeric_limits<double>::epsilon();

// Same relative slack as knot validation; generated sequences put the middle
// knot exactly on (a + b) / 2.
constexpr double kOnKnotTolerance = 1e-12;

RecursionState make_state(const KnotSequence& knots, int k, double theta,
                          double weight) {
  const BasisCoefficients c = basis_coefficients(knots, k + 1);
  const double rho = theta + knots.h(k + 1);
  const double t2 = theta * theta;
  const double r2 = rho * rho;
  const double A = 0.25 - weight * (c.a * r2 * rho + c.b * t2 * theta + c.c * t2);
  const double B = 0.25 - weight * (c.alpha * r2 * rho + c.beta * r2 +
                                    c.gamma * t2 * theta + c.eta * t2);
  return RecursionState{k, theta, rho, A, B};
}

void check_weight(double weight, int index) {
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw Error(ErrorKind::RecursionBreakdown,
                "weight is not positive: " + std::to_string(weight), index);
  }
}

}  // namespace

RecursionStep first_node(const KnotSequence& knots) {
  if (knots.n() < 2) {
    throw Error(ErrorKind::DomainTooSmall,
                "the recursion needs at least two intervals");
  }
  const double h1 = knots.h(1);
  const double theta = 0.75 * h1;
  const double weight = 16.0 / 27.0 * h1;
  return {make_state(knots, 1, theta, weight),
          {knots.x(1) - theta, weight}};
}

RecursionStep step(const RecursionState& state, const KnotSequence& knots) {
  const int i = state.k;
  if (i < 1 || i > knots.n() / 2 - 1) {
    throw Error(ErrorKind::InvalidArgument,
                "recursion step outside [1, floor(n/2) - 1]", i);
  }
  const int next = i + 1;
  const BasisCoefficients c = basis_coefficients(knots, next);
  const double denom = c.a * state.B - c.alpha * state.A;
  if (denom == 0.0 || !std::isfinite(denom)) {
    throw Error(ErrorKind::RecursionBreakdown, "vanishing denominator", next);
  }
  double theta = state.A * c.beta / denom;
  const double h = knots.h(next);
  // Nodes can approach their left knot closer than one ulp (uniform knots
  // converge there superexponentially); round those onto the knot.
  if (theta >= h && theta <= h * (1.0 + kRoundingSlack)) theta = h;
  if (!(theta > 0.0 && theta <= h)) {
    throw Error(ErrorKind::RecursionBreakdown,
                "node offset " + std::to_string(theta) +
                    " outside its interval of length " + std::to_string(h),
                next);
  }
  const double weight = state.A / (c.a * theta * theta * theta);
  check_weight(weight, next);
  const double node = std::max(knots.x(next) - theta, knots.x(next - 1));
  return {make_state(knots, next, theta, weight), {node, weight}};
}

NodeWeight close_even(const RecursionState& state, const KnotSequence& knots) {
  const int n = knots.n();
  const int m = n / 2;
  if (n % 2 != 0 || state.k != m) {
    throw Error(ErrorKind::InvalidArgument,
                "even closing step needs n = 2m and the state at k = m",
                state.k);
  }
  const double a_next = basis_coefficients(knots, m + 1).a;
  const double theta = knots.h(m + 1);
  const double weight =
      (state.A + state.B - 0.25) / (a_next * theta * theta * theta);
  check_weight(weight, m + 1);
  return {0.5 * (knots.a() + knots.b()), weight};
}

NodeWeight close_odd(const RecursionState& state, const KnotSequence& knots) {
  const int n = knots.n();
  const int m = (n + 1) / 2;
  if (n % 2 != 1 || state.k != m - 1) {
    throw Error(ErrorKind::InvalidArgument,
                "odd closing step needs n = 2m - 1 and the state at k = m - 1",
                state.k);
  }
  const BasisCoefficients cm = basis_coefficients(knots, m);
  const BasisCoefficients cp = basis_coefficients(knots, m + 1);
  const double A = state.A;
  const double B = state.B;
  const double h = knots.h(m + 1);

  // P theta^3 + Q theta^2 + R rho^3 - S rho^2 with rho = theta + h.
  const double P = A * (cm.alpha + cp.b) - B * (cm.a + cp.gamma);
  const double Q = A * (cm.beta + cp.c) - B * cp.eta;
  const double R = A * cp.a - B * cp.alpha;
  const double S = B * cp.beta;
  const CubicCoefficients cubic{
      P + R,
      Q + 3.0 * h * R - S,
      3.0 * h * h * R - 2.0 * h * S,
      h * h * h * R - h * h * S,
  };

  const double hm = knots.h(m);
  // As in the step, the root can sit within rounding of the left knot.
  double scale = 0.0;
  for (int i = 0; i < 4; ++i) scale += std::abs(cubic[i]) * std::pow(hm, 3 - i);
  std::optional<double> root;
  if (std::abs(eval_cubic(cubic, hm)) <= kRoundingSlack * scale) {
    root = hm;
  } else {
    root = largest_root_in(cubic, 0.0, hm);
  }
  if (!root) {
    throw Error(ErrorKind::NoRootInInterval,
                "closing cubic has no root inside the middle interval", m);
  }
  const double theta = *root;
  const double rho = theta + h;
  const double t2 = theta * theta;
  const double weight =
      A / ((cp.gamma + cm.a) * t2 * theta + cp.eta * t2 +
           cp.alpha * rho * rho * rho + cp.beta * rho * rho);
  check_weight(weight, m);

  const double node = knots.x(m) - theta;
  if (!(node < 0.5 * (knots.a() + knots.b()))) {
    throw Error(ErrorKind::RecursionBreakdown,
                "middle node is not left of the midpoint", m);
  }
  return {node, weight};
}

QuadratureRule compute_rule(const KnotSequence& knots) {
  const int n = knots.n();
  if (n == 1) {
    QuadratureRule rule = classical_two_point(knots.a(), knots.b());
    rule.knots = knots;
    return rule;
  }

  // Left half up to and including the middle node (even n) or the left node
  // of the middle pair (odd n).
  std::vector<NodeWeight> left;
  left.reserve(static_cast<std::size_t>(n / 2) + 1);
  RecursionStep cur = first_node(knots);
  left.push_back(cur.point);
  for (int i = 1; i <= n / 2 - 1; ++i) {
    cur = step(cur.state, knots);
    left.push_back(cur.point);
  }
  const Parity parity = n % 2 == 0 ? Parity::Even : Parity::Odd;
  left.push_back(parity == Parity::Even ? close_even(cur.state, knots)
                                        : close_odd(cur.state, knots));

  const std::size_t count = static_cast<std::size_t>(n) + 1;
  QuadratureRule rule{knots, std::vector<double>(count),
                      std::vector<double>(count), parity};
  const double sum = knots.a() + knots.b();
  for (std::size_t i = 0; i < left.size(); ++i) {
    rule.nodes[i] = left[i].node;
    rule.weights[i] = left[i].weight;
    const std::size_t mirror = count - 1 - i;
    if (mirror != i) {
      rule.nodes[mirror] = sum - left[i].node;
      rule.weights[mirror] = left[i].weight;
    }
  }
  for (std::size_t i = 0; i + 1 < count; ++i) {
    if (!(rule.nodes[i] < rule.nodes[i + 1])) {
      throw Error(ErrorKind::RecursionBreakdown, "nodes are not increasing",
                  static_cast<std::ptrdiff_t>(i + 1));
    }
  }
  return rule;
}

QuadratureRule classical_two_point(double a, double b) {
  const double half = 0.5 * (b - a);
  const double first = 0.5 * (a + b) - half / std::sqrt(3.0);
  return QuadratureRule{validate_knots({a, b}, a, b),
                        {first, (a + b) - first},
                        {half, half},
                        Parity::Odd};
}

NodePlacement node_placement(const QuadratureRule& rule) {
  const KnotSequence& knots = rule.knots;
  const double centre = 0.5 * (knots.a() + knots.b());
  NodePlacement placement;
  placement.per_interval.assign(static_cast<std::size_t>(knots.n()), 0);
  for (double t : rule.nodes) {
    if (t == centre) {
      ++placement.at_midpoint;
      continue;
    }
    for (double x : knots.knots()) {
      if (std::abs(t - x) <= kOnKnotTolerance * knots.length()) {
        ++placement.near_knots;
        break;
      }
    }
    if (t < knots.a() || t > knots.b()) continue;
    int k = knots.interval_of(t);
    if (t > centre && t == knots.x(k - 1)) --k;
    ++placement.per_interval[static_cast<std::size_t>(k - 1)];
  }
  return placement;
}

bool has_gaussian_placement(const QuadratureRule& rule) {
  const int n = rule.knots.n();
  if (static_cast<int>(rule.size()) != n + 1) return false;
  const NodePlacement p = node_placement(rule);
  if (p.at_midpoint != (n % 2 == 0 ? 1 : 0)) return false;
  const int middle = (n + 1) / 2;
  for (int k = 1; k <= n; ++k) {
    const int expected = (n % 2 == 1 && k == middle) ? 2 : 1;
    if (p.per_interval[static_cast<std::size_t>(k - 1)] != expected) return false;
  }
  return true;
}

WeightTrend observe_weight_trend(const QuadratureRule& rule) {
  WeightTrend trend;
  // Index (0-based) of the middle node, or of the left node of the pair.
  const std::size_t middle = (rule.size() - 1) / 2;
  for (std::size_t i = 0; i < middle; ++i) {
    if (!(rule.weights[i] < rule.weights[i + 1])) {
      trend.increasing = false;
      trend.violations.push_back(static_cast<int>(i + 1));
    }
  }
  return trend;
}

}  // namespace spline_gauss
