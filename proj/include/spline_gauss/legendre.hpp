#pragma once

#include <vector>

namespace spline_gauss {

struct LegendreValue {
  double p;   // P_n(x)
  double dp;  // P_n'(x)
};

/// P_n and its derivative by the three-term recurrence.
LegendreValue legendre_eval(int n, double x) noexcept;

/// The n roots of P_n in ascending order.
///
/// Each positive root is isolated in the bracket given by the classical
/// angle bounds ((k - 1/2) pi / (n + 1/2), k pi / (n + 1/2)) and refined by
/// Newton steps that fall back to bisection when they leave the bracket.
/// Negative roots are mirrored and the middle root of odd n is exactly 0.
/// Throws Error(ConvergenceFailure) if a root does not settle within the
/// iteration cap.
std::vector<double> legendre_roots(int n);

/// n-point Gauss-Legendre nodes (ascending) and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

}  // namespace spline_gauss
