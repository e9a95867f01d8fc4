#include "spline_gauss/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "spline_gauss/error.hpp"

namespace spline_gauss {

namespace {

constexpr int kMaxIterations = 100;

// Positive root number k (k = 1 is the largest) of P_n.
double positive_root(int n, int k) {
  const double pi = std::numbers::pi;
  const double m = n + 0.5;
  double lo = std::cos(k * pi / m);
  double hi = std::cos((k - 0.5) * pi / m);
  double f_lo = legendre_eval(n, lo).p;

  double x = std::cos((k - 0.25) * pi / m);
  for (int it = 0; it < kMaxIterations; ++it) {
    const auto [p, dp] = legendre_eval(n, x);
    if (p == 0.0) return x;
    if ((p < 0.0) == (f_lo < 0.0)) {
      lo = x;
      f_lo = p;
    } else {
      hi = x;
    }

    double next = dp != 0.0 ? x - p / dp : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);

    const double step = std::abs(next - x);
    x = next;
    if (step <= 2.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) {
      const auto check = legendre_eval(n, x);
      if (std::abs(check.p) <= 1e-14 * std::max(1.0, std::abs(check.dp))) {
        return x;
      }
    }
    if (hi - lo <= std::numeric_limits<double>::epsilon() * std::abs(x)) {
      return x;
    }
  }
  throw Error(ErrorKind::ConvergenceFailure,
              "Legendre root of degree " + std::to_string(n) +
                  " did not converge",
              k);
}

}  // namespace

LegendreValue legendre_eval(int n, double x) noexcept {
  if (n == 0) return {1.0, 0.0};
  double prev = 1.0;
  double cur = x;
  for (int l = 1; l < n; ++l) {
    const double next = ((2.0 * l + 1.0) * x * cur - l * prev) / (l + 1.0);
    prev = cur;
    cur = next;
  }
  const double denom = x * x - 1.0;
  double dp;
  if (denom == 0.0) {
    const double sign = (x > 0.0 || n % 2 == 1) ? 1.0 : -1.0;
    dp = sign * 0.5 * n * (n + 1.0);
  } else {
    dp = n * (x * cur - prev) / denom;
  }
  return {cur, dp};
}

std::vector<double> legendre_roots(int n) {
  if (n < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "Legendre degree must be positive");
  }
  std::vector<double> roots(static_cast<std::size_t>(n));
  for (int k = 1; k <= n / 2; ++k) {
    const double r = positive_root(n, k);
    roots[static_cast<std::size_t>(n - k)] = r;
    roots[static_cast<std::size_t>(k - 1)] = -r;
  }
  if (n % 2 == 1) roots[static_cast<std::size_t>(n / 2)] = 0.0;
  return roots;
}

GaussLegendre gauss_legendre(int n) {
  GaussLegendre rule;
  rule.nodes = legendre_roots(n);
  rule.weights.reserve(rule.nodes.size());
  for (double x : rule.nodes) {
    const double dp = legendre_eval(n, x).dp;
    rule.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
  }
  return rule;
}

}  // namespace spline_gauss
