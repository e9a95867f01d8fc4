#include "spline_gauss/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace spline_gauss {

namespace {

constexpr int kGridCells = 64;
constexpr int kMaxIterations = 200;

double eval_derivative(const CubicCoefficients& c, double t) noexcept {
  return (3.0 * c[0] * t + 2.0 * c[1]) * t + c[2];
}

// Real roots of 3 c0 t^2 + 2 c1 t + c2.
std::vector<double> critical_points(const CubicCoefficients& c) {
  const double qa = 3.0 * c[0];
  const double qb = 2.0 * c[1];
  const double qc = c[2];
  if (qa == 0.0) {
    if (qb == 0.0) return {};
    return {-qc / qb};
  }
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc < 0.0) return {};
  const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
  std::vector<double> out;
  out.push_back(q / qa);
  if (q != 0.0) out.push_back(qc / q);
  return out;
}

// Newton inside a shrinking sign-change bracket, bisecting whenever Newton
// leaves it. Stops once the residual is below f_tol and either the bracket is
// narrower than x_tol or the Newton step has stalled at rounding level.
double refine(const CubicCoefficients& c, double lo, double hi,
              double f_tol, double x_tol) {
  double f_lo = eval_cubic(c, lo);
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < kMaxIterations; ++it) {
    const double f = eval_cubic(c, x);
    if (f == 0.0) return x;
    if ((f < 0.0) == (f_lo < 0.0)) {
      lo = x;
      f_lo = f;
    } else {
      hi = x;
    }
    const double df = eval_derivative(c, x);
    double next = df != 0.0 ? x - f / df : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const bool stalled =
        std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x);
    if (std::abs(f) <= f_tol && (hi - lo <= x_tol || stalled)) return x;
    if (next == x) return x;
    x = next;
  }
  return x;
}

}  // namespace

double eval_cubic(const CubicCoefficients& c, double t) noexcept {
  return ((c[0] * t + c[1]) * t + c[2]) * t + c[3];
}

std::optional<double> largest_root_in(const CubicCoefficients& c, double lo,
                                      double hi) {
  if (!(lo < hi)) return std::nullopt;
  std::vector<double> grid;
  grid.reserve(kGridCells + 3);
  for (int i = 0; i <= kGridCells; ++i) {
    grid.push_back(lo + (hi - lo) * (static_cast<double>(i) / kGridCells));
  }
  grid.back() = hi;
  for (double t : critical_points(c)) {
    if (t > lo && t < hi) grid.push_back(t);
  }
  std::sort(grid.begin(), grid.end());

  const double scale =
      std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2]), std::abs(c[3])});
  const double f_tol = 1e-14 * scale;
  const double x_tol = 1e-15 * (hi - lo);

  for (std::size_t i = grid.size() - 1; i > 0; --i) {
    const double left = grid[i - 1];
    const double right = grid[i];
    const double f_left = eval_cubic(c, left);
    const double f_right = eval_cubic(c, right);
    if (f_right == 0.0 && right < hi) return right;
    if ((f_left < 0.0 && f_right > 0.0) || (f_left > 0.0 && f_right < 0.0)) {
      return refine(c, left, right, f_tol, x_tol);
    }
  }
  return std::nullopt;
}

}  // namespace spline_gauss
