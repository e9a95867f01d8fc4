#include "spline_gauss/knots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spline_gauss/error.hpp"
#include "spline_gauss/legendre.hpp"

namespace spline_gauss {

KnotSequence::KnotSequence(std::vector<double> knots)
    : knots_(std::move(knots)) {
  const std::size_t last = knots_.size() - 1;
  left_ = 2.0 * knots_[0] - knots_[1];
  right_ = 2.0 * knots_[last] - knots_[last - 1];
  h_.resize(knots_.size() + 1);
  for (int k = 0; k <= n() + 1; ++k) h_[k] = x(k) - x(k - 1);
}

double KnotSequence::x(int k) const {
  if (k < -1 || k > n() + 1) {
    throw Error(ErrorKind::IndexOutOfRange, "knot index outside [-1, n+1]",
                k);
  }
  if (k == -1) return left_;
  if (k == n() + 1) return right_;
  return knots_[static_cast<std::size_t>(k)];
}

double KnotSequence::h(int k) const {
  if (k < 0 || k > n() + 1) {
    throw Error(ErrorKind::IndexOutOfRange,
                "interval index outside [0, n+1]", k);
  }
  return h_[static_cast<std::size_t>(k)];
}

int KnotSequence::interval_of(double t) const noexcept {
  // First knot strictly greater than t among x_1 .. x_{n-1}.
  const auto first = knots_.begin() + 1;
  const auto last = knots_.end() - 1;
  return static_cast<int>(std::upper_bound(first, last, t) - knots_.begin());
}

KnotSequence validate_knots(std::vector<double> knots, double a, double b,
                            KnotTolerances tol) {
  if (knots.size() < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "a knot sequence needs at least two knots");
  }
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw Error(ErrorKind::InvalidArgument, "domain must satisfy a < b");
  }
  if (knots.front() != a || knots.back() != b) {
    throw Error(ErrorKind::InvalidArgument,
                "first and last knots must equal the domain ends");
  }
  const int n = static_cast<int>(knots.size()) - 1;
  for (int k = 0; k < n; ++k) {
    if (!std::isfinite(knots[k + 1]) || !(knots[k] < knots[k + 1])) {
      throw Error(ErrorKind::NotIncreasing,
                  "knots must be finite and strictly increasing", k + 1);
    }
  }
  const double len = b - a;
  for (int k = 0; k <= n / 2; ++k) {
    const double left = knots[k] - a;
    const double right = b - knots[n - k];
    if (std::abs(left - right) > tol.symmetry * len) {
      throw Error(ErrorKind::NotSymmetric,
                  "knot is not mirrored about the midpoint", k);
    }
  }
  for (int k = 0; k + 1 <= n / 2; ++k) {
    const double second = knots[k] - 2.0 * knots[k + 1] + knots[k + 2];
    if (second < -tol.stretch * len) {
      throw Error(ErrorKind::NotStretched,
                  "interval lengths must not shrink towards the midpoint", k);
    }
  }
  return KnotSequence(std::move(knots));
}

namespace {

void check_domain(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw Error(ErrorKind::InvalidArgument, "domain must satisfy a < b");
  }
}

// Builds the sequence from its left half (x_0 .. x_{ceil(n/2)-1}); the
// midpoint and right half follow by reflection.
KnotSequence from_left_half(const std::vector<double>& left, int n, double a,
                            double b) {
  std::vector<double> knots(static_cast<std::size_t>(n) + 1);
  const double sum = a + b;
  for (int k = 0; 2 * k < n; ++k) {
    knots[k] = left[k];
    knots[n - k] = sum - left[k];
  }
  knots[0] = a;
  knots[n] = b;
  if (n % 2 == 0) knots[n / 2] = 0.5 * sum;
  return validate_knots(std::move(knots), a, b);
}

// Averages each internal point with the mirror of its partner.
KnotSequence symmetrized(const std::vector<double>& raw, double a, double b) {
  const int n = static_cast<int>(raw.size()) - 1;
  std::vector<double> left(static_cast<std::size_t>((n + 1) / 2));
  for (int k = 0; 2 * k < n; ++k) {
    left[k] = 0.5 * (raw[k] + ((a + b) - raw[n - k]));
  }
  return from_left_half(left, n, a, b);
}

}  // namespace

KnotSequence uniform_knots(int n, double a, double b) {
  if (n < 1) {
    throw Error(ErrorKind::InvalidArgument, "interval count must be >= 1");
  }
  check_domain(a, b);
  std::vector<double> left(static_cast<std::size_t>((n + 1) / 2));
  for (int k = 0; 2 * k < n; ++k) {
    left[k] = a + (b - a) * (static_cast<double>(k) / n);
  }
  return from_left_half(left, n, a, b);
}

KnotSequence geometric_knots(int internal, double q, double a, double b) {
  if (internal < 0) {
    throw Error(ErrorKind::InvalidArgument,
                "internal knot count must be >= 0");
  }
  if (!std::isfinite(q) || q < 1.0) {
    throw Error(ErrorKind::InvalidRatio,
                "stretching ratio must be >= 1, got " + std::to_string(q));
  }
  check_domain(a, b);
  const int n = internal + 1;
  const int half = n / 2;  // intervals strictly left of the middle

  // Partial sums of h_1 / h_1 = 1, q, q^2, ...
  std::vector<double> partial(static_cast<std::size_t>(half) + 1, 0.0);
  double power = 1.0;
  for (int k = 1; k <= half; ++k) {
    partial[k] = partial[k - 1] + power;
    power *= q;
  }
  // For odd n, power is now q^{half}, the middle interval.
  const double total = 2.0 * partial[half] + (n % 2 == 1 ? power : 0.0);

  std::vector<double> left(static_cast<std::size_t>((n + 1) / 2));
  for (int k = 0; 2 * k < n; ++k) {
    left[k] = a + (b - a) * (partial[k] / total);
  }
  return from_left_half(left, n, a, b);
}

KnotSequence chebyshev_knots(int internal, double a, double b) {
  if (internal < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "Chebyshev degree must be >= 1");
  }
  check_domain(a, b);
  const int n = internal + 1;
  std::vector<double> raw(static_cast<std::size_t>(n) + 1);
  raw[0] = a;
  raw[n] = b;
  for (int k = 1; k <= internal; ++k) {
    // (1 - cos(phi)) / 2 without the cancellation near the ends.
    const double phi = (2.0 * k - 1.0) * std::numbers::pi / (2.0 * internal);
    const double s = std::sin(0.5 * phi);
    raw[k] = a + (b - a) * (s * s);
  }
  return symmetrized(raw, a, b);
}

KnotSequence legendre_knots(int internal, double a, double b) {
  if (internal < 1) {
    throw Error(ErrorKind::InvalidArgument, "Legendre degree must be >= 1");
  }
  check_domain(a, b);
  const auto roots = legendre_roots(internal);
  const int n = internal + 1;
  std::vector<double> raw(static_cast<std::size_t>(n) + 1);
  raw[0] = a;
  raw[n] = b;
  for (int k = 1; k <= internal; ++k) {
    raw[k] = a + (b - a) * (0.5 * (1.0 + roots[k - 1]));
  }
  return symmetrized(raw, a, b);
}

}  // namespace spline_gauss
