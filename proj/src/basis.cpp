#include "spline_gauss/basis.hpp"

#include <algorithm>
#include <string>

#include "spline_gauss/error.hpp"

namespace spline_gauss {

namespace {

inline double pos(double u) noexcept { return u > 0.0 ? u : 0.0; }

void check_basis_index(const KnotSequence& knots, int j) {
  if (j < 1 || j > basis_dimension(knots)) {
    throw Error(ErrorKind::IndexOutOfRange,
                "basis index outside [1, 2n+2]", j);
  }
}

}  // namespace

BasisCoefficients basis_coefficients(const KnotSequence& knots, int k) {
  if (k < 1 || k > knots.n() + 1) {
    throw Error(ErrorKind::IndexOutOfRange,
                "coefficient index outside [1, n+1]", k);
  }
  const double hp = knots.h(k - 1);
  const double hk = knots.h(k);
  const double sum = hk + hp;
  const double hp2 = hp * hp;
  const double hk2 = hk * hk;
  return BasisCoefficients{
      .a = 1.0 / (hk2 * (sum * sum)),
      .b = (2.0 * hk - hp) / (hp2 * hp * hk2),
      .c = -3.0 / (hp2 * hk),
      .alpha = (-3.0 * hk - 2.0 * hp) / ((sum * sum) * hk2 * hk),
      .beta = 3.0 / (sum * hk2),
      .gamma = (2.0 * hp - hk) / (hp2 * hk2 * hk),
      .eta = 3.0 / (hp * hk2),
  };
}

double eval_basis(const KnotSequence& knots, int j, double t) {
  check_basis_index(knots, j);
  const int k = (j + 1) / 2;
  const double lo = knots.x(k - 2);
  const double mid = knots.x(k - 1);
  const double hi = knots.x(k);
  if (t < lo || t >= hi) return 0.0;
  const bool odd = j % 2 == 1;
  const double hp = knots.h(k - 1);
  const double hk = knots.h(k);
  const double sum2 = (hp + hk) * (hp + hk);
  // Per-piece factorizations of the coefficient formulas; every term is
  // nonnegative, so nothing cancels.
  if (t < mid) {
    const double u = t - lo;
    const double s = mid - t;
    if (odd) return u * u * (3.0 * (hp + hk) * s + hk * u) / (hp * hp * hp * sum2);
    return u * u * u / (hp * hp * sum2);
  }
  const double r = pos(hi - t);
  if (odd) return r * r * r / (hk * hk * sum2);
  return r * r * (3.0 * hk * (hk - r) + hp * (3.0 * hk - 2.0 * r)) /
         (hk * hk * hk * sum2);
}

double integral_basis(const KnotSequence& knots, int j) {
  check_basis_index(knots, j);
  const int dim = basis_dimension(knots);
  if (j == 1 || j == dim) return 1.0 / 16.0;
  if (j == 2 || j == dim - 1) return 3.0 / 16.0;
  return 0.25;
}

std::array<double, 4> bezier_difference_controls(const KnotSequence& knots,
                                                 int k) {
  if (k < 2 || k > knots.n() / 2 + 1) {
    throw Error(ErrorKind::IndexOutOfRange,
                "control index outside [2, floor(n/2)+1]", k);
  }
  const double span = knots.x(k) - knots.x(k - 2);
  const double second = knots.x(k) - 2.0 * knots.x(k - 1) + knots.x(k - 2);
  return {0.0, 0.0, 1.0 / span, second / (span * span)};
}

SplineFunction::SplineFunction(KnotSequence knots, std::vector<double> coeffs)
    : knots_(std::move(knots)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != basis_dimension(knots_)) {
    throw Error(ErrorKind::InvalidArgument,
                "spline needs 2n+2 = " +
                    std::to_string(basis_dimension(knots_)) +
                    " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

double SplineFunction::operator()(double t) const {
  // On [x_{i-1}, x_i) only D_{2i-1} .. D_{2i+2} can be nonzero.
  const int i = knots_.interval_of(t);
  const int last = std::min(2 * i + 2, basis_dimension(knots_));
  double sum = 0.0;
  for (int j = 2 * i - 1; j <= last; ++j) {
    const double cj = coeffs_[static_cast<std::size_t>(j - 1)];
    if (cj != 0.0) sum += cj * eval_basis(knots_, j, t);
  }
  return sum;
}

double eval_spline(const SplineFunction& s, double t) { return s(t); }

double exact_integral(const SplineFunction& s) {
  double sum = 0.0;
  const int dim = basis_dimension(s.knots());
  for (int j = 1; j <= dim; ++j) {
    sum += s.coeffs()[static_cast<std::size_t>(j - 1)] *
           integral_basis(s.knots(), j);
  }
  return sum;
}

}  // namespace spline_gauss
