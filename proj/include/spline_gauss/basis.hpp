#pragma once

#include <array>
#include <vector>

#include "spline_gauss/knots.hpp"

namespace spline_gauss {

// The non-normalized C1 cubic B-spline basis D_1 .. D_{2n+2}.
//
// For k = 1 .. n + 1 the pair D_{2k-1}, D_{2k} is supported on
// [x_{k-2}, x_k] and is given there by
//
//   D_{2k-1}(t) = a_k (x_k - t)_+^3 + b_k (x_{k-1} - t)_+^3
//                 + c_k (x_{k-1} - t)_+^2
//   D_{2k}(t)   = alpha_k (x_k - t)_+^3 + beta_k (x_k - t)_+^2
//                 + gamma_k (x_{k-1} - t)_+^3 + eta_k (x_{k-1} - t)_+^2
//
// with coefficients depending only on h_{k-1} and h_k. The phantom knots
// make I[D_1] = I[D_{2n+2}] = 1/16 and I[D_2] = I[D_{2n+1}] = 3/16; every
// other member integrates to 1/4 over [a, b].
//
// Basis indices j are 1-based throughout, as are coefficient indices k.

struct BasisCoefficients {
  double a;
  double b;
  double c;
  double alpha;
  double beta;
  double gamma;
  double eta;
};

/// Coefficients for index k in [1, n + 1].
BasisCoefficients basis_coefficients(const KnotSequence& knots, int k);

/// Number of basis functions, 2n + 2.
inline int basis_dimension(const KnotSequence& knots) noexcept {
  return 2 * knots.n() + 2;
}

/// D_j(t). Zero outside [x_{k-2}, x_k) with k = ceil(j / 2). Evaluated per
/// piece in factored form, equal to the truncated-power expansion over the
/// coefficients of index k.
double eval_basis(const KnotSequence& knots, int j, double t);

/// Exact integral of D_j over [a, b].
double integral_basis(const KnotSequence& knots, int j);

/// Bernstein control values (q0, q1, q2, q3) of D_{2k-1} - D_{2k} over
/// [x_{k-2}, x_{k-1}], for k in [2, floor(n/2) + 1].
std::array<double, 4> bezier_difference_controls(const KnotSequence& knots,
                                                 int k);

/// Element of the spline space as coordinates over D_1 .. D_{2n+2}.
class SplineFunction {
 public:
  SplineFunction(KnotSequence knots, std::vector<double> coeffs);

  const KnotSequence& knots() const noexcept { return knots_; }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

  double operator()(double t) const;

 private:
  KnotSequence knots_;
  std::vector<double> coeffs_;
};

double eval_spline(const SplineFunction& s, double t);

/// Sum of coeff_j * I[D_j].
double exact_integral(const SplineFunction& s);

}  // namespace spline_gauss
