#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "spline_gauss/knots.hpp"
#include "spline_gauss/oracle.hpp"

namespace spline_gauss::testing {

// Random symmetrically stretched sequence on [a, b] with n intervals: sorted
// random lengths on the left half, mirrored, and for odd n a middle interval
// at least as long as its neighbours.
inline KnotSequence random_stretched(Lcg64& rng, int n, double a = 0.0,
                                     double b = 1.0) {
  const int half = n / 2;
  std::vector<double> left(static_cast<std::size_t>(half));
  for (double& h : left) h = rng.uniform(0.2, 1.0);
  std::sort(left.begin(), left.end());
  std::vector<double> lengths(left);
  if (n % 2 == 1) {
    const double last = left.empty() ? 1.0 : left.back();
    lengths.push_back(last * rng.uniform(1.0, 1.5));
  }
  lengths.insert(lengths.end(), left.rbegin(), left.rend());

  double total = 0.0;
  for (double h : lengths) total += h;
  std::vector<double> x{a};
  double run = 0.0;
  for (std::size_t k = 0; k + 1 < lengths.size(); ++k) {
    run += lengths[k];
    x.push_back(a + (b - a) * run / total);
  }
  x.push_back(b);
  // Mirror exactly so rounding in the partial sums cannot break symmetry.
  for (int k = 1; 2 * k < n; ++k) {
    x[static_cast<std::size_t>(n - k)] = a + b - x[static_cast<std::size_t>(k)];
  }
  if (n % 2 == 0) x[static_cast<std::size_t>(n / 2)] = 0.5 * (a + b);
  return validate_knots(std::move(x), a, b);
}

inline int random_n(Lcg64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.next() >> 33) % (hi - lo + 1);
}

// Gaussian elimination with partial pivoting; `m` is row-major n x n.
inline std::vector<double> solve_dense(std::vector<double> m,
                                       std::vector<double> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) pivot = r;
    }
    for (std::size_t c = 0; c < n; ++c) std::swap(m[col * n + c], m[pivot * n + c]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / m[col * n + col];
      for (std::size_t c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double sum = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) sum -= m[i * n + c] * x[c];
    x[i] = sum / m[i * n + i];
  }
  return x;
}

// Natural cubic spline interpolating y at the knots (C2, zero second
// derivative at both ends).
class NaturalSpline {
 public:
  NaturalSpline(const KnotSequence& knots, std::vector<double> y)
      : x_(knots.knots().begin(), knots.knots().end()), y_(std::move(y)) {
    const std::size_t n = x_.size() - 1;
    m_.assign(n + 1, 0.0);
    if (n < 2) return;
    // Thomas algorithm for the interior second derivatives.
    std::vector<double> diag(n), upper(n), rhs(n);
    for (std::size_t i = 1; i < n; ++i) {
      const double h0 = x_[i] - x_[i - 1], h1 = x_[i + 1] - x_[i];
      diag[i] = 2.0 * (h0 + h1);
      upper[i] = h1;
      rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
      if (i > 1) {
        const double f = h0 / diag[i - 1];
        diag[i] -= f * upper[i - 1];
        rhs[i] -= f * rhs[i - 1];
      }
    }
    for (std::size_t i = n - 1; i >= 1; --i) {
      m_[i] = (rhs[i] - (i + 1 < n ? upper[i] * m_[i + 1] : 0.0)) / diag[i];
    }
  }

  double operator()(double t) const {
    std::size_t i = static_cast<std::size_t>(
        std::upper_bound(x_.begin() + 1, x_.end() - 1, t) - x_.begin());
    const double h = x_[i] - x_[i - 1];
    const double l = x_[i] - t, r = t - x_[i - 1];
    return (m_[i - 1] * l * l * l + m_[i] * r * r * r) / (6.0 * h) +
           (y_[i - 1] / h - m_[i - 1] * h / 6.0) * l +
           (y_[i] / h - m_[i] * h / 6.0) * r;
  }

  double integral() const {
    double sum = 0.0;
    for (std::size_t i = 1; i < x_.size(); ++i) {
      const double h = x_[i] - x_[i - 1];
      sum += h * (y_[i - 1] + y_[i]) / 2.0 - h * h * h * (m_[i - 1] + m_[i]) / 24.0;
    }
    return sum;
  }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;
};

struct TableRow {
  double tau;
  double omega;
};

struct TableColumn {
  int internal;  // N
  std::vector<TableRow> rows;
};

// Published nodes and weights on [0, 1], left half through the middle node.
inline const std::vector<TableColumn>& chebyshev_table() {
  static const std::vector<TableColumn> table{
      {5, {{0.006118, 0.014502}, {0.062790, 0.113850}, {0.233416, 0.230297},
           {0.500000, 0.282701}}},
      {6, {{0.004259, 0.010096}, {0.044447, 0.081009}, {0.169161, 0.172365},
           {0.378223, 0.236530}}},
      {7, {{0.003134, 0.007429}, {0.033034, 0.060392}, {0.127538, 0.132404},
           {0.292314, 0.192325}, {0.500000, 0.214901}}},
      {8, {{0.002402, 0.005693}, {0.025481, 0.046676}, {0.099304, 0.104319},
           {0.231216, 0.156780}, {0.405347, 0.186531}}},
      {9, {{0.001899, 0.004501}, {0.020237, 0.037119}, {0.079375, 0.084052},
           {0.186823, 0.129241}, {0.332973, 0.159838}, {0.500000, 0.170498}}},
  };
  return table;
}

inline const std::vector<TableColumn>& legendre_table() {
  static const std::vector<TableColumn> table{
      {5, {{0.011728, 0.027799}, {0.079882, 0.121347}, {0.251054, 0.219793},
           {0.500000, 0.262122}}},
      {6, {{0.008441, 0.020009}, {0.058300, 0.089278}, {0.187089, 0.169114},
           {0.386490, 0.221598}}},
      {7, {{0.006362, 0.015079}, {0.044320, 0.068207}, {0.144115, 0.132816},
           {0.304385, 0.183131}, {0.500000, 0.201532}}},
      {8, {{0.004964, 0.011766}, {0.034784, 0.053707}, {0.114113, 0.106506},
           {0.244557, 0.151589}, {0.410645, 0.176432}}},
      {9, {{0.003980, 0.009434}, {0.028004, 0.043337}, {0.092445, 0.087039},
           {0.200155, 0.126607}, {0.341205, 0.152710}, {0.500000, 0.161745}}},
  };
  return table;
}

inline const std::vector<TableColumn>& geometric_table() {
  static const std::vector<TableColumn> table{
      {5, {{0.017857, 0.042328}, {0.088993, 0.104896}, {0.244959, 0.216881},
           {0.500000, 0.271790}}},
      {6, {{0.008333, 0.019753}, {0.041530, 0.048952}, {0.114314, 0.101211},
           {0.312967, 0.330084}}},
      {7, {{0.008333, 0.019753}, {0.041530, 0.048952}, {0.114314, 0.101211},
           {0.261560, 0.203096}, {0.500000, 0.253977}}},
      {8, {{0.004032, 0.009558}, {0.020095, 0.023686}, {0.055313, 0.048973},
           {0.126561, 0.098272}, {0.318965, 0.319511}}},
      {9, {{0.004032, 0.009558}, {0.020095, 0.023686}, {0.055313, 0.048973},
           {0.126561, 0.098272}, {0.269215, 0.196605}, {0.500000, 0.245812}}},
  };
  return table;
}

// The geometric ratio-2 sequence with N + 1 internal knots and its centre
// knot removed: N internal knots and an even middle interval.
inline KnotSequence geometric_centre_removed(int internal) {
  const KnotSequence full = geometric_knots(internal + 1, 2.0, 0.0, 1.0);
  std::vector<double> x(full.knots().begin(), full.knots().end());
  x.erase(x.begin() + full.n() / 2);
  return validate_knots(std::move(x), 0.0, 1.0);
}

}  // namespace spline_gauss::testing
