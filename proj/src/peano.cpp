#include "spline_gauss/peano.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <ostream>

#include "spline_gauss/error.hpp"
#include "spline_gauss/summation.hpp"

namespace spline_gauss {

namespace {

constexpr double kMatchTolerance = 1e-10;
constexpr double kSplineResidual = 1e-16;

}  // namespace

PeanoKernel::Half::Half(std::vector<double> knots_in,
                        std::vector<double> nodes_in,
                        std::vector<double> weights_in)
    : knots(std::move(knots_in)),
      nodes(std::move(nodes_in)),
      weights(std::move(weights_in)) {
  using ld = long double;
  const std::size_t n = knots.size() - 1;
  first_node.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    first_node[k] = static_cast<std::size_t>(
        std::lower_bound(nodes.begin(), nodes.end(), knots[k]) - nodes.begin());
  }

  anchors.assign(n + 1, {0.0L, 0.0L, 0.0L, 0.0L});
  for (std::size_t k = 0; k < n; ++k) {
    const auto [k0, k1, k2, k3] = anchors[k];
    const ld e = knots[k + 1];
    const ld h = e - knots[k];
    ld s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    for (std::size_t i = first_node[k];
         i < nodes.size() && nodes[i] < knots[k + 1]; ++i) {
      const ld w = weights[i];
      const ld d = e - nodes[i];
      s3 += w;
      s2 += w * d;
      s1 += w * d * d;
      s0 += w * d * d * d;
    }
    const ld h2 = h * h;
    anchors[k + 1] = {
        k0 + k1 * h + k2 * h2 / 2 + k3 * h2 * h / 6 + h2 * h2 / 24 - s0 / 6,
        k1 + k2 * h + k3 * h2 / 2 + h2 * h / 6 - s1 / 2,
        k2 + k3 * h + h2 / 2 - s2,
        k3 + h - s3,
    };
  }
}

long double PeanoKernel::Half::operator()(double t) const {
  using ld = long double;
  // Interval [x_{k-1}, x_k) containing t, clamped to [1, n].
  const auto k = static_cast<std::size_t>(
                     std::upper_bound(knots.begin() + 1, knots.end() - 1, t) -
                     knots.begin()) -
                 1;
  const auto [k0, k1, k2, k3] = anchors[k];
  const ld d = static_cast<ld>(t) - knots[k];
  const ld d2 = d * d;
  const ld value = k0 + k1 * d + k2 * d2 / 2 + k3 * d2 * d / 6 + d2 * d2 / 24;
  ld sum = 0;
  for (std::size_t i = first_node[k]; i < nodes.size() && nodes[i] < t; ++i) {
    const ld u = static_cast<ld>(t) - nodes[i];
    sum += weights[i] * u * u * u;
  }
  return value - sum / 6;
}

PeanoKernel::Half PeanoKernel::mirrored(const QuadratureRule& rule) {
  const auto flip = [](const auto& values) {
    std::vector<double> out;
    out.reserve(values.size());
    for (auto it = values.rbegin(); it != values.rend(); ++it) {
      out.push_back(-*it);
    }
    return out;
  };
  return Half(flip(rule.knots.knots()), flip(rule.nodes),
              std::vector<double>(rule.weights.rbegin(), rule.weights.rend()));
}

PeanoKernel::PeanoKernel(const QuadratureRule& rule)
    : a_(rule.knots.a()),
      b_(rule.knots.b()),
      centre_(0.5 * (rule.knots.a() + rule.knots.b())),
      left_(std::vector<double>(rule.knots.knots().begin(),
                                rule.knots.knots().end()),
            rule.nodes, rule.weights),
      right_(mirrored(rule)) {}

long double PeanoKernel::extended(double t) const {
  return t < centre_ ? left_(t) : right_(-t);
}

double PeanoKernel::operator()(double t) const {
  return static_cast<double>(extended(t));
}

double kernel_eval(const QuadratureRule& rule, double t) {
  return PeanoKernel(rule)(t);
}

double constant_numeric(const QuadratureRule& rule) {
  const PeanoKernel kernel(rule);
  std::vector<double> breaks;
  breaks.reserve(rule.size() + 2);
  breaks.push_back(rule.knots.a());
  breaks.insert(breaks.end(), rule.nodes.begin(), rule.nodes.end());
  breaks.push_back(rule.knots.b());
  breaks.push_back(kernel.centre());
  std::sort(breaks.begin(), breaks.end());

  // 3-point Gauss-Legendre on [-1, 1], exact through degree 5.
  const long double r = std::sqrt(0.6L);
  const std::array<long double, 3> x{-r, 0.0L, r};
  const std::array<long double, 3> w{5.0L / 9, 8.0L / 9, 5.0L / 9};

  long double sum = 0;
  for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
    const long double lo = breaks[s];
    const long double hi = breaks[s + 1];
    if (!(hi > lo)) continue;
    const long double mid = (lo + hi) / 2;
    const long double half = (hi - lo) / 2;
    for (int q = 0; q < 3; ++q) {
      const auto t = static_cast<double>(mid + half * x[q]);
      sum += half * w[q] * kernel.extended(t);
    }
  }
  return static_cast<double>(sum);
}

double quartic_oracle(const QuadratureRule& rule) {
  using ld = long double;
  const ld a = rule.knots.a();
  const ld b = rule.knots.b();
  const ld c = (a + b) / 2;
  const ld half = (b - a) / 2;
  const ld exact = 2 * half * half * half * half * half / 5;
  ld rule_sum = 0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const ld u = static_cast<ld>(rule.nodes[i]) - c;
    rule_sum += static_cast<ld>(rule.weights[i]) * u * u * u * u;
  }
  return static_cast<double>((exact - rule_sum) / 24);
}

ClosedFormConstant constant_closed_form(const QuadratureRule& rule) {
  const KnotSequence& knots = rule.knots;
  const int n = knots.n();
  const int top = (n + 1) / 2;

  double h5 = 0.0;
  for (int k = 0; k <= top; ++k) h5 += std::pow(knots.x(k + 1) - knots.x(k), 5);
  double nodes = 0.0;
  for (int k = 1; k <= top; ++k) {
    const double tau = rule.nodes[static_cast<std::size_t>(k - 1)];
    const double l = knots.x(k - 1) - tau;
    const double r = knots.x(k) - tau;
    nodes += rule.weights[static_cast<std::size_t>(k - 1)] * l * l * r * r;
  }
  const double as_printed = h5 / 720.0 - nodes / 12.0;

  CompensatedSum full;
  for (int k = 1; k <= n; ++k) full.add(std::pow(knots.h(k), 5) / 720.0);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double tau = rule.nodes[i];
    const int k = knots.interval_of(tau);
    const double l = knots.x(k - 1) - tau;
    const double r = knots.x(k) - tau;
    full.add(-rule.weights[i] * l * l * r * r / 24.0);
  }

  // The two constants are remainders of quartics that differ by a C1 cubic
  // spline, so they agree only up to the rule's own spline residual.
  const double numeric = constant_numeric(rule);
  const double slack = kSplineResidual * std::pow(knots.length(), 5);
  const auto matches = [&](double value) {
    return std::abs(value - numeric) <=
           kMatchTolerance * std::abs(numeric) + slack;
  };
  return ClosedFormConstant{
      as_printed,          full.value(),          numeric,
      matches(as_printed), matches(full.value()),
  };
}

ErrorConstant error_constant(const QuadratureRule& rule) {
  const ClosedFormConstant closed = constant_closed_form(rule);
  return ErrorConstant{closed, closed.numeric, quartic_oracle(rule)};
}

KernelScanReport kernel_sign_scan(const QuadratureRule& rule,
                                  int samples_per_segment) {
  if (samples_per_segment < 8) {
    throw Error(ErrorKind::InvalidArgument,
                "kernel scan needs at least 8 samples per segment");
  }
  const PeanoKernel kernel(rule);
  const KnotSequence& knots = rule.knots;
  const double len = knots.length();
  const double len4 = len * len * len * len;

  std::vector<double> breaks(knots.knots().begin(), knots.knots().end());
  breaks.insert(breaks.end(), rule.nodes.begin(), rule.nodes.end());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::vector<double> ts;
  ts.reserve(breaks.size() * static_cast<std::size_t>(samples_per_segment));
  for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
    const double lo = breaks[s];
    const double hi = breaks[s + 1];
    for (int j = 0; j < samples_per_segment; ++j) {
      ts.push_back(lo + (hi - lo) * (static_cast<double>(j) / samples_per_segment));
    }
  }
  ts.push_back(breaks.back());

  std::vector<double> values(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) values[i] = kernel(ts[i]);

  KernelScanReport report;
  report.samples = ts.size();
  const auto min_it = std::min_element(values.begin(), values.end());
  report.min_value = *min_it;
  report.min_location = ts[static_cast<std::size_t>(min_it - values.begin())];
  report.nonnegative = report.min_value >= -1e-13 * len4;

  const double threshold = 1e-10 * len4;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = std::abs(values[i]);
    if (v >= threshold) continue;
    const bool left_ok = i == 0 || v <= std::abs(values[i - 1]);
    const bool right_ok = i + 1 == values.size() || v <= std::abs(values[i + 1]);
    if (left_ok && right_ok) report.near_zeros.push_back(ts[i]);
  }
  report.zeros_at_knots = std::all_of(
      report.near_zeros.begin(), report.near_zeros.end(), [&](double t) {
        const int k = knots.interval_of(t);
        const double gap = std::min(std::abs(t - knots.x(k - 1)),
                                    std::abs(t - knots.x(k)));
        return gap <= 1e-6 * len;
      });
  return report;
}

void write_kernel_csv(std::ostream& out, const QuadratureRule& rule, int grid) {
  if (grid < 2) {
    throw Error(ErrorKind::InvalidArgument, "kernel grid must be >= 2");
  }
  const PeanoKernel kernel(rule);
  const double a = rule.knots.a();
  const double b = rule.knots.b();
  char line[96];
  std::snprintf(line, sizeof line, "# constant_numeric=%.17g\n",
                constant_numeric(rule));
  out << line << "t,K4\n";
  for (int i = 0; i <= grid; ++i) {
    const double t = i == grid ? b : a + (b - a) * (static_cast<double>(i) / grid);
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", t, kernel(t));
    out << line;
  }
}

}  // namespace spline_gauss
