#pragma once

// Adaptive Gauss-Kronrod 7/15 quadrature.
//
// Globally adaptive: the interval with the largest error estimate is bisected
// until the summed estimate meets abs_tol + rel_tol * |integral|.  The
// per-interval estimate follows the classic QUADPACK scaling of |K15 - G7|,
// which is conservative for smooth integrands and degrades gracefully near
// integrable endpoint structure.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <string>
#include <vector>

#include "bcsreps/errors.hpp"

namespace bcsreps::numerics {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
  bool converged = false;
};

namespace detail {

// 15-point Kronrod abscissae on [-1, 1] (positive half; symmetric).
// Odd indices are the embedded 7-point Gauss abscissae.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// One Gauss-Kronrod 7/15 evaluation on [a, b].
template <typename F>
Panel gk15(F&& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);

  double fv[15];
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(c - h * kXgk[j]);
    fv[14 - j] = f(c + h * kXgk[j]);
  }
  fv[7] = f(c);

  double resk = kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  double resabs = kWgk[7] * std::abs(fv[7]);
  for (int j = 0; j < 7; ++j) {
    resk += kWgk[j] * (fv[j] + fv[14 - j]);
    resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    if (j % 2 == 1) {
      resg += kWg[j / 2] * (fv[j] + fv[14 - j]);
    }
  }

  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fv[7] - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  }

  Panel p;
  p.a = a;
  p.b = b;
  p.value = resk * h;
  double err = std::abs((resk - resg) * h);
  resasc *= std::abs(h);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  p.error = err;
  return p;
}

}  // namespace detail

// Integrate f over [a, b].  Throws NumericError if the tolerance cannot be
// met within max_intervals bisections.
template <typename F>
QuadratureResult integrate_adaptive(F&& f, double a, double b,
                                    double rel_tol = 1e-10,
                                    double abs_tol = 0.0,
                                    int max_intervals = 4000) {
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw DomainError("integrate_adaptive: bounds must be finite");
  }

  std::priority_queue<detail::Panel> heap;
  detail::Panel first = detail::gk15(f, a, b);
  double total = first.value;
  double total_err = first.error;
  heap.push(first);
  int n = 1;

  auto tolerance = [&](double v) {
    return std::max(abs_tol, rel_tol * std::abs(v));
  };

  while (total_err > tolerance(total) && n < max_intervals) {
    detail::Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval at floating-point resolution; accept its estimate as-is.
      total_err -= worst.error;
      continue;
    }
    detail::Panel left = detail::gk15(f, worst.a, mid);
    detail::Panel right = detail::gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++n;
  }

  out.value = total;
  out.error_estimate = total_err;
  out.intervals = n;
  out.converged = total_err <= tolerance(total);
  if (!out.converged) {
    throw NumericError(
        "integrate_adaptive: tolerance not met; achieved error estimate " +
        std::to_string(total_err) + " over " + std::to_string(n) +
        " intervals");
  }
  return out;
}

// Convenience wrapper returning only the value.
template <typename F>
double integral(F&& f, double a, double b, double rel_tol = 1e-10,
                double abs_tol = 0.0) {
  return integrate_adaptive(static_cast<F&&>(f), a, b, rel_tol, abs_tol).value;
}

}  // namespace bcsreps::numerics
