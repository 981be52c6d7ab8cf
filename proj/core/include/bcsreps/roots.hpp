#pragma once

// Bracketed scalar root finding: secant steps guarded by a bisection
// backbone.  A secant candidate is accepted only inside the current bracket;
// if the same endpoint is replaced twice in a row (the classic regula-falsi
// stagnation pattern) the next step bisects, so the bracket width decays
// geometrically regardless of the integrand, while smooth problems keep
// near-secant convergence.

#include <cmath>
#include <string>

#include "bcsreps/errors.hpp"

namespace bcsreps::numerics {

struct RootResult {
  double root = 0.0;
  double f_root = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Find x in [lo, hi] with f(x) = 0.  Requires f(lo) and f(hi) of opposite
// sign (or one of them exactly zero).  Terminates when the bracket width is
// below xtol_abs + xtol_rel * |x| or f hits exactly zero.
template <typename F>
RootResult find_root_bracketed(F&& f, double lo, double hi,
                               double xtol_abs = 0.0, double xtol_rel = 4e-16,
                               int max_iter = 300) {
  double flo = f(lo);
  double fhi = f(hi);
  RootResult out;

  if (flo == 0.0) {
    out.root = lo;
    out.converged = true;
    return out;
  }
  if (fhi == 0.0) {
    out.root = hi;
    out.converged = true;
    return out;
  }
  if (std::isnan(flo) || std::isnan(fhi)) {
    throw NumericError("find_root_bracketed: NaN at bracket endpoint");
  }
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw NumericError(
        "find_root_bracketed: endpoints do not bracket a root (f(" +
        std::to_string(lo) + ")=" + std::to_string(flo) + ", f(" +
        std::to_string(hi) + ")=" + std::to_string(fhi) + ")");
  }

  double x = 0.5 * (lo + hi), fx = 0.0;
  int last_replaced = 0;   // -1: lo was replaced, +1: hi was replaced
  int same_side_runs = 0;  // consecutive replacements of the same endpoint

  for (int it = 0; it < max_iter; ++it) {
    const double width = hi - lo;
    double cand = lo - flo * width / (fhi - flo);
    const double margin = 0.01 * width;
    const bool stagnating = same_side_runs >= 2;
    if (stagnating || !(cand > lo + margin && cand < hi - margin)) {
      cand = 0.5 * (lo + hi);
      same_side_runs = 0;
    }
    x = cand;
    fx = f(x);
    out.iterations = it + 1;
    if (fx == 0.0) break;

    int replaced;
    if ((fx > 0.0) == (fhi > 0.0)) {
      hi = x;
      fhi = fx;
      replaced = +1;
    } else {
      lo = x;
      flo = fx;
      replaced = -1;
    }
    same_side_runs = (replaced == last_replaced) ? same_side_runs + 1 : 1;
    last_replaced = replaced;

    if (hi - lo <= xtol_abs + xtol_rel * std::abs(x)) break;
  }

  out.root = x;
  out.f_root = fx;
  out.converged = true;
  return out;
}

}  // namespace bcsreps::numerics
