#include "sono/quadrature.hpp"

#include <cmath>
#include <cstdio>

namespace sono::numeric {

namespace {

struct Workspace {
  const std::function<double(double)>& f;
  long evals_left;
  double unresolved;  // accumulated error estimate of intervals given up on
};

double eval(Workspace& ws, double x) {
  --ws.evals_left;
  return ws.f(x);
}

// Recursive Simpson refinement with Richardson extrapolation. `whole` is the
// Simpson estimate over [a, b] with midpoint value fm.
double refine(Workspace& ws, double a, double fa, double b, double fb,
              double fm, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = eval(ws, lm);
  const double frm = eval(ws, rm);
  const double h6 = (b - a) / 12.0;
  const double left = h6 * (fa + 4.0 * flm + fm);
  const double right = h6 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || depth <= 0 || ws.evals_left <= 0) {
    if (std::abs(delta) > 15.0 * tol) ws.unresolved += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return refine(ws, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
         refine(ws, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol, double abs_floor, long max_evaluations) {
  if (!(rel_tol > 0.0)) throw std::domain_error("quadrature: rel_tol must be > 0");
  if (!(hi > lo)) throw std::domain_error("quadrature: need hi > lo");

  Workspace ws{f, max_evaluations, 0.0};

  // Coarse scale estimate to turn the relative tolerance into an absolute one.
  const int n_coarse = 64;
  const double h = (hi - lo) / n_coarse;
  double coarse = 0.5 * (std::abs(eval(ws, lo)) + std::abs(eval(ws, hi)));
  for (int i = 1; i < n_coarse; ++i) coarse += std::abs(eval(ws, lo + i * h));
  coarse *= h;
  const double tol = rel_tol * std::max(coarse, abs_floor);

  const double fa = eval(ws, lo);
  const double fb = eval(ws, hi);
  const double fm = eval(ws, 0.5 * (lo + hi));
  const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
  const double result = refine(ws, lo, fa, hi, fb, fm, whole, tol, 60);

  if (ws.unresolved > tol) {
    const double achieved =
        ws.unresolved / std::max(std::abs(result), abs_floor);
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "quadrature did not converge: requested rel %.3g, achieved "
                  "rel %.3g",
                  rel_tol, achieved);
    throw QuadratureError(msg, achieved);
  }
  return result;
}

}  // namespace sono::numeric
