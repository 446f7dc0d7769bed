// Adaptive Simpson quadrature with a global relative-error target.

#pragma once

#include <functional>
#include <stdexcept>

namespace sono::numeric {

// Raised when the requested tolerance cannot be met within the evaluation
// budget; carries the tolerance that was actually achieved.
struct QuadratureError : std::runtime_error {
  QuadratureError(const std::string& msg, double achieved)
      : std::runtime_error(msg), achieved_rel_error(achieved) {}
  double achieved_rel_error;
};

// Integrates f over [lo, hi] to the requested relative tolerance.
// abs_floor guards the tolerance scaling for integrals near zero.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol, double abs_floor = 1e-300,
                 long max_evaluations = 10'000'000);

}  // namespace sono::numeric
