#include "sono/coherence.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "sono/units.hpp"

namespace sono::coherence {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kOverflowGuard = 1e150;

// Monic form of the characteristic cubic:
//   alpha^3 - 2i alpha^2 + 2 mu alpha - 2i g^2 = 0
struct MonicCubic {
  Complex c2, c1, c0;
  Complex eval(Complex a) const { return ((a + c2) * a + c1) * a + c0; }
  Complex deriv(Complex a) const { return (3.0 * a + 2.0 * c2) * a + c1; }
};

MonicCubic monic_cubic(double mu, double g_squared) {
  return {-2.0 * kI, Complex{2.0 * mu, 0.0}, -2.0 * kI * g_squared};
}

Complex newton_refine(const MonicCubic& p, Complex a) {
  for (int it = 0; it < 50; ++it) {
    const Complex d = p.deriv(a);
    if (d == Complex{0.0, 0.0}) break;
    const Complex step = p.eval(a) / d;
    a -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(a))) break;
  }
  return a;
}

// A double root splits under rounding into a pair straddling it at the
// sqrt(eps) scale; the pair mean recovers the root to full precision.
void symmetrize_clusters(std::array<Complex, 3>& roots) {
  constexpr double kClusterTol = 1e-6;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double scale =
          std::max({1.0, std::abs(roots[i]), std::abs(roots[j])});
      if (std::abs(roots[i] - roots[j]) <= kClusterTol * scale) {
        const Complex mean = 0.5 * (roots[i] + roots[j]);
        roots[i] = mean;
        roots[j] = mean;
      }
    }
  }
}

double scaled_residual(double mu, double g_squared, Complex a) {
  // Residual of the original (non-monic) cubic, relative to the largest
  // coefficient times the cubic scale of the root.
  const Complex value =
      0.5 * kI * a * a * a + a * a + kI * mu * a + g_squared;
  const double coeff_scale = std::max({0.5, 1.0, std::abs(mu), g_squared});
  const double root_scale = std::max(1.0, std::abs(a));
  return std::abs(value) / (coeff_scale * root_scale * root_scale * root_scale);
}

}  // namespace

StabilityReport characteristic_roots(const CoherenceParams& p) {
  if (!(p.g_squared >= 0.0))
    throw std::domain_error("characteristic_roots: g_squared must be >= 0");

  const MonicCubic cubic = monic_cubic(p.mu, p.g_squared);

  Eigen::Matrix3cd companion = Eigen::Matrix3cd::Zero();
  companion(1, 0) = 1.0;
  companion(2, 1) = 1.0;
  companion(0, 2) = -cubic.c0;
  companion(1, 2) = -cubic.c1;
  companion(2, 2) = -cubic.c2;

  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(companion, false);

  StabilityReport report;
  for (int k = 0; k < 3; ++k)
    report.roots[k] = newton_refine(cubic, solver.eigenvalues()(k));
  symmetrize_clusters(report.roots);
  std::sort(report.roots.begin(), report.roots.end(),
            [](const Complex& a, const Complex& b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });

  report.max_growth_rate = report.roots[0].real();
  for (int k = 0; k < 3; ++k) {
    report.max_growth_rate =
        std::max(report.max_growth_rate, report.roots[k].real());
    report.residuals[k] = scaled_residual(p.mu, p.g_squared, report.roots[k]);
  }
  report.is_runaway = report.max_growth_rate > kGrowthTol;
  return report;
}

InitialAmplitude modal_seed(const CoherenceParams& p, double scale) {
  // Equal mode weights scale/3 give, by the Newton power sums of the cubic,
  // A'(0) = scale * (2i)/3 and A''(0) = scale * (-4 - 4 mu)/3; in the
  // confluent (double-root) cases the secular mode drops out of this
  // combination, so marginal runs stay bounded.
  return InitialAmplitude{
      Complex{scale, 0.0},
      scale * 2.0 * kI / 3.0,
      Complex{scale * (-4.0 - 4.0 * p.mu) / 3.0, 0.0},
  };
}

AmplitudeTrajectory integrate_amplitude(const CoherenceParams& p,
                                        double tau_max, double step) {
  return integrate_amplitude(p, modal_seed(p), tau_max, step);
}

AmplitudeTrajectory integrate_amplitude(const CoherenceParams& p,
                                        const InitialAmplitude& init,
                                        double tau_max, double step) {
  if (!(step > 0.0))
    throw std::domain_error("integrate_amplitude: step must be > 0");
  if (!(tau_max >= 10.0 * step))
    throw std::domain_error("integrate_amplitude: tau_max must be >= 10*step");
  if (!(p.g_squared >= 0.0))
    throw std::domain_error("integrate_amplitude: g_squared must be >= 0");

  using State = std::array<Complex, 3>;  // (A, A', A'')
  const double mu = p.mu;
  const double g2 = p.g_squared;
  const auto rhs = [mu, g2](const State& y) -> State {
    // A''' = 2i (A'' + i mu A' + g^2 A)
    return {y[1], y[2], 2.0 * kI * (y[2] + kI * mu * y[1] + g2 * y[0])};
  };
  const auto axpy = [](const State& y, double h, const State& k) -> State {
    return {y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2]};
  };

  const long n_steps = std::lround(tau_max / step);

  AmplitudeTrajectory traj;
  traj.tau.reserve(n_steps + 1);
  traj.amplitude.reserve(n_steps + 1);

  State y{init.a, init.a_prime, init.a_double_prime};
  traj.tau.push_back(0.0);
  traj.amplitude.push_back(y[0]);

  for (long i = 1; i <= n_steps; ++i) {
    const State k1 = rhs(y);
    const State k2 = rhs(axpy(y, 0.5 * step, k1));
    const State k3 = rhs(axpy(y, 0.5 * step, k2));
    const State k4 = rhs(axpy(y, step, k3));
    for (int c = 0; c < 3; ++c)
      y[c] += step / 6.0 * (k1[c] + 2.0 * (k2[c] + k3[c]) + k4[c]);

    const double mag = std::abs(y[0]);
    if (!std::isfinite(mag)) {
      traj.status = TrajectoryStatus::overflow_truncated;
      break;
    }
    traj.tau.push_back(i * step);
    traj.amplitude.push_back(y[0]);
    if (mag > kOverflowGuard) {
      traj.status = TrajectoryStatus::overflow_truncated;
      break;
    }
  }

  // Least-squares slope of log|A| over the final third of the run.
  const double tau_end = traj.tau.back();
  const double tau_fit = tau_end * (2.0 / 3.0);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  long n = 0;
  for (std::size_t k = 0; k < traj.tau.size(); ++k) {
    if (traj.tau[k] < tau_fit) continue;
    const double mag = std::abs(traj.amplitude[k]);
    if (mag < 1e-300) continue;
    const double x = traj.tau[k];
    const double yv = std::log(mag);
    sx += x;
    sy += yv;
    sxx += x * x;
    sxy += x * yv;
    ++n;
  }
  const double denom = n * sxx - sx * sx;
  traj.fitted_growth_exponent = (n >= 2 && denom != 0.0)
                                    ? (n * sxy - sx * sy) / denom
                                    : 0.0;

  if (traj.status == TrajectoryStatus::ok &&
      traj.fitted_growth_exponent * step > 0.1)
    traj.status = TrajectoryStatus::accuracy_warning;
  return traj;
}

double critical_mu(double g_squared, double mu_lo, double mu_hi,
                   double abs_tol) {
  if (!(mu_lo < mu_hi))
    throw std::domain_error("critical_mu: need mu_lo < mu_hi");
  if (!(abs_tol > 0.0))
    throw std::domain_error("critical_mu: tolerance must be > 0");

  const auto runaway = [g_squared](double mu) {
    CoherenceParams p;
    p.mu = mu;
    p.g_squared = g_squared;
    return characteristic_roots(p).is_runaway;
  };

  bool lo_runaway = runaway(mu_lo);
  if (lo_runaway == runaway(mu_hi))
    throw BracketingError(
        "critical_mu: growth rate does not change sign inside the bracket");

  double lo = mu_lo, hi = mu_hi;
  while (hi - lo > abs_tol) {
    const double mid = 0.5 * (lo + hi);
    if (runaway(mid) == lo_runaway)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double mu_of_density(double rho_per_cm3, const CoherenceParams& p) {
  if (!(rho_per_cm3 > 0.0))
    throw std::domain_error("mu_of_density: density must be > 0");
  if (!(p.rho_critical_per_cm3 > 0.0))
    throw std::domain_error("mu_of_density: critical density must be > 0");
  return p.mu_critical * std::sqrt(rho_per_cm3 / p.rho_critical_per_cm3);
}

double transition_time_s(const CoherenceParams& p) {
  if (!(p.omega0_ev > 0.0))
    throw std::domain_error("transition_time: omega0 must be > 0");
  return units::inverse_ev_to_seconds(100.0 / p.omega0_ev);
}

}  // namespace sono::coherence
