// Short-times stability analysis of the coherent field amplitude A(tau),
// tau = omega0 * t:
//
//     (i/2) A''' + A'' + i*mu*A' + g^2 A = 0
//
// Substituting A ~ exp(alpha*tau) gives the characteristic cubic
//     (i/2) alpha^3 + alpha^2 + i*mu*alpha + g^2 = 0.
// For g^2 = 0 the nonzero roots are i*(1 -+ sqrt(1 + 2*mu)): all growth
// rates vanish for mu >= -1/2 and a run-away branch with
// Re(alpha) = sqrt(-(1 + 2*mu)) opens below it. mu itself scales with the
// square root of the molecular number density and crosses -1/2 exactly at
// the critical density.

#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

namespace sono::coherence {

using Complex = std::complex<double>;

// Growth rates below this are treated as zero (marginal / oscillatory).
inline constexpr double kGrowthTol = 1e-12;

struct CoherenceParams {
  double omega0_ev = 12.06;            // two-level transition energy
  double g_squared = 0.0;              // coupling, << 1
  double mu = 0.0;                     // damping/pumping coefficient
  double mu_critical = -0.5;           // run-away threshold
  double rho_critical_per_cm3 = 1e22;  // density at which mu = mu_critical
};

struct StabilityReport {
  std::array<Complex, 3> roots{};   // growth exponents alpha [1/tau]
  double max_growth_rate = 0.0;     // max Re(alpha)
  bool is_runaway = false;          // max_growth_rate > kGrowthTol
  std::array<double, 3> residuals{};  // scaled |p(alpha)| per root
};

enum class TrajectoryStatus {
  ok,
  accuracy_warning,    // fitted growth * step > 0.1
  overflow_truncated,  // |A| exceeded the overflow guard; run cut short
};

struct InitialAmplitude {
  Complex a;
  Complex a_prime;
  Complex a_double_prime;
};

struct AmplitudeTrajectory {
  std::vector<double> tau;
  std::vector<Complex> amplitude;
  double fitted_growth_exponent = 0.0;  // log|A| slope over the final third
  TrajectoryStatus status = TrajectoryStatus::ok;
};

struct BracketingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Roots of the characteristic cubic via the companion matrix, Newton-refined
// and residual-checked. Near-coincident pairs (the marginal double root at
// mu = -1/2) are symmetrized to their cluster mean.
StabilityReport characteristic_roots(const CoherenceParams& p);

// Seed that excites every characteristic mode with equal weight scale/3.
// With A' = A'' = 0 the g^2 = 0 equation would hold A frozen (A enters only
// through the g^2 A term), so a run-away could never be observed.
InitialAmplitude modal_seed(const CoherenceParams& p, double scale = 1e-6);

// Fixed-step classical RK4 on (A, A', A''); fits the log|A| slope over the
// final third of the run.
AmplitudeTrajectory integrate_amplitude(const CoherenceParams& p,
                                        const InitialAmplitude& init,
                                        double tau_max, double step);
AmplitudeTrajectory integrate_amplitude(const CoherenceParams& p,
                                        double tau_max, double step);

// Bisects the run-away onset of max_growth_rate(mu) inside [mu_lo, mu_hi]
// to the given absolute tolerance. Throws BracketingError if the bracket
// does not straddle the onset.
double critical_mu(double g_squared, double mu_lo, double mu_hi,
                   double abs_tol = 1e-8);

// mu(rho) = mu_critical * sqrt(rho / rho_critical).
double mu_of_density(double rho_per_cm3, const CoherenceParams& p);

// Condensation timescale 100/omega0, in seconds.
double transition_time_s(const CoherenceParams& p);

}  // namespace sono::coherence
