#pragma once

#include <optional>

#include "entrobound/classical.hpp"
#include "entrobound/quantum.hpp"
#include "entrobound/series.hpp"

namespace entrobound {

// |S(rho) - S(sigma)| <= h(eps) + E h(eps/E) for (1/2)||rho - sigma||_1 <= eps
// and tr(N rho), tr(N sigma) <= E. Identical expression to fano_bound.
BoundReport vn_continuity_bound(double eps, double E,
                                LogBase lb = LogBase::natural());

// Energy-constrained continuity bound, general positive Hamiltonian with
// divergent partition function treated through g(x) = (1+x)log(1+x) - x log x:
//   |S(rho) - S(sigma)| <= h(eps) + 2 eps g(E / eps),
// evaluated stably as 2 eps [log1p(E/eps) + (E/eps) log1p(eps/E)]. The eps -> 0
// limit is 0 and is returned exactly at eps = 0.
BoundReport winter_bound_general(double eps, double E,
                                 LogBase lb = LogBase::natural());

// The same bound specialized to the number operator, in the closed form
//   h(eps) + 2 (E + eps) h(eps / (E + eps)).
// Agrees with winter_bound_general to ~1e-12 everywhere (they are equal).
BoundReport winter_bound_number_op(double eps, double E,
                                   LogBase lb = LogBase::natural());

// The alpha-parametrized variant: for alpha in (0, 1/2),
//   K(eps, alpha, E) = eps f [ log(E+1) + log(eps / (alpha (1 - eps))) ]
//                      + 3 f h~(eps (1+alpha) / (1-alpha)),
// with f = (1+alpha)/(1-alpha) + 2 alpha and h~ = h clamped to 1 above 1/2.
BoundReport winter_bound_alpha(double eps, double alpha, double E,
                               LogBase lb = LogBase::natural());

// Modulus of continuity and its conjugate omega*(t) = t int_t^inf omega(x)/x^2 dx.
// holder(a): omega(t) = t^a, omega*(t) = t^a/(1-a).
// almost_lipschitz(): omega(t) = -t log t on [0, 1/e], constant e beyond;
// omega*(t) = (e^2 - 1/2) t + t log^2(t)/2 below 1/e, constant e beyond.
class ModulusOfContinuity {
 public:
  static ModulusOfContinuity holder(double alpha);
  static ModulusOfContinuity almost_lipschitz();
  double omega(double t) const;
  double omega_star(double t) const;
  bool is_holder() const { return holder_; }
  double holder_exponent() const { return alpha_; }

 private:
  bool holder_ = true;
  double alpha_ = 0.5;
};

// Inputs for the spectral-projection approximation bound. alpha = w/q must lie
// in (0,1); p and q must be Holder conjugate. mu is the moment budget
// tr(H^beta_exp |f|(rho)) <= mu, validated numerically against both states.
struct ApproxBoundInputs {
  const DensityMatrix* rho = nullptr;
  const DensityMatrix* sigma = nullptr;
  HamiltonianSpec hamiltonian = HamiltonianSpec::number();
  double beta_exp = 0.5;
  double mu = 1.0;
  double eps = 0.1;
  double w = 2.0;
  double q = 2.5;
  double p = 2.5 / 1.5;
};

enum class SpectralFunctionKind { power, xlogx };

// || f(rho) - f(sigma) ||_1 bound by splitting along the spectral projection
// P = 1_{[0, mu/eps]}(H^beta_exp):
//   sqrt(8 eps) (sqrt(||f(rho)||_1) + sqrt(||f(sigma)||_1))
//     + c |f|_omega rank(P)^{1/p} ||rho - sigma||_w^{w/q}        (power kind)
// and for the xlogx kind the last factor is omega*_AL(||rho - sigma||_op) with
// rank(P) in place of rank^{1/p}. |f_alpha|_{C^alpha} = 1 = |xlogx|_AL.
BoundReport approx_trace_bound(const ApproxBoundInputs& in,
                               SpectralFunctionKind kind, double c = 1.0);

// Renyi/Tsallis continuity via approx_trace_bound with f = x^alpha divided by
// (1 - alpha); one RHS serves both entropies.
BoundReport quantum_renyi_tsallis_bound(const ApproxBoundInputs& in, double c = 1.0);

// alpha > 1: |T_alpha(rho) - T_alpha(sigma)| <= (alpha/(alpha-1)) ||rho-sigma||_alpha.
// The intermediate |tr rho^alpha - tr sigma^alpha| / (alpha - 1) is echoed.
BoundReport tsallis_lipschitz_bound(const DensityMatrix& rho,
                                    const DensityMatrix& sigma, double alpha);

// alpha > 1 Renyi with explicit delta: requires tr rho^alpha, tr sigma^alpha
// >= 1/delta (validated); value (alpha delta / (alpha - 1)) ||rho - sigma||_alpha.
BoundReport renyi_alpha_gt1_bound(const DensityMatrix& rho,
                                  const DensityMatrix& sigma, double alpha,
                                  double delta);

// alpha > 1 Renyi with delta built from an energy constraint: for states with
// tr(H rho), tr(H sigma) <= E and beta_split in (0,1),
//   delta = E^{alpha beta / (1-beta)} * tau^{alpha-1},
//   tau = tr(H^{-s}),  s = alpha beta / ((1-beta)(alpha-1)),
// where tau is summed with a certified tail (upper end used). The Hamiltonian
// must be power-law with positive shift and kappa*s > 1, else the trace
// diverges and the configuration is rejected.
BoundReport renyi_alpha_gt1_bound(const DensityMatrix& rho,
                                  const DensityMatrix& sigma, double alpha,
                                  const HamiltonianSpec& h, double E,
                                  double beta_split);

// Moment control tr(H^{1/2} f_1(rho)) <= tr(H rho) + tr(e^{-sqrt(H)} (1 + H))
// with f_1 = -x log x. The report value is the right side; the left side and
// slack are echoed in params.
BoundReport moment_bound_f1(const DensityMatrix& rho, const HamiltonianSpec& h);

enum class MomentVariant { half_power, general };

// Moment control for f_alpha = x^alpha:
//  half_power: tr(H^{1/2} f_alpha(rho)) <= tr(H rho) + tr(H^{(2 alpha - 1)/(2(alpha-1))}),
//              alpha in (1/2, 1); the trace converges iff its exponent decays
//              faster than 1/n, which is checked.
//  general:    tr(H^beta f_alpha(rho)) <= tr(H rho)^alpha tr(H^{-r/(1-alpha)}),
//              beta = alpha - r, r in (0, alpha); convergence needs
//              kappa r/(1-alpha) > 1 (checked). The sharper tau^{1-alpha}
//              variant of the right side is echoed as rhs_sharp.
BoundReport moment_bound_falpha(const DensityMatrix& rho, const HamiltonianSpec& h,
                                double alpha, MomentVariant variant,
                                std::optional<double> r = std::nullopt);

// Fixed witness family for unbounded Renyi entropy at small alpha:
// lambda_i = (i+1)^{-1/alpha} / zeta(1/alpha), i >= 0, for alpha in (0,1).
// tr(rho^alpha) truncated to d levels equals H_d / zeta(1/alpha)^alpha, which
// grows without bound; all certificates run in the log domain so dimensions
// far beyond anything materializable can be reasoned about.
class DivergenceWitness {
 public:
  explicit DivergenceWitness(double alpha);

  double alpha() const { return alpha_; }
  SeriesBracket normalizer() const { return z_; }

  // Enclosure of sum_{i<d} lambda_i^alpha for a materialized dimension.
  SeriesBracket trace_power_partial(std::uint64_t d) const;
  // Same, for dimensions given only through ln(d).
  SeriesBracket trace_power_partial_log(double log_d) const;
  // ln(d) certified to push the truncated trace power above `threshold`.
  double crossing_log_dim(double threshold) const;

  // Mean of the full (untruncated) state under the number operator; finite
  // iff alpha < 1/2, else the energy series diverges (ConfigError).
  bool energy_finite() const { return alpha_ < 0.5; }
  SeriesBracket mean_energy() const;

 private:
  double alpha_;
  SeriesBracket z_;
};

}  // namespace entrobound
