#pragma once

#include <cstdint>
#include <optional>

#include "entrobound/dist.hpp"

namespace entrobound {

enum class EntropyKind { tsallis, renyi };

// Mean-limited Fano bound: for a coupling with P[X != Y] <= eps and
// E[X] <= E on the nonnegative integers,
//   H(X|Y) <= h(eps) + E h(eps/E),
// valid for eps in [0, E/(E+1)]. Outside that range the report still evaluates
// (with h clamped at 1), but in_validity_domain is false.
BoundReport fano_bound(double eps, double E, LogBase lb = LogBase::natural());

// |H(p) - H(q)| <= h(eps) + E h(eps/E) for TV(p,q) <= eps and both means <= E.
// Same expression as fano_bound; kept as its own entry point because the
// hypotheses differ.
BoundReport shannon_continuity_bound(double eps, double E,
                                     LogBase lb = LogBase::natural());

// The marginal attaining the Fano bound with equality: p(0) = 1 - eps and
// p(n) = eps * w(n-1) with w geometric of mean E/eps - 1. Requires
// 0 < eps <= E/(E+1). tail_tol gates the truncated tail mass of the marginal.
DiscreteDistribution extremal_marginal(double eps, double E, std::size_t d,
                                       double tail_tol = 1e-12);

// Joint distribution with X ~ extremal_marginal and Y = 0 almost surely, the
// coupling that meets the Fano bound: H(X|Y) = H(X) = fano_bound(eps, E).
JointDistribution extremal_joint(double eps, double E, std::size_t d,
                                 double tail_tol = 1e-12);

// Continuity bound for the alpha-Renyi and alpha-Tsallis entropies,
// alpha in (0,1), on a weighted countable alphabet. Both entropies share the
// same right-hand side:
//   (2^alpha / (1-alpha)) TV_w^beta TV^(alpha-beta) ||(w_i^{-beta/(1-alpha)})||_1^{1-alpha},
// Inside this operation the alphabet is indexed 1, 2, ...: vector entry j
// carries weight w(j+1), so identity weights give w_i = i as on the natural
// numbers. The weighted-norm series is summed to w_norm_truncation terms and
// the integral-test upper tail is added, preserving the bound direction.
BoundReport classical_renyi_tsallis_bound(
    const DiscreteDistribution& p, const DiscreteDistribution& q, double alpha,
    double beta, const WeightSequence& w = WeightSequence::identity(),
    std::uint64_t w_norm_truncation = 200000);

// Probability density sampled on a uniform grid over [a, b]; all integrals are
// trapezoidal.
struct GriddedDensity {
  double a = 0.0;
  double b = 1.0;
  std::vector<double> values;

  double step() const;
  double trapezoid_mass() const;
};

// Continuous-alphabet version of the Renyi/Tsallis continuity bound, with L1
// quantities evaluated by the trapezoid rule on matching grids. No 2^alpha
// factor here. kind selects the reported entropy; the Renyi case needs
// delta_lower = delta with Tf_alpha(mu), Tf_alpha(nu) >= 1/delta, which is
// validated numerically.
BoundReport continuous_renyi_tsallis_bound(
    const GriddedDensity& mu, const GriddedDensity& nu, double alpha,
    double beta, const GriddedDensity& w, EntropyKind kind,
    std::optional<double> delta_lower = std::nullopt);

// alpha > 1 bounds: Tsallis |T_a(p) - T_a(q)| <= (a/(a-1)) ||p-q||_a, and
// Renyi |R_a(p) - R_a(q)| <= (a delta/(a-1)) ||p-q||_a for
// sum p^a, sum q^a >= 1/delta (validated). The report's value is the requested
// kind; both are echoed in params. The Renyi kind requires delta.
BoundReport classical_alpha_gt1_bounds(const DiscreteDistribution& p,
                                       const DiscreteDistribution& q,
                                       double alpha, EntropyKind kind,
                                       std::optional<double> delta = std::nullopt);

}  // namespace entrobound
