#pragma once

#include <cstdint>

#include "entrobound/common.hpp"

namespace entrobound {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;

// Two-sided enclosure of a nonnegative quantity. Every tail estimate in this
// library is certified: the true value lies in [lower, upper] whenever the
// documented monotonicity/convexity hypotheses hold.
struct SeriesBracket {
  double lower = 0.0;
  double upper = 0.0;
  double midpoint() const { return 0.5 * (lower + upper); }
  double width() const { return upper - lower; }
  bool contains(double x) const { return lower <= x && x <= upper; }
};

// sum_{n=1..inf} n^{-s} for s > 1. Partial sum over `terms` terms plus a
// convexity-certified tail enclosure: for f convex decreasing,
//   int_{N+1} f + f(N+1)/2  <=  sum_{n>N} f(n)  <=  int_{N+1/2} f.
// Accurate even for s close to 1, where a plain integral test loses digits.
SeriesBracket zeta_series(double s, std::uint64_t terms = 200000);

// sum_{n=0..inf} (n+shift)^{-s} for shift > 0, s > 1. Same tail treatment.
SeriesBracket inverse_power_series(double shift, double s,
                                   std::uint64_t terms = 200000);

// sum_{n=0..inf} exp(-(n+shift)^{kappa/2}) (1 + (n+shift)^kappa), the trace of
// exp(-sqrt(H))(1+H) for the power-law level sequence H(n) = (n+shift)^kappa.
SeriesBracket exp_sqrt_series(double shift, double kappa);

// Harmonic number H_n from ln(n), valid for every n >= 1:
//   ln n + gamma <= H_n <= ln n + gamma + 1/(2n).
// Usable far beyond any summable range since only ln(n) enters.
SeriesBracket harmonic_from_log(double log_n);

// Exact (compensated) partial sums used where a frozen finite value is wanted.
double harmonic_partial(std::uint64_t n);
double power_sum_partial(std::uint64_t n, double s);  // sum_{k=1..n} k^{-s}

}  // namespace entrobound
