#pragma once

#include <cstdint>

#include "entrobound/series.hpp"

namespace entrobound {

// Normalized eigenvalue family lambda_k = nu / (k log(k)^alpha_exp) for
// k >= 2, with nu = 1 / sum_{k>=2} 1/(k log(k)^alpha_exp). Normalizable for
// alpha_exp > 1; the interesting window for the finiteness questions below is
// alpha_exp in (2, 3].
class EigenvalueFamily {
 public:
  explicit EigenvalueFamily(double alpha_exp, std::uint64_t terms = 200000);

  double alpha_exp() const { return alpha_; }
  // Certified enclosure of the normalizing sum; nu is 1/midpoint.
  SeriesBracket normalizing_sum() const { return s_; }
  double nu() const { return nu_; }
  double lambda(std::uint64_t k) const;

 private:
  double alpha_;
  double nu_;
  SeriesBracket s_;
};

// Weight sequences g(k) appearing in sum_k lambda_k g(k) feasibility checks:
// either identically zero or g(k) = log(k)^q.
struct GSequence {
  double q = 0.0;
  bool zero = false;

  static GSequence zeros() { return {0.0, true}; }
  static GSequence log_power(double q);
  static GSequence log_squared() { return log_power(2.0); }
  double at(std::uint64_t k) const;
};

struct EntropyVerdict {
  double partial = 0.0;      // sum over k in [2, K]
  double tail_bound = 0.0;   // certified upper bound on the rest
  bool finite = false;       // is the full series finite
  double upper = 0.0;        // partial + tail_bound when finite
};

// Entropy sum of the family: sum_k -lambda_k log(lambda_k). Partial sum to K
// plus a certified integral tail using log(u) <= (2/e) sqrt(u); finite for
// every alpha_exp in (2, 3], which is what makes the family a counterexample
// candidate. Requires alpha_exp in (2, 3] and K >= 1000.
EntropyVerdict counterexample_entropy(const EigenvalueFamily& family,
                                      std::uint64_t K);

struct BetaLogZ {
  double lower = 0.0;   // beta * log(integral lower bound on Z(beta))
  double upper = 0.0;
  double log_integral = 0.0;  // log of the integral comparison value
};

// beta log Z(beta) for Z(beta) = sum_{n>=0} exp(-beta n^2 + n), evaluated
// entirely in the log domain:
//   log I = 1/(4 beta) + log( sqrt(pi) (1 + erf(1/(2 sqrt(beta)))) / (2 sqrt(beta)) )
// with the sum sandwiched by I <= Z <= 1 + I, so
//   beta log I <= beta log Z <= beta log I + beta log(1 + 1/I).
// Requires beta in (0, 0.2]. Stays finite and bounded away from zero as
// beta -> 0+ even though Z itself overflows any float.
BetaLogZ beta_log_z(double beta);

struct FeasibilityVerdict {
  double partial = 0.0;
  double tail_bound = 0.0;  // certified upper tail when convergent
  bool convergent = false;
  double upper = 0.0;
};

// sum_{k>=2} lambda_k g(k): with g = log^q this converges iff
// alpha_exp - q > 1. Divergent configurations still report the partial sum.
// Requires K >= 1000.
FeasibilityVerdict fa_weight_feasibility(const EigenvalueFamily& family,
                                         const GSequence& g, std::uint64_t K);

}  // namespace entrobound
