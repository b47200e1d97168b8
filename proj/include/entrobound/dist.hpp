#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "entrobound/common.hpp"

namespace entrobound {

// Probability distribution on {0, 1, ..., d-1}, read as a truncation of a
// distribution on the nonnegative integers. Construction rejects negative
// entries, normalizes, and records how far the input was from normalized.
class DiscreteDistribution {
 public:
  explicit DiscreteDistribution(std::vector<double> probs);

  static DiscreteDistribution uniform(std::size_t d);
  static DiscreteDistribution point_mass(std::size_t n, std::size_t d);

  // Geometric distribution with the given mean, truncated to d entries.
  // The dropped tail mass is (1-p)^d with p = 1/(mean+1); if it is not below
  // tail_tol the truncation is refused.
  static DiscreteDistribution geometric(double mean, std::size_t d,
                                        double tail_tol = 1e-12);

  std::size_t dim() const { return p_.size(); }
  double at(std::size_t n) const { return p_[n]; }
  const std::vector<double>& probs() const { return p_; }

  // |sum of raw input - 1| before normalization.
  double normalization_residual() const { return residual_; }
  bool is_normalized(double tol = 1e-12) const { return residual_ <= tol; }

  double mean() const;

 private:
  std::vector<double> p_;
  double residual_ = 0.0;
};

// Weight sequences w : {0, 1, 2, ...} -> (0, inf), nondecreasing for the
// built-ins. identity() is w_n = max(n, 1); power(kappa) is w_n = max(n,1)^kappa.
class WeightSequence {
 public:
  static WeightSequence identity();
  static WeightSequence power(double kappa);
  static WeightSequence ones();

  double at(std::size_t n) const;
  double kappa() const { return kappa_; }
  bool is_ones() const { return ones_; }

 private:
  double kappa_ = 1.0;
  bool ones_ = false;
};

// Joint distribution on a d x d grid, row-major; row index is X, column is Y.
class JointDistribution {
 public:
  JointDistribution(std::size_t d, std::vector<double> cells);

  std::size_t dim() const { return d_; }
  double at(std::size_t x, std::size_t y) const { return cells_[x * d_ + y]; }
  const std::vector<double>& cells() const { return cells_; }

  DiscreteDistribution marginal_x() const;
  DiscreteDistribution marginal_y() const;

  // P[X != Y].
  double mismatch_probability() const;

 private:
  std::size_t d_;
  std::vector<double> cells_;
};

double binary_entropy(double eps, LogBase lb = LogBase::natural());
double shannon_entropy(const DiscreteDistribution& p,
                       LogBase lb = LogBase::natural());
double renyi_entropy(const DiscreteDistribution& p, double alpha,
                     LogBase lb = LogBase::natural());
double tsallis_entropy(const DiscreteDistribution& p, double alpha);

// H(X|Y) = H(X,Y) - H(Y).
double conditional_entropy(const JointDistribution& joint,
                           LogBase lb = LogBase::natural());

// Total variation distance; the shorter vector is zero-padded. With a weight
// sequence, (1/2) sum_n w(n) |p_n - q_n| over vector indices n = 0, 1, ....
double total_variation(const DiscreteDistribution& p,
                       const DiscreteDistribution& q,
                       const std::optional<WeightSequence>& w = std::nullopt);

// The coupling of (p, q) attaining P[X != Y] = TV(p, q): diagonal min(p,q),
// off-diagonal the product of the normalized positive and negative parts.
JointDistribution maximal_coupling(const DiscreteDistribution& p,
                                   const DiscreteDistribution& q);

}  // namespace entrobound
