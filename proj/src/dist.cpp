#include "entrobound/dist.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace entrobound {

namespace {

long double neg_xlogx(long double x) {
  if (x <= 0.0L) return 0.0L;
  return -x * std::log(x);
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<double> probs)
    : p_(std::move(probs)) {
  if (p_.empty()) throw DomainError("distribution needs at least one entry");
  long double sum = 0.0L;
  for (double v : p_) {
    if (v < 0.0 || !std::isfinite(v))
      throw DomainError("distribution entries must be finite and nonnegative");
    sum += v;
  }
  if (!(sum > 0.0L)) throw DomainError("distribution must have positive mass");
  residual_ = static_cast<double>(std::fabs(sum - 1.0L));
  for (double& v : p_) v = static_cast<double>(v / sum);
}

DiscreteDistribution DiscreteDistribution::uniform(std::size_t d) {
  if (d == 0) throw DomainError("distribution needs at least one entry");
  return DiscreteDistribution(std::vector<double>(d, 1.0 / static_cast<double>(d)));
}

DiscreteDistribution DiscreteDistribution::point_mass(std::size_t n, std::size_t d) {
  if (n >= d) throw DomainError("point mass index out of range");
  std::vector<double> p(d, 0.0);
  p[n] = 1.0;
  return DiscreteDistribution(std::move(p));
}

DiscreteDistribution DiscreteDistribution::geometric(double mean, std::size_t d,
                                                     double tail_tol) {
  if (!(mean > 0.0)) throw DomainError("geometric distribution needs mean > 0");
  if (d == 0) throw DomainError("distribution needs at least one entry");
  double p = 1.0 / (mean + 1.0);
  double q = mean / (mean + 1.0);
  // Dropped mass sum_{n >= d} p q^n = q^d.
  double tail = std::exp(static_cast<double>(d) * std::log(q));
  if (!(tail < tail_tol))
    throw TruncationError(
        "geometric truncation drops tail mass " + std::to_string(tail) +
            " at dimension " + std::to_string(d) + " (tolerance " +
            std::to_string(tail_tol) + "); increase the dimension",
        tail);
  std::vector<double> probs(d);
  double cur = p;
  for (std::size_t n = 0; n < d; ++n) {
    probs[n] = cur;
    cur *= q;
  }
  return DiscreteDistribution(std::move(probs));
}

double DiscreteDistribution::mean() const {
  long double m = 0.0L;
  for (std::size_t n = 0; n < p_.size(); ++n)
    m += static_cast<long double>(n) * p_[n];
  return static_cast<double>(m);
}

WeightSequence WeightSequence::identity() { return power(1.0); }

WeightSequence WeightSequence::power(double kappa) {
  if (!(kappa > 0.0)) throw DomainError("weight exponent must be positive");
  WeightSequence w;
  w.kappa_ = kappa;
  return w;
}

WeightSequence WeightSequence::ones() {
  WeightSequence w;
  w.ones_ = true;
  return w;
}

double WeightSequence::at(std::size_t n) const {
  if (ones_) return 1.0;
  double base = static_cast<double>(std::max<std::size_t>(n, 1));
  return kappa_ == 1.0 ? base : std::pow(base, kappa_);
}

JointDistribution::JointDistribution(std::size_t d, std::vector<double> cells)
    : d_(d), cells_(std::move(cells)) {
  if (d_ == 0 || cells_.size() != d_ * d_)
    throw DomainError("joint distribution needs d*d cells");
  long double sum = 0.0L;
  for (double v : cells_) {
    if (v < 0.0 || !std::isfinite(v))
      throw DomainError("joint cells must be finite and nonnegative");
    sum += v;
  }
  if (!(sum > 0.0L)) throw DomainError("joint distribution must have positive mass");
  for (double& v : cells_) v = static_cast<double>(v / sum);
}

DiscreteDistribution JointDistribution::marginal_x() const {
  std::vector<double> m(d_, 0.0);
  for (std::size_t x = 0; x < d_; ++x) {
    long double s = 0.0L;
    for (std::size_t y = 0; y < d_; ++y) s += cells_[x * d_ + y];
    m[x] = static_cast<double>(s);
  }
  return DiscreteDistribution(std::move(m));
}

DiscreteDistribution JointDistribution::marginal_y() const {
  std::vector<double> m(d_, 0.0);
  for (std::size_t y = 0; y < d_; ++y) {
    long double s = 0.0L;
    for (std::size_t x = 0; x < d_; ++x) s += cells_[x * d_ + y];
    m[y] = static_cast<double>(s);
  }
  return DiscreteDistribution(std::move(m));
}

double JointDistribution::mismatch_probability() const {
  long double diag = 0.0L;
  for (std::size_t x = 0; x < d_; ++x) diag += cells_[x * d_ + x];
  double v = 1.0 - static_cast<double>(diag);
  return v < 0.0 ? 0.0 : v;
}

double binary_entropy(double eps, LogBase lb) {
  if (!(eps >= 0.0 && eps <= 1.0))
    throw DomainError("binary entropy argument must lie in [0, 1]");
  if (eps == 0.0 || eps == 1.0) return 0.0;
  double h = -eps * std::log(eps) - (1.0 - eps) * std::log1p(-eps);
  return lb.from_nats(h);
}

double shannon_entropy(const DiscreteDistribution& p, LogBase lb) {
  long double h = 0.0L;
  for (double v : p.probs()) h += neg_xlogx(v);
  return lb.from_nats(static_cast<double>(h));
}

double renyi_entropy(const DiscreteDistribution& p, double alpha, LogBase lb) {
  if (!(alpha > 0.0) || alpha == 1.0)
    throw DomainError("Renyi order must lie in (0,1) or (1,inf)");
  long double s = 0.0L;
  for (double v : p.probs())
    if (v > 0.0) s += std::pow(static_cast<long double>(v), alpha);
  return lb.from_nats(static_cast<double>(std::log(s)) / (1.0 - alpha));
}

double tsallis_entropy(const DiscreteDistribution& p, double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0)
    throw DomainError("Tsallis order must lie in (0,1) or (1,inf)");
  long double s = 0.0L;
  for (double v : p.probs())
    if (v > 0.0) s += std::pow(static_cast<long double>(v), alpha);
  return static_cast<double>((s - 1.0L) / (1.0L - alpha));
}

double conditional_entropy(const JointDistribution& joint, LogBase lb) {
  long double hxy = 0.0L;
  for (double v : joint.cells()) hxy += neg_xlogx(v);
  // Keep the marginal alive for the loop; iterating the temporary's probs()
  // directly would dangle.
  DiscreteDistribution my = joint.marginal_y();
  long double hy = 0.0L;
  for (double v : my.probs()) hy += neg_xlogx(v);
  return lb.from_nats(static_cast<double>(hxy - hy));
}

double total_variation(const DiscreteDistribution& p, const DiscreteDistribution& q,
                       const std::optional<WeightSequence>& w) {
  std::size_t d = std::max(p.dim(), q.dim());
  long double s = 0.0L;
  for (std::size_t n = 0; n < d; ++n) {
    double pv = n < p.dim() ? p.at(n) : 0.0;
    double qv = n < q.dim() ? q.at(n) : 0.0;
    double weight = w ? w->at(n) : 1.0;
    s += weight * std::fabs(pv - qv);
  }
  return 0.5 * static_cast<double>(s);
}

JointDistribution maximal_coupling(const DiscreteDistribution& p,
                                   const DiscreteDistribution& q) {
  std::size_t d = std::max(p.dim(), q.dim());
  auto pv = [&](std::size_t n) { return n < p.dim() ? p.at(n) : 0.0; };
  auto qv = [&](std::size_t n) { return n < q.dim() ? q.at(n) : 0.0; };

  std::vector<double> pos(d), neg(d);
  long double tv = 0.0L;
  for (std::size_t n = 0; n < d; ++n) {
    double diff = pv(n) - qv(n);
    pos[n] = diff > 0.0 ? diff : 0.0;
    neg[n] = diff < 0.0 ? -diff : 0.0;
    tv += std::fabs(diff);
  }
  double t = 0.5 * static_cast<double>(tv);

  std::vector<double> cells(d * d, 0.0);
  for (std::size_t n = 0; n < d; ++n) cells[n * d + n] = std::min(pv(n), qv(n));
  if (t > 0.0) {
    for (std::size_t x = 0; x < d; ++x) {
      if (pos[x] == 0.0) continue;
      for (std::size_t y = 0; y < d; ++y) {
        if (neg[y] == 0.0) continue;
        cells[x * d + y] += pos[x] * neg[y] / t;
      }
    }
  }
  return JointDistribution(d, std::move(cells));
}

}  // namespace entrobound
