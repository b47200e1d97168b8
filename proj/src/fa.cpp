#include "entrobound/fa.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace entrobound {

EigenvalueFamily::EigenvalueFamily(double alpha_exp, std::uint64_t terms)
    : alpha_(alpha_exp) {
  if (!(alpha_ > 1.0))
    throw DomainError("eigenvalue family needs alpha_exp > 1 to normalize");
  if (terms < 100) terms = 100;
  // S = sum_{k>=2} 1/(k log(k)^alpha). f(x) = 1/(x log(x)^alpha) is convex
  // decreasing for x >= 2, int f = log(x)^{1-alpha}/(1-alpha) + C, so the tail
  // over k > K is enclosed by [int_{K+1} + f(K+1)/2, int_{K+1/2}].
  long double partial = 0.0L, comp = 0.0L;
  for (std::uint64_t k = 2; k <= terms; ++k) {
    double x = static_cast<double>(k);
    long double term = 1.0L / (x * std::pow(std::log(x), alpha_));
    long double y = term - comp;
    long double t = partial + y;
    comp = (t - partial) - y;
    partial = t;
  }
  auto tail_from = [&](double x0) {
    return std::pow(std::log(x0), 1.0 - alpha_) / (alpha_ - 1.0);
  };
  double n1 = static_cast<double>(terms) + 1.0;
  double f_n1 = 1.0 / (n1 * std::pow(std::log(n1), alpha_));
  s_.lower = static_cast<double>(partial) + tail_from(n1) + 0.5 * f_n1;
  s_.upper = static_cast<double>(partial) + tail_from(n1 - 0.5);
  nu_ = 1.0 / s_.midpoint();
}

double EigenvalueFamily::lambda(std::uint64_t k) const {
  if (k < 2) throw DomainError("family eigenvalues are indexed from k = 2");
  double x = static_cast<double>(k);
  return nu_ / (x * std::pow(std::log(x), alpha_));
}

GSequence GSequence::log_power(double q) {
  if (!(q >= 0.0)) throw DomainError("log power must be nonnegative");
  return {q, false};
}

double GSequence::at(std::uint64_t k) const {
  if (zero) return 0.0;
  if (k < 1) throw DomainError("g(k) is defined for k >= 1");
  double l = std::log(static_cast<double>(k));
  return q == 0.0 ? 1.0 : std::pow(l, q);
}

EntropyVerdict counterexample_entropy(const EigenvalueFamily& family,
                                      std::uint64_t K) {
  double a = family.alpha_exp();
  if (!(a > 2.0 && a <= 3.0))
    throw DomainError("counterexample entropy needs alpha_exp in (2, 3]");
  if (K < 1000) throw DomainError("K must be at least 1000");

  long double partial = 0.0L, comp = 0.0L;
  for (std::uint64_t k = 2; k <= K; ++k) {
    double l = family.lambda(k);
    long double term = l > 0.0 ? -static_cast<long double>(l) * std::log(l) : 0.0L;
    long double y = term - comp;
    long double t = partial + y;
    comp = (t - partial) - y;
    partial = t;
  }

  // -lambda log lambda = nu/(k L_k^a) [log k + a log log k - log nu] with
  // L_k = log k. Each piece is decreasing in k beyond K >= 1000, so integral
  // comparison from K applies, with log(u) <= (2/e) sqrt(u) on the middle one:
  //   sum nu log(k) / (k L^a)        <= nu L^{2-a}/(a-2)        (L = log K)
  //   sum nu a loglog(k) / (k L^a)   <= nu a (2/e) L^{1.5-a}/(a-1.5)
  //   sum nu (-log nu) / (k L^a)     <= nu (-log nu) L^{1-a}/(a-1)
  double nu = family.nu();
  double L = std::log(static_cast<double>(K));
  double tail = nu * std::pow(L, 2.0 - a) / (a - 2.0) +
                nu * a * (2.0 / 2.7182818284590452) *
                    std::pow(L, 1.5 - a) / (a - 1.5) +
                nu * std::max(-std::log(nu), 0.0) * std::pow(L, 1.0 - a) / (a - 1.0);

  EntropyVerdict v;
  v.partial = static_cast<double>(partial);
  v.tail_bound = tail;
  v.finite = true;  // guaranteed in the admissible alpha_exp window
  v.upper = v.partial + v.tail_bound;
  return v;
}

BetaLogZ beta_log_z(double beta) {
  if (!(beta > 0.0 && beta <= 0.2))
    throw DomainError("beta must lie in (0, 0.2]");
  // I = int_0^inf exp(-beta x^2 + x) dx
  //   = exp(1/(4 beta)) sqrt(pi) (1 + erf(1/(2 sqrt(beta)))) / (2 sqrt(beta)),
  // and monotonicity of the integrand's comparison with the lattice sum gives
  // I <= Z <= 1 + I. Everything stays in the log domain.
  double sb = std::sqrt(beta);
  double log_i = 1.0 / (4.0 * beta) +
                 std::log(std::sqrt(3.14159265358979323846) *
                          (1.0 + std::erf(1.0 / (2.0 * sb))) / (2.0 * sb));
  BetaLogZ r;
  r.log_integral = log_i;
  r.lower = beta * log_i;
  r.upper = r.lower + beta * std::log1p(std::exp(-log_i));
  return r;
}

FeasibilityVerdict fa_weight_feasibility(const EigenvalueFamily& family,
                                         const GSequence& g, std::uint64_t K) {
  if (K < 1000) throw DomainError("K must be at least 1000");
  FeasibilityVerdict v;
  if (g.zero) {
    v.convergent = true;
    return v;
  }
  double a = family.alpha_exp();
  double q = g.q;

  long double partial = 0.0L, comp = 0.0L;
  for (std::uint64_t k = 2; k <= K; ++k) {
    long double term = static_cast<long double>(family.lambda(k)) * g.at(k);
    long double y = term - comp;
    long double t = partial + y;
    comp = (t - partial) - y;
    partial = t;
  }
  v.partial = static_cast<double>(partial);
  v.convergent = a - q > 1.0;
  if (v.convergent) {
    // Summand nu log(k)^{q-a} / k decreases beyond K, so the integral from K
    // bounds the tail: nu L^{q-a+1} / (a-q-1), L = log K.
    double L = std::log(static_cast<double>(K));
    v.tail_bound = family.nu() * std::pow(L, q - a + 1.0) / (a - q - 1.0);
    v.upper = v.partial + v.tail_bound;
  } else {
    v.tail_bound = std::numeric_limits<double>::infinity();
    v.upper = std::numeric_limits<double>::infinity();
  }
  return v;
}

}  // namespace entrobound
