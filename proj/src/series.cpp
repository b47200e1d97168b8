#include "entrobound/series.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "entrobound/rng.hpp"

namespace entrobound {

double CounterRng::next_exponential() { return -std::log(next_double_open()); }

double CounterRng::next_gaussian() {
  // Box-Muller, cosine branch only: stateless and deterministic.
  double u1 = next_double_open();
  double u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

namespace {

// int_A^inf (x+shift)^{-s} dx = (A+shift)^{1-s} / (s-1)
double power_tail_integral(double from, double shift, double s) {
  return std::pow(from + shift, 1.0 - s) / (s - 1.0);
}

double kahan_sum(std::uint64_t n, double shift, double s) {
  double sum = 0.0, c = 0.0;
  for (std::uint64_t k = 0; k < n; ++k) {
    double term = std::pow(static_cast<double>(k) + shift, -s);
    double y = term - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace

SeriesBracket inverse_power_series(double shift, double s, std::uint64_t terms) {
  if (!(shift > 0.0)) throw DomainError("inverse power series needs shift > 0");
  if (!(s > 1.0))
    throw ConfigError("series sum_n (n+shift)^{-s} diverges: exponent s = " +
                      std::to_string(s) + " must exceed 1");
  if (terms < 2) terms = 2;
  double partial = kahan_sum(terms, shift, s);
  // Tail over n >= terms; f(x) = (x+shift)^{-s} is convex decreasing.
  double n0 = static_cast<double>(terms);
  double lo = power_tail_integral(n0, shift, s) + 0.5 * std::pow(n0 + shift, -s);
  double hi = power_tail_integral(n0 - 0.5, shift, s);
  return {partial + lo, partial + hi};
}

SeriesBracket zeta_series(double s, std::uint64_t terms) {
  // Memoized: the Monte Carlo suites evaluate the same weighted norms for
  // thousands of trials.
  static std::mutex mu;
  static std::map<std::pair<double, std::uint64_t>, SeriesBracket> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(s, terms);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  SeriesBracket v = inverse_power_series(1.0, s, terms);
  if (cache.size() < 4096) cache.emplace(key, v);
  return v;
}

SeriesBracket exp_sqrt_series(double shift, double kappa) {
  if (!(shift > 0.0)) throw DomainError("exp-sqrt series needs shift > 0");
  if (!(kappa > 0.0)) throw DomainError("exp-sqrt series needs kappa > 0");
  double sum = 0.0, c = 0.0;
  std::uint64_t n = 0;
  double term = 0.0;
  for (;; ++n) {
    double x = std::pow(static_cast<double>(n) + shift, kappa);
    term = std::exp(-std::sqrt(x)) * (1.0 + x);
    double y = term - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
    if (n >= 64 && term < 1e-18 * sum) break;
    if (n > 2000000)
      throw ConvergenceError("exp-sqrt series did not reach tolerance", term);
  }
  // Tail over m > n. Substituting u = (x+shift)^{kappa/2},
  //   int = (2/kappa) int_{u0}^inf e^{-u} (1+u^2) u^{2/kappa - 1} du,
  // and for u >= max(1, u0), (1+u^2) u^{2/kappa-1} <= 2 u^m with integer
  // m >= 2/kappa + 1, so the tail is below (4/kappa) Gamma(m+1, u0) which has
  // the closed form m! e^{-u0} sum_j u0^j/j!.
  double u0 = std::pow(static_cast<double>(n + 1) + shift, kappa / 2.0);
  int m = static_cast<int>(std::ceil(2.0 / kappa + 1.0));
  if (u0 < 1.0) u0 = 1.0;
  double acc = 0.0;    // m! sum_{j=0..m} u0^j / j!
  double factj = 1.0;  // j!
  double u0j = 1.0;    // u0^j
  double factm = 1.0;
  for (int j = 1; j <= m; ++j) factm *= j;
  for (int j = 0; j <= m; ++j) {
    acc += factm / factj * u0j;
    factj *= (j + 1);
    u0j *= u0;
  }
  double gamma_inc = std::exp(-u0) * acc;
  double tail_hi = (4.0 / kappa) * gamma_inc;
  return {sum, sum + tail_hi};
}

SeriesBracket harmonic_from_log(double log_n) {
  if (!(log_n >= 0.0)) throw DomainError("harmonic_from_log needs ln(n) >= 0");
  double lo = log_n + kEulerGamma;
  double hi = lo + 0.5 * std::exp(-log_n);
  return {lo, hi};
}

double harmonic_partial(std::uint64_t n) {
  double sum = 0.0, c = 0.0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    double y = 1.0 / static_cast<double>(k) - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double power_sum_partial(std::uint64_t n, double s) {
  double sum = 0.0, c = 0.0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    double y = std::pow(static_cast<double>(k), -s) - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace entrobound
