#include "entrobound/classical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entrobound/series.hpp"

namespace entrobound {

namespace {

BoundReport mean_limited_bound(const char* name, double eps, double E, LogBase lb) {
  if (!(eps >= 0.0 && eps <= 1.0))
    throw DomainError("eps must lie in [0, 1]");
  if (!(E > 0.0)) throw DomainError("mean limit E must be positive");
  BoundReport r;
  r.name = name;
  r.in_validity_domain = eps <= E / (E + 1.0);
  double h1 = binary_entropy(eps, lb);
  double h2 = E * binary_entropy(std::min(eps / E, 1.0), lb);
  r.combination = TermCombination::sum;
  r.add_term("h(eps)", h1);
  r.add_term("E*h(eps/E)", h2);
  r.value = h1 + h2;
  r.set_param("eps", eps);
  r.set_param("E", E);
  r.set_param("eps_max", E / (E + 1.0));
  return r;
}

}  // namespace

BoundReport fano_bound(double eps, double E, LogBase lb) {
  return mean_limited_bound("fano", eps, E, lb);
}

BoundReport shannon_continuity_bound(double eps, double E, LogBase lb) {
  return mean_limited_bound("shannon", eps, E, lb);
}

DiscreteDistribution extremal_marginal(double eps, double E, std::size_t d,
                                       double tail_tol) {
  if (!(E > 0.0)) throw DomainError("mean limit E must be positive");
  if (!(eps > 0.0 && eps <= E / (E + 1.0)))
    throw DomainError("extremal marginal needs 0 < eps <= E/(E+1)");
  if (d < 2) throw DomainError("extremal marginal needs dimension >= 2");
  // Conditional mean of the geometric part so that the full mean is E.
  double mean_w = E / eps - 1.0;
  // Marginal tail mass is eps * (tail of w), so gate w at tail_tol / eps.
  DiscreteDistribution w =
      DiscreteDistribution::geometric(mean_w, d - 1, tail_tol / eps);
  std::vector<double> probs(d);
  probs[0] = 1.0 - eps;
  for (std::size_t n = 1; n < d; ++n) probs[n] = eps * w.at(n - 1);
  return DiscreteDistribution(std::move(probs));
}

JointDistribution extremal_joint(double eps, double E, std::size_t d,
                                 double tail_tol) {
  DiscreteDistribution m = extremal_marginal(eps, E, d, tail_tol);
  std::vector<double> cells(d * d, 0.0);
  for (std::size_t n = 0; n < d; ++n) cells[n * d] = m.at(n);
  return JointDistribution(d, std::move(cells));
}

BoundReport classical_renyi_tsallis_bound(const DiscreteDistribution& p,
                                          const DiscreteDistribution& q,
                                          double alpha, double beta,
                                          const WeightSequence& w,
                                          std::uint64_t w_norm_truncation) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("alpha must lie in (0, 1)");
  if (!(beta > 0.0 && beta < alpha))
    throw DomainError("beta must lie in (0, alpha)");
  double s = beta / (1.0 - alpha);
  double kappa = w.is_ones() ? 0.0 : w.kappa();
  if (!(kappa * s > 1.0))
    throw ConfigError(
        "weighted norm sum_i w_i^{-beta/(1-alpha)} diverges: the decay "
        "exponent kappa*beta/(1-alpha) = " +
        std::to_string(kappa * s) + " must exceed 1");

  // Alphabet letters are 1-based here: vector entry j is letter j+1.
  std::size_t d = std::max(p.dim(), q.dim());
  long double tv_acc = 0.0L, tvw_acc = 0.0L;
  for (std::size_t j = 0; j < d; ++j) {
    double pv = j < p.dim() ? p.at(j) : 0.0;
    double qv = j < q.dim() ? q.at(j) : 0.0;
    double diff = std::fabs(pv - qv);
    tv_acc += diff;
    tvw_acc += w.at(j + 1) * diff;
  }
  double tv = 0.5 * static_cast<double>(tv_acc);
  double tvw = 0.5 * static_cast<double>(tvw_acc);

  // sum_{i>=1} w_i^{-s} = sum i^{-kappa s}: partial sum plus integral-test
  // upper tail, added so the bound keeps its direction.
  SeriesBracket z = zeta_series(kappa * s, w_norm_truncation);
  double norm = z.upper;

  BoundReport r;
  r.name = "renyi-tsallis-classical";
  r.combination = TermCombination::product;
  double c0 = std::pow(2.0, alpha) / (1.0 - alpha);
  double t1 = tv > 0.0 ? std::pow(tvw, beta) : 0.0;
  double t2 = tv > 0.0 ? std::pow(tv, alpha - beta) : 0.0;
  double t3 = std::pow(norm, 1.0 - alpha);
  r.add_term("2^alpha/(1-alpha)", c0);
  r.add_term("TV_w^beta", t1);
  r.add_term("TV^(alpha-beta)", t2);
  r.add_term("weight_norm^(1-alpha)", t3);
  r.value = tv > 0.0 ? c0 * t1 * t2 * t3 : 0.0;
  r.set_param("alpha", alpha);
  r.set_param("beta", beta);
  r.set_param("tv", tv);
  r.set_param("tv_weighted", tvw);
  r.set_param("weight_norm", norm);
  r.set_param("weight_norm_tail", z.width());
  r.set_param("w_norm_truncation", static_cast<double>(w_norm_truncation));
  r.set_param("w_kappa", kappa);
  return r;
}

double GriddedDensity::step() const {
  if (values.size() < 2) throw DomainError("gridded density needs >= 2 points");
  if (!(b > a)) throw DomainError("gridded density needs b > a");
  return (b - a) / static_cast<double>(values.size() - 1);
}

double GriddedDensity::trapezoid_mass() const {
  double h = step();
  long double s = 0.0L;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double weight = (i == 0 || i + 1 == values.size()) ? 0.5 : 1.0;
    s += weight * values[i];
  }
  return static_cast<double>(s) * h;
}

namespace {

double trapezoid(const GriddedDensity& grid, const std::vector<double>& f) {
  double h = grid.step();
  long double s = 0.0L;
  for (std::size_t i = 0; i < f.size(); ++i) {
    double weight = (i == 0 || i + 1 == f.size()) ? 0.5 : 1.0;
    s += weight * f[i];
  }
  return static_cast<double>(s) * h;
}

void check_grids_match(const GriddedDensity& a, const GriddedDensity& b,
                       const char* what) {
  if (a.values.size() != b.values.size() || a.a != b.a || a.b != b.b)
    throw DomainError(std::string("grids of ") + what + " must match exactly");
}

}  // namespace

BoundReport continuous_renyi_tsallis_bound(const GriddedDensity& mu,
                                           const GriddedDensity& nu,
                                           double alpha, double beta,
                                           const GriddedDensity& w,
                                           EntropyKind kind,
                                           std::optional<double> delta_lower) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("alpha must lie in (0, 1)");
  if (!(beta > 0.0 && beta < alpha))
    throw DomainError("beta must lie in (0, alpha)");
  check_grids_match(mu, nu, "mu and nu");
  check_grids_match(mu, w, "densities and weight");

  double mass_mu = mu.trapezoid_mass();
  double mass_nu = nu.trapezoid_mass();
  if (std::fabs(mass_mu - 1.0) > 1e-6)
    throw PreconditionError("mu is not normalized on its grid", mass_mu);
  if (std::fabs(mass_nu - 1.0) > 1e-6)
    throw PreconditionError("nu is not normalized on its grid", mass_nu);

  std::size_t n = mu.values.size();
  std::vector<double> absdiff(n), wdiff(n), winv(n);
  double s = beta / (1.0 - alpha);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(w.values[i] > 0.0))
      throw DomainError("weight function must be positive on the grid");
    if (mu.values[i] < 0.0 || nu.values[i] < 0.0)
      throw DomainError("densities must be nonnegative");
    absdiff[i] = std::fabs(mu.values[i] - nu.values[i]);
    wdiff[i] = w.values[i] * absdiff[i];
    winv[i] = std::pow(w.values[i], -s);
  }
  double l1 = trapezoid(mu, absdiff);
  double l1w = trapezoid(mu, wdiff);
  double wnorm = trapezoid(mu, winv);

  double delta = 1.0;
  if (kind == EntropyKind::renyi) {
    if (!delta_lower)
      throw ConfigError("the Renyi variant needs delta_lower with Tf_alpha >= 1/delta");
    delta = *delta_lower;
    if (!(delta > 0.0)) throw DomainError("delta_lower must be positive");
    std::vector<double> mua(n), nua(n);
    for (std::size_t i = 0; i < n; ++i) {
      mua[i] = std::pow(mu.values[i], alpha);
      nua[i] = std::pow(nu.values[i], alpha);
    }
    double tf_mu = trapezoid(mu, mua);
    double tf_nu = trapezoid(mu, nua);
    double worst = std::min(tf_mu, tf_nu);
    if (!(worst >= 1.0 / delta))
      throw PreconditionError(
          "Tf_alpha falls below 1/delta; the Renyi variant does not apply", worst);
  }

  BoundReport r;
  r.name = kind == EntropyKind::renyi ? "renyi-continuous" : "tsallis-continuous";
  r.combination = TermCombination::product;
  double c0 = (kind == EntropyKind::renyi ? delta : 1.0) / (1.0 - alpha);
  double t1 = l1 > 0.0 ? std::pow(l1w, beta) : 0.0;
  double t2 = l1 > 0.0 ? std::pow(l1, alpha - beta) : 0.0;
  double t3 = std::pow(wnorm, 1.0 - alpha);
  r.add_term(kind == EntropyKind::renyi ? "delta/(1-alpha)" : "1/(1-alpha)", c0);
  r.add_term("L1_w^beta", t1);
  r.add_term("L1^(alpha-beta)", t2);
  r.add_term("weight_norm^(1-alpha)", t3);
  r.value = l1 > 0.0 ? c0 * t1 * t2 * t3 : 0.0;
  r.set_param("alpha", alpha);
  r.set_param("beta", beta);
  r.set_param("l1", l1);
  r.set_param("l1_weighted", l1w);
  r.set_param("weight_norm", wnorm);
  if (kind == EntropyKind::renyi) r.set_param("delta", delta);
  return r;
}

BoundReport classical_alpha_gt1_bounds(const DiscreteDistribution& p,
                                       const DiscreteDistribution& q,
                                       double alpha, EntropyKind kind,
                                       std::optional<double> delta) {
  if (!(alpha > 1.0)) throw DomainError("alpha must exceed 1");
  std::size_t d = std::max(p.dim(), q.dim());
  long double na = 0.0L, spa = 0.0L, sqa = 0.0L;
  for (std::size_t j = 0; j < d; ++j) {
    double pv = j < p.dim() ? p.at(j) : 0.0;
    double qv = j < q.dim() ? q.at(j) : 0.0;
    na += std::pow(static_cast<long double>(std::fabs(pv - qv)), alpha);
    spa += std::pow(static_cast<long double>(pv), alpha);
    sqa += std::pow(static_cast<long double>(qv), alpha);
  }
  double norm = static_cast<double>(std::pow(na, 1.0L / alpha));
  double tsallis = alpha / (alpha - 1.0) * norm;

  BoundReport r;
  r.combination = TermCombination::product;
  r.set_param("alpha", alpha);
  r.set_param("lp_norm", norm);
  r.set_param("tsallis_bound", tsallis);
  r.set_param("sum_p_alpha", static_cast<double>(spa));
  r.set_param("sum_q_alpha", static_cast<double>(sqa));

  if (kind == EntropyKind::tsallis) {
    r.name = "tsallis-gt1-classical";
    r.add_term("alpha/(alpha-1)", alpha / (alpha - 1.0));
    r.add_term("lp_norm", norm);
    r.value = tsallis;
    if (delta) r.set_param("delta", *delta);
    return r;
  }

  if (!delta)
    throw ConfigError("the Renyi variant needs delta with sum p^alpha >= 1/delta");
  if (!(*delta > 0.0)) throw DomainError("delta must be positive");
  double worst = static_cast<double>(std::min(spa, sqa));
  if (!(worst >= 1.0 / *delta))
    throw PreconditionError(
        "sum of alpha-th powers falls below 1/delta; the Renyi variant does "
        "not apply",
        worst);
  r.name = "renyi-gt1-classical";
  r.add_term("alpha*delta/(alpha-1)", alpha * *delta / (alpha - 1.0));
  r.add_term("lp_norm", norm);
  r.value = alpha * *delta / (alpha - 1.0) * norm;
  r.set_param("delta", *delta);
  r.set_param("renyi_bound", r.value);
  return r;
}

}  // namespace entrobound
