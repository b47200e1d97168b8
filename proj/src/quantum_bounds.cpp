#include "entrobound/quantum_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace entrobound {

namespace {

constexpr double kInvE = 0.36787944117144232159552377016146;  // 1/e
constexpr double kE = 2.7182818284590452353602874713527;

void check_eps_E(double eps, double E) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw DomainError("eps must lie in [0, 1]");
  if (!(E > 0.0)) throw DomainError("energy limit E must be positive");
}

}  // namespace

BoundReport vn_continuity_bound(double eps, double E, LogBase lb) {
  BoundReport r = fano_bound(eps, E, lb);
  r.name = "vn";
  return r;
}

BoundReport winter_bound_general(double eps, double E, LogBase lb) {
  check_eps_E(eps, E);
  BoundReport r;
  r.name = "winter3";
  r.combination = TermCombination::sum;
  r.in_validity_domain = true;
  double h = binary_entropy(eps, lb);
  double g_term = 0.0;
  if (eps > 0.0) {
    double x = E / eps;
    // g(x) = (1+x)log(1+x) - x log x = log1p(x) + x log1p(1/x), stable for
    // the whole range of x.
    double g = std::log1p(x) + x * std::log1p(1.0 / x);
    g_term = 2.0 * eps * lb.from_nats(g);
  }
  r.add_term("h(eps)", h);
  r.add_term("2*eps*g(E/eps)", g_term);
  r.value = h + g_term;
  r.set_param("eps", eps);
  r.set_param("E", E);
  return r;
}

BoundReport winter_bound_number_op(double eps, double E, LogBase lb) {
  check_eps_E(eps, E);
  BoundReport r;
  r.name = "winter3-number";
  r.combination = TermCombination::sum;
  double h = binary_entropy(eps, lb);
  double second = eps > 0.0
                      ? 2.0 * (E + eps) * binary_entropy(eps / (E + eps), lb)
                      : 0.0;
  r.add_term("h(eps)", h);
  r.add_term("2*(E+eps)*h(eps/(E+eps))", second);
  r.value = h + second;
  r.set_param("eps", eps);
  r.set_param("E", E);
  return r;
}

BoundReport winter_bound_alpha(double eps, double alpha, double E, LogBase lb) {
  check_eps_E(eps, E);
  if (!(alpha > 0.0 && alpha < 0.5))
    throw DomainError("winter alpha parameter must lie in (0, 1/2)");
  if (!(eps < 1.0)) throw DomainError("eps must lie below 1 for this variant");
  BoundReport r;
  r.name = "winter2";
  r.combination = TermCombination::sum;
  double f = (1.0 + alpha) / (1.0 - alpha) + 2.0 * alpha;
  double first = 0.0;
  if (eps > 0.0) {
    first = eps * f *
            lb.from_nats(std::log1p(E) +
                         std::log(eps / (alpha * (1.0 - eps))));
  }
  // h~ is the binary entropy up to 1/2 and the constant 1 beyond, which keeps
  // it an upper bound in nats as well as bits.
  double arg = eps * (1.0 + alpha) / (1.0 - alpha);
  double htilde = arg <= 0.5 ? binary_entropy(std::min(arg, 1.0), lb) : 1.0;
  double second = 3.0 * f * htilde;
  r.add_term("eps*f*(log(E+1)+log(eps/(alpha(1-eps))))", first);
  r.add_term("3*f*htilde", second);
  r.value = first + second;
  r.in_validity_domain = arg <= 0.5 && first >= 0.0;
  r.set_param("eps", eps);
  r.set_param("alpha", alpha);
  r.set_param("E", E);
  r.set_param("f", f);
  return r;
}

ModulusOfContinuity ModulusOfContinuity::holder(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("Holder exponent must lie in (0, 1)");
  ModulusOfContinuity m;
  m.holder_ = true;
  m.alpha_ = alpha;
  return m;
}

ModulusOfContinuity ModulusOfContinuity::almost_lipschitz() {
  ModulusOfContinuity m;
  m.holder_ = false;
  m.alpha_ = std::numeric_limits<double>::quiet_NaN();
  return m;
}

double ModulusOfContinuity::omega(double t) const {
  if (!(t >= 0.0)) throw DomainError("modulus argument must be nonnegative");
  if (holder_) return std::pow(t, alpha_);
  if (t == 0.0) return 0.0;
  if (t <= kInvE) return -t * std::log(t);
  return kE;
}

double ModulusOfContinuity::omega_star(double t) const {
  if (!(t >= 0.0)) throw DomainError("modulus argument must be nonnegative");
  if (holder_) return std::pow(t, alpha_) / (1.0 - alpha_);
  if (t == 0.0) return 0.0;
  if (t <= kInvE) {
    double lt = std::log(t);
    return (kE * kE - 0.5) * t + 0.5 * t * lt * lt;
  }
  return kE;
}

BoundReport approx_trace_bound(const ApproxBoundInputs& in,
                               SpectralFunctionKind kind, double c) {
  if (!in.rho || !in.sigma) throw ConfigError("both states are required");
  const DensityMatrix& rho = *in.rho;
  const DensityMatrix& sigma = *in.sigma;
  if (rho.dim() != sigma.dim())
    throw DomainError("states must share a dimension");
  if (!(in.eps > 0.0)) throw DomainError("eps must be positive");
  if (!(in.mu > 0.0)) throw DomainError("mu must be positive");
  if (!(in.beta_exp > 0.0)) throw DomainError("beta_exp must be positive");
  if (std::fabs(1.0 / in.p + 1.0 / in.q - 1.0) > 1e-12)
    throw ConfigError("p and q must be Holder conjugate: 1/p + 1/q = 1");

  double alpha = in.w / in.q;
  if (kind == SpectralFunctionKind::power) {
    if (!(alpha > 0.0 && alpha < 1.0))
      throw DomainError("alpha = w/q must lie in (0, 1)");
    if (!(in.w >= 1.0))
      throw DomainError("Schatten order w must be >= 1");
  }

  std::size_t d = rho.dim();
  const Spectrum& srho = rho.spectrum();
  const Spectrum& ssig = sigma.spectrum();

  auto fval = [&](double l) {
    if (l <= 0.0) return 0.0;
    if (kind == SpectralFunctionKind::power) return std::pow(l, alpha);
    return std::fabs(-l * std::log(l));
  };

  // ||f(rho)||_1 and the moments tr(H^beta |f|(rho)).
  auto norms = [&](const DensityMatrix& state, const Spectrum& s, double& norm1,
                   double& moment) {
    long double n1 = 0.0L, mom = 0.0L;
    for (std::size_t k = 0; k < d; ++k) {
      double l = s.eigenvalues[k];
      if (l < -1e-10)
        throw DomainError("state has a negative eigenvalue: " + std::to_string(l));
      double f = fval(l);
      if (f == 0.0) continue;
      n1 += f;
      long double hb = 0.0L;
      for (std::size_t n = 0; n < d; ++n) {
        double w2 = std::norm(s.vectors.at(n, k));
        if (w2 == 0.0) continue;
        hb += std::pow(in.hamiltonian.level(n), in.beta_exp) * w2;
      }
      mom += f * hb;
    }
    (void)state;
    norm1 = static_cast<double>(n1);
    moment = static_cast<double>(mom);
  };

  double n1_rho = 0.0, mom_rho = 0.0, n1_sig = 0.0, mom_sig = 0.0;
  norms(rho, srho, n1_rho, mom_rho);
  norms(sigma, ssig, n1_sig, mom_sig);

  double worst_moment = std::max(mom_rho, mom_sig);
  if (worst_moment > in.mu * (1.0 + 1e-9))
    throw PreconditionError(
        "moment budget violated: tr(H^beta |f|) exceeds mu", worst_moment);

  std::size_t rank =
      in.hamiltonian.projection_rank(in.mu / in.eps, in.beta_exp);

  HermitianMatrix diff = rho.matrix() - sigma.matrix();

  BoundReport r;
  r.name = kind == SpectralFunctionKind::power ? "approx-trace-power"
                                               : "approx-trace-xlogx";
  r.combination = TermCombination::sum;
  double first =
      std::sqrt(8.0 * in.eps) * (std::sqrt(n1_rho) + std::sqrt(n1_sig));
  double second;
  if (kind == SpectralFunctionKind::power) {
    double dist_w = schatten_norm(diff, in.w);
    second = c * std::pow(static_cast<double>(rank), 1.0 / in.p) *
             std::pow(dist_w, in.w / in.q);
    r.set_param("schatten_w_dist", dist_w);
  } else {
    double dist_op = schatten_norm(diff, std::numeric_limits<double>::infinity());
    ModulusOfContinuity al = ModulusOfContinuity::almost_lipschitz();
    second = c * static_cast<double>(rank) * al.omega_star(dist_op);
    r.set_param("op_dist", dist_op);
  }
  r.add_term("sqrt(8 eps)*(sqrt|f(rho)|_1 + sqrt|f(sigma)|_1)", first);
  r.add_term("c*projection*modulus", second);
  r.value = first + second;
  r.in_validity_domain = true;
  r.set_param("eps", in.eps);
  r.set_param("mu", in.mu);
  r.set_param("beta_exp", in.beta_exp);
  r.set_param("alpha", alpha);
  r.set_param("w", in.w);
  r.set_param("q", in.q);
  r.set_param("p", in.p);
  r.set_param("c", c);
  r.set_param("rank", static_cast<double>(rank));
  r.set_param("norm1_f_rho", n1_rho);
  r.set_param("norm1_f_sigma", n1_sig);
  r.set_param("moment_rho", mom_rho);
  r.set_param("moment_sigma", mom_sig);
  r.set_param("holder_seminorm", 1.0);
  r.set_param("d", static_cast<double>(d));
  return r;
}

BoundReport quantum_renyi_tsallis_bound(const ApproxBoundInputs& in, double c) {
  BoundReport base = approx_trace_bound(in, SpectralFunctionKind::power, c);
  double alpha = in.w / in.q;
  double scale = 1.0 / (1.0 - alpha);
  BoundReport r = base;
  r.name = "renyi-tsallis-quantum";
  r.terms.clear();
  for (const auto& [k, v] : base.terms) r.add_term(k + " / (1-alpha)", v * scale);
  r.value = base.value * scale;
  return r;
}

BoundReport tsallis_lipschitz_bound(const DensityMatrix& rho,
                                    const DensityMatrix& sigma, double alpha) {
  if (!(alpha > 1.0)) throw DomainError("alpha must exceed 1");
  if (rho.dim() != sigma.dim()) throw DomainError("states must share a dimension");
  double dist = schatten_norm(rho.matrix() - sigma.matrix(), alpha);
  BoundReport r;
  r.name = "tsallis-lip";
  r.combination = TermCombination::product;
  r.add_term("alpha/(alpha-1)", alpha / (alpha - 1.0));
  r.add_term("schatten_alpha_dist", dist);
  r.value = alpha / (alpha - 1.0) * dist;

  // |tr rho^alpha - tr sigma^alpha| / (alpha - 1): the intermediate quantity
  // through which the proof passes; echoed for diagnostics.
  auto trace_power = [&](const DensityMatrix& s) {
    long double acc = 0.0L;
    for (double l : s.clipped_eigenvalues())
      if (l > 0.0) acc += std::pow(static_cast<long double>(l), alpha);
    return static_cast<double>(acc);
  };
  double gap = std::fabs(trace_power(rho) - trace_power(sigma)) / (alpha - 1.0);
  r.set_param("alpha", alpha);
  r.set_param("trace_power_gap", gap);
  r.set_param("schatten_alpha_dist", dist);
  return r;
}

namespace {

double trace_power_clipped(const DensityMatrix& s, double alpha) {
  long double acc = 0.0L;
  for (double l : s.clipped_eigenvalues())
    if (l > 0.0) acc += std::pow(static_cast<long double>(l), alpha);
  return static_cast<double>(acc);
}

BoundReport renyi_gt1_core(const DensityMatrix& rho, const DensityMatrix& sigma,
                           double alpha, double delta) {
  if (!(alpha > 1.0)) throw DomainError("alpha must exceed 1");
  if (!(delta > 0.0)) throw DomainError("delta must be positive");
  if (rho.dim() != sigma.dim()) throw DomainError("states must share a dimension");
  double ta = trace_power_clipped(rho, alpha);
  double tb = trace_power_clipped(sigma, alpha);
  double worst = std::min(ta, tb);
  if (!(worst >= (1.0 / delta) * (1.0 - 1e-9)))
    throw PreconditionError(
        "tr of alpha-th power falls below 1/delta; the bound does not apply",
        worst);
  double dist = schatten_norm(rho.matrix() - sigma.matrix(), alpha);
  BoundReport r;
  r.name = "renyi-gt1";
  r.combination = TermCombination::product;
  r.add_term("alpha*delta/(alpha-1)", alpha * delta / (alpha - 1.0));
  r.add_term("schatten_alpha_dist", dist);
  r.value = alpha * delta / (alpha - 1.0) * dist;
  r.set_param("alpha", alpha);
  r.set_param("delta", delta);
  r.set_param("trace_power_rho", ta);
  r.set_param("trace_power_sigma", tb);
  r.set_param("schatten_alpha_dist", dist);
  return r;
}

}  // namespace

BoundReport renyi_alpha_gt1_bound(const DensityMatrix& rho,
                                  const DensityMatrix& sigma, double alpha,
                                  double delta) {
  return renyi_gt1_core(rho, sigma, alpha, delta);
}

BoundReport renyi_alpha_gt1_bound(const DensityMatrix& rho,
                                  const DensityMatrix& sigma, double alpha,
                                  const HamiltonianSpec& h, double E,
                                  double beta_split) {
  if (!(alpha > 1.0)) throw DomainError("alpha must exceed 1");
  if (!(beta_split > 0.0 && beta_split < 1.0))
    throw DomainError("beta_split must lie in (0, 1)");
  if (!(E > 0.0)) throw DomainError("energy limit E must be positive");
  if (!h.is_power_law() || !(h.shift() > 0.0))
    throw ConfigError(
        "the energy-split delta needs a power-law Hamiltonian with positive "
        "lowest level so that tr(H^{-s}) can converge");
  double s = alpha * beta_split / ((1.0 - beta_split) * (alpha - 1.0));
  if (!(h.kappa() * s > 1.0))
    throw ConfigError(
        "tr(H^{-s}) diverges: kappa * alpha*beta/((1-beta)(alpha-1)) = " +
        std::to_string(h.kappa() * s) + " must exceed 1");

  double e_rho = energy(rho, h);
  double e_sigma = energy(sigma, h);
  double worst_e = std::max(e_rho, e_sigma);
  if (worst_e > E * (1.0 + 1e-9))
    throw PreconditionError("state energy exceeds the limit E", worst_e);

  SeriesBracket tau = inverse_power_series(h.shift(), h.kappa() * s);
  double delta = std::pow(E, alpha * beta_split / (1.0 - beta_split)) *
                 std::pow(tau.upper, alpha - 1.0);

  BoundReport r = renyi_gt1_core(rho, sigma, alpha, delta);
  r.set_param("beta_split", beta_split);
  r.set_param("E", E);
  r.set_param("E_exponent", alpha * beta_split / (1.0 - beta_split));
  r.set_param("tau", tau.upper);
  r.set_param("tau_exponent", s);
  r.set_param("energy_rho", e_rho);
  r.set_param("energy_sigma", e_sigma);
  return r;
}

namespace {

// sum_k f(lambda_k) <H^e>_k with <H^e>_k = sum_n level(n)^e |V(n,k)|^2.
double weighted_moment(const DensityMatrix& rho, const HamiltonianSpec& h,
                       double exponent, double (*f)(double, double),
                       double alpha) {
  const Spectrum& s = rho.spectrum();
  std::size_t d = rho.dim();
  long double acc = 0.0L;
  for (std::size_t k = 0; k < d; ++k) {
    double l = s.eigenvalues[k];
    if (l < -1e-10)
      throw DomainError("state has a negative eigenvalue: " + std::to_string(l));
    double fv = f(l, alpha);
    if (fv == 0.0) continue;
    long double he = 0.0L;
    for (std::size_t n = 0; n < d; ++n) {
      double w2 = std::norm(s.vectors.at(n, k));
      if (w2 == 0.0) continue;
      he += std::pow(h.level(n), exponent) * w2;
    }
    acc += fv * he;
  }
  return static_cast<double>(acc);
}

double f1_of(double l, double) { return l > 0.0 ? -l * std::log(l) : 0.0; }
double falpha_of(double l, double a) { return l > 0.0 ? std::pow(l, a) : 0.0; }

SeriesBracket negative_power_trace(const HamiltonianSpec& h, double s) {
  if (h.is_power_law()) {
    if (!(h.shift() > 0.0))
      throw ConfigError(
          "tr(H^{-s}) needs a positive lowest level; shift the Hamiltonian");
    if (!(h.kappa() * s > 1.0))
      throw ConfigError("tr(H^{-s}) diverges: kappa*s = " +
                        std::to_string(h.kappa() * s) + " must exceed 1");
    return inverse_power_series(h.shift(), h.kappa() * s);
  }
  long double acc = 0.0L;
  for (std::size_t n = 0; n < h.custom_dim(); ++n) {
    double l = h.level(n);
    if (!(l > 0.0)) throw ConfigError("tr(H^{-s}) needs positive levels");
    acc += std::pow(static_cast<long double>(l), -s);
  }
  double v = static_cast<double>(acc);
  return {v, v};
}

}  // namespace

BoundReport moment_bound_f1(const DensityMatrix& rho, const HamiltonianSpec& h) {
  double lhs = weighted_moment(rho, h, 0.5, &f1_of, 0.0);
  double e = energy(rho, h);
  SeriesBracket exp_trace;
  if (!h.is_power_law()) {
    long double acc = 0.0L;
    for (std::size_t n = 0; n < h.custom_dim(); ++n) {
      double l = h.level(n);
      acc += std::exp(-std::sqrt(l)) * (1.0 + l);
    }
    double v = static_cast<double>(acc);
    exp_trace = {v, v};
  } else if (h.shift() == 0.0) {
    // Levels n^kappa: split off the n = 0 term of tr(e^{-sqrt(H)}(1+H)),
    // which is exactly 1, and sum the rest with shift 1.
    SeriesBracket rest = exp_sqrt_series(1.0, h.kappa());
    exp_trace = {rest.lower + 1.0, rest.upper + 1.0};
  } else {
    exp_trace = exp_sqrt_series(h.shift(), h.kappa());
  }

  BoundReport r;
  r.name = "moment-f1";
  r.combination = TermCombination::sum;
  r.add_term("tr(H rho)", e);
  r.add_term("tr(exp(-sqrt(H))(1+H))", exp_trace.upper);
  r.value = e + exp_trace.upper;
  r.set_param("lhs", lhs);
  r.set_param("slack", r.value - lhs);
  r.set_param("exp_trace_lower", exp_trace.lower);
  r.set_param("d", static_cast<double>(rho.dim()));
  r.in_validity_domain = true;
  return r;
}

BoundReport moment_bound_falpha(const DensityMatrix& rho,
                                const HamiltonianSpec& h, double alpha,
                                MomentVariant variant, std::optional<double> r_in) {
  BoundReport r;
  r.combination = TermCombination::sum;
  if (variant == MomentVariant::half_power) {
    if (!(alpha > 0.5 && alpha < 1.0))
      throw DomainError("the half-power variant needs alpha in (1/2, 1)");
    double s = (2.0 * alpha - 1.0) / (2.0 * (1.0 - alpha));
    double lhs = weighted_moment(rho, h, 0.5, &falpha_of, alpha);
    double e = energy(rho, h);
    SeriesBracket tau = negative_power_trace(h, s);
    r.name = "moment-falpha-half";
    r.add_term("tr(H rho)", e);
    r.add_term("tr(H^{-(2a-1)/(2(1-a))})", tau.upper);
    r.value = e + tau.upper;
    r.set_param("alpha", alpha);
    r.set_param("lhs", lhs);
    r.set_param("slack", r.value - lhs);
    r.set_param("tau_exponent", s);
    return r;
  }

  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("the general variant needs alpha in (0, 1)");
  if (!r_in) throw ConfigError("the general variant needs the split r");
  double rr = *r_in;
  if (!(rr > 0.0 && rr <= alpha))
    throw DomainError("the split r must lie in (0, alpha]");
  double beta = alpha - rr;
  double s = rr / (1.0 - alpha);
  double lhs = beta > 0.0 ? weighted_moment(rho, h, beta, &falpha_of, alpha)
                          : trace_power_clipped(rho, alpha);
  double e = energy(rho, h);
  SeriesBracket tau = negative_power_trace(h, s);
  double ea = std::pow(e, alpha);
  r.name = "moment-falpha-general";
  r.combination = TermCombination::product;
  r.add_term("tr(H rho)^alpha", ea);
  r.add_term("tr(H^{-r/(1-alpha)})", tau.upper);
  r.value = ea * tau.upper;
  r.set_param("alpha", alpha);
  r.set_param("r", rr);
  r.set_param("beta", beta);
  r.set_param("lhs", lhs);
  r.set_param("slack", r.value - lhs);
  r.set_param("tau", tau.upper);
  r.set_param("tau_exponent", s);
  // Sharper variant with tau^{1-alpha}; echoed, not the reported value.
  r.set_param("rhs_sharp", ea * std::pow(tau.upper, 1.0 - alpha));
  return r;
}

DivergenceWitness::DivergenceWitness(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("witness needs alpha in (0, 1)");
  z_ = zeta_series(1.0 / alpha);
}

SeriesBracket DivergenceWitness::trace_power_partial(std::uint64_t d) const {
  if (d == 0) return {0.0, 0.0};
  // sum_{i<d} lambda_i^alpha = H_d / Z^alpha.
  double hd = d <= 50000000ULL
                  ? harmonic_partial(d)
                  : harmonic_from_log(std::log(static_cast<double>(d))).midpoint();
  double za_lo = std::pow(z_.lower, alpha_);
  double za_hi = std::pow(z_.upper, alpha_);
  if (d > 50000000ULL) {
    SeriesBracket hb = harmonic_from_log(std::log(static_cast<double>(d)));
    return {hb.lower / za_hi, hb.upper / za_lo};
  }
  return {hd / za_hi, hd / za_lo};
}

SeriesBracket DivergenceWitness::trace_power_partial_log(double log_d) const {
  SeriesBracket hb = harmonic_from_log(log_d);
  return {hb.lower / std::pow(z_.upper, alpha_),
          hb.upper / std::pow(z_.lower, alpha_)};
}

double DivergenceWitness::crossing_log_dim(double threshold) const {
  if (!(threshold > 0.0)) throw DomainError("threshold must be positive");
  // H_d >= ln d + gamma, so ln d = threshold * Z_hi^alpha - gamma certifies
  // H_d / Z^alpha >= threshold for every Z in the bracket.
  double ln_d = threshold * std::pow(z_.upper, alpha_) - kEulerGamma;
  return ln_d > 0.0 ? ln_d : 0.0;
}

SeriesBracket DivergenceWitness::mean_energy() const {
  if (!energy_finite())
    throw ConfigError(
        "mean energy diverges for alpha >= 1/2: sum i (i+1)^{-1/alpha} needs "
        "1/alpha - 1 > 1");
  double s = 1.0 / alpha_;
  // sum_i i (i+1)^{-s} = zeta(s-1) - zeta(s); divide by Z with interval care.
  SeriesBracket num_a = zeta_series(s - 1.0);
  SeriesBracket num = {num_a.lower - z_.upper, num_a.upper - z_.lower};
  if (num.lower < 0.0) num.lower = 0.0;
  return {num.lower / z_.upper, num.upper / z_.lower};
}

}  // namespace entrobound
