#include "entrobound/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "entrobound/io.hpp"
#include "json.hpp"

namespace entrobound {

std::vector<double> GridSpec::e_values() const {
  if (E_steps < 1 || eps_steps < 1)
    throw ConfigError("grid needs at least one step per axis");
  if (!(E_min > 0.0 && E_max >= E_min))
    throw DomainError("grid needs 0 < E_min <= E_max");
  std::vector<double> es(E_steps);
  if (E_steps == 1) {
    es[0] = E_min;
    return es;
  }
  if (relative) {
    double l0 = std::log(E_min), l1 = std::log(E_max);
    for (int i = 0; i < E_steps; ++i)
      es[i] = std::exp(l0 + (l1 - l0) * i / (E_steps - 1));
  } else {
    for (int i = 0; i < E_steps; ++i)
      es[i] = E_min + (E_max - E_min) * i / (E_steps - 1);
  }
  return es;
}

std::vector<SweepRow> run_sweep(const GridSpec& grid,
                                const std::vector<double>& alphas, LogBase lb) {
  for (double a : alphas)
    if (!(a > 0.0 && a < 0.5))
      throw DomainError("winter alpha parameters must lie in (0, 1/2)");
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(grid.E_steps) * grid.eps_steps);
  for (double E : grid.e_values()) {
    double top = grid.relative ? E / (E + 1.0) : grid.eps_max;
    for (int j = 1; j <= grid.eps_steps; ++j) {
      double eps = j == grid.eps_steps
                       ? top
                       : top * (static_cast<double>(j) / grid.eps_steps);
      SweepRow row;
      row.epsilon = eps;
      row.E = E;
      BoundReport tight = vn_continuity_bound(eps, E, lb);
      row.bound_tight = tight.value;
      row.in_domain = tight.in_validity_domain;
      row.bound_winter3 = winter_bound_number_op(eps, E, lb).value;
      row.diff_w3 = row.bound_winter3 - row.bound_tight;
      for (double a : alphas) {
        double k = winter_bound_alpha(eps, a, E, lb).value;
        row.bound_winter2.push_back(k);
        row.diff_w2.push_back(k - row.bound_tight);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows, std::size_t n_alphas) {
  std::ostringstream out;
  out << "epsilon,E,bound_tight,bound_winter3";
  for (std::size_t k = 1; k <= n_alphas; ++k) out << ",bound_winter2_a" << k;
  out << ",diff_w3";
  for (std::size_t k = 1; k <= n_alphas; ++k) out << ",diff_w2_a" << k;
  out << "\n";
  for (const SweepRow& r : rows) {
    out << format_double(r.epsilon) << ',' << format_double(r.E) << ','
        << format_double(r.bound_tight) << ',' << format_double(r.bound_winter3);
    for (double v : r.bound_winter2) out << ',' << format_double(v);
    out << ',' << format_double(r.diff_w3);
    for (double v : r.diff_w2) out << ',' << format_double(v);
    out << "\n";
  }
  return out.str();
}

std::string sweep_to_json(const std::vector<SweepRow>& rows,
                          const std::vector<double>& alphas) {
  nlohmann::json j;
  j["alphas"] = alphas;
  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRow& r : rows) {
    nlohmann::json row;
    row["epsilon"] = r.epsilon;
    row["E"] = r.E;
    row["bound_tight"] = r.bound_tight;
    row["bound_winter3"] = r.bound_winter3;
    row["bound_winter2"] = r.bound_winter2;
    row["in_domain"] = r.in_domain;
    row["diff_w3"] = r.diff_w3;
    row["diff_w2"] = r.diff_w2;
    arr.push_back(std::move(row));
  }
  j["rows"] = std::move(arr);
  return j.dump(2);
}

std::vector<SweepRow> sweep_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("sweep JSON: ") + e.what());
  }
  std::vector<SweepRow> rows;
  for (const auto& row : j.at("rows")) {
    SweepRow r;
    r.epsilon = row.at("epsilon").get<double>();
    r.E = row.at("E").get<double>();
    r.bound_tight = row.at("bound_tight").get<double>();
    r.bound_winter3 = row.at("bound_winter3").get<double>();
    r.bound_winter2 = row.at("bound_winter2").get<std::vector<double>>();
    r.in_domain = row.at("in_domain").get<bool>();
    r.diff_w3 = row.at("diff_w3").get<double>();
    r.diff_w2 = row.at("diff_w2").get<std::vector<double>>();
    rows.push_back(std::move(r));
  }
  return rows;
}

DiscreteDistribution random_distribution(CounterRng& rng, std::size_t d) {
  std::vector<double> p(d);
  for (double& v : p) v = rng.next_exponential();
  return DiscreteDistribution(std::move(p));
}

JointDistribution random_joint(CounterRng& rng, std::size_t d) {
  // Dirichlet mass over all cells plus a boosted diagonal so the mismatch
  // probability usually stays inside the validity domain.
  double s = 0.3 + 0.65 * rng.next_double();
  std::vector<double> cells(d * d);
  long double total = 0.0L;
  for (double& v : cells) {
    v = rng.next_exponential();
    total += v;
  }
  std::vector<double> diag(d);
  long double dtotal = 0.0L;
  for (double& v : diag) {
    v = rng.next_exponential();
    dtotal += v;
  }
  for (std::size_t k = 0; k < cells.size(); ++k)
    cells[k] = (1.0 - s) * cells[k] / static_cast<double>(total);
  for (std::size_t i = 0; i < d; ++i)
    cells[i * d + i] += s * diag[i] / static_cast<double>(dtotal);
  return JointDistribution(d, std::move(cells));
}

DensityMatrix random_density(CounterRng& rng, std::size_t d, bool rotated) {
  std::vector<double> ev(d);
  long double total = 0.0L;
  for (double& v : ev) {
    v = rng.next_exponential();
    total += v;
  }
  for (double& v : ev) v = static_cast<double>(v / total);
  if (!rotated) return DensityMatrix::diagonal(ev);

  // Haar-ish basis: eigenvectors of a Gaussian Hermitian matrix.
  HermitianMatrix gue = HermitianMatrix::zero(d);
  for (std::size_t i = 0; i < d; ++i) {
    gue.at(i, i) = rng.next_gaussian();
    for (std::size_t j = i + 1; j < d; ++j) {
      cplx v(rng.next_gaussian(), rng.next_gaussian());
      gue.at(i, j) = v;
      gue.at(j, i) = std::conj(v);
    }
  }
  Spectrum basis = eigendecompose(gue);
  HermitianMatrix m = HermitianMatrix::zero(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) {
      cplx vik = basis.vectors.at(i, k);
      for (std::size_t j = 0; j < d; ++j)
        m.at(i, j) += ev[k] * vik * std::conj(basis.vectors.at(j, k));
    }
  return DensityMatrix(std::move(m));
}

namespace {

void finalize(MonteCarloResult& r) {
  double min_m = std::numeric_limits<double>::infinity();
  long double sum_m = 0.0L;
  std::uint64_t counted = 0;
  for (const TrialRow& row : r.rows) {
    if (!row.in_domain) continue;
    min_m = std::min(min_m, row.margin);
    sum_m += row.margin;
    ++counted;
  }
  r.min_margin = counted ? min_m : 0.0;
  r.mean_margin = counted ? static_cast<double>(sum_m / counted) : 0.0;
}

// A trial violates its bound when the actual value exceeds it beyond float
// rounding: 1e-10 absolute plus 1e-12 relative.
bool violates(double actual, double bound) {
  return actual > bound + 1e-10 + 1e-12 * std::fabs(bound);
}

}  // namespace

MonteCarloResult run_fano_experiment(std::uint64_t seed, std::uint64_t trials,
                                     std::size_t dim_max) {
  if (dim_max < 5) throw ConfigError("fano experiment needs dim >= 5");
  MonteCarloResult res;
  res.experiment = "fano";
  res.trials = trials;
  res.seed = seed;
  for (std::uint64_t t = 0; t < trials; ++t) {
    CounterRng rng = CounterRng::substream(seed, t);
    std::size_t d = static_cast<std::size_t>(rng.next_index(5, dim_max));
    JointDistribution joint = random_joint(rng, d);
    double eps = joint.mismatch_probability();
    double E = joint.marginal_x().mean();
    TrialRow row;
    row.trial = t;
    BoundReport b = fano_bound(eps, E);
    row.in_domain = b.in_validity_domain && E > 0.0;
    row.actual = conditional_entropy(joint);
    row.bound = b.value;
    row.margin = row.bound - row.actual;
    if (row.in_domain && violates(row.actual, row.bound)) ++res.violations;
    if (!row.in_domain) ++res.out_of_domain;
    res.rows.push_back(row);
  }
  finalize(res);
  return res;
}

MonteCarloResult run_shannon_experiment(std::uint64_t seed, std::uint64_t trials,
                                        std::size_t dim_max) {
  if (dim_max < 2) throw ConfigError("shannon experiment needs dim >= 2");
  MonteCarloResult res;
  res.experiment = "shannon";
  res.trials = trials;
  res.seed = seed;
  for (std::uint64_t t = 0; t < trials; ++t) {
    CounterRng rng = CounterRng::substream(seed, t);
    std::size_t d = static_cast<std::size_t>(rng.next_index(2, dim_max));
    DiscreteDistribution p = random_distribution(rng, d);
    DiscreteDistribution q = random_distribution(rng, d);
    double eps = total_variation(p, q);
    double E = std::max(p.mean(), q.mean());
    TrialRow row;
    row.trial = t;
    BoundReport b = shannon_continuity_bound(eps, std::max(E, 1e-12));
    row.in_domain = b.in_validity_domain;
    row.actual = std::fabs(shannon_entropy(p) - shannon_entropy(q));
    row.bound = b.value;
    row.margin = row.bound - row.actual;
    if (row.in_domain && violates(row.actual, row.bound)) ++res.violations;
    if (!row.in_domain) ++res.out_of_domain;
    res.rows.push_back(row);
  }
  finalize(res);
  return res;
}

MonteCarloResult run_classical_rt_experiment(std::uint64_t seed,
                                             std::uint64_t trials,
                                             std::size_t dim, double alpha,
                                             const std::vector<double>& betas,
                                             double pert_eps) {
  if (dim < 2) throw ConfigError("classical experiment needs dim >= 2");
  if (betas.empty()) throw ConfigError("at least one beta is required");
  MonteCarloResult res;
  res.experiment = "renyi-tsallis-classical";
  res.trials = trials;
  res.seed = seed;
  WeightSequence w = WeightSequence::identity();
  for (std::uint64_t t = 0; t < trials; ++t) {
    CounterRng rng = CounterRng::substream(seed, t);
    DiscreteDistribution p = random_distribution(rng, dim);
    // Perturb toward an independent draw: q = (1-e) p + e u.
    DiscreteDistribution u = random_distribution(rng, dim);
    std::vector<double> qv(dim);
    for (std::size_t i = 0; i < dim; ++i)
      qv[i] = (1.0 - pert_eps) * p.at(i) + pert_eps * u.at(i);
    DiscreteDistribution q(std::move(qv));
    double actual = std::max(
        std::fabs(tsallis_entropy(p, alpha) - tsallis_entropy(q, alpha)),
        std::fabs(renyi_entropy(p, alpha) - renyi_entropy(q, alpha)));
    for (double beta : betas) {
      BoundReport b = classical_renyi_tsallis_bound(p, q, alpha, beta, w);
      TrialRow row;
      row.trial = t;
      row.param = beta;
      row.in_domain = b.in_validity_domain;
      row.actual = actual;
      row.bound = b.value;
      row.margin = row.bound - row.actual;
      if (violates(row.actual, row.bound)) ++res.violations;
      res.rows.push_back(row);
    }
  }
  finalize(res);
  return res;
}

MonteCarloResult run_quantum_experiment(std::uint64_t seed, std::uint64_t trials,
                                        std::size_t dim_max, double alpha,
                                        double c, double eps_budget) {
  if (dim_max < 4) throw ConfigError("quantum experiment needs dim >= 4");
  if (!(alpha > 0.5 && alpha < 1.0))
    throw ConfigError("quantum experiment needs alpha in (0.5, 1) so the "
                      "moment split r can satisfy its admissibility window");
  MonteCarloResult res;
  res.experiment = "quantum";
  res.trials = trials;
  res.seed = seed;
  HamiltonianSpec h = HamiltonianSpec::shifted_number(1.0);
  // Holder split: w = alpha * q with q chosen to keep w >= 1.
  double q = 2.5;
  double w = alpha * q;
  if (w < 1.0) {
    q = 1.0 / alpha + 1.0;
    w = alpha * q;
  }
  double p_conj = q / (q - 1.0);
  // Moment split beta = alpha - r; r = 1/2 sits inside the admissible window
  // (1 - alpha, alpha) for every alpha > 1/2 and gives r/(1-alpha) > 1.
  double r_split = 0.5;
  double beta_exp = alpha - r_split;

  double c_req_max = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    CounterRng rng = CounterRng::substream(seed, t);
    std::size_t d = static_cast<std::size_t>(rng.next_index(4, dim_max));
    bool rotated = (t % 2) == 1;
    DensityMatrix rho = random_density(rng, d, rotated);
    DensityMatrix sigma = random_density(rng, d, rotated);

    BoundReport mom_rho =
        moment_bound_falpha(rho, h, alpha, MomentVariant::general, r_split);
    BoundReport mom_sigma =
        moment_bound_falpha(sigma, h, alpha, MomentVariant::general, r_split);
    double mu = std::max(mom_rho.value, mom_sigma.value);

    ApproxBoundInputs in;
    in.rho = &rho;
    in.sigma = &sigma;
    in.hamiltonian = h;
    in.beta_exp = beta_exp;
    in.mu = mu;
    in.eps = eps_budget;
    in.w = w;
    in.q = q;
    in.p = p_conj;
    BoundReport b = quantum_renyi_tsallis_bound(in, c);

    double actual = std::max(
        std::fabs(quantum_tsallis_entropy(rho, alpha) -
                  quantum_tsallis_entropy(sigma, alpha)),
        std::fabs(quantum_renyi_entropy(rho, alpha) -
                  quantum_renyi_entropy(sigma, alpha)));

    TrialRow row;
    row.trial = t;
    row.param = static_cast<double>(d);
    row.actual = actual;
    row.bound = b.value;
    row.margin = row.bound - row.actual;
    row.in_domain = true;
    if (violates(row.actual, row.bound)) ++res.violations;
    // Calibrate the smallest universal constant that keeps this trial bounded:
    // bound = (A + c*B)/(1-alpha), so c >= (actual*(1-alpha) - A)/B.
    double scale = 1.0 - alpha;
    double a_term = b.terms.at(0).second * scale;
    double b_factor = c > 0.0 ? (b.terms.at(1).second * scale) / c : 0.0;
    if (b_factor > 0.0) {
      double needed = (actual * scale - a_term) / b_factor;
      c_req_max = std::max(c_req_max, needed);
    }
    res.rows.push_back(row);
  }
  res.c_min = std::max(c_req_max, 0.0);
  finalize(res);
  return res;
}

std::string montecarlo_to_csv(const MonteCarloResult& r) {
  std::ostringstream out;
  bool has_param = r.experiment == "renyi-tsallis-classical" ||
                   r.experiment == "quantum";
  out << "trial";
  if (r.experiment == "renyi-tsallis-classical") out << ",beta";
  if (r.experiment == "quantum") out << ",dim";
  out << ",actual,bound,margin,in_domain\n";
  for (const TrialRow& row : r.rows) {
    out << row.trial;
    if (has_param) out << ',' << format_double(row.param);
    out << ',' << format_double(row.actual) << ',' << format_double(row.bound)
        << ',' << format_double(row.margin) << ',' << (row.in_domain ? 1 : 0)
        << "\n";
  }
  return out.str();
}

std::string montecarlo_to_json(const MonteCarloResult& r) {
  nlohmann::json j;
  j["experiment"] = r.experiment;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["violations"] = r.violations;
  j["out_of_domain"] = r.out_of_domain;
  j["min_margin"] = r.min_margin;
  j["mean_margin"] = r.mean_margin;
  if (r.experiment == "quantum") j["c_min"] = r.c_min;
  nlohmann::json rows = nlohmann::json::array();
  for (const TrialRow& row : r.rows) {
    nlohmann::json jr;
    jr["trial"] = row.trial;
    jr["param"] = row.param;
    jr["actual"] = row.actual;
    jr["bound"] = row.bound;
    jr["margin"] = row.margin;
    jr["in_domain"] = row.in_domain;
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  return j.dump(2);
}

TightnessResult run_tightness(const GridSpec& grid, std::size_t dim, double tol,
                              double tail_tol) {
  GridSpec g = grid;
  g.relative = true;
  TightnessResult res;
  res.worst.gap = -std::numeric_limits<double>::infinity();
  for (double E : g.e_values()) {
    double eps_max = E / (E + 1.0);
    for (int j = 1; j <= g.eps_steps; ++j) {
      // Multiply by the fraction, not (x*j)/steps: the latter can land one ulp
      // above eps_max at j == steps and fall outside the validity domain.
      double eps = j == g.eps_steps
                       ? eps_max
                       : eps_max * (static_cast<double>(j) / g.eps_steps);
      TightnessRow row;
      row.eps = eps;
      row.E = E;
      row.bound = fano_bound(eps, E).value;
      DiscreteDistribution m = extremal_marginal(eps, E, dim, tail_tol);
      row.actual = shannon_entropy(m);
      row.gap = std::fabs(row.bound - row.actual);
      if (row.gap > res.worst.gap) res.worst = row;
      res.rows.push_back(row);
    }
  }
  res.pass = res.worst.gap <= tol;
  return res;
}

std::vector<AsymptoticRow> run_asymptotic(double eps, int n_max) {
  // n = 3 is the first index with alpha = 1/n inside the (0, 1/2) domain.
  if (n_max < 3) throw ConfigError("asymptotic mode needs n_max >= 3");
  std::vector<AsymptoticRow> rows;
  for (int n = 3; n <= n_max; ++n) {
    AsymptoticRow r;
    r.n = n;
    r.K = winter_bound_alpha(eps, 1.0 / n, std::exp(static_cast<double>(n))).value;
    r.ratio = r.K / (eps * n);
    rows.push_back(r);
  }
  return rows;
}

std::vector<FaRow> run_fa(const std::vector<double>& alpha_exps,
                          const GSequence& g, std::uint64_t K) {
  std::vector<FaRow> rows;
  for (double a : alpha_exps) {
    EigenvalueFamily fam(a);
    FaRow row;
    row.alpha_exp = a;
    row.entropy = counterexample_entropy(fam, K);
    row.feasibility = fa_weight_feasibility(fam, g, K);
    rows.push_back(row);
  }
  return rows;
}

std::string fa_to_json(const std::vector<FaRow>& rows,
                       const std::vector<std::pair<double, BetaLogZ>>& betas) {
  nlohmann::json j;
  nlohmann::json fam = nlohmann::json::array();
  for (const FaRow& r : rows) {
    nlohmann::json jr;
    jr["alpha_exp"] = r.alpha_exp;
    jr["entropy_partial"] = r.entropy.partial;
    jr["entropy_tail_bound"] = r.entropy.tail_bound;
    jr["entropy_upper"] = r.entropy.upper;
    jr["entropy_finite"] = r.entropy.finite;
    jr["weight_partial"] = r.feasibility.partial;
    jr["weight_convergent"] = r.feasibility.convergent;
    if (r.feasibility.convergent)
      jr["weight_upper"] = r.feasibility.upper;
    fam.push_back(std::move(jr));
  }
  j["families"] = std::move(fam);
  nlohmann::json bz = nlohmann::json::array();
  for (const auto& [beta, v] : betas) {
    nlohmann::json jb;
    jb["beta"] = beta;
    jb["lower"] = v.lower;
    jb["upper"] = v.upper;
    jb["log_integral"] = v.log_integral;
    bz.push_back(std::move(jb));
  }
  j["beta_log_z"] = std::move(bz);
  return j.dump(2);
}

std::string analyze_pair(const DensityMatrix& rho, const DensityMatrix& sigma,
                         const HamiltonianSpec& h, LogBase lb, double c) {
  nlohmann::json j;
  double e_rho = energy(rho, h);
  double e_sigma = energy(sigma, h);
  double E = std::max(e_rho, e_sigma);
  double t = trace_distance(rho, sigma);
  double f = fidelity(rho, sigma);
  j["d"] = rho.dim();
  j["energy_rho"] = e_rho;
  j["energy_sigma"] = e_sigma;
  j["trace_distance"] = t;
  j["fidelity"] = f;
  j["vn_entropy_rho"] = von_neumann_entropy(rho, lb);
  j["vn_entropy_sigma"] = von_neumann_entropy(sigma, lb);
  j["actual_vn_gap"] =
      std::fabs(von_neumann_entropy(rho, lb) - von_neumann_entropy(sigma, lb));

  // Fuchs-van de Graaf sandwich 1 - F <= T <= sqrt(1 - F^2).
  nlohmann::json fvdg;
  fvdg["lower"] = 1.0 - f;
  fvdg["upper"] = std::sqrt(std::max(0.0, 1.0 - f * f));
  fvdg["holds"] = (1.0 - f) <= t + 1e-9 &&
                  t <= std::sqrt(std::max(0.0, 1.0 - f * f)) + 1e-9;
  j["fvdg_sandwich"] = std::move(fvdg);

  // Passive reductions: same spectrum, energy never above the original.
  DensityMatrix rho_p = passive_state(rho);
  DensityMatrix sigma_p = passive_state(sigma);
  nlohmann::json passive;
  passive["energy_rho_passive"] = energy(rho_p, h);
  passive["energy_sigma_passive"] = energy(sigma_p, h);
  passive["entropy_preserved_rho"] =
      std::fabs(von_neumann_entropy(rho_p, lb) - von_neumann_entropy(rho, lb));
  passive["entropy_preserved_sigma"] =
      std::fabs(von_neumann_entropy(sigma_p, lb) - von_neumann_entropy(sigma, lb));
  j["passive"] = std::move(passive);

  nlohmann::json bounds = nlohmann::json::array();
  auto push_report = [&](const BoundReport& r) {
    bounds.push_back(nlohmann::json::parse(report_to_json(r)));
  };
  auto push_skip = [&](const std::string& name, const std::string& why) {
    nlohmann::json s;
    s["name"] = name;
    s["skipped"] = why;
    bounds.push_back(std::move(s));
  };

  if (E > 0.0) {
    push_report(vn_continuity_bound(t, E, lb));
    push_report(winter_bound_general(t, E, lb));
    push_report(winter_bound_number_op(t, E, lb));
    if (t < 1.0)
      push_report(winter_bound_alpha(t, 0.25, E, lb));
    else
      push_skip("winter2", "eps must lie below 1 for this variant");
  } else {
    push_skip("vn", "both states have zero energy under this Hamiltonian");
  }

  push_report(tsallis_lipschitz_bound(rho, sigma, 2.0));
  try {
    push_report(renyi_alpha_gt1_bound(rho, sigma, 2.0, h, std::max(E, 1e-12), 0.5));
  } catch (const ConfigError& e) {
    push_skip("renyi-gt1", e.what());
  } catch (const PreconditionError& e) {
    push_skip("renyi-gt1", e.what());
  }

  try {
    push_report(moment_bound_f1(rho, h));
  } catch (const ConfigError& e) {
    push_skip("moment-f1", e.what());
  }
  try {
    push_report(moment_bound_falpha(rho, h, 0.8, MomentVariant::general, 0.3));
  } catch (const ConfigError& e) {
    push_skip("moment-falpha", e.what());
  }

  // Approximation-theorem bound with the standard split; needs a Hamiltonian
  // whose negative powers have finite trace.
  try {
    double alpha = 0.8, q = 2.5;
    BoundReport mom_rho =
        moment_bound_falpha(rho, h, alpha, MomentVariant::general, 0.3);
    BoundReport mom_sigma =
        moment_bound_falpha(sigma, h, alpha, MomentVariant::general, 0.3);
    ApproxBoundInputs in;
    in.rho = &rho;
    in.sigma = &sigma;
    in.hamiltonian = h;
    in.beta_exp = 0.5;
    in.mu = std::max(mom_rho.value, mom_sigma.value);
    in.eps = std::max(t, 1e-3);
    in.w = alpha * q;
    in.q = q;
    in.p = q / (q - 1.0);
    push_report(quantum_renyi_tsallis_bound(in, c));
  } catch (const ConfigError& e) {
    push_skip("renyi-tsallis-quantum", e.what());
  } catch (const PreconditionError& e) {
    push_skip("renyi-tsallis-quantum", e.what());
  }

  j["bounds"] = std::move(bounds);
  return j.dump(2);
}

}  // namespace entrobound
