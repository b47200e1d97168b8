#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entrobound/harness.hpp"
#include "entrobound/io.hpp"

namespace eb = entrobound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitUsage = 64;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw eb::ConfigError("cannot write to " + path);
  out << text;
}

eb::LogBase parse_log_base(const std::string& s) {
  if (s == "e" || s == "nat" || s == "natural") return eb::LogBase::natural();
  if (s == "2" || s == "bits") return eb::LogBase::bits();
  return eb::LogBase::base(std::stod(s));
}

eb::HamiltonianSpec parse_hamiltonian(const std::string& s) {
  if (s.empty() || s == "number" || s == "N") return eb::HamiltonianSpec::number();
  if (s == "number+1" || s == "N+1") return eb::HamiltonianSpec::shifted_number(1.0);
  if (s.rfind("shifted:", 0) == 0)
    return eb::HamiltonianSpec::shifted_number(std::stod(s.substr(8)));
  if (s.rfind("power:", 0) == 0) {
    std::string rest = s.substr(6);
    auto colon = rest.find(':');
    double kappa = std::stod(rest.substr(0, colon));
    double shift = colon == std::string::npos ? 0.0 : std::stod(rest.substr(colon + 1));
    return eb::HamiltonianSpec::power_law(shift, kappa);
  }
  throw eb::ConfigError(
      "unknown hamiltonian '" + s +
      "'; expected number, number+1, shifted:<s>, or power:<kappa>[:<shift>]");
}

std::pair<int, int> parse_grid(const std::string& s) {
  auto x = s.find('x');
  if (x == std::string::npos)
    throw eb::ConfigError("grid must look like <eps_steps>x<E_steps>, e.g. 20x20");
  int a = std::stoi(s.substr(0, x));
  int b = std::stoi(s.substr(x + 1));
  if (a < 1 || b < 1) throw eb::ConfigError("grid steps must be positive");
  return {a, b};
}

struct CommonOpts {
  double eps = 0.1;
  double E = 1.0;
  double alpha = 0.25;
  double beta = 0.65;
  std::uint64_t seed = 20200713;
  std::uint64_t trials = 1000;
  std::size_t dim = 256;
  std::string grid = "20x20";
  std::string out;
  std::string format = "csv";
  std::string log_base = "e";
  double constant_c = 1.0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--eps", o.eps, "Closeness / budget parameter");
  cmd->add_option("--E", o.E, "Energy (mean occupation) limit");
  cmd->add_option("--alpha", o.alpha, "Entropy order or Winter alpha");
  cmd->add_option("--beta", o.beta, "Secondary exponent (weighted-norm split)");
  cmd->add_option("--seed", o.seed, "Master seed for the counter-based RNG");
  cmd->add_option("--trials", o.trials, "Number of Monte Carlo trials");
  cmd->add_option("--dim", o.dim, "Truncation dimension");
  cmd->add_option("--grid", o.grid, "Grid as <eps_steps>x<E_steps>");
  cmd->add_option("--out", o.out, "Output file (stdout when omitted)");
  cmd->add_option("--format", o.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--log-base", o.log_base, "Entropy log base: e, 2, or a real > 1");
  cmd->add_option("--constant-c", o.constant_c, "Universal constant c")
      ->check(CLI::PositiveNumber);
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(std::stod(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (out.empty()) throw eb::ConfigError("empty list");
  return out;
}

int run_bound(const std::string& kind, const CommonOpts& o,
              const std::string& rho_path, const std::string& sigma_path,
              const std::string& p_path, const std::string& q_path,
              const std::string& ham, double w_kappa,
              std::optional<double> delta, const std::string& variant,
              std::optional<double> r_split, std::optional<double> mu_opt,
              double holder_q) {
  eb::LogBase lb = parse_log_base(o.log_base);
  eb::BoundReport report;

  auto need_states = [&]() {
    if (rho_path.empty() || sigma_path.empty())
      throw eb::ConfigError("this kind needs --rho and --sigma matrix files");
    return std::pair(eb::load_density(rho_path), eb::load_density(sigma_path));
  };

  if (kind == "fano") {
    report = eb::fano_bound(o.eps, o.E, lb);
  } else if (kind == "shannon") {
    report = eb::shannon_continuity_bound(o.eps, o.E, lb);
  } else if (kind == "vn") {
    report = eb::vn_continuity_bound(o.eps, o.E, lb);
  } else if (kind == "winter3") {
    report = eb::winter_bound_number_op(o.eps, o.E, lb);
    report.set_param("general_form", eb::winter_bound_general(o.eps, o.E, lb).value);
  } else if (kind == "winter2") {
    report = eb::winter_bound_alpha(o.eps, o.alpha, o.E, lb);
  } else if (kind == "renyi-tsallis-classical") {
    if (p_path.empty() || q_path.empty())
      throw eb::ConfigError("this kind needs --p and --q distribution files");
    eb::DiscreteDistribution p = eb::load_distribution(p_path);
    eb::DiscreteDistribution q = eb::load_distribution(q_path);
    report = eb::classical_renyi_tsallis_bound(
        p, q, o.alpha, o.beta, eb::WeightSequence::power(w_kappa));
  } else if (kind == "renyi-tsallis-quantum") {
    auto [rho, sigma] = need_states();
    eb::HamiltonianSpec h = parse_hamiltonian(ham.empty() ? "number+1" : ham);
    double r = r_split.value_or(0.5);
    double mu;
    if (mu_opt) {
      mu = *mu_opt;
    } else {
      eb::BoundReport m1 =
          eb::moment_bound_falpha(rho, h, o.alpha, eb::MomentVariant::general, r);
      eb::BoundReport m2 =
          eb::moment_bound_falpha(sigma, h, o.alpha, eb::MomentVariant::general, r);
      mu = std::max(m1.value, m2.value);
    }
    eb::ApproxBoundInputs in;
    in.rho = &rho;
    in.sigma = &sigma;
    in.hamiltonian = h;
    in.beta_exp = o.alpha - r;
    in.mu = mu;
    in.eps = o.eps;
    in.q = holder_q;
    in.w = o.alpha * holder_q;
    in.p = holder_q / (holder_q - 1.0);
    report = eb::quantum_renyi_tsallis_bound(in, o.constant_c);
  } else if (kind == "tsallis-lip") {
    auto [rho, sigma] = need_states();
    report = eb::tsallis_lipschitz_bound(rho, sigma, o.alpha);
  } else if (kind == "renyi-gt1") {
    auto [rho, sigma] = need_states();
    if (delta) {
      report = eb::renyi_alpha_gt1_bound(rho, sigma, o.alpha, *delta);
    } else {
      eb::HamiltonianSpec h = parse_hamiltonian(ham.empty() ? "number+1" : ham);
      report = eb::renyi_alpha_gt1_bound(rho, sigma, o.alpha, h, o.E, o.beta);
    }
  } else if (kind == "moment-f1") {
    if (rho_path.empty()) throw eb::ConfigError("this kind needs --rho");
    eb::DensityMatrix rho = eb::load_density(rho_path);
    report = eb::moment_bound_f1(rho, parse_hamiltonian(ham.empty() ? "number+1" : ham));
  } else if (kind == "moment-falpha") {
    if (rho_path.empty()) throw eb::ConfigError("this kind needs --rho");
    eb::DensityMatrix rho = eb::load_density(rho_path);
    eb::HamiltonianSpec h = parse_hamiltonian(ham.empty() ? "number+1" : ham);
    eb::MomentVariant v = variant == "half" ? eb::MomentVariant::half_power
                                            : eb::MomentVariant::general;
    report = eb::moment_bound_falpha(rho, h, o.alpha, v, r_split);
  } else {
    // CLI11's IsMember check keeps us from reaching this.
    throw std::logic_error("unhandled kind");
  }

  write_output(o.out, eb::report_to_json(report));
  return kExitOk;
}

int run_sweep_cmd(const CommonOpts& o, double eps_max, double e_min, double e_max,
                  const std::string& alphas_str) {
  auto [eps_steps, e_steps] = parse_grid(o.grid);
  eb::GridSpec grid;
  grid.eps_steps = eps_steps;
  grid.E_steps = e_steps;
  grid.eps_max = eps_max;
  grid.E_min = e_min;
  grid.E_max = e_max;
  std::vector<double> alphas = parse_list(alphas_str);
  std::vector<eb::SweepRow> rows = eb::run_sweep(grid, alphas, parse_log_base(o.log_base));
  std::string text = o.format == "json" ? eb::sweep_to_json(rows, alphas)
                                        : eb::sweep_to_csv(rows, alphas.size());
  write_output(o.out, text);
  return kExitOk;
}

int run_montecarlo_cmd(const std::string& experiment, const CommonOpts& o,
                       const std::string& betas_str, double pert) {
  if (o.trials < 1) throw eb::ConfigError("trials must be >= 1");
  eb::MonteCarloResult res;
  if (experiment == "fano") {
    res = eb::run_fano_experiment(o.seed, o.trials, std::max<std::size_t>(o.dim, 5));
  } else if (experiment == "shannon") {
    res = eb::run_shannon_experiment(o.seed, o.trials, std::max<std::size_t>(o.dim, 2));
  } else if (experiment == "renyi-tsallis-classical") {
    res = eb::run_classical_rt_experiment(o.seed, o.trials, o.dim,
                                          o.alpha == 0.25 ? 0.8 : o.alpha,
                                          parse_list(betas_str), pert);
  } else {
    res = eb::run_quantum_experiment(o.seed, o.trials, o.dim,
                                     o.alpha == 0.25 ? 0.8 : o.alpha,
                                     o.constant_c, o.eps);
  }
  std::string text = o.format == "json" ? eb::montecarlo_to_json(res)
                                        : eb::montecarlo_to_csv(res);
  write_output(o.out, text);
  if (o.format == "csv" && !o.out.empty()) {
    // Summary always goes to stdout so scripted runs can assert on it.
    std::cout << "{\"experiment\":\"" << res.experiment
              << "\",\"violations\":" << res.violations
              << ",\"min_margin\":" << eb::format_double(res.min_margin)
              << ",\"mean_margin\":" << eb::format_double(res.mean_margin);
    if (res.experiment == "quantum")
      std::cout << ",\"c_min\":" << eb::format_double(res.c_min);
    std::cout << "}\n";
  }
  return kExitOk;
}

int run_tightness_cmd(const CommonOpts& o, double e_min, double e_max, double tol,
                      double tail_tol, bool asymptotic, int n_max) {
  if (asymptotic) {
    std::vector<eb::AsymptoticRow> rows = eb::run_asymptotic(o.eps, n_max);
    std::ostringstream out;
    out << "n,K,ratio\n";
    for (const auto& r : rows)
      out << r.n << ',' << eb::format_double(r.K) << ','
          << eb::format_double(r.ratio) << "\n";
    write_output(o.out, out.str());
    return kExitOk;
  }
  auto [eps_steps, e_steps] = parse_grid(o.grid);
  eb::GridSpec grid;
  grid.eps_steps = eps_steps;
  grid.E_steps = e_steps;
  grid.E_min = e_min;
  grid.E_max = e_max;
  grid.relative = true;
  eb::TightnessResult res = eb::run_tightness(grid, o.dim, tol, tail_tol);
  std::ostringstream out;
  out << "epsilon,E,bound,achieved,gap\n";
  for (const auto& r : res.rows)
    out << eb::format_double(r.eps) << ',' << eb::format_double(r.E) << ','
        << eb::format_double(r.bound) << ',' << eb::format_double(r.actual)
        << ',' << eb::format_double(r.gap) << "\n";
  write_output(o.out, out.str());
  if (!res.pass) {
    std::cerr << "tolerance breach: worst row eps=" << eb::format_double(res.worst.eps)
              << " E=" << eb::format_double(res.worst.E)
              << " gap=" << eb::format_double(res.worst.gap) << " > tol="
              << eb::format_double(tol) << "\n";
    return kExitTolerance;
  }
  return kExitOk;
}

int run_fa_cmd(const CommonOpts& o, const std::string& alphas_str,
               const std::string& betas_str, const std::string& g_kind,
               std::uint64_t K) {
  std::vector<double> alphas = parse_list(alphas_str);
  eb::GSequence g = g_kind == "zero" ? eb::GSequence::zeros()
                                     : eb::GSequence::log_power(std::stod(g_kind));
  std::vector<eb::FaRow> rows = eb::run_fa(alphas, g, K);
  std::vector<std::pair<double, eb::BetaLogZ>> betas;
  for (double b : parse_list(betas_str)) betas.emplace_back(b, eb::beta_log_z(b));
  write_output(o.out, eb::fa_to_json(rows, betas));
  bool floors_ok = true;
  for (const auto& [b, v] : betas) floors_ok = floors_ok && v.lower > 0.25;
  if (!floors_ok) {
    std::cerr << "beta log Z floor assertion failed\n";
    return kExitTolerance;
  }
  return kExitOk;
}

int run_analyze_cmd(const CommonOpts& o, const std::string& rho_path,
                    const std::string& sigma_path, const std::string& ham) {
  if (rho_path.empty() || sigma_path.empty())
    throw eb::ConfigError("analyze needs --rho and --sigma matrix files");
  eb::DensityMatrix rho = eb::load_density(rho_path);
  eb::DensityMatrix sigma = eb::load_density(sigma_path);
  eb::HamiltonianSpec h = parse_hamiltonian(ham);
  write_output(o.out, eb::analyze_pair(rho, sigma, h, parse_log_base(o.log_base),
                                       o.constant_c));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entrobound: continuity bounds for classical and quantum entropies"};
  app.require_subcommand(1);
  app.set_config("--config")->configurable(false);

  CommonOpts o;
  if (const char* env = std::getenv("ENTROBOUND_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (...) {
      std::cerr << "ENTROBOUND_SEED must be an unsigned integer\n";
      return kExitUsage;
    }
  }

  std::string kind, rho_path, sigma_path, p_path, q_path, ham;
  double w_kappa = 1.0;
  double delta_val = 0.0;
  bool delta_set = false;
  std::string variant = "general";
  double r_val = 0.0;
  bool r_set = false;
  double mu_val = 0.0;
  bool mu_set = false;
  double holder_q = 2.5;

  CLI::App* bound = app.add_subcommand("bound", "Evaluate one bound");
  add_common(bound, o);
  bound->add_option("kind", kind, "Bound kind")
      ->required()
      ->check(CLI::IsMember({"fano", "shannon", "vn", "winter3", "winter2",
                             "renyi-tsallis-classical", "renyi-tsallis-quantum",
                             "tsallis-lip", "renyi-gt1", "moment-f1",
                             "moment-falpha"}));
  bound->add_option("--rho", rho_path, "Density matrix JSON file");
  bound->add_option("--sigma", sigma_path, "Density matrix JSON file");
  bound->add_option("--p", p_path, "Distribution JSON array file");
  bound->add_option("--q", q_path, "Distribution JSON array file");
  bound->add_option("--hamiltonian", ham,
                    "number | number+1 | shifted:<s> | power:<kappa>[:<shift>]");
  bound->add_option("--w-kappa", w_kappa, "Weight sequence exponent");
  bound->add_option("--delta", delta_val, "Renyi delta with tr rho^alpha >= 1/delta")
      ->each([&](const std::string&) { delta_set = true; });
  bound->add_option("--variant", variant, "moment-falpha variant")
      ->check(CLI::IsMember({"half", "general"}));
  bound->add_option("--r", r_val, "Moment split r")
      ->each([&](const std::string&) { r_set = true; });
  bound->add_option("--mu", mu_val, "Moment budget override")
      ->each([&](const std::string&) { mu_set = true; });
  bound->add_option("--holder-q", holder_q, "Holder exponent q (w = alpha q)");

  double eps_max = 0.9, e_min = 0.25, e_max = 8.0;
  std::string sweep_alphas = "0.05,0.1,0.2,0.4";
  CLI::App* sweep = app.add_subcommand("sweep", "Grid sweep of all bounds");
  add_common(sweep, o);
  sweep->add_option("--eps-max", eps_max, "Upper end of the eps grid");
  sweep->add_option("--E-min", e_min, "Lower end of the E grid");
  sweep->add_option("--E-max", e_max, "Upper end of the E grid");
  sweep->add_option("--alphas", sweep_alphas, "Winter alpha list");

  std::string experiment = "shannon";
  std::string mc_betas = "0.55,0.65,0.75";
  double pert = 0.1;
  CLI::App* mc = app.add_subcommand("montecarlo", "Random verification suites");
  add_common(mc, o);
  mc->add_option("experiment", experiment, "Experiment name")
      ->required()
      ->check(CLI::IsMember({"fano", "shannon", "renyi-tsallis-classical", "quantum"}));
  mc->add_option("--betas", mc_betas, "Beta list for the classical experiment");
  mc->add_option("--pert", pert, "Perturbation size for the classical experiment");

  double tight_tol = 1e-8, tail_tol = 1e-9, t_e_min = 0.25, t_e_max = 8.0;
  bool asymptotic = false;
  int n_max = 20;
  CLI::App* tight = app.add_subcommand("tightness", "Extremal tightness table");
  add_common(tight, o);
  tight->add_option("--tol", tight_tol, "Gap tolerance");
  tight->add_option("--tail-tol", tail_tol, "Truncation tail gate");
  tight->add_option("--E-min", t_e_min, "Lower end of the E grid");
  tight->add_option("--E-max", t_e_max, "Upper end of the E grid");
  tight->add_flag("--asymptotic", asymptotic, "Emit the K(eps,1/n,e^n)/(eps n) table");
  tight->add_option("--n-max", n_max, "Largest n in asymptotic mode");

  std::string fa_alphas = "2.2,2.5,2.8";
  std::string fa_betas = "0.1,0.05,0.02,0.01,0.005";
  std::string g_kind = "2";
  std::uint64_t fa_K = 100000;
  CLI::App* fa = app.add_subcommand("fa", "FA-property counterexample numerics");
  add_common(fa, o);
  fa->add_option("--alpha-exps", fa_alphas, "Family exponents");
  fa->add_option("--betas", fa_betas, "beta list for beta log Z(beta)");
  fa->add_option("--g", g_kind, "Weight g: zero or a log power q");
  fa->add_option("--K", fa_K, "Partial sum cutoff");

  CLI::App* analyze = app.add_subcommand("analyze", "Diagnostics for a state pair");
  add_common(analyze, o);
  analyze->add_option("--rho", rho_path, "Density matrix JSON file");
  analyze->add_option("--sigma", sigma_path, "Density matrix JSON file");
  analyze->add_option("--hamiltonian", ham,
                      "number | number+1 | shifted:<s> | power:<kappa>[:<shift>]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (bound->parsed())
      return run_bound(kind, o, rho_path, sigma_path, p_path, q_path, ham,
                       w_kappa,
                       delta_set ? std::optional<double>(delta_val) : std::nullopt,
                       variant, r_set ? std::optional<double>(r_val) : std::nullopt,
                       mu_set ? std::optional<double>(mu_val) : std::nullopt,
                       holder_q);
    if (sweep->parsed()) return run_sweep_cmd(o, eps_max, e_min, e_max, sweep_alphas);
    if (mc->parsed()) return run_montecarlo_cmd(experiment, o, mc_betas, pert);
    if (tight->parsed())
      return run_tightness_cmd(o, t_e_min, t_e_max, tight_tol, tail_tol,
                               asymptotic, n_max);
    if (fa->parsed()) return run_fa_cmd(o, fa_alphas, fa_betas, g_kind, fa_K);
    if (analyze->parsed()) return run_analyze_cmd(o, rho_path, sigma_path, ham);
  } catch (const eb::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const eb::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what()
              << " (actual value " << eb::format_double(e.actual) << ")\n";
    return kExitDomain;
  } catch (const eb::TruncationError& e) {
    std::cerr << "truncation error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const eb::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const eb::ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
