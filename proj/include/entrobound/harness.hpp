#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "entrobound/fa.hpp"
#include "entrobound/quantum_bounds.hpp"
#include "entrobound/rng.hpp"

namespace entrobound {

// Rectangular evaluation grid. Absolute mode runs eps over (0, eps_max] and E
// over [E_min, E_max], both linearly spaced. Relative mode runs eps over
// (0, E/(E+1)] as fractions j/eps_steps per E, with E log-spaced, which keeps
// every point inside the tight bound's validity domain.
struct GridSpec {
  int eps_steps = 20;
  int E_steps = 20;
  double eps_max = 0.9;
  double E_min = 0.25;
  double E_max = 8.0;
  bool relative = false;

  std::vector<double> e_values() const;
};

struct SweepRow {
  double epsilon = 0.0;
  double E = 0.0;
  double bound_tight = 0.0;
  double bound_winter3 = 0.0;
  std::vector<double> bound_winter2;
  bool in_domain = true;
  double diff_w3 = 0.0;
  std::vector<double> diff_w2;
};

// Rows ordered E outer, eps inner. Winter2 columns follow the alphas order.
std::vector<SweepRow> run_sweep(const GridSpec& grid,
                                const std::vector<double>& alphas,
                                LogBase lb = LogBase::natural());
std::string sweep_to_csv(const std::vector<SweepRow>& rows, std::size_t n_alphas);
std::string sweep_to_json(const std::vector<SweepRow>& rows,
                          const std::vector<double>& alphas);
std::vector<SweepRow> sweep_from_json(const std::string& text);

// Random draws for the experiment harness; all deterministic in the rng state.
DiscreteDistribution random_distribution(CounterRng& rng, std::size_t d);
JointDistribution random_joint(CounterRng& rng, std::size_t d);
DensityMatrix random_density(CounterRng& rng, std::size_t d, bool rotated);

struct TrialRow {
  std::uint64_t trial = 0;
  double param = 0.0;  // experiment-specific (beta for the classical suite)
  double actual = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  bool in_domain = true;
};

struct MonteCarloResult {
  std::string experiment;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<TrialRow> rows;
  std::uint64_t violations = 0;
  std::uint64_t out_of_domain = 0;
  double min_margin = 0.0;
  double mean_margin = 0.0;
  double c_min = 0.0;  // quantum experiment only
};

MonteCarloResult run_fano_experiment(std::uint64_t seed, std::uint64_t trials,
                                     std::size_t dim_max);
MonteCarloResult run_shannon_experiment(std::uint64_t seed, std::uint64_t trials,
                                        std::size_t dim_max);
MonteCarloResult run_classical_rt_experiment(std::uint64_t seed,
                                             std::uint64_t trials,
                                             std::size_t dim, double alpha,
                                             const std::vector<double>& betas,
                                             double pert_eps);
MonteCarloResult run_quantum_experiment(std::uint64_t seed, std::uint64_t trials,
                                        std::size_t dim_max, double alpha,
                                        double c, double eps_budget);

std::string montecarlo_to_csv(const MonteCarloResult& r);
std::string montecarlo_to_json(const MonteCarloResult& r);

struct TightnessRow {
  double eps = 0.0;
  double E = 0.0;
  double actual = 0.0;
  double bound = 0.0;
  double gap = 0.0;
};

struct TightnessResult {
  std::vector<TightnessRow> rows;
  TightnessRow worst;
  bool pass = true;
};

// Extremal construction vs the tight bound on a relative grid; gap must stay
// below tol at the given dimension.
TightnessResult run_tightness(const GridSpec& grid, std::size_t dim, double tol,
                              double tail_tol);

struct AsymptoticRow {
  int n = 0;
  double K = 0.0;
  double ratio = 0.0;  // K / (eps n)
};

std::vector<AsymptoticRow> run_asymptotic(double eps, int n_max);

struct FaRow {
  double alpha_exp = 0.0;
  EntropyVerdict entropy;
  FeasibilityVerdict feasibility;
};

std::vector<FaRow> run_fa(const std::vector<double>& alpha_exps,
                          const GSequence& g, std::uint64_t K);
std::string fa_to_json(const std::vector<FaRow>& rows,
                       const std::vector<std::pair<double, BetaLogZ>>& betas);

// Full diagnostic report for a state pair loaded from files: entropies,
// distances, energies, and every bound that applies under the given
// Hamiltonian, with skip reasons for the ones that do not.
std::string analyze_pair(const DensityMatrix& rho, const DensityMatrix& sigma,
                         const HamiltonianSpec& h, LogBase lb, double c);

}  // namespace entrobound
