#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entrobound/classical.hpp"
#include "entrobound/fa.hpp"
#include "entrobound/harness.hpp"
#include "entrobound/quantum_bounds.hpp"

namespace py = pybind11;
namespace eb = entrobound;

namespace {

py::dict report_dict(const eb::BoundReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["value"] = r.value;
  d["in_validity_domain"] = r.in_validity_domain;
  d["combination"] =
      r.combination == eb::TermCombination::sum ? "sum" : "product";
  py::dict terms;
  for (const auto& [k, v] : r.terms) terms[py::str(k)] = v;
  d["terms"] = terms;
  py::dict params;
  for (const auto& [k, v] : r.params) params[py::str(k)] = v;
  d["params"] = params;
  return d;
}

eb::DensityMatrix density_from_rows(
    const std::vector<std::vector<std::complex<double>>>& rows) {
  std::size_t d = rows.size();
  std::vector<std::complex<double>> entries(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    if (rows[i].size() != d)
      throw eb::ConfigError("density matrix rows must form a square matrix");
    for (std::size_t j = 0; j < d; ++j) entries[i * d + j] = rows[i][j];
  }
  return eb::DensityMatrix(eb::HermitianMatrix(d, std::move(entries)));
}

eb::LogBase log_base_from(const std::string& s) {
  if (s == "e" || s == "nat" || s == "natural") return eb::LogBase::natural();
  if (s == "2" || s == "bits") return eb::LogBase::bits();
  return eb::LogBase::base(std::stod(s));
}

}  // namespace

PYBIND11_MODULE(_entrobound, m) {
  m.doc() = "Continuity bounds for classical and quantum entropies";

  py::register_exception<eb::DomainError>(m, "DomainError");
  py::register_exception<eb::ConfigError>(m, "ConfigError");
  py::register_exception<eb::TruncationError>(m, "TruncationError");
  py::register_exception<eb::PreconditionError>(m, "PreconditionError");
  py::register_exception<eb::ConvergenceError>(m, "ConvergenceError");

  m.def(
      "binary_entropy",
      [](double x, const std::string& base) {
        return eb::binary_entropy(x, log_base_from(base));
      },
      py::arg("x"), py::arg("base") = "e");

  m.def(
      "fano_bound",
      [](double eps, double E, const std::string& base) {
        return report_dict(eb::fano_bound(eps, E, log_base_from(base)));
      },
      py::arg("eps"), py::arg("E"), py::arg("base") = "e");

  m.def(
      "shannon_continuity_bound",
      [](double eps, double E, const std::string& base) {
        return report_dict(
            eb::shannon_continuity_bound(eps, E, log_base_from(base)));
      },
      py::arg("eps"), py::arg("E"), py::arg("base") = "e");

  m.def(
      "vn_continuity_bound",
      [](double eps, double E, const std::string& base) {
        return report_dict(
            eb::vn_continuity_bound(eps, E, log_base_from(base)));
      },
      py::arg("eps"), py::arg("E"), py::arg("base") = "e");

  m.def(
      "winter_bound_number_op",
      [](double eps, double E, const std::string& base) {
        return report_dict(
            eb::winter_bound_number_op(eps, E, log_base_from(base)));
      },
      py::arg("eps"), py::arg("E"), py::arg("base") = "e");

  m.def(
      "winter_bound_general",
      [](double eps, double E, const std::string& base) {
        return report_dict(
            eb::winter_bound_general(eps, E, log_base_from(base)));
      },
      py::arg("eps"), py::arg("E"), py::arg("base") = "e");

  m.def(
      "winter_bound_alpha",
      [](double eps, double alpha, double E, const std::string& base) {
        return report_dict(
            eb::winter_bound_alpha(eps, alpha, E, log_base_from(base)));
      },
      py::arg("eps"), py::arg("alpha"), py::arg("E"), py::arg("base") = "e");

  m.def(
      "shannon_entropy",
      [](const std::vector<double>& p, const std::string& base) {
        return eb::shannon_entropy(eb::DiscreteDistribution(p),
                                   log_base_from(base));
      },
      py::arg("p"), py::arg("base") = "e");

  m.def(
      "renyi_entropy",
      [](const std::vector<double>& p, double alpha, const std::string& base) {
        return eb::renyi_entropy(eb::DiscreteDistribution(p), alpha,
                                 log_base_from(base));
      },
      py::arg("p"), py::arg("alpha"), py::arg("base") = "e");

  m.def(
      "tsallis_entropy",
      [](const std::vector<double>& p, double alpha) {
        return eb::tsallis_entropy(eb::DiscreteDistribution(p), alpha);
      },
      py::arg("p"), py::arg("alpha"));

  m.def(
      "total_variation",
      [](const std::vector<double>& p, const std::vector<double>& q) {
        return eb::total_variation(eb::DiscreteDistribution(p),
                                   eb::DiscreteDistribution(q));
      },
      py::arg("p"), py::arg("q"));

  m.def(
      "classical_renyi_tsallis_bound",
      [](const std::vector<double>& p, const std::vector<double>& q,
         double alpha, double beta, double w_kappa) {
        return report_dict(eb::classical_renyi_tsallis_bound(
            eb::DiscreteDistribution(p), eb::DiscreteDistribution(q), alpha,
            beta, eb::WeightSequence::power(w_kappa)));
      },
      py::arg("p"), py::arg("q"), py::arg("alpha"), py::arg("beta"),
      py::arg("w_kappa") = 1.0);

  m.def(
      "extremal_marginal",
      [](double eps, double E, std::size_t dim, double tail_tol) {
        return eb::extremal_marginal(eps, E, dim, tail_tol).probs();
      },
      py::arg("eps"), py::arg("E"), py::arg("dim"),
      py::arg("tail_tol") = 1e-9);

  m.def(
      "von_neumann_entropy",
      [](const std::vector<std::vector<std::complex<double>>>& rho,
         const std::string& base) {
        return eb::von_neumann_entropy(density_from_rows(rho),
                                       log_base_from(base));
      },
      py::arg("rho"), py::arg("base") = "e");

  m.def(
      "quantum_renyi_entropy",
      [](const std::vector<std::vector<std::complex<double>>>& rho,
         double alpha, const std::string& base) {
        return eb::quantum_renyi_entropy(density_from_rows(rho), alpha,
                                         log_base_from(base));
      },
      py::arg("rho"), py::arg("alpha"), py::arg("base") = "e");

  m.def(
      "quantum_tsallis_entropy",
      [](const std::vector<std::vector<std::complex<double>>>& rho,
         double alpha) {
        return eb::quantum_tsallis_entropy(density_from_rows(rho), alpha);
      },
      py::arg("rho"), py::arg("alpha"));

  m.def(
      "trace_distance",
      [](const std::vector<std::vector<std::complex<double>>>& rho,
         const std::vector<std::vector<std::complex<double>>>& sigma) {
        return eb::trace_distance(density_from_rows(rho),
                                  density_from_rows(sigma));
      },
      py::arg("rho"), py::arg("sigma"));

  m.def(
      "fidelity",
      [](const std::vector<std::vector<std::complex<double>>>& rho,
         const std::vector<std::vector<std::complex<double>>>& sigma) {
        return eb::fidelity(density_from_rows(rho), density_from_rows(sigma));
      },
      py::arg("rho"), py::arg("sigma"));

  m.def(
      "energy",
      [](const std::vector<std::vector<std::complex<double>>>& rho) {
        return eb::energy(density_from_rows(rho),
                          eb::HamiltonianSpec::number());
      },
      py::arg("rho"));

  m.def(
      "tsallis_lipschitz_bound",
      [](const std::vector<std::vector<std::complex<double>>>& rho,
         const std::vector<std::vector<std::complex<double>>>& sigma,
         double alpha) {
        return report_dict(eb::tsallis_lipschitz_bound(
            density_from_rows(rho), density_from_rows(sigma), alpha));
      },
      py::arg("rho"), py::arg("sigma"), py::arg("alpha"));

  m.def(
      "moment_bound_f1",
      [](const std::vector<std::vector<std::complex<double>>>& rho,
         double shift) {
        return report_dict(eb::moment_bound_f1(
            density_from_rows(rho), eb::HamiltonianSpec::shifted_number(shift)));
      },
      py::arg("rho"), py::arg("shift") = 1.0);

  m.def(
      "counterexample_entropy",
      [](double alpha, std::uint64_t K) {
        eb::EigenvalueFamily fam(alpha, K);
        eb::EntropyVerdict r = eb::counterexample_entropy(fam, K);
        py::dict d;
        d["partial"] = r.partial;
        d["tail_bound"] = r.tail_bound;
        d["finite"] = r.finite;
        d["upper"] = r.upper;
        d["nu"] = fam.nu();
        d["normalizing_lower"] = fam.normalizing_sum().lower;
        d["normalizing_upper"] = fam.normalizing_sum().upper;
        return d;
      },
      py::arg("alpha"), py::arg("K") = 100000);

  m.def(
      "beta_log_z",
      [](double beta) {
        eb::BetaLogZ r = eb::beta_log_z(beta);
        py::dict d;
        d["lower"] = r.lower;
        d["upper"] = r.upper;
        d["log_integral"] = r.log_integral;
        return d;
      },
      py::arg("beta"));

  m.def(
      "run_sweep",
      [](int eps_steps, int e_steps, double eps_max, double e_min, double e_max,
         const std::vector<double>& alphas) {
        eb::GridSpec g;
        g.eps_steps = eps_steps;
        g.E_steps = e_steps;
        g.eps_max = eps_max;
        g.E_min = e_min;
        g.E_max = e_max;
        return eb::sweep_to_csv(eb::run_sweep(g, alphas, eb::LogBase::natural()),
                                alphas.size());
      },
      py::arg("eps_steps") = 20, py::arg("e_steps") = 20,
      py::arg("eps_max") = 0.9, py::arg("e_min") = 0.25,
      py::arg("e_max") = 8.0,
      py::arg("alphas") = std::vector<double>{0.05, 0.1, 0.2, 0.4});
}
