#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace entrobound {

// A parameter left the mathematical domain of an operation (exit code 2 in the CLI).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// The requested configuration is inconsistent: divergent series, missing input,
// incompatible flags.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A truncated representation carries too much tail mass to be trusted.
struct TruncationError : std::runtime_error {
  TruncationError(const std::string& what, double tail)
      : std::runtime_error(what), tail_mass(tail) {}
  double tail_mass;
};

// A numeric precondition of a theorem failed; carries the offending value so
// callers can report how far off it was.
struct PreconditionError : std::runtime_error {
  PreconditionError(const std::string& what, double value)
      : std::runtime_error(what), actual(value) {}
  double actual;
};

// The iterative eigensolver hit its rotation cap before reaching tolerance.
struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& what, double res)
      : std::runtime_error(what), residual(res) {}
  double residual;
};

// Logarithm base shared by every entropy in one computation. Everything is
// evaluated internally in nats; conversion divides by log(base) at the end.
class LogBase {
 public:
  constexpr LogBase() = default;
  static LogBase natural() { return LogBase{}; }
  static LogBase base(double b) {
    if (!(b > 1.0)) throw DomainError("log base must exceed 1");
    LogBase lb;
    lb.ln_base_ = std::log(b);
    return lb;
  }
  static LogBase bits() { return base(2.0); }
  double from_nats(double nats) const { return nats / ln_base_; }
  double ln_of_base() const { return ln_base_; }

 private:
  double ln_base_ = 1.0;
};

enum class TermCombination { sum, product };

// Evaluation record for one bound: the value, a flag telling whether the inputs
// sit inside the hypothesis region of the underlying theorem (never blocks
// evaluation), the named components that recombine to the value, and an echo of
// the inputs. Recombination of `terms` must reproduce `value` to ~1e-12; the
// test suites enforce this for every report-producing operation.
struct BoundReport {
  std::string name;
  double value = 0.0;
  bool in_validity_domain = true;
  TermCombination combination = TermCombination::sum;
  std::vector<std::pair<std::string, double>> terms;
  std::vector<std::pair<std::string, double>> params;

  double recombined() const {
    if (combination == TermCombination::sum) {
      double s = 0.0;
      for (const auto& [k, v] : terms) s += v;
      return s;
    }
    double p = 1.0;
    for (const auto& [k, v] : terms) p *= v;
    return p;
  }

  void add_term(const std::string& key, double v) { terms.emplace_back(key, v); }
  void set_param(const std::string& key, double v) { params.emplace_back(key, v); }

  bool has_param(const std::string& key) const {
    for (const auto& [k, v] : params)
      if (k == key) return true;
    return false;
  }

  double param(const std::string& key) const {
    for (const auto& [k, v] : params)
      if (k == key) return v;
    throw ConfigError("bound report has no parameter named '" + key + "'");
  }
};

}  // namespace entrobound
