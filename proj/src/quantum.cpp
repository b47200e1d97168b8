#include "entrobound/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace entrobound {

HermitianMatrix::HermitianMatrix(std::size_t d, std::vector<cplx> entries)
    : d_(d), a_(std::move(entries)) {
  if (d_ == 0 || a_.size() != d_ * d_)
    throw DomainError("matrix needs d*d entries");
  for (const cplx& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw DomainError("matrix entries must be finite");
}

HermitianMatrix HermitianMatrix::zero(std::size_t d) {
  return HermitianMatrix(d, std::vector<cplx>(d * d, cplx(0.0, 0.0)));
}

HermitianMatrix HermitianMatrix::identity(std::size_t d) {
  HermitianMatrix m = zero(d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
  return m;
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& diag) {
  HermitianMatrix m = zero(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
  return m;
}

double HermitianMatrix::frobenius_norm() const {
  long double s = 0.0L;
  for (const cplx& v : a_) s += std::norm(v);
  return std::sqrt(static_cast<double>(s));
}

double HermitianMatrix::off_diagonal_frobenius() const {
  long double s = 0.0L;
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j)
      if (i != j) s += std::norm(at(i, j));
  return std::sqrt(static_cast<double>(s));
}

double HermitianMatrix::hermiticity_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = i; j < d_; ++j)
      worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
  return worst;
}

bool HermitianMatrix::is_diagonal(double tol) const {
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j)
      if (i != j && std::abs(at(i, j)) > tol) return false;
  return true;
}

HermitianMatrix HermitianMatrix::adjoint() const {
  HermitianMatrix m = zero(d_);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) m.at(j, i) = std::conj(at(i, j));
  return m;
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  if (o.d_ != d_) throw DomainError("matrix dimensions must match");
  HermitianMatrix m = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] += o.a_[k];
  return m;
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  if (o.d_ != d_) throw DomainError("matrix dimensions must match");
  HermitianMatrix m = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] -= o.a_[k];
  return m;
}

HermitianMatrix HermitianMatrix::operator*(const HermitianMatrix& o) const {
  if (o.d_ != d_) throw DomainError("matrix dimensions must match");
  HermitianMatrix m = zero(d_);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t k = 0; k < d_; ++k) {
      cplx aik = at(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < d_; ++j) m.at(i, j) += aik * o.at(k, j);
    }
  return m;
}

HermitianMatrix HermitianMatrix::scaled(double s) const {
  HermitianMatrix m = *this;
  for (cplx& v : m.a_) v *= s;
  return m;
}

cplx HermitianMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < d_; ++i) t += at(i, i);
  return t;
}

HermitianMatrix Spectrum::apply(double (*f)(double)) const {
  std::size_t d = eigenvalues.size();
  HermitianMatrix m = HermitianMatrix::zero(d);
  for (std::size_t k = 0; k < d; ++k) {
    double fk = f(eigenvalues[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < d; ++i) {
      cplx vik = vectors.at(i, k);
      for (std::size_t j = 0; j < d; ++j)
        m.at(i, j) += fk * vik * std::conj(vectors.at(j, k));
    }
  }
  return m;
}

double Spectrum::reconstruction_residual(const HermitianMatrix& original) const {
  std::size_t d = eigenvalues.size();
  HermitianMatrix rebuilt = HermitianMatrix::zero(d);
  for (std::size_t k = 0; k < d; ++k) {
    double lk = eigenvalues[k];
    for (std::size_t i = 0; i < d; ++i) {
      cplx vik = vectors.at(i, k);
      for (std::size_t j = 0; j < d; ++j)
        rebuilt.at(i, j) += lk * vik * std::conj(vectors.at(j, k));
    }
  }
  return (rebuilt - original).frobenius_norm();
}

double Spectrum::orthonormality_residual() const {
  HermitianMatrix g = vectors.adjoint() * vectors;
  std::size_t d = eigenvalues.size();
  return (g - HermitianMatrix::identity(d)).frobenius_norm();
}

Spectrum eigendecompose(const HermitianMatrix& input) {
  std::size_t d = input.dim();
  double herm = input.hermiticity_residual();
  double scale = std::max(1.0, input.frobenius_norm());
  if (herm > 1e-10 * scale)
    throw DomainError("eigendecomposition needs a Hermitian matrix (residual " +
                      std::to_string(herm) + ")");

  HermitianMatrix a = input;
  // Symmetrize exactly so rounding in the input cannot bias the sweep.
  for (std::size_t i = 0; i < d; ++i) {
    a.at(i, i) = cplx(a.at(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < d; ++j) {
      cplx v = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
      a.at(i, j) = v;
      a.at(j, i) = std::conj(v);
    }
  }

  HermitianMatrix v = HermitianMatrix::identity(d);
  double norm = a.frobenius_norm();
  double target = 1e-14 * norm;
  double thresh = d > 1 ? target / static_cast<double>(d) : 0.0;
  std::size_t cap = 100 * d * d;
  std::size_t rotations = 0;

  auto off = [&]() { return a.off_diagonal_frobenius(); };

  if (norm > 0.0 && off() > target) {
    for (std::size_t sweep = 0; sweep < 100; ++sweep) {
      for (std::size_t p = 0; p + 1 < d; ++p) {
        for (std::size_t q = p + 1; q < d; ++q) {
          cplx apq = a.at(p, q);
          double b = std::abs(apq);
          if (b <= thresh) continue;
          if (++rotations > cap)
            throw ConvergenceError("Jacobi rotation budget exhausted", off());
          cplx sigma = apq / b;  // phase making the pivot real
          double app = a.at(p, p).real();
          double aqq = a.at(q, q).real();
          double tau = (aqq - app) / (2.0 * b);
          double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
          double c = 1.0 / std::sqrt(1.0 + t * t);
          double s = t * c;
          cplx cs = std::conj(sigma) * s;
          cplx cc = std::conj(sigma) * c;

          for (std::size_t r = 0; r < d; ++r) {
            cplx arp = a.at(r, p), arq = a.at(r, q);
            a.at(r, p) = c * arp - cs * arq;
            a.at(r, q) = s * arp + cc * arq;
          }
          for (std::size_t j = 0; j < d; ++j) {
            cplx apj = a.at(p, j), aqj = a.at(q, j);
            a.at(p, j) = c * apj - sigma * s * aqj;
            a.at(q, j) = s * apj + sigma * c * aqj;
          }
          a.at(p, q) = 0.0;
          a.at(q, p) = 0.0;
          a.at(p, p) = cplx(a.at(p, p).real(), 0.0);
          a.at(q, q) = cplx(a.at(q, q).real(), 0.0);

          for (std::size_t r = 0; r < d; ++r) {
            cplx vrp = v.at(r, p), vrq = v.at(r, q);
            v.at(r, p) = c * vrp - cs * vrq;
            v.at(r, q) = s * vrp + cc * vrq;
          }
        }
      }
      if (off() <= target) break;
      if (sweep == 99) throw ConvergenceError("Jacobi sweeps exhausted", off());
    }
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a.at(i, i).real() > a.at(j, j).real();
  });

  Spectrum spec;
  spec.eigenvalues.resize(d);
  spec.vectors = HermitianMatrix::zero(d);
  for (std::size_t k = 0; k < d; ++k) {
    spec.eigenvalues[k] = a.at(order[k], order[k]).real();
    for (std::size_t i = 0; i < d; ++i)
      spec.vectors.at(i, k) = v.at(i, order[k]);
  }
  return spec;
}

DensityMatrix::DensityMatrix(HermitianMatrix m) : m_(std::move(m)) {
  double herm = m_.hermiticity_residual();
  if (herm > 1e-12 * std::max(1.0, m_.frobenius_norm()))
    throw DomainError("density matrix must be Hermitian (residual " +
                      std::to_string(herm) + ")");
  double tr = m_.trace().real();
  if (std::fabs(tr - 1.0) > 1e-10)
    throw DomainError("density matrix must have unit trace (got " +
                      std::to_string(tr) + ")");
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double>& probs) {
  return DensityMatrix(HermitianMatrix::diagonal(probs));
}

DensityMatrix DensityMatrix::from_distribution(const DiscreteDistribution& p) {
  return diagonal(p.probs());
}

DensityMatrix DensityMatrix::pure(const std::vector<cplx>& amplitudes) {
  std::size_t d = amplitudes.size();
  long double n2 = 0.0L;
  for (const cplx& v : amplitudes) n2 += std::norm(v);
  if (!(n2 > 0.0L)) throw DomainError("pure state needs a nonzero vector");
  double inv = static_cast<double>(1.0L / n2);
  HermitianMatrix m = HermitianMatrix::zero(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m.at(i, j) = amplitudes[i] * std::conj(amplitudes[j]) * inv;
  return DensityMatrix(std::move(m));
}

const Spectrum& DensityMatrix::spectrum() const {
  if (!has_spectrum_) {
    spectrum_ = eigendecompose(m_);
    has_spectrum_ = true;
  }
  return spectrum_;
}

std::vector<double> DensityMatrix::clipped_eigenvalues() const {
  std::vector<double> ev = spectrum().eigenvalues;
  for (double& l : ev) {
    if (l < -1e-10)
      throw DomainError("state has a negative eigenvalue: " + std::to_string(l));
    if (l < 0.0) l = 0.0;
  }
  return ev;
}

DiscreteDistribution DensityMatrix::eigen_distribution() const {
  return DiscreteDistribution(clipped_eigenvalues());
}

HamiltonianSpec HamiltonianSpec::number() { return power_law(0.0, 1.0); }

HamiltonianSpec HamiltonianSpec::shifted_number(double shift) {
  return power_law(shift, 1.0);
}

HamiltonianSpec HamiltonianSpec::power_law(double shift, double kappa) {
  if (!(shift >= 0.0)) throw DomainError("level shift must be nonnegative");
  if (!(kappa > 0.0)) throw DomainError("level exponent must be positive");
  HamiltonianSpec h;
  h.shift_ = shift;
  h.kappa_ = kappa;
  return h;
}

HamiltonianSpec HamiltonianSpec::custom(std::vector<double> levels) {
  if (levels.empty()) throw DomainError("custom level list must be nonempty");
  for (std::size_t n = 1; n < levels.size(); ++n)
    if (levels[n] < levels[n - 1])
      throw DomainError("custom levels must be nondecreasing");
  if (levels[0] < 0.0) throw DomainError("levels must be nonnegative");
  HamiltonianSpec h;
  h.levels_ = std::move(levels);
  return h;
}

double HamiltonianSpec::level(std::size_t n) const {
  if (!levels_.empty()) {
    if (n >= levels_.size())
      throw DomainError("level index beyond custom level list");
    return levels_[n];
  }
  double base = static_cast<double>(n) + shift_;
  return kappa_ == 1.0 ? base : std::pow(base, kappa_);
}

std::size_t HamiltonianSpec::projection_rank(double cutoff, double exponent) const {
  if (!(exponent > 0.0)) throw DomainError("projection exponent must be positive");
  if (cutoff < 0.0) return 0;
  if (!levels_.empty()) {
    std::size_t r = 0;
    for (double l : levels_) {
      double le = exponent == 1.0 ? l : std::pow(l, exponent);
      if (le <= cutoff * (1.0 + 1e-12) + 1e-300) ++r;
    }
    return r;
  }
  // level(n)^exponent <= cutoff  <=>  n <= cutoff^{1/(kappa*exponent)} - shift.
  double edge = std::pow(cutoff, 1.0 / (kappa_ * exponent)) - shift_;
  // Guard against pow() landing a hair below an exact integer edge.
  edge *= 1.0 + 1e-12;
  if (edge < 0.0) return 0;
  return static_cast<std::size_t>(std::floor(edge)) + 1;
}

double SpectralProjection::schatten_norm(double p) const {
  if (!(p >= 1.0)) throw DomainError("Schatten order must be >= 1");
  if (rank == 0) return 0.0;
  if (std::isinf(p)) return 1.0;
  return std::pow(static_cast<double>(rank), 1.0 / p);
}

double von_neumann_entropy(const DensityMatrix& rho, LogBase lb) {
  return shannon_entropy(rho.eigen_distribution(), lb);
}

double quantum_renyi_entropy(const DensityMatrix& rho, double alpha, LogBase lb) {
  return renyi_entropy(rho.eigen_distribution(), alpha, lb);
}

double quantum_tsallis_entropy(const DensityMatrix& rho, double alpha) {
  return tsallis_entropy(rho.eigen_distribution(), alpha);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw DomainError("trace distance needs equal dimensions");
  Spectrum s = eigendecompose(rho.matrix() - sigma.matrix());
  long double acc = 0.0L;
  for (double l : s.eigenvalues) acc += std::fabs(l);
  return 0.5 * static_cast<double>(acc);
}

double schatten_norm(const HermitianMatrix& m, double p) {
  if (!(p >= 1.0)) throw DomainError("Schatten order must be >= 1");
  Spectrum s = eigendecompose(m);
  if (std::isinf(p)) {
    double worst = 0.0;
    for (double l : s.eigenvalues) worst = std::max(worst, std::fabs(l));
    return worst;
  }
  long double acc = 0.0L;
  for (double l : s.eigenvalues)
    acc += std::pow(static_cast<long double>(std::fabs(l)), p);
  return static_cast<double>(std::pow(acc, 1.0L / p));
}

namespace {

double sqrt_clip(double x) { return x > 0.0 ? std::sqrt(x) : 0.0; }

}  // namespace

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DomainError("fidelity needs equal dimensions");
  // F = || sqrt(rho) sqrt(sigma) ||_1 = sum of sqrt of eigenvalues of
  // sqrt(sigma) rho sqrt(sigma).
  HermitianMatrix sq_sigma = sigma.spectrum().apply(&sqrt_clip);
  HermitianMatrix m = sq_sigma * rho.matrix() * sq_sigma;
  Spectrum s = eigendecompose(m);
  long double acc = 0.0L;
  for (double l : s.eigenvalues)
    if (l > 0.0) acc += std::sqrt(static_cast<long double>(l));
  double f = static_cast<double>(acc);
  return f > 1.0 ? 1.0 : f;
}

double energy(const DensityMatrix& rho, const HamiltonianSpec& h) {
  long double e = 0.0L;
  for (std::size_t n = 0; n < rho.dim(); ++n)
    e += h.level(n) * rho.matrix().at(n, n).real();
  return static_cast<double>(e);
}

DensityMatrix passive_state(const DensityMatrix& rho) {
  return DensityMatrix::diagonal(rho.spectrum().eigenvalues);
}

SpectralProjection spectral_projection(const HamiltonianSpec& h, double cutoff,
                                       double exponent) {
  SpectralProjection p;
  p.cutoff = cutoff;
  p.rank = h.projection_rank(cutoff, exponent);
  return p;
}

GibbsState gibbs_state_number_op(double E, std::size_t d, double tail_tol) {
  if (!(E > 0.0)) throw DomainError("Gibbs mean occupation must be positive");
  DiscreteDistribution g = DiscreteDistribution::geometric(E, d, tail_tol);
  GibbsState gs{DensityMatrix::from_distribution(g), std::log1p(1.0 / E),
                std::exp(static_cast<double>(d) * std::log(E / (E + 1.0))), 0.0};
  gs.stationarity_residual =
      std::fabs(energy(gs.state, HamiltonianSpec::number()) - E);
  return gs;
}

double gibbs_entropy(double E, LogBase lb) {
  if (!(E >= 0.0)) throw DomainError("mean occupation must be nonnegative");
  if (E == 0.0) return 0.0;
  double g = (E + 1.0) * std::log1p(E) - E * std::log(E);
  return lb.from_nats(g);
}

}  // namespace entrobound
