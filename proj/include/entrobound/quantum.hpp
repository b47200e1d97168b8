#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "entrobound/common.hpp"
#include "entrobound/dist.hpp"

namespace entrobound {

using cplx = std::complex<double>;

// Dense d x d complex matrix, row-major. Hermiticity is a property checked by
// the consumers that need it, not an invariant of the container.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  HermitianMatrix(std::size_t d, std::vector<cplx> entries);
  static HermitianMatrix zero(std::size_t d);
  static HermitianMatrix identity(std::size_t d);
  static HermitianMatrix diagonal(const std::vector<double>& diag);

  std::size_t dim() const { return d_; }
  cplx& at(std::size_t i, std::size_t j) { return a_[i * d_ + j]; }
  const cplx& at(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }
  const std::vector<cplx>& entries() const { return a_; }

  double frobenius_norm() const;
  double off_diagonal_frobenius() const;
  double hermiticity_residual() const;  // max |a_ij - conj(a_ji)|
  bool is_diagonal(double tol) const;

  HermitianMatrix adjoint() const;
  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix operator*(const HermitianMatrix& o) const;
  HermitianMatrix scaled(double s) const;
  cplx trace() const;

 private:
  std::size_t d_ = 0;
  std::vector<cplx> a_;
};

// Eigendecomposition result: eigenvalues sorted nonincreasing, vectors(:, k)
// (column k of the row-major matrix) is the unit eigenvector of eigenvalue k.
struct Spectrum {
  std::vector<double> eigenvalues;
  HermitianMatrix vectors;

  HermitianMatrix apply(double (*f)(double)) const;  // V f(Lambda) V^*
  double reconstruction_residual(const HermitianMatrix& original) const;
  double orthonormality_residual() const;
};

// Cyclic Jacobi eigensolver for Hermitian matrices. Each rotation combines a
// phase factor that makes the pivot real with a real Givens rotation; sweeps
// run in a fixed (p, q) order so results are deterministic. Convergence is
// off-diagonal Frobenius norm <= 1e-14 * ||A||_F, checked before the first
// sweep so diagonal input never rotates; the rotation budget is 100 d^2.
Spectrum eigendecompose(const HermitianMatrix& m);

// Density matrix: Hermitian within 1e-12 entrywise, unit trace within 1e-10.
// Positivity is enforced where eigenvalues are consumed: anything below
// -1e-10 is a domain error, the band [-1e-10, 0) is clipped to zero, and for
// entropy evaluation the clipped spectrum is renormalized.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianMatrix m);
  static DensityMatrix diagonal(const std::vector<double>& probs);
  static DensityMatrix from_distribution(const DiscreteDistribution& p);
  static DensityMatrix pure(const std::vector<cplx>& amplitudes);

  std::size_t dim() const { return m_.dim(); }
  const HermitianMatrix& matrix() const { return m_; }

  const Spectrum& spectrum() const;  // cached
  // Eigenvalues clipped into [0, 1] band as described above.
  std::vector<double> clipped_eigenvalues() const;
  DiscreteDistribution eigen_distribution() const;  // clipped + renormalized

 private:
  HermitianMatrix m_;
  mutable bool has_spectrum_ = false;
  mutable Spectrum spectrum_;
};

// Hamiltonian with known level sequence. The power-law kind has levels
// (n + shift)^kappa, which keeps spectral projection ranks and trace tails
// analytically available; number() is shift 0, kappa 1 (the number operator)
// and shifted_number(s) is N + s. Custom finite level lists are allowed where
// no infinite tail is needed.
class HamiltonianSpec {
 public:
  static HamiltonianSpec number();
  static HamiltonianSpec shifted_number(double shift);
  static HamiltonianSpec power_law(double shift, double kappa);
  static HamiltonianSpec custom(std::vector<double> levels);

  double level(std::size_t n) const;
  bool is_power_law() const { return levels_.empty(); }
  double shift() const { return shift_; }
  double kappa() const { return kappa_; }
  std::size_t custom_dim() const { return levels_.size(); }

  // Number of levels with level(n)^exponent <= cutoff (exponent > 0). This is
  // the rank of the spectral projection 1_{[0, cutoff]}(H^exponent).
  std::size_t projection_rank(double cutoff, double exponent = 1.0) const;

 private:
  double shift_ = 0.0;
  double kappa_ = 1.0;
  std::vector<double> levels_;
};

struct SpectralProjection {
  std::size_t rank = 0;
  double cutoff = 0.0;
  // ||P||_p = rank^{1/p} for p < inf, 1 for p = inf (rank > 0).
  double schatten_norm(double p) const;
};

struct GibbsState {
  DensityMatrix state;
  double beta = 0.0;              // inverse temperature log(1 + 1/E)
  double tail_mass = 0.0;         // dropped by truncation
  double stationarity_residual = 0.0;  // |tr(rho N) - E| after truncation
};

double von_neumann_entropy(const DensityMatrix& rho,
                           LogBase lb = LogBase::natural());
double quantum_renyi_entropy(const DensityMatrix& rho, double alpha,
                             LogBase lb = LogBase::natural());
double quantum_tsallis_entropy(const DensityMatrix& rho, double alpha);

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Schatten p-norm of a Hermitian matrix, p >= 1 (infinity allowed).
double schatten_norm(const HermitianMatrix& m, double p);

// Uhlmann fidelity F(rho, sigma) = || sqrt(rho) sqrt(sigma) ||_1.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// tr(H rho) using the level sequence on the computational basis diagonal.
double energy(const DensityMatrix& rho, const HamiltonianSpec& h);

// The passive rearrangement: eigenvalues of rho, sorted nonincreasing, on the
// diagonal of the computational basis. Entropy-preserving, energy-minimizing.
DensityMatrix passive_state(const DensityMatrix& rho);

SpectralProjection spectral_projection(const HamiltonianSpec& h, double cutoff,
                                       double exponent = 1.0);

// Gibbs state of the number operator with mean energy E, truncated to d
// levels: diagonal geometric with p = 1/(E+1), beta = log(1 + 1/E).
GibbsState gibbs_state_number_op(double E, std::size_t d, double tail_tol = 1e-12);

// Maximum entropy at fixed mean occupation, S(gibbs(E)) = (E+1)log(E+1) - E log E.
double gibbs_entropy(double E, LogBase lb = LogBase::natural());

}  // namespace entrobound
