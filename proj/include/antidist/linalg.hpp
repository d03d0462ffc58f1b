#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "antidist/config.hpp"
#include "antidist/errors.hpp"

namespace antidist {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

inline ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }
inline Complex trace(const ComplexMatrix& m) { return m.trace(); }
inline double frobenius_norm(const ComplexMatrix& m) { return m.norm(); }
inline double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).norm();
}
inline ComplexMatrix hermitize(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }
bool is_finite(const ComplexMatrix& m);
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b);

/// A validated d x d unitary. Construct through validate_unitary().
class UnitaryOperator {
public:
    int dim() const { return static_cast<int>(m_.rows()); }
    const ComplexMatrix& matrix() const { return m_; }

    friend UnitaryOperator validate_unitary(const ComplexMatrix& m, double tol);

private:
    explicit UnitaryOperator(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

/// Wraps m iff ||m†m - I||_F <= tol. Throws NonSquareError / NotUnitaryError.
UnitaryOperator validate_unitary(const ComplexMatrix& m,
                                 double tol = Tolerances::defaults().unitary_validation);

/// Unit-norm pure state. The constructor checks the norm; normalized() rescales.
class PureState {
public:
    explicit PureState(ComplexVector amps, double norm_tol = Tolerances::defaults().state_norm);
    static PureState normalized(ComplexVector amps);
    static PureState basis_state(int dim, int k);

    int dim() const { return static_cast<int>(amps_.size()); }
    const ComplexVector& amplitudes() const { return amps_; }

private:
    ComplexVector amps_;
};

inline Complex inner(const PureState& a, const PureState& b) {
    return a.amplitudes().dot(b.amplitudes());
}
/// |<a|b>|^2
double overlap_sq(const PureState& a, const PureState& b);

/// Hermitian, PSD, unit-trace matrix.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix rho, const Tolerances& tol = Tolerances::defaults());
    static DensityMatrix from_pure(const PureState& psi);

    int dim() const { return static_cast<int>(rho_.rows()); }
    const ComplexMatrix& matrix() const { return rho_; }

private:
    ComplexMatrix rho_;
};

/// Eigenphases in (-pi, pi], sorted ascending, with matching orthonormal
/// eigenvector columns. Satisfies U = sum_l e^{i phases[l]} v_l v_l†.
struct SpectralDecomposition {
    std::vector<double> phases;
    ComplexMatrix eigenvectors;

    ComplexMatrix reconstruct() const;
};

/// Spectral decomposition of a unitary via two Hermitian solves: diagonalize
/// (U+U†)/2, then re-diagonalize (U-U†)/(2i) restricted to each degenerate
/// cluster. Throws ConvergenceFailureError if the reconstruction residual
/// exceeds tol.eig_reconstruction.
SpectralDecomposition unitary_eig(const UnitaryOperator& u,
                                  const Tolerances& tol = Tolerances::defaults());

/// G(i,j) = |<psi_i|psi_j>|^2. Symmetric, unit diagonal, entries in [0,1].
RealMatrix gram_overlaps(const std::vector<PureState>& states);

/// Standard normal from a caller-owned generator; pinned Box-Muller so the
/// stream does not depend on the standard library's distribution internals.
double gaussian(Rng& rng);

/// Haar-distributed unitary: complex Ginibre, QR, then the diagonal phase
/// correction that makes the distribution exactly invariant.
UnitaryOperator haar_random_unitary(int d, Rng& rng);
UnitaryOperator haar_random_unitary(int d, std::uint64_t seed);

PureState random_pure_state(int d, Rng& rng);

}  // namespace antidist
