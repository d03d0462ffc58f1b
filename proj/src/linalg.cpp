#include "antidist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace antidist {

bool is_finite(const ComplexMatrix& m) {
    return m.array().isFinite().all();
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

UnitaryOperator validate_unitary(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw NonSquareError("expected a square matrix");
    if (m.rows() < 1) throw NonSquareError("empty matrix");
    if (!is_finite(m)) throw NotUnitaryError(std::numeric_limits<double>::infinity());
    const double residual =
        (m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols())).norm();
    if (residual > tol) throw NotUnitaryError(residual);
    return UnitaryOperator(m);
}

PureState::PureState(ComplexVector amps, double norm_tol) : amps_(std::move(amps)) {
    if (amps_.size() < 1) throw OutOfRangeError("empty state vector");
    if (!amps_.array().isFinite().all()) throw OutOfRangeError("non-finite amplitude");
    const double n = amps_.norm();
    if (std::abs(n - 1.0) > norm_tol)
        throw OutOfRangeError("state norm " + std::to_string(n) + " is not 1");
}

PureState PureState::normalized(ComplexVector amps) {
    const double n = amps.norm();
    if (n <= 0.0 || !std::isfinite(n)) throw OutOfRangeError("cannot normalize zero vector");
    return PureState(amps / n);
}

PureState PureState::basis_state(int dim, int k) {
    if (dim < 1 || k < 0 || k >= dim) throw OutOfRangeError("basis index out of range");
    ComplexVector v = ComplexVector::Zero(dim);
    v(k) = 1.0;
    return PureState(std::move(v));
}

double overlap_sq(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("state dimensions differ");
    return std::norm(inner(a, b));
}

DensityMatrix::DensityMatrix(ComplexMatrix rho, const Tolerances& tol) : rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols()) throw NonSquareError("density matrix must be square");
    if (!is_finite(rho_)) throw OutOfRangeError("non-finite density entry");
    if ((rho_ - rho_.adjoint()).norm() > tol.hermiticity)
        throw OutOfRangeError("density matrix is not Hermitian");
    if (std::abs(rho_.trace().real() - 1.0) > tol.trace_one ||
        std::abs(rho_.trace().imag()) > tol.trace_one)
        throw OutOfRangeError("density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitize(rho_),
                                                    Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol.psd_floor)
        throw OutOfRangeError("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    const ComplexVector& a = psi.amplitudes();
    return DensityMatrix(a * a.adjoint());
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
    const Eigen::Index d = eigenvectors.rows();
    ComplexMatrix u = ComplexMatrix::Zero(d, d);
    for (Eigen::Index l = 0; l < d; ++l) {
        const ComplexVector v = eigenvectors.col(l);
        u += std::polar(1.0, phases[static_cast<std::size_t>(l)]) * (v * v.adjoint());
    }
    return u;
}

namespace {

double phase_from_cos_sin(double c, double s, const Tolerances& tol) {
    if (std::abs(s) <= tol.phase_zero_imag && c < 0.0) return M_PI;
    return std::atan2(s, c);
}

}  // namespace

SpectralDecomposition unitary_eig(const UnitaryOperator& u, const Tolerances& tol) {
    const int d = u.dim();
    const ComplexMatrix& m = u.matrix();
    const ComplexMatrix h = hermitize(m);
    const ComplexMatrix k = (m - m.adjoint()) / Complex(0.0, 2.0);

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    if (es.info() != Eigen::Success)
        throw ConvergenceFailureError(std::numeric_limits<double>::infinity());
    RealVector cosv = es.eigenvalues();
    ComplexMatrix vecs = es.eigenvectors();

    // Split clusters of equal cos(theta) with the skew part's restriction.
    int start = 0;
    while (start < d) {
        int end = start + 1;
        while (end < d && cosv(end) - cosv(end - 1) <= tol.eig_cluster) ++end;
        const int mlen = end - start;
        if (mlen > 1) {
            const ComplexMatrix w = vecs.middleCols(start, mlen);
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> es2(hermitize(w.adjoint() * k * w));
            if (es2.info() != Eigen::Success)
                throw ConvergenceFailureError(std::numeric_limits<double>::infinity());
            vecs.middleCols(start, mlen) = w * es2.eigenvectors();
        }
        start = end;
    }

    SpectralDecomposition out;
    out.phases.resize(static_cast<std::size_t>(d));
    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> phases(static_cast<std::size_t>(d));
    for (int l = 0; l < d; ++l) {
        const ComplexVector v = vecs.col(l);
        const double c = (v.adjoint() * h * v)(0).real();
        const double s = (v.adjoint() * k * v)(0).real();
        phases[static_cast<std::size_t>(l)] = phase_from_cos_sin(c, s, tol);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return phases[a] < phases[b]; });
    out.eigenvectors.resize(d, d);
    for (int l = 0; l < d; ++l) {
        out.phases[static_cast<std::size_t>(l)] = phases[static_cast<std::size_t>(order[l])];
        out.eigenvectors.col(l) = vecs.col(order[l]);
    }

    const double residual = (m - out.reconstruct()).norm();
    if (residual > tol.eig_reconstruction) throw ConvergenceFailureError(residual);
    return out;
}

RealMatrix gram_overlaps(const std::vector<PureState>& states) {
    if (states.empty()) throw OutOfRangeError("no states");
    const int n = static_cast<int>(states.size());
    const int d = states.front().dim();
    for (const auto& s : states)
        if (s.dim() != d) throw DimensionMismatchError("state dimensions differ");
    RealMatrix g(n, n);
    for (int i = 0; i < n; ++i) {
        g(i, i) = 1.0;
        for (int j = i + 1; j < n; ++j) {
            double x = std::norm(inner(states[i], states[j]));
            x = std::clamp(x, 0.0, 1.0);  // roundoff can exceed 1 by ~1e-16
            g(i, j) = g(j, i) = x;
        }
    }
    return g;
}

double gaussian(Rng& rng) {
    // Box-Muller on 53-bit uniforms drawn straight from the engine.
    double u1 = 0.0;
    do {
        u1 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    } while (u1 <= 0.0);
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

UnitaryOperator haar_random_unitary(int d, Rng& rng) {
    if (d < 1) throw OutOfRangeError("dimension must be positive");
    ComplexMatrix g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = Complex(gaussian(rng), gaussian(rng));
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const Complex rjj = r(j, j);
        const double a = std::abs(rjj);
        q.col(j) *= (a > 0.0) ? rjj / a : Complex(1.0, 0.0);
    }
    return validate_unitary(q);
}

UnitaryOperator haar_random_unitary(int d, std::uint64_t seed) {
    Rng rng(seed);
    return haar_random_unitary(d, rng);
}

PureState random_pure_state(int d, Rng& rng) {
    if (d < 1) throw OutOfRangeError("dimension must be positive");
    ComplexVector v(d);
    for (int i = 0; i < d; ++i) v(i) = Complex(gaussian(rng), gaussian(rng));
    return PureState::normalized(std::move(v));
}

}  // namespace antidist
