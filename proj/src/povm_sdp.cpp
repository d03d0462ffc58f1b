#include "antidist/povm_sdp.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

namespace antidist {

namespace {

// Euclidean projection onto the PSD cone by eigenvalue clipping. The 2x2
// Hermitian case is closed-form; it dominates the qubit search workloads.
ComplexMatrix project_psd(const ComplexMatrix& x) {
    const Eigen::Index d = x.rows();
    if (d == 1) {
        const double v = x(0, 0).real();
        ComplexMatrix out(1, 1);
        out(0, 0) = std::max(v, 0.0);
        return out;
    }
    if (d == 2) {
        const double a = x(0, 0).real();
        const double c = x(1, 1).real();
        const Complex b = 0.5 * (x(0, 1) + std::conj(x(1, 0)));
        const double mean = 0.5 * (a + c);
        const double r = std::hypot(0.5 * (a - c), std::abs(b));
        const double lo = mean - r, hi = mean + r;
        if (lo >= 0.0) return hermitize(x);
        ComplexMatrix out = ComplexMatrix::Zero(2, 2);
        if (hi <= 0.0) return out;
        // eigenvector for hi: (b, hi - a), or (hi - c, conj(b)) when b ~ 0
        ComplexVector v(2);
        if (std::abs(b) > 1e-300) {
            v << b, Complex(hi - a, 0.0);
        } else {
            v << Complex(a >= c ? 1.0 : 0.0, 0.0), Complex(a >= c ? 0.0 : 1.0, 0.0);
        }
        const double n = v.norm();
        if (n > 0.0) v /= n;
        out = hi * (v * v.adjoint());
        return out;
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitize(x));
    RealVector w = es.eigenvalues().cwiseMax(0.0);
    return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

double lambda_max(const ComplexMatrix& x) {
    if (x.rows() == 1) return x(0, 0).real();
    if (x.rows() == 2) {
        const double a = x(0, 0).real(), c = x(1, 1).real();
        const Complex b = 0.5 * (x(0, 1) + std::conj(x(1, 0)));
        return 0.5 * (a + c) + std::hypot(0.5 * (a - c), std::abs(b));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitize(x), Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

}  // namespace

double Povm::completeness_residual() const {
    if (effects.empty()) return 0.0;
    ComplexMatrix s = ComplexMatrix::Zero(effects[0].rows(), effects[0].cols());
    for (const auto& e : effects) s += e;
    return (s - ComplexMatrix::Identity(s.rows(), s.cols())).norm();
}

double Povm::min_eigenvalue() const {
    double m = 0.0;
    for (const auto& e : effects) {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitize(e), Eigen::EigenvaluesOnly);
        m = std::min(m, es.eigenvalues().minCoeff());
    }
    return m;
}

bool Povm::is_valid(double tol) const {
    return !effects.empty() && completeness_residual() <= tol && min_eigenvalue() >= -tol;
}

PovmProgram PovmProgram::from_costs(std::vector<ComplexMatrix> costs, double herm_tol) {
    if (costs.size() < 2) throw OutOfRangeError("a program needs at least 2 costs");
    if (costs.size() > 16) throw OutOfRangeError("more than 16 effects is out of desk scale");
    const Eigen::Index d = costs.front().rows();
    if (d < 1 || d > 64) throw OutOfRangeError("dimension out of desk scale");
    for (const auto& c : costs) {
        if (c.rows() != d || c.cols() != d)
            throw DimensionMismatchError("cost dimensions differ");
        if (!is_finite(c)) throw OutOfRangeError("non-finite cost entry");
        if ((c - c.adjoint()).norm() > herm_tol)
            throw OutOfRangeError("cost matrix is not Hermitian");
    }
    PovmProgram p;
    p.costs = std::move(costs);
    p.dim = static_cast<int>(d);
    return p;
}

PovmSolution solve_min_povm(const PovmProgram& p, const SolverConfig& cfg) {
    const int n = static_cast<int>(p.costs.size());
    const int d = p.dim;
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);

    std::vector<ComplexMatrix> a(p.costs.size());
    double scale = 0.0;
    for (int k = 0; k < n; ++k) {
        a[k] = hermitize(p.costs[k]);
        scale += a[k].norm();
    }
    scale /= n;
    if (scale <= 1e-300) {
        // All-zero objective: the symmetric POVM is optimal, certificate 0.
        PovmSolution s;
        s.povm.effects.assign(n, id / n);
        s.dual_Y = ComplexMatrix::Zero(d, d);
        return s;
    }
    for (auto& m : a) m /= scale;

    double rho = 1.0;
    const double alpha = cfg.relaxation;
    std::vector<ComplexMatrix> z(n, id / n), u(n, ComplexMatrix::Zero(d, d));
    std::vector<ComplexMatrix> m(n), relaxed(n);

    auto report = [&](long it) {
        PovmSolution s;
        ComplexMatrix zsum = ComplexMatrix::Zero(d, d);
        for (const auto& zk : z) zsum += zk;
        const ComplexMatrix corr = (zsum - id) / n;
        s.povm.effects.resize(n);
        for (int k = 0; k < n; ++k) s.povm.effects[k] = z[k] - corr;
        // The affine correction can push an eigenvalue slightly negative; mix
        // toward the symmetric POVM just enough to restore exact feasibility,
        // so the reported objective upper-bounds the optimum and weak duality
        // holds by construction.
        const double neg = -s.povm.min_eigenvalue();
        if (neg > 0.0) {
            const double t = neg * n / (neg * n + 1.0);
            for (int k = 0; k < n; ++k)
                s.povm.effects[k] = (1.0 - t) * s.povm.effects[k] + (t / n) * id;
        }
        double primal = 0.0;
        for (int k = 0; k < n; ++k)
            primal += (a[k].cwiseProduct(s.povm.effects[k].conjugate())).sum().real();
        ComplexMatrix y = ComplexMatrix::Zero(d, d);
        for (int k = 0; k < n; ++k) y += a[k] + rho * u[k];
        y = hermitize(y / n);
        double shift = -std::numeric_limits<double>::infinity();
        for (int k = 0; k < n; ++k) shift = std::max(shift, lambda_max(y - a[k]));
        if (shift > 0.0) y -= shift * id;
        s.primal = primal * scale;
        s.dual_Y = y * scale;
        s.gap = (primal - y.trace().real()) * scale;
        s.iterations = it;
        return s;
    };

    double best_gap = std::numeric_limits<double>::infinity();
    // Stagnation handling: degenerate optima can pin the splitting residuals
    // at a plateau for the default penalty; decaying the penalty (with the
    // scaled dual adjusted to keep the multiplier) restores progress. Purely
    // iterate-driven, so runs stay deterministic.
    double best_stagnation_metric = std::numeric_limits<double>::infinity();
    long checks_done = 0, last_improvement_check = 0;
    for (long it = 1; it <= cfg.max_iterations; ++it) {
        // Affine step: objective-shifted point projected onto {sum M_k = I}.
        ComplexMatrix dev = -id;
        for (int k = 0; k < n; ++k) {
            m[k] = z[k] - u[k] - a[k] / rho;
            dev += m[k];
        }
        dev /= n;
        for (int k = 0; k < n; ++k) m[k] -= dev;

        double dual_res = 0.0;
        for (int k = 0; k < n; ++k) {
            relaxed[k] = alpha * m[k] + (1.0 - alpha) * z[k];
            ComplexMatrix znew = project_psd(relaxed[k] + u[k]);
            dual_res = std::max(dual_res, rho * (znew - z[k]).norm());
            u[k] += relaxed[k] - znew;
            z[k] = std::move(znew);
        }

        if (it % cfg.check_interval == 0 || it == cfg.max_iterations) {
            ++checks_done;
            double primal_res = 0.0;
            for (int k = 0; k < n; ++k)
                primal_res = std::max(primal_res, (m[k] - z[k]).norm());
            double stagnation_metric = std::max(primal_res, dual_res);
            if (primal_res <= cfg.residual_tol && dual_res <= cfg.residual_tol) {
                PovmSolution s = report(it);
                best_gap = std::min(best_gap, s.gap);
                if (cfg.verbose)
                    std::cerr << "{\"iter\":" << it << ",\"primal_res\":" << primal_res
                              << ",\"dual_res\":" << dual_res << ",\"gap\":" << s.gap
                              << "}\n";
                // Relative stop: exact scaling equivariance, and stricter than
                // the absolute tolerance for the unit-trace cost scales the
                // exclusion programs produce.
                if (s.gap <= cfg.gap_tol * scale) return s;
                stagnation_metric = s.gap / scale;
            } else if (cfg.verbose) {
                std::cerr << "{\"iter\":" << it << ",\"primal_res\":" << primal_res
                          << ",\"dual_res\":" << dual_res << "}\n";
            }
            if (stagnation_metric < 0.98 * best_stagnation_metric) {
                best_stagnation_metric = stagnation_metric;
                last_improvement_check = checks_done;
            } else if (checks_done - last_improvement_check >= 40 && rho > 1e-3) {
                const double rho_new = 0.2 * rho;
                for (auto& uk : u) uk *= rho / rho_new;
                rho = rho_new;
                best_stagnation_metric = std::numeric_limits<double>::infinity();
                last_improvement_check = checks_done;
            }
        }
    }
    PovmSolution last = report(cfg.max_iterations);
    if (!cfg.throw_on_iteration_cap) return last;
    throw SolverFailureError(std::min(best_gap, last.gap), cfg.max_iterations);
}

bool check_dual_feasible(const PovmProgram& p, const ComplexMatrix& y, double tol) {
    if (y.rows() != p.dim || y.cols() != p.dim)
        throw DimensionMismatchError("certificate dimension differs from program");
    for (const auto& c : p.costs)
        if (lambda_max(y - c) > tol) return false;
    return true;
}

}  // namespace antidist
