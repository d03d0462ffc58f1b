#pragma once

#include <cstdint>

namespace antidist {

/// Every numerical tolerance used by the library, in one place.
struct Tolerances {
    double unitary_validation = 1e-10;   // ||U†U - I||_F for accepting a unitary
    double state_norm = 1e-12;           // | ||psi|| - 1 |
    double hermiticity = 1e-12;          // ||rho - rho†||_F
    double psd_floor = 1e-10;            // density eigenvalues >= -psd_floor
    double trace_one = 1e-10;            // |Tr rho - 1|
    double prior_normalization = 1e-12;  // |sum q_k - 1|
    double schmidt_normalization = 1e-12;

    double eig_reconstruction = 1e-8;    // ||U - sum e^{i theta} vv†||_F
    double eig_gram = 1e-9;              // eigenvector orthonormality
    double eig_cluster = 1e-8;           // degenerate eigenvalue grouping
    double phase_zero_imag = 1e-12;      // sin(theta) treated as zero -> phase pi branch

    double povm_validity = 1e-8;         // PSD floor and completeness of reported POVMs
    double condition_eps = 1e-9;         // eps_cond for the three-state closed form
    double decision = 1e-6;              // A >= 1 - decision counts as perfect
    double hull_gap = 1e-9;              // slack in the semicircle criterion

    static const Tolerances& defaults() {
        static const Tolerances t{};
        return t;
    }
};

/// Settings for the POVM solver. Deterministic, no randomized elements.
struct SolverConfig {
    double gap_tol = 1e-7;       // primal - Tr(Y), with Y shifted to exact feasibility
    double residual_tol = 1e-8;  // PSD/completeness splitting residuals
    long max_iterations = 200000;
    int check_interval = 25;     // residual/gap evaluation period
    double relaxation = 1.6;     // over-relaxation factor, fixed
    bool verbose = false;        // stream one diagnostic record per check to stderr
    // When false, hitting the iteration cap returns the best feasible report
    // (gap tells how good it is) instead of throwing. Meant for search
    // scoring, where a ranking beats an exception.
    bool throw_on_iteration_cap = true;
};

/// Settings for derivative-free searches (probe optimization, set extension).
struct SearchConfig {
    std::uint64_t seed = 1;
    int starts = 32;             // multi-start count; per-start stream is seed + index
    double init_step = 0.5;
    double min_step = 1e-4;
    long max_evals_per_start = 4000;
    int grid_polar = 32;         // Bloch grid for qubit set extension
    int grid_azimuth = 64;
    double decision_tol = 1e-6;
    SolverConfig scoring_solver = [] {  // ranking only; never throws at the cap
        SolverConfig c;
        c.gap_tol = 1e-5;
        c.residual_tol = 1e-6;
        c.max_iterations = 20000;
        c.throw_on_iteration_cap = false;
        return c;
    }();
    SolverConfig final_solver{};  // certification
};

}  // namespace antidist
