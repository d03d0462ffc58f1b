#pragma once

#include <vector>

#include "antidist/config.hpp"
#include "antidist/linalg.hpp"

namespace antidist {

/// Measurement as a list of PSD effects summing to identity.
struct Povm {
    std::vector<ComplexMatrix> effects;

    double completeness_residual() const;  // ||sum N_b - I||_F
    double min_eigenvalue() const;         // most negative eigenvalue over effects
    bool is_valid(double tol = Tolerances::defaults().povm_validity) const;
};

/// min sum_k Tr(A_k M_k) over POVMs {M_k}. Costs must be Hermitian and share
/// one dimension; desk scale only (dim <= 64, at most 16 effects).
struct PovmProgram {
    std::vector<ComplexMatrix> costs;
    int dim = 0;

    static PovmProgram from_costs(std::vector<ComplexMatrix> costs,
                                  double herm_tol = 1e-10);
};

struct PovmSolution {
    Povm povm;
    double primal = 0.0;    // objective at the reported POVM
    ComplexMatrix dual_Y;   // feasible: Y <= A_k for all k
    double gap = 0.0;       // primal - Tr(Y); may be slightly negative (>= -1e-9)
    long iterations = 0;
};

/// Operator-splitting solve: alternate per-effect PSD projection (eigenvalue
/// clipping) with projection onto the completeness affine subspace, driven by
/// an augmented-Lagrangian loop on the linear objective. The dual certificate
/// comes from the affine-constraint multiplier and is shifted down by
/// max_k lambda_max(Y - A_k) before the gap is reported. Deterministic for
/// fixed inputs and config; throws SolverFailureError at the iteration cap.
PovmSolution solve_min_povm(const PovmProgram& p, const SolverConfig& cfg = {});

/// True iff lambda_max(Y - A_k) <= tol for every cost.
bool check_dual_feasible(const PovmProgram& p, const ComplexMatrix& y, double tol);

}  // namespace antidist
