#pragma once

#include <vector>

#include "antidist/config.hpp"
#include "antidist/linalg.hpp"
#include "antidist/povm_sdp.hpp"

namespace antidist {

/// Three pairwise squared overlaps. Producers document their pair order;
/// the closed-form conditions are symmetric in the three entries.
struct OverlapTriple {
    double x1, x2, x3;
    OverlapTriple(double x1_, double x2_, double x3_);
};

enum class Verdict { Antidistinguishable, NotAntidistinguishable, Boundary };

const char* to_string(Verdict v);

struct AntidistDecision {
    Verdict verdict;
    double margin_sum;   // 1 - (x1+x2+x3); must be > 0
    double margin_disc;  // (x1+x2+x3-1)^2 - 4 x1 x2 x3; must be >= 0
};

/// Closed-form test for three pairwise non-orthogonal pure states:
/// antidistinguishable iff x1+x2+x3 < 1 and (x1+x2+x3-1)^2 >= 4 x1 x2 x3.
/// Boundary when either expression sits within eps of equality.
AntidistDecision three_pure_condition(const OverlapTriple& x,
                                      double eps = Tolerances::defaults().condition_eps);

/// States with priors. Pure members are promoted to rank-one densities.
class StateEnsemble {
public:
    StateEnsemble(std::vector<DensityMatrix> members, RealVector priors);
    static StateEnsemble uniform(std::vector<DensityMatrix> members);
    static StateEnsemble of_pure(const std::vector<PureState>& states);
    static StateEnsemble of_pure(const std::vector<PureState>& states, RealVector priors);

    int size() const { return static_cast<int>(members_.size()); }
    int dim() const { return members_.front().dim(); }
    const std::vector<DensityMatrix>& members() const { return members_; }
    const RealVector& priors() const { return priors_; }

private:
    std::vector<DensityMatrix> members_;
    RealVector priors_;
};

struct AntidistResult {
    double value = 0.0;             // A in [0,1]
    Povm povm;
    ComplexMatrix dual_certificate;  // Y <= q_k rho_k for all k
    double gap = 0.0;                // reported non-negative
};

/// A = 1 - min over POVMs of sum_k q_k Tr(rho_k M_k), with primal POVM and
/// feasible dual certificate.
AntidistResult antidist_value(const StateEnsemble& e, const SolverConfig& cfg = {});

bool is_perfectly_antidist(const StateEnsemble& e,
                           double tol = Tolerances::defaults().decision,
                           const SolverConfig& cfg = {});

/// (x12, x13, x23) of three pure states.
OverlapTriple overlap_triple(const PureState& a, const PureState& b, const PureState& c);

/// Finds a qubit pure state whose addition makes the set perfectly
/// antidistinguishable under equal priors: coarse Bloch grid scored by the
/// solver value, then shrinking-step refinement. Throws NotNeededError if the
/// input set is already antidistinguishable, SearchExhaustedError if no
/// candidate certifies (which signals a bug for qubit inputs).
PureState extend_qubit_pure_set(const std::vector<PureState>& states,
                                const SearchConfig& cfg = {});

}  // namespace antidist
