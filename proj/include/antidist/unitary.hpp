#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "antidist/config.hpp"
#include "antidist/linalg.hpp"
#include "antidist/states.hpp"

namespace antidist {

class UnitaryEnsemble {
public:
    UnitaryEnsemble(std::vector<UnitaryOperator> members, RealVector priors);
    static UnitaryEnsemble uniform(std::vector<UnitaryOperator> members);

    int size() const { return static_cast<int>(members_.size()); }
    int dim() const { return members_.front().dim(); }
    const std::vector<UnitaryOperator>& members() const { return members_; }
    const UnitaryOperator& member(int i) const { return members_.at(i); }
    const RealVector& priors() const { return priors_; }

private:
    std::vector<UnitaryOperator> members_;
    RealVector priors_;
};

struct SingleSystemProbe {
    PureState state;
};

/// d x d entangled probe in Schmidt form sum_w C_w |eta_w>|w>: nonnegative
/// weights C_w with sum C_w^2 = 1, A-side basis columns eta_w = a_basis|w>,
/// B-side fixed to the canonical basis.
struct EntangledProbe {
    RealVector schmidt;
    UnitaryOperator a_basis;
};

struct MaxEntangledProbe {};

class ProbeSpec {
public:
    static ProbeSpec single(PureState state);
    static ProbeSpec entangled(RealVector schmidt, UnitaryOperator a_basis,
                               double tol = Tolerances::defaults().schmidt_normalization);
    static ProbeSpec maxent();

    bool is_single() const { return std::holds_alternative<SingleSystemProbe>(v_); }
    bool is_entangled() const { return std::holds_alternative<EntangledProbe>(v_); }
    bool is_maxent() const { return std::holds_alternative<MaxEntangledProbe>(v_); }
    const SingleSystemProbe& as_single() const { return std::get<SingleSystemProbe>(v_); }
    const EntangledProbe& as_entangled() const { return std::get<EntangledProbe>(v_); }

    /// The realized input state: dim d for single probes, d*d otherwise.
    PureState realize(int d) const;
    /// Throws DimensionMismatchError unless the probe fits d-dimensional unitaries.
    void check_dim(int d) const;

private:
    explicit ProbeSpec(std::variant<SingleSystemProbe, EntangledProbe, MaxEntangledProbe> v)
        : v_(std::move(v)) {}
    std::variant<SingleSystemProbe, EntangledProbe, MaxEntangledProbe> v_;
};

/// Eigenphases of Ui†Uj.
using PairSpectrum = SpectralDecomposition;
PairSpectrum pair_spectrum(const UnitaryOperator& ui, const UnitaryOperator& uj);

/// Convex weights over a pair spectrum's eigenphases.
struct PairWeights {
    RealVector w;
    explicit PairWeights(RealVector w_,
                         double tol = Tolerances::defaults().schmidt_normalization);
};

/// Weights the probe induces on the pair's eigenphases: |<v_l|psi>|^2 for a
/// single probe, sum_w C_w^2 |<v_l|eta_w>|^2 entangled, 1/d maximally entangled.
PairWeights pair_weights(const ProbeSpec& probe, const PairSpectrum& spec);

/// |sum_l w_l e^{i theta_l}|^2
double overlap_from_weights(const PairWeights& w, const PairSpectrum& spec);

/// Squared overlap of the evolved probe under Ui vs Uj, computed through the
/// eigenphase convex combination. Equals the direct evolved-state overlap.
double pair_overlap(const ProbeSpec& probe, const UnitaryOperator& ui,
                    const UnitaryOperator& uj);

/// Evolved pure states: U_x|psi> (single) or (U_x ⊗ I)|psi_AB> (entangled).
std::vector<PureState> evolve_pure(const UnitaryEnsemble& u, const ProbeSpec& probe);

/// Same, promoted to an ensemble carrying the unitary priors.
StateEnsemble evolve_ensemble(const UnitaryEnsemble& u, const ProbeSpec& probe);

/// (x12, x23, x31) with x_ij = |Tr(Ui†Uj)|^2 / d^2 — the overlaps any
/// maximally entangled probe induces, in cyclic pair order.
OverlapTriple maxent_overlaps(const UnitaryOperator& u1, const UnitaryOperator& u2,
                              const UnitaryOperator& u3);

/// Closed-form decision for three unitaries with a given probe; falls back to
/// the solver on Boundary verdicts or (near-)orthogonal evolved pairs.
AntidistDecision decide_three_with_probe(const UnitaryEnsemble& u, const ProbeSpec& probe,
                                         const Tolerances& tol = Tolerances::defaults(),
                                         const SolverConfig& solver = {});

AntidistResult antidist_value_with_probe(const UnitaryEnsemble& u, const ProbeSpec& probe,
                                         const SolverConfig& cfg = {});

enum class ProbeMode { Single, Entangled };

/// Multi-start shrinking-step search over probes. Returns the best probe
/// found and its certified value (a lower bound on the probe-optimized
/// antidistinguishability). Deterministic given cfg.seed.
std::pair<ProbeSpec, AntidistResult> optimize_probe(const UnitaryEnsemble& u, ProbeMode mode,
                                                    const SearchConfig& cfg = {});

/// Embeds a local state as an entangled probe with a single unit Schmidt
/// weight; evaluating it reproduces the single-system value.
ProbeSpec embed_single_as_entangled(const PureState& psi);

/// True iff 0 lies in the convex hull of the eigenvalues of U1†U2, decided by
/// the semicircle criterion on sorted eigenphases.
bool two_unitary_perfect_distinguishability(const UnitaryOperator& u1,
                                            const UnitaryOperator& u2,
                                            double hull_tol = Tolerances::defaults().hull_gap);

struct HierarchyReport {
    long trials = 0;
    long probe_certified = 0;       // trials whose sampled probe passes the conditions
    long counterexamples = 0;       // probe passes but the maximally entangled probe does not
    long boundary_cases = 0;        // either decision within the eps band (not counted against)
    double max_dominance_violation = 0.0;  // max over pairs of g_maxent - g_probe
};

/// Monte Carlo check of the qubit probe hierarchy: for Haar triples with
/// random single/entangled probes, whenever the probe's overlap triple passes
/// the closed-form conditions the maximally entangled triple must too, and
/// per-pair g_maxent <= g_probe always.
HierarchyReport qubit_hierarchy_trial(std::uint64_t seed, long trials);

}  // namespace antidist
