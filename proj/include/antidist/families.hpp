#pragma once

#include <string>

#include "antidist/config.hpp"
#include "antidist/unitary.hpp"

namespace antidist {

/// Named constructions selectable from the CLI.
struct FamilyTag {
    enum class Name { V, W, WxW, Q, QxQ };
    Name name = Name::V;
    int d = 3;  // V only

    static FamilyTag parse(const std::string& s);  // v3|v4|...|w|wxw|q|qxq
    std::string str() const;
};

UnitaryEnsemble build_family(const FamilyTag& tag);

/// Three d-dimensional rotations acting on the first one/two/three basis
/// directions; pairwise traces (d-1, d-7/4, d-1). Equal priors. d >= 3.
UnitaryEnsemble build_V(int d);

/// sqrt(p)|00> + sqrt(1-p)|11> as a Schmidt-form probe; degenerates to the
/// single-system probe |0> at p = 1. Requires 0 < p <= 1.
ProbeSpec build_thm3_probe(double p, int d = 3);

/// {identity, the 45-degree rotation}; the pair is not perfectly
/// distinguishable (eigenphases ±pi/4).
UnitaryEnsemble build_W();

/// {W_i ⊗ W_j}, four members on d = 4; probe |00> evolves them to the four
/// product states {|00>,|0+>,|+0>,|++>}.
UnitaryEnsemble build_W_tensor();

/// {identity, R(5pi/18), and the phased rotation with angle 19pi/60 and
/// relative phase 2pi/3}. All pairs indistinguishable.
UnitaryEnsemble build_Q();

/// {Q_i ⊗ Q_j}, nine members on d = 4.
UnitaryEnsemble build_Q_tensor();

struct UnionClosureReport {
    double value1 = 0.0;       // maxent value of the first triple
    double value2 = 0.0;
    double union_value = 0.0;  // maxent value of the 6-member union
    double tol = 0.0;
    bool pass = false;         // union_value >= 1 - tol
};

/// Checks that the union of two maxent-antidistinguishable qubit triples is
/// itself antidistinguishable with the maximally entangled probe. Throws
/// PreconditionFailedError if either triple fails the precondition.
UnionClosureReport union_closure_check(const UnitaryEnsemble& s1, const UnitaryEnsemble& s2,
                                       double decision_tol = Tolerances::defaults().decision,
                                       const SolverConfig& solver = {});

/// For a qubit ensemble whose evolution under the given single-system probe
/// is not antidistinguishable, returns one unitary whose addition fixes that
/// (it maps the probe onto the state found by extend_qubit_pure_set, completed
/// to a unitary by Gram-Schmidt in canonical column order).
UnitaryOperator extend_unitary_set(const UnitaryEnsemble& u, const PureState& probe,
                                   const SearchConfig& cfg = {});

}  // namespace antidist
