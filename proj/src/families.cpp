#include "antidist/families.hpp"

#include <cmath>

namespace antidist {

FamilyTag FamilyTag::parse(const std::string& s) {
    FamilyTag t;
    if (s == "w") {
        t.name = Name::W;
    } else if (s == "wxw") {
        t.name = Name::WxW;
    } else if (s == "q") {
        t.name = Name::Q;
    } else if (s == "qxq") {
        t.name = Name::QxQ;
    } else if (s.size() >= 2 && s[0] == 'v') {
        t.name = Name::V;
        try {
            t.d = std::stoi(s.substr(1));
        } catch (const std::exception&) {
            throw ParseError("unknown family '" + s + "'");
        }
    } else {
        throw ParseError("unknown family '" + s + "'");
    }
    return t;
}

std::string FamilyTag::str() const {
    switch (name) {
        case Name::V: return "v" + std::to_string(d);
        case Name::W: return "w";
        case Name::WxW: return "wxw";
        case Name::Q: return "q";
        case Name::QxQ: return "qxq";
    }
    return "?";
}

UnitaryEnsemble build_family(const FamilyTag& tag) {
    switch (tag.name) {
        case FamilyTag::Name::V: return build_V(tag.d);
        case FamilyTag::Name::W: return build_W();
        case FamilyTag::Name::WxW: return build_W_tensor();
        case FamilyTag::Name::Q: return build_Q();
        case FamilyTag::Name::QxQ: return build_Q_tensor();
    }
    throw OutOfRangeError("bad family tag");
}

UnitaryEnsemble build_V(int d) {
    if (d < 3) throw OutOfRangeError("the V family needs dimension >= 3");
    const double c = 0.5;
    const double s = std::sqrt(3.0) / 2.0;
    ComplexMatrix v1 = ComplexMatrix::Identity(d, d);
    ComplexMatrix v2 = ComplexMatrix::Identity(d, d);
    v2(0, 0) = c;
    v2(1, 0) = s;
    v2(0, 1) = -s;
    v2(1, 1) = c;
    ComplexMatrix v3 = ComplexMatrix::Identity(d, d);
    v3(0, 0) = c;
    v3(2, 0) = s;
    v3(0, 2) = -s;
    v3(2, 2) = c;
    return UnitaryEnsemble::uniform(
        {validate_unitary(v1), validate_unitary(v2), validate_unitary(v3)});
}

ProbeSpec build_thm3_probe(double p, int d) {
    if (!(p > 0.0) || p > 1.0) throw OutOfRangeError("p must lie in (0, 1]");
    if (d < 2) throw OutOfRangeError("probe needs dimension >= 2");
    if (p == 1.0) return ProbeSpec::single(PureState::basis_state(d, 0));
    RealVector w = RealVector::Zero(d);
    w(0) = std::sqrt(p);
    w(1) = std::sqrt(1.0 - p);
    return ProbeSpec::entangled(std::move(w),
                                validate_unitary(ComplexMatrix::Identity(d, d)));
}

UnitaryEnsemble build_W() {
    ComplexMatrix w1 = ComplexMatrix::Identity(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix w2(2, 2);
    w2 << r, -r, r, r;
    return UnitaryEnsemble::uniform({validate_unitary(w1), validate_unitary(w2)});
}

UnitaryEnsemble build_W_tensor() {
    const UnitaryEnsemble w = build_W();
    std::vector<UnitaryOperator> members;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            members.push_back(validate_unitary(
                tensor_product(w.member(i).matrix(), w.member(j).matrix())));
    return UnitaryEnsemble::uniform(std::move(members));
}

UnitaryEnsemble build_Q() {
    // Convention for the orthogonal complements: |eta_perp> = sin a|0> - cos a|1>
    // (the |+>/|-> relation of the W pair), phases conjugated where
    // orthogonality forces it. Keeps every pair indistinguishable.
    const double a = 5.0 * M_PI / 18.0;
    const double b = 19.0 * M_PI / 60.0;
    const Complex phase = std::polar(1.0, 2.0 * M_PI / 3.0);
    ComplexMatrix q1 = ComplexMatrix::Identity(2, 2);
    ComplexMatrix q2(2, 2);
    q2 << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    ComplexMatrix q3(2, 2);
    q3(0, 0) = std::cos(b);
    q3(1, 0) = phase * std::sin(b);
    q3(0, 1) = -std::conj(phase) * std::sin(b);
    q3(1, 1) = std::cos(b);
    return UnitaryEnsemble::uniform(
        {validate_unitary(q1), validate_unitary(q2), validate_unitary(q3)});
}

UnitaryEnsemble build_Q_tensor() {
    const UnitaryEnsemble q = build_Q();
    std::vector<UnitaryOperator> members;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            members.push_back(validate_unitary(
                tensor_product(q.member(i).matrix(), q.member(j).matrix())));
    return UnitaryEnsemble::uniform(std::move(members));
}

UnionClosureReport union_closure_check(const UnitaryEnsemble& s1, const UnitaryEnsemble& s2,
                                       double decision_tol, const SolverConfig& solver) {
    for (const UnitaryEnsemble* s : {&s1, &s2}) {
        if (s->size() != 3) throw PreconditionFailedError("each set must have three members");
        if (s->dim() != 2) throw PreconditionFailedError("qubit unitaries required");
    }
    const ProbeSpec me = ProbeSpec::maxent();
    UnionClosureReport rep;
    rep.tol = decision_tol;
    rep.value1 = antidist_value_with_probe(s1, me, solver).value;
    rep.value2 = antidist_value_with_probe(s2, me, solver).value;
    if (rep.value1 < 1.0 - decision_tol || rep.value2 < 1.0 - decision_tol)
        throw PreconditionFailedError(
            "both triples must be antidistinguishable with the maximally entangled probe");
    std::vector<UnitaryOperator> joint = s1.members();
    for (const auto& m : s2.members()) joint.push_back(m);
    const UnitaryEnsemble u6 = UnitaryEnsemble::uniform(std::move(joint));
    rep.union_value = antidist_value_with_probe(u6, me, solver).value;
    rep.pass = rep.union_value >= 1.0 - decision_tol;
    return rep;
}

UnitaryOperator extend_unitary_set(const UnitaryEnsemble& u, const PureState& probe,
                                   const SearchConfig& cfg) {
    if (u.dim() != 2) throw DimensionMismatchError("qubit unitaries required");
    if (probe.dim() != 2) throw DimensionMismatchError("qubit probe required");
    const ProbeSpec single = ProbeSpec::single(probe);
    const std::vector<PureState> evolved = evolve_pure(u, single);
    // extend_qubit_pure_set raises NotNeededError when the evolved set is
    // already antidistinguishable.
    const PureState target = extend_qubit_pure_set(evolved, cfg);

    // Unitary with U|probe> = |target>: map an orthonormal completion of the
    // probe onto one of the target, canonical column order on both sides.
    auto complete = [](const PureState& first) {
        ComplexMatrix basis(2, 2);
        basis.col(0) = first.amplitudes();
        ComplexVector v = ComplexVector::Zero(2);
        v(0) = 1.0;
        v -= basis.col(0).dot(v) * basis.col(0);
        if (v.norm() < 1e-8) {
            v.setZero();
            v(1) = 1.0;
            v -= basis.col(0).dot(v) * basis.col(0);
        }
        basis.col(1) = v / v.norm();
        return basis;
    };
    const ComplexMatrix b_probe = complete(probe);
    const ComplexMatrix b_target = complete(target);
    return validate_unitary(b_target * b_probe.adjoint(), 1e-9);
}

}  // namespace antidist
