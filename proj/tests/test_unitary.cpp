#include <doctest.h>

#include <cmath>

#include "antidist/families.hpp"
#include "antidist/unitary.hpp"
#include "oracles.hpp"

using namespace antidist;

namespace {

UnitaryOperator pauli_z() {
    ComplexMatrix z = ComplexMatrix::Identity(2, 2);
    z(1, 1) = -1.0;
    return validate_unitary(z);
}

ProbeSpec random_probe(int d, Rng& rng, bool entangled) {
    if (!entangled) return ProbeSpec::single(random_pure_state(d, rng));
    RealVector w(d);
    double sum = 0.0;
    for (int i = 0; i < d; ++i) {
        const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        w(i) = x;
        sum += x;
    }
    w = (w / sum).cwiseSqrt();
    return ProbeSpec::entangled(std::move(w), haar_random_unitary(d, rng));
}

}  // namespace

TEST_SUITE_BEGIN("unitary");

TEST_CASE("evolve_ensemble: identity members reproduce the probe") {
    const UnitaryEnsemble u = UnitaryEnsemble::uniform(
        {validate_unitary(ComplexMatrix::Identity(2, 2)),
         validate_unitary(ComplexMatrix::Identity(2, 2))});
    ComplexVector p(2);
    p << 0.6, 0.8;
    const std::vector<PureState> out = evolve_pure(u, ProbeSpec::single(PureState(p)));
    for (const auto& s : out) CHECK(overlap_sq(s, PureState(p)) >= 1.0 - 1e-12);
}

TEST_CASE("evolve_ensemble: rotation family under the p = 0.9 probe") {
    const double p = 0.9;
    const std::vector<PureState> out =
        evolve_pure(build_V(3), build_thm3_probe(p, 3));
    // expected states, written out from the family's columns
    const double sp = std::sqrt(p), sq = std::sqrt(1.0 - p);
    const double s3 = std::sqrt(3.0) / 2.0;
    ComplexVector e1 = ComplexVector::Zero(9), e2 = ComplexVector::Zero(9),
                  e3 = ComplexVector::Zero(9);
    // basis: A-index major, B-index minor
    e1(0 * 3 + 0) = sp;
    e1(1 * 3 + 1) = sq;
    e2(0 * 3 + 0) = sp * 0.5;
    e2(1 * 3 + 0) = sp * s3;
    e2(0 * 3 + 1) = -sq * s3;
    e2(1 * 3 + 1) = sq * 0.5;
    e3(0 * 3 + 0) = sp * 0.5;
    e3(2 * 3 + 0) = sp * s3;
    e3(1 * 3 + 1) = sq;
    CHECK(overlap_sq(out[0], PureState::normalized(e1)) >= 1.0 - 1e-12);
    CHECK(overlap_sq(out[1], PureState::normalized(e2)) >= 1.0 - 1e-12);
    CHECK(overlap_sq(out[2], PureState::normalized(e3)) >= 1.0 - 1e-12);
}

TEST_CASE("evolve_ensemble: the W pair maps |0> to {|0>, |+>}") {
    const std::vector<PureState> out =
        evolve_pure(build_W(), ProbeSpec::single(PureState::basis_state(2, 0)));
    ComplexVector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    CHECK(overlap_sq(out[0], PureState::basis_state(2, 0)) >= 1.0 - 1e-12);
    CHECK(overlap_sq(out[1], PureState(plus)) >= 1.0 - 1e-12);
}

TEST_CASE("evolve_ensemble rejects a mismatched probe") {
    CHECK_THROWS_AS(
        evolve_pure(build_V(3), ProbeSpec::single(PureState::basis_state(2, 0))),
        DimensionMismatchError);
}

TEST_CASE("pair_overlap: identical unitaries give 1") {
    const UnitaryOperator u = haar_random_unitary(3, 2);
    CHECK(pair_overlap(ProbeSpec::maxent(), u, u) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pair_overlap: maximally entangled probe on the rotation family") {
    const UnitaryEnsemble v = build_V(3);
    CHECK(std::abs(pair_overlap(ProbeSpec::maxent(), v.member(0), v.member(1)) - 4.0 / 9.0) <=
          1e-12);
}

TEST_CASE("pair_overlap: single-system probe on the V2, V3 pair") {
    const UnitaryEnsemble v = build_V(3);
    const ProbeSpec probe = ProbeSpec::single(PureState::basis_state(3, 0));
    CHECK(std::abs(pair_overlap(probe, v.member(1), v.member(2)) - 1.0 / 16.0) <= 1e-12);
    // oracle: direct inner product of the evolved states
    CHECK(std::abs(pair_overlap(probe, v.member(1), v.member(2)) -
                   oracles::direct_pair_overlap(probe, v.member(1), v.member(2))) <= 1e-12);
}

TEST_CASE("pair_overlap equals the direct evolved-state overlap") {
    Rng rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 3);
        const UnitaryOperator a = haar_random_unitary(d, rng);
        const UnitaryOperator b = haar_random_unitary(d, rng);
        const ProbeSpec probe = random_probe(d, rng, trial % 2 == 1);
        CHECK(std::abs(pair_overlap(probe, a, b) -
                       oracles::direct_pair_overlap(probe, a, b)) <= 1e-10);
    }
}

TEST_CASE("all maximally entangled probes induce the trace-formula overlaps") {
    Rng rng(43);
    for (int d = 2; d <= 4; ++d) {
        const UnitaryOperator a = haar_random_unitary(d, rng);
        const UnitaryOperator b = haar_random_unitary(d, rng);
        const PairSpectrum spec = pair_spectrum(a, b);
        const double ref = std::norm((a.matrix().adjoint() * b.matrix()).trace()) /
                           double(d) / double(d);
        for (int trial = 0; trial < 10; ++trial) {
            const ProbeSpec probe = ProbeSpec::entangled(
                RealVector::Constant(d, 1.0 / std::sqrt(double(d))),
                haar_random_unitary(d, rng));
            CHECK(std::abs(overlap_from_weights(pair_weights(probe, spec), spec) - ref) <=
                  1e-9);
        }
    }
}

TEST_CASE("maxent_overlaps: rotation family values and cyclic order") {
    const UnitaryEnsemble v = build_V(3);
    const OverlapTriple x = maxent_overlaps(v.member(0), v.member(1), v.member(2));
    CHECK(std::abs(x.x1 - 4.0 / 9.0) <= 1e-12);
    CHECK(std::abs(x.x2 - 25.0 / 144.0) <= 1e-12);
    CHECK(std::abs(x.x3 - 4.0 / 9.0) <= 1e-12);
}

TEST_CASE("maxent_overlaps: equal unitaries give unit overlaps") {
    const UnitaryOperator u = haar_random_unitary(3, 5);
    const OverlapTriple x = maxent_overlaps(u, u, u);
    CHECK(x.x1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(x.x2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(x.x3 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("maxent_overlaps matches gram overlaps of the evolved states") {
    const UnitaryEnsemble q = build_Q();
    const OverlapTriple x = maxent_overlaps(q.member(0), q.member(1), q.member(2));
    const std::vector<PureState> evolved = evolve_pure(q, ProbeSpec::maxent());
    const RealMatrix g = gram_overlaps(evolved);
    CHECK(std::abs(x.x1 - g(0, 1)) <= 1e-10);
    CHECK(std::abs(x.x2 - g(1, 2)) <= 1e-10);
    CHECK(std::abs(x.x3 - g(2, 0)) <= 1e-10);
}

TEST_CASE("decide_three_with_probe on the rotation family") {
    const UnitaryEnsemble v = build_V(3);
    CHECK(decide_three_with_probe(v, ProbeSpec::maxent()).verdict ==
          Verdict::NotAntidistinguishable);
    CHECK(decide_three_with_probe(v, ProbeSpec::single(PureState::basis_state(3, 0))).verdict ==
          Verdict::Antidistinguishable);
}

TEST_CASE("decide_three_with_probe: identical unitaries are never excluded") {
    const UnitaryOperator u = haar_random_unitary(2, 9);
    const UnitaryEnsemble tri = UnitaryEnsemble::uniform({u, u, u});
    CHECK(decide_three_with_probe(tri, ProbeSpec::maxent()).verdict ==
          Verdict::NotAntidistinguishable);
}

TEST_CASE("antidist_value_with_probe: product sets reach value 1") {
    const double w =
        antidist_value_with_probe(build_W_tensor(),
                                  ProbeSpec::single(PureState::basis_state(4, 0)))
            .value;
    CHECK(w >= 1.0 - 1e-6);
}

TEST_CASE("antidist_value_with_probe: identical pair gives 1/2") {
    const UnitaryOperator u = haar_random_unitary(2, 3);
    const UnitaryEnsemble pair = UnitaryEnsemble::uniform({u, u});
    const double v = antidist_value_with_probe(pair, ProbeSpec::maxent()).value;
    CHECK(v == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("product probes reduce to the single-system value") {
    Rng rng(51);
    for (int trial = 0; trial < 5; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 2);
        std::vector<UnitaryOperator> members;
        for (int k = 0; k < 3; ++k) members.push_back(haar_random_unitary(d, rng));
        const UnitaryEnsemble u = UnitaryEnsemble::uniform(members);
        const PureState local = random_pure_state(d, rng);
        const double vs =
            antidist_value_with_probe(u, ProbeSpec::single(local)).value;
        const double ve =
            antidist_value_with_probe(u, embed_single_as_entangled(local)).value;
        CHECK(std::abs(vs - ve) <= 1e-9);
    }
}

TEST_CASE("optimize_probe: distinguishable pair reaches value 1") {
    const UnitaryEnsemble iz = UnitaryEnsemble::uniform(
        {validate_unitary(ComplexMatrix::Identity(2, 2)), pauli_z()});
    SearchConfig cfg;
    cfg.seed = 7;
    cfg.starts = 8;
    const auto [probe, res] = optimize_probe(iz, ProbeMode::Single, cfg);
    CHECK(res.value >= 1.0 - 1e-6);
    // the optimal probe is |+>-like: equal weight on the two phase branches
    const PairSpectrum spec = pair_spectrum(iz.member(0), iz.member(1));
    const PairWeights w = pair_weights(probe, spec);
    CHECK(std::abs(w.w(0) - 0.5) <= 1e-3);
}

TEST_CASE("optimize_probe: rotation family recovers the basis probe") {
    SearchConfig cfg;
    cfg.seed = 11;
    cfg.starts = 16;
    const auto [probe, res] = optimize_probe(build_V(3), ProbeMode::Single, cfg);
    CHECK(res.value >= 1.0 - 1e-6);
}

TEST_CASE("optimize_probe: entangled search never beats the maxent value on qubits") {
    SearchConfig cfg;
    cfg.seed = 13;
    cfg.starts = 8;
    const UnitaryEnsemble q = build_Q();
    const auto [probe, res] = optimize_probe(q, ProbeMode::Entangled, cfg);
    const double maxent = antidist_value_with_probe(q, ProbeSpec::maxent()).value;
    CHECK(res.value <= maxent + 1e-6);
}

TEST_CASE("optimize_probe embedding consistency") {
    SearchConfig cfg;
    cfg.seed = 7;
    cfg.starts = 4;
    const UnitaryEnsemble v = build_V(3);
    const auto [probe, res] = optimize_probe(v, ProbeMode::Single, cfg);
    const double ve =
        antidist_value_with_probe(v, embed_single_as_entangled(probe.as_single().state))
            .value;
    CHECK(std::abs(ve - res.value) <= 1e-9);
}

TEST_CASE("two_unitary_perfect_distinguishability basics") {
    const UnitaryOperator id = validate_unitary(ComplexMatrix::Identity(2, 2));
    CHECK(two_unitary_perfect_distinguishability(id, pauli_z()));
    const UnitaryEnsemble w = build_W();
    CHECK_FALSE(two_unitary_perfect_distinguishability(w.member(0), w.member(1)));
}

TEST_CASE("two_unitary_perfect_distinguishability: global phase never helps") {
    Rng rng(61);
    const UnitaryOperator u = haar_random_unitary(3, rng);
    for (const double phi : {0.3, 1.2, M_PI, 5.1}) {
        const UnitaryOperator v =
            validate_unitary(std::polar(1.0, phi) * u.matrix());
        CHECK_FALSE(two_unitary_perfect_distinguishability(u, v));
    }
}

TEST_CASE("two_unitary_perfect_distinguishability agrees with hull enumeration") {
    Rng rng(67);
    for (int trial = 0; trial < 500; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 4);
        const UnitaryOperator a = haar_random_unitary(d, rng);
        const UnitaryOperator b = haar_random_unitary(d, rng);
        const PairSpectrum spec = pair_spectrum(a, b);
        std::vector<Complex> pts;
        for (double ph : spec.phases) pts.push_back(std::polar(1.0, ph));
        CHECK(two_unitary_perfect_distinguishability(a, b) ==
              oracles::origin_in_hull_2d(pts));
    }
}

TEST_CASE("qubit_hierarchy_trial: identity triple is a vacuous pass") {
    // All overlaps are 1; no probe certifies, no counterexample possible.
    const HierarchyReport r = qubit_hierarchy_trial(1, 1);
    CHECK(r.trials == 1);
    CHECK(r.counterexamples == 0);
}

TEST_CASE("qubit_hierarchy_trial: no counterexamples over random trials") {
    const HierarchyReport r = qubit_hierarchy_trial(42, 200);
    CHECK(r.counterexamples == 0);
    CHECK(r.max_dominance_violation <= 1e-10);
    CHECK(r.probe_certified > 0);
}

TEST_CASE("qubit pair overlap matches the weight identity") {
    // |t e^{iT1} + (1-t) e^{iT2}|^2 == (1+cos D)/2 + 2 (t-1/2)^2 (1-cos D)
    Rng rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        const UnitaryOperator a = haar_random_unitary(2, rng);
        const UnitaryOperator b = haar_random_unitary(2, rng);
        const PairSpectrum spec = pair_spectrum(a, b);
        const ProbeSpec probe = ProbeSpec::single(random_pure_state(2, rng));
        const PairWeights w = pair_weights(probe, spec);
        const double t = w.w(0);
        const double delta = spec.phases[0] - spec.phases[1];
        const double identity_value = 0.5 * (1.0 + std::cos(delta)) +
                                      2.0 * (t - 0.5) * (t - 0.5) * (1.0 - std::cos(delta));
        CHECK(std::abs(overlap_from_weights(w, spec) - identity_value) <= 1e-12);
    }
}

TEST_CASE("probe validation") {
    CHECK_THROWS_AS(ProbeSpec::entangled(RealVector::Constant(2, 1.0),
                                         validate_unitary(ComplexMatrix::Identity(2, 2))),
                    OutOfRangeError);
    RealVector w(2);
    w << 1.0, 0.0;
    CHECK_THROWS_AS(ProbeSpec::entangled(w, validate_unitary(ComplexMatrix::Identity(3, 3))),
                    DimensionMismatchError);
}

TEST_SUITE_END();
