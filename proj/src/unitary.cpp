#include "antidist/unitary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace antidist {

UnitaryEnsemble::UnitaryEnsemble(std::vector<UnitaryOperator> members, RealVector priors)
    : members_(std::move(members)), priors_(std::move(priors)) {
    if (members_.empty()) throw OutOfRangeError("empty unitary ensemble");
    if (priors_.size() != static_cast<Eigen::Index>(members_.size()))
        throw DimensionMismatchError("one prior per member required");
    const int d = members_.front().dim();
    for (const auto& m : members_)
        if (m.dim() != d) throw DimensionMismatchError("member dimensions differ");
    double sum = 0.0;
    for (Eigen::Index k = 0; k < priors_.size(); ++k) {
        if (!(priors_(k) > 0.0)) throw OutOfRangeError("priors must be positive");
        sum += priors_(k);
    }
    if (std::abs(sum - 1.0) > Tolerances::defaults().prior_normalization)
        throw OutOfRangeError("priors must sum to 1");
}

UnitaryEnsemble UnitaryEnsemble::uniform(std::vector<UnitaryOperator> members) {
    const int n = static_cast<int>(members.size());
    if (n == 0) throw OutOfRangeError("empty unitary ensemble");
    return UnitaryEnsemble(std::move(members), RealVector::Constant(n, 1.0 / n));
}

ProbeSpec ProbeSpec::single(PureState state) {
    return ProbeSpec(SingleSystemProbe{std::move(state)});
}

ProbeSpec ProbeSpec::entangled(RealVector schmidt, UnitaryOperator a_basis, double tol) {
    if (schmidt.size() != a_basis.dim())
        throw DimensionMismatchError("Schmidt weights must match the A-side basis");
    double sq = 0.0;
    for (Eigen::Index w = 0; w < schmidt.size(); ++w) {
        if (schmidt(w) < 0.0) throw OutOfRangeError("Schmidt weights must be nonnegative");
        sq += schmidt(w) * schmidt(w);
    }
    if (std::abs(sq - 1.0) > tol) throw OutOfRangeError("Schmidt weights must be normalized");
    return ProbeSpec(EntangledProbe{std::move(schmidt), std::move(a_basis)});
}

ProbeSpec ProbeSpec::maxent() { return ProbeSpec(MaxEntangledProbe{}); }

void ProbeSpec::check_dim(int d) const {
    if (is_single()) {
        if (as_single().state.dim() != d)
            throw DimensionMismatchError("probe dimension differs from unitary dimension");
    } else if (is_entangled()) {
        if (as_entangled().a_basis.dim() != d)
            throw DimensionMismatchError("entangled probes must be d x d");
    }
}

PureState ProbeSpec::realize(int d) const {
    check_dim(d);
    if (is_single()) return as_single().state;
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
    if (is_maxent()) {
        const double c = 1.0 / std::sqrt(static_cast<double>(d));
        for (int w = 0; w < d; ++w) v(w * d + w) = c;
        return PureState::normalized(std::move(v));
    }
    const EntangledProbe& e = as_entangled();
    for (int w = 0; w < d; ++w) {
        if (e.schmidt(w) == 0.0) continue;
        const ComplexVector eta = e.a_basis.matrix().col(w);
        for (int i = 0; i < d; ++i) v(i * d + w) += e.schmidt(w) * eta(i);
    }
    return PureState::normalized(std::move(v));
}

PairSpectrum pair_spectrum(const UnitaryOperator& ui, const UnitaryOperator& uj) {
    if (ui.dim() != uj.dim()) throw DimensionMismatchError("pair dimensions differ");
    return unitary_eig(validate_unitary(ui.matrix().adjoint() * uj.matrix(),
                                        10 * Tolerances::defaults().unitary_validation));
}

PairWeights::PairWeights(RealVector w_, double tol) : w(std::move(w_)) {
    double sum = 0.0;
    for (Eigen::Index l = 0; l < w.size(); ++l) {
        if (w(l) < -tol) throw OutOfRangeError("pair weights must be nonnegative");
        sum += w(l);
    }
    if (std::abs(sum - 1.0) > std::max(tol, 1e-12))
        throw OutOfRangeError("pair weights must sum to 1");
}

PairWeights pair_weights(const ProbeSpec& probe, const PairSpectrum& spec) {
    const int d = static_cast<int>(spec.eigenvectors.rows());
    probe.check_dim(d);
    RealVector w = RealVector::Zero(d);
    if (probe.is_maxent()) {
        w.setConstant(1.0 / d);
    } else if (probe.is_single()) {
        const ComplexVector& psi = probe.as_single().state.amplitudes();
        for (int l = 0; l < d; ++l) w(l) = std::norm(spec.eigenvectors.col(l).dot(psi));
    } else {
        const EntangledProbe& e = probe.as_entangled();
        for (int l = 0; l < d; ++l) {
            double acc = 0.0;
            for (int m = 0; m < d; ++m) {
                const double c2 = e.schmidt(m) * e.schmidt(m);
                if (c2 == 0.0) continue;
                acc += c2 * std::norm(spec.eigenvectors.col(l).dot(e.a_basis.matrix().col(m)));
            }
            w(l) = acc;
        }
    }
    // Rounding can leave the total a hair off 1; renormalize exactly.
    w /= w.sum();
    return PairWeights(std::move(w));
}

double overlap_from_weights(const PairWeights& w, const PairSpectrum& spec) {
    Complex acc(0.0, 0.0);
    for (Eigen::Index l = 0; l < w.w.size(); ++l)
        acc += w.w(l) * std::polar(1.0, spec.phases[static_cast<std::size_t>(l)]);
    return std::min(std::norm(acc), 1.0);
}

double pair_overlap(const ProbeSpec& probe, const UnitaryOperator& ui,
                    const UnitaryOperator& uj) {
    const PairSpectrum spec = pair_spectrum(ui, uj);
    return overlap_from_weights(pair_weights(probe, spec), spec);
}

std::vector<PureState> evolve_pure(const UnitaryEnsemble& u, const ProbeSpec& probe) {
    const int d = u.dim();
    probe.check_dim(d);
    const PureState in = probe.realize(d);
    std::vector<PureState> out;
    out.reserve(u.size());
    const bool bipartite = !probe.is_single();
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    for (const auto& ux : u.members()) {
        if (bipartite)
            out.push_back(PureState::normalized(tensor_product(ux.matrix(), id) *
                                                in.amplitudes()));
        else
            out.push_back(PureState::normalized(ux.matrix() * in.amplitudes()));
    }
    return out;
}

StateEnsemble evolve_ensemble(const UnitaryEnsemble& u, const ProbeSpec& probe) {
    std::vector<DensityMatrix> members;
    members.reserve(u.size());
    for (const auto& s : evolve_pure(u, probe)) members.push_back(DensityMatrix::from_pure(s));
    return StateEnsemble(std::move(members), u.priors());
}

OverlapTriple maxent_overlaps(const UnitaryOperator& u1, const UnitaryOperator& u2,
                              const UnitaryOperator& u3) {
    if (u1.dim() != u2.dim() || u1.dim() != u3.dim())
        throw DimensionMismatchError("triple dimensions differ");
    const double d2 = static_cast<double>(u1.dim()) * u1.dim();
    auto x = [&](const UnitaryOperator& a, const UnitaryOperator& b) {
        return std::norm((a.matrix().adjoint() * b.matrix()).trace()) / d2;
    };
    // Cyclic pair order (12, 23, 31).
    return OverlapTriple(x(u1, u2), x(u2, u3), x(u3, u1));
}

AntidistDecision decide_three_with_probe(const UnitaryEnsemble& u, const ProbeSpec& probe,
                                         const Tolerances& tol, const SolverConfig& solver) {
    if (u.size() != 3) throw OutOfRangeError("exactly three unitaries required");
    const double x12 = pair_overlap(probe, u.member(0), u.member(1));
    const double x13 = pair_overlap(probe, u.member(0), u.member(2));
    const double x23 = pair_overlap(probe, u.member(1), u.member(2));
    const OverlapTriple trip(x12, x13, x23);
    AntidistDecision d = three_pure_condition(trip, tol.condition_eps);
    const double xmin = std::min({x12, x13, x23});
    if (d.verdict != Verdict::Boundary && xmin > tol.condition_eps) return d;
    // Orthogonal pairs fall outside the closed form's hypothesis, and
    // boundary margins are not trustworthy; ask the solver instead.
    const double value = antidist_value(evolve_ensemble(u, probe), solver).value;
    d.verdict = (value >= 1.0 - tol.decision) ? Verdict::Antidistinguishable
                                              : Verdict::NotAntidistinguishable;
    return d;
}

AntidistResult antidist_value_with_probe(const UnitaryEnsemble& u, const ProbeSpec& probe,
                                         const SolverConfig& cfg) {
    return antidist_value(evolve_ensemble(u, probe), cfg);
}

ProbeSpec embed_single_as_entangled(const PureState& psi) {
    const int d = psi.dim();
    // Complete |psi> to a basis: Gram-Schmidt over canonical columns.
    ComplexMatrix basis(d, d);
    basis.col(0) = psi.amplitudes();
    int next = 1;
    for (int k = 0; k < d && next < d; ++k) {
        ComplexVector v = ComplexVector::Zero(d);
        v(k) = 1.0;
        for (int j = 0; j < next; ++j) v -= basis.col(j).dot(v) * basis.col(j);
        const double n = v.norm();
        if (n > 1e-8) basis.col(next++) = v / n;
    }
    if (next != d) throw OutOfRangeError("basis completion failed");
    RealVector schmidt = RealVector::Zero(d);
    schmidt(0) = 1.0;
    return ProbeSpec::entangled(std::move(schmidt), validate_unitary(basis, 1e-9));
}

bool two_unitary_perfect_distinguishability(const UnitaryOperator& u1,
                                            const UnitaryOperator& u2, double hull_tol) {
    const PairSpectrum spec = pair_spectrum(u1, u2);
    const std::vector<double>& ph = spec.phases;  // sorted ascending
    const std::size_t n = ph.size();
    double max_gap = ph.front() + 2.0 * M_PI - ph.back();
    for (std::size_t l = 1; l < n; ++l) max_gap = std::max(max_gap, ph[l] - ph[l - 1]);
    // All eigenvalues inside an open half-plane leave 0 outside the hull.
    return !(max_gap > M_PI + hull_tol);
}

// ---------------------------------------------------------------------------
// Probe search
// ---------------------------------------------------------------------------

namespace {

// Product of two-level rotations over all index pairs; spans the basis
// freedom the overlap quantities depend on.
ComplexMatrix two_level_product(int d, const std::vector<double>& angles,
                                const std::vector<double>& phases) {
    ComplexMatrix u = ComplexMatrix::Identity(d, d);
    std::size_t idx = 0;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j, ++idx) {
            const double t = angles[idx];
            const double p = phases[idx];
            const Complex e = std::polar(1.0, p);
            ComplexMatrix g = ComplexMatrix::Identity(d, d);
            g(i, i) = std::cos(t);
            g(j, j) = std::cos(t);
            g(i, j) = -e * std::sin(t);
            g(j, i) = std::conj(e) * std::sin(t);
            u = u * g;
        }
    }
    return u;
}

RealVector softmax(const std::vector<double>& logits) {
    RealVector w(static_cast<Eigen::Index>(logits.size()));
    const double m = *std::max_element(logits.begin(), logits.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        w(static_cast<Eigen::Index>(i)) = std::exp(logits[i] - m);
        sum += w(static_cast<Eigen::Index>(i));
    }
    return w / sum;
}

struct SearchProblem {
    const UnitaryEnsemble& ensemble;
    ProbeMode mode;
    int n_params = 0;
    int n_pairs = 0;  // two-level rotation count
    std::vector<PairSpectrum> spectra;  // upper-triangle pair spectra, row major
    const SearchConfig& cfg;

    SearchProblem(const UnitaryEnsemble& u, ProbeMode m, const SearchConfig& c)
        : ensemble(u), mode(m), cfg(c) {
        const int d = u.dim();
        n_pairs = d * (d - 1) / 2;
        n_params = (mode == ProbeMode::Entangled) ? d + 2 * n_pairs : 2 * n_pairs;
        for (int i = 0; i < u.size(); ++i)
            for (int j = i + 1; j < u.size(); ++j)
                spectra.push_back(pair_spectrum(u.member(i), u.member(j)));
    }

    ProbeSpec build(const std::vector<double>& params) const {
        const int d = ensemble.dim();
        if (mode == ProbeMode::Entangled) {
            const std::vector<double> logits(params.begin(), params.begin() + d);
            const std::vector<double> angles(params.begin() + d, params.begin() + d + n_pairs);
            const std::vector<double> phases(params.begin() + d + n_pairs, params.end());
            const RealVector w = softmax(logits);
            return ProbeSpec::entangled(w.cwiseSqrt(),
                                        validate_unitary(two_level_product(d, angles, phases),
                                                         1e-8));
        }
        const std::vector<double> angles(params.begin(), params.begin() + n_pairs);
        const std::vector<double> phases(params.begin() + n_pairs, params.end());
        const ComplexMatrix b = two_level_product(d, angles, phases);
        return ProbeSpec::single(PureState::normalized(b.col(0)));
    }

    // Larger is better. Closed-form surrogates for two and three members;
    // the solver value (scoring accuracy) otherwise.
    double score(const ProbeSpec& probe) const {
        const int r = ensemble.size();
        std::vector<double> xs;
        xs.reserve(spectra.size());
        for (const auto& spec : spectra)
            xs.push_back(overlap_from_weights(pair_weights(probe, spec), spec));
        if (r == 2) return -xs[0];
        if (r == 3) {
            const double sum = xs[0] + xs[1] + xs[2];
            return std::min(1.0 - sum, (sum - 1.0) * (sum - 1.0) - 4.0 * xs[0] * xs[1] * xs[2]);
        }
        return antidist_value(evolve_ensemble(ensemble, probe), cfg.scoring_solver).value;
    }
};

}  // namespace

std::pair<ProbeSpec, AntidistResult> optimize_probe(const UnitaryEnsemble& u, ProbeMode mode,
                                                    const SearchConfig& cfg) {
    if (u.size() < 2) throw OutOfRangeError("at least two unitaries required");
    const SearchProblem prob(u, mode, cfg);

    std::vector<double> global_best;
    double global_score = -std::numeric_limits<double>::infinity();

    for (int start = 0; start < cfg.starts; ++start) {
        Rng rng(cfg.seed + static_cast<std::uint64_t>(start));
        std::vector<double> params(static_cast<std::size_t>(prob.n_params));
        for (auto& p : params) p = gaussian(rng);

        double best = prob.score(prob.build(params));
        long evals = 1;
        double step = cfg.init_step;
        while (step >= cfg.min_step && evals < cfg.max_evals_per_start) {
            bool improved = false;
            for (std::size_t i = 0; i < params.size() && evals < cfg.max_evals_per_start; ++i) {
                for (const double delta : {step, -step}) {
                    params[i] += delta;
                    const double s = prob.score(prob.build(params));
                    ++evals;
                    if (s > best) {
                        best = s;
                        improved = true;
                        break;  // keep the move
                    }
                    params[i] -= delta;
                }
            }
            if (!improved) step *= 0.5;
        }
        if (best > global_score) {  // ties keep the lower start index
            global_score = best;
            global_best = params;
        }
    }

    const ProbeSpec probe = prob.build(global_best);
    AntidistResult result = antidist_value_with_probe(u, probe, cfg.final_solver);
    return {probe, std::move(result)};
}

// ---------------------------------------------------------------------------
// Qubit hierarchy Monte Carlo
// ---------------------------------------------------------------------------

HierarchyReport qubit_hierarchy_trial(std::uint64_t seed, long trials) {
    if (trials < 1) throw OutOfRangeError("at least one trial required");
    Rng rng(seed);
    HierarchyReport rep;
    rep.trials = trials;
    const Tolerances& tol = Tolerances::defaults();
    for (long t = 0; t < trials; ++t) {
        std::vector<UnitaryOperator> tri;
        for (int k = 0; k < 3; ++k) tri.push_back(haar_random_unitary(2, rng));

        ProbeSpec probe = [&] {
            if (t % 2 == 0) return ProbeSpec::single(random_pure_state(2, rng));
            // Random Schmidt weights with a Haar A-side basis.
            const double c2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            RealVector w(2);
            w << std::sqrt(c2), std::sqrt(1.0 - c2);
            return ProbeSpec::entangled(std::move(w), haar_random_unitary(2, rng));
        }();

        double probe_x[3], maxent_x[3];
        int idx = 0;
        const ProbeSpec me = ProbeSpec::maxent();
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j, ++idx) {
                const PairSpectrum spec = pair_spectrum(tri[i], tri[j]);
                probe_x[idx] = overlap_from_weights(pair_weights(probe, spec), spec);
                maxent_x[idx] = overlap_from_weights(pair_weights(me, spec), spec);
                rep.max_dominance_violation =
                    std::max(rep.max_dominance_violation, maxent_x[idx] - probe_x[idx]);
            }
        }
        const AntidistDecision dp = three_pure_condition(
            OverlapTriple(probe_x[0], probe_x[1], probe_x[2]), tol.condition_eps);
        const AntidistDecision dm = three_pure_condition(
            OverlapTriple(maxent_x[0], maxent_x[1], maxent_x[2]), tol.condition_eps);
        if (dp.verdict == Verdict::Boundary || dm.verdict == Verdict::Boundary) {
            ++rep.boundary_cases;
            continue;
        }
        if (dp.verdict == Verdict::Antidistinguishable) {
            ++rep.probe_certified;
            if (dm.verdict != Verdict::Antidistinguishable) ++rep.counterexamples;
        }
    }
    return rep;
}

}  // namespace antidist
