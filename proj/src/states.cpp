#include "antidist/states.hpp"

#include <algorithm>
#include <cmath>

namespace antidist {

namespace {

double checked_overlap(double x, const char* which) {
    if (!std::isfinite(x)) throw OutOfRangeError("non-finite overlap");
    if (x < -1e-9 || x > 1.0 + 1e-9)
        throw OutOfRangeError(std::string(which) + " outside [0,1]");
    return std::clamp(x, 0.0, 1.0);
}

}  // namespace

OverlapTriple::OverlapTriple(double x1_, double x2_, double x3_)
    : x1(checked_overlap(x1_, "x1")),
      x2(checked_overlap(x2_, "x2")),
      x3(checked_overlap(x3_, "x3")) {}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Antidistinguishable: return "antidistinguishable";
        case Verdict::NotAntidistinguishable: return "not-antidistinguishable";
        case Verdict::Boundary: return "boundary";
    }
    return "?";
}

AntidistDecision three_pure_condition(const OverlapTriple& x, double eps) {
    const double sum = x.x1 + x.x2 + x.x3;
    AntidistDecision d{};
    d.margin_sum = 1.0 - sum;
    d.margin_disc = (sum - 1.0) * (sum - 1.0) - 4.0 * x.x1 * x.x2 * x.x3;
    if (std::abs(d.margin_sum) <= eps || std::abs(d.margin_disc) <= eps)
        d.verdict = Verdict::Boundary;
    else if (d.margin_sum > 0.0 && d.margin_disc > 0.0)
        d.verdict = Verdict::Antidistinguishable;
    else
        d.verdict = Verdict::NotAntidistinguishable;
    return d;
}

StateEnsemble::StateEnsemble(std::vector<DensityMatrix> members, RealVector priors)
    : members_(std::move(members)), priors_(std::move(priors)) {
    if (members_.empty()) throw OutOfRangeError("empty ensemble");
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

StateEnsemble StateEnsemble::uniform(std::vector<DensityMatrix> members) {
    const int n = static_cast<int>(members.size());
    if (n == 0) throw OutOfRangeError("empty ensemble");
    return StateEnsemble(std::move(members), RealVector::Constant(n, 1.0 / n));
}

StateEnsemble StateEnsemble::of_pure(const std::vector<PureState>& states) {
    std::vector<DensityMatrix> members;
    members.reserve(states.size());
    for (const auto& s : states) members.push_back(DensityMatrix::from_pure(s));
    return uniform(std::move(members));
}

StateEnsemble StateEnsemble::of_pure(const std::vector<PureState>& states, RealVector priors) {
    std::vector<DensityMatrix> members;
    members.reserve(states.size());
    for (const auto& s : states) members.push_back(DensityMatrix::from_pure(s));
    return StateEnsemble(std::move(members), std::move(priors));
}

AntidistResult antidist_value(const StateEnsemble& e, const SolverConfig& cfg) {
    AntidistResult r;
    if (e.size() == 1) {
        // Single hypothesis: the only POVM is {I}; misidentification is certain.
        const int d = e.dim();
        r.value = 0.0;
        r.povm.effects = {ComplexMatrix::Identity(d, d)};
        r.dual_certificate = e.priors()(0) * e.members()[0].matrix();
        r.gap = 0.0;
        return r;
    }
    std::vector<ComplexMatrix> costs;
    costs.reserve(e.size());
    for (int k = 0; k < e.size(); ++k)
        costs.push_back(e.priors()(k) * e.members()[k].matrix());
    const PovmSolution s = solve_min_povm(PovmProgram::from_costs(std::move(costs)), cfg);
    r.value = std::clamp(1.0 - s.primal, 0.0, 1.0 + 1e-9);
    r.povm = s.povm;
    r.dual_certificate = s.dual_Y;
    r.gap = std::max(s.gap, 0.0);
    return r;
}

bool is_perfectly_antidist(const StateEnsemble& e, double tol, const SolverConfig& cfg) {
    return antidist_value(e, cfg).value >= 1.0 - tol;
}

OverlapTriple overlap_triple(const PureState& a, const PureState& b, const PureState& c) {
    return OverlapTriple(overlap_sq(a, b), overlap_sq(a, c), overlap_sq(b, c));
}

namespace {

PureState bloch_state(double polar, double azimuth) {
    ComplexVector v(2);
    v(0) = std::cos(0.5 * polar);
    v(1) = std::polar(std::sin(0.5 * polar), azimuth);
    return PureState::normalized(std::move(v));
}

double extension_score(const std::vector<PureState>& states, const PureState& candidate,
                       const SolverConfig& solver) {
    std::vector<PureState> enlarged = states;
    enlarged.push_back(candidate);
    return antidist_value(StateEnsemble::of_pure(enlarged), solver).value;
}

}  // namespace

PureState extend_qubit_pure_set(const std::vector<PureState>& states, const SearchConfig& cfg) {
    if (states.empty()) throw OutOfRangeError("empty state set");
    for (const auto& s : states)
        if (s.dim() != 2) throw DimensionMismatchError("qubit states required");

    if (is_perfectly_antidist(StateEnsemble::of_pure(states), cfg.decision_tol,
                              cfg.final_solver))
        throw NotNeededError("input set is already antidistinguishable");

    double best_score = -1.0;
    double best_polar = 0.0, best_azimuth = 0.0;
    double verified_polar = -1.0, verified_azimuth = -1.0;
    // Certification is attempted once the coarse score clears the scoring
    // solver's own accuracy, and never repeated for the same point.
    const double cert_trigger = 50.0 * cfg.scoring_solver.gap_tol;
    auto certify_best = [&]() -> bool {
        if (best_score < 1.0 - cert_trigger) return false;
        if (best_polar == verified_polar && best_azimuth == verified_azimuth) return false;
        verified_polar = best_polar;
        verified_azimuth = best_azimuth;
        return extension_score(states, bloch_state(best_polar, best_azimuth),
                               cfg.final_solver) >= 1.0 - cfg.decision_tol;
    };

    // Coarse polar/azimuth grid scored by the solver, fixed scan order.
    for (int i = 0; i < cfg.grid_polar; ++i) {
        const double polar = M_PI * (i + 0.5) / cfg.grid_polar;
        for (int j = 0; j < cfg.grid_azimuth; ++j) {
            const double azimuth = 2.0 * M_PI * j / cfg.grid_azimuth;
            const double score =
                extension_score(states, bloch_state(polar, azimuth), cfg.scoring_solver);
            if (score > best_score) {
                best_score = score;
                best_polar = polar;
                best_azimuth = azimuth;
                if (certify_best()) return bloch_state(best_polar, best_azimuth);
            }
        }
    }

    // Shrinking-step refinement of the best grid point.
    double step = std::max(M_PI / cfg.grid_polar, 2.0 * M_PI / cfg.grid_azimuth);
    while (step >= cfg.min_step) {
        bool improved = false;
        const double cand[4][2] = {{best_polar + step, best_azimuth},
                                   {best_polar - step, best_azimuth},
                                   {best_polar, best_azimuth + step},
                                   {best_polar, best_azimuth - step}};
        for (const auto& c : cand) {
            const double score =
                extension_score(states, bloch_state(c[0], c[1]), cfg.scoring_solver);
            if (score > best_score) {
                best_score = score;
                best_polar = c[0];
                best_azimuth = c[1];
                improved = true;
            }
        }
        if (improved) {
            if (certify_best()) return bloch_state(best_polar, best_azimuth);
        } else {
            step *= 0.5;
        }
    }

    const PureState candidate = bloch_state(best_polar, best_azimuth);
    if (extension_score(states, candidate, cfg.final_solver) >= 1.0 - cfg.decision_tol)
        return candidate;
    throw SearchExhaustedError("no extension certified; unexpected for qubit sets");
}

}  // namespace antidist
