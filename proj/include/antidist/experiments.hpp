#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "antidist/config.hpp"
#include "antidist/families.hpp"
#include "antidist/unitary.hpp"

namespace antidist {

/// One measured figure in a report, with the tolerance it was compared at.
struct Quantity {
    std::string name;
    double value = 0.0;
    double tol = 0.0;
    std::string ref;  // which check produced it
};

struct ReproReport {
    std::string theorem;  // thm1..thm9
    nlohmann::json params;
    std::vector<Quantity> quantities;
    std::string verdict;  // "reproduced" | "discrepancy"
    std::string details;
    double wall_time_s = -1.0;  // negative = omitted

    bool reproduced() const { return verdict == "reproduced"; }
    nlohmann::json to_json() const;
    std::string table() const;
};

struct ReproParams {
    int d = 3;
    double p = 0.9;
    long trials = -1;  // negative = per-theorem default
    std::uint64_t seed = 1;
    SolverConfig solver{};
    SearchConfig search{};
    bool with_walltime = true;
};

/// Runs one built-in claim check (thm1..thm9). Discrepancies are reported,
/// never thrown.
ReproReport repro_theorem(const std::string& id, const ReproParams& params);

std::vector<std::string> all_theorem_ids();
bool theorem_is_stochastic(const std::string& id);

struct SweepRow {
    double p = 0.0;
    double x1 = 0.0, x2 = 0.0, x3 = 0.0;  // (x12, x13, x23) of the evolved states
    double margin_sum = 0.0;              // 1 - sum
    double margin_disc = 0.0;             // (sum-1)^2 - 4 x1 x2 x3
    bool antidist = false;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool found_transition = false;
    double p_star = 0.0;             // bisected verdict boundary, resolved to 1e-9
    double margin_sum_at_pstar = 0.0;
    double margin_disc_at_pstar = 0.0;
    double sdp_below = 0.0;          // solver value one grid step below/above p*
    double sdp_above = 0.0;
    double paper_constant = 0.0;     // (14 - 2 sqrt 7)/21, for comparison
    bool matches_paper_constant = false;
};

/// Overlap sweep for the V(d) family under the sqrt(p)|00>+sqrt(1-p)|11>
/// probe, with the antidistinguishability transition bracketed by bisection.
SweepResult sweep_thm3_p(int d, double p_min, double p_max, int steps,
                         const SolverConfig& solver = {});

std::string sweep_to_csv(const SweepResult& r);

/// Closed-form evolved overlaps (x12, x13, x23) for the V(d) family under the
/// p-probe: (1/4, (1-p/2)^2, (1/2-p/4)^2).
SweepRow thm3_closed_form_row(double p);

}  // namespace antidist
