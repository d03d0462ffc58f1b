#include <doctest.h>

#include "antidist/json_io.hpp"

using namespace antidist;

TEST_SUITE_BEGIN("json_io");

TEST_CASE("matrix round trip") {
    Rng rng(3);
    const ComplexMatrix m = haar_random_unitary(3, rng).matrix();
    const ComplexMatrix back = matrix_from_json(matrix_to_json(m));
    CHECK((m - back).norm() == 0.0);
}

TEST_CASE("state round trip") {
    Rng rng(4);
    const PureState s = random_pure_state(4, rng);
    const PureState back = state_from_json(state_to_json(s));
    CHECK((s.amplitudes() - back.amplitudes()).norm() == 0.0);
}

TEST_CASE("ensemble accepts both state and density objects") {
    const Json j{{"priors", {0.5, 0.5}},
                 {"states",
                  {Json{{"dim", 2}, {"amps", {{1.0, 0.0}, {0.0, 0.0}}}},
                   Json{{"rows", 2},
                        {"cols", 2},
                        {"data", {{{0.5, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {0.5, 0.0}}}}}}}};
    const StateEnsemble e = ensemble_from_json(j);
    CHECK(e.size() == 2);
    CHECK(e.dim() == 2);
    const Json back = ensemble_to_json(e);
    CHECK(back.at("states").size() == 2);
}

TEST_CASE("ensemble without priors defaults to uniform") {
    const Json j{{"states", {Json{{"dim", 2}, {"amps", {{1.0, 0.0}, {0.0, 0.0}}}},
                             Json{{"dim", 2}, {"amps", {{0.0, 0.0}, {1.0, 0.0}}}}}}};
    const StateEnsemble e = ensemble_from_json(j);
    CHECK(e.priors()(0) == doctest::Approx(0.5));
}

TEST_CASE("probe round trips") {
    Rng rng(5);
    const ProbeSpec single = ProbeSpec::single(random_pure_state(3, rng));
    CHECK(probe_from_json(probe_to_json(single)).is_single());

    RealVector w(3);
    w << std::sqrt(0.5), std::sqrt(0.3), std::sqrt(0.2);
    const ProbeSpec ent = ProbeSpec::entangled(w, haar_random_unitary(3, rng));
    const ProbeSpec ent_back = probe_from_json(probe_to_json(ent));
    REQUIRE(ent_back.is_entangled());
    CHECK((ent_back.as_entangled().schmidt - w).norm() <= 1e-15);

    CHECK(probe_from_json(probe_to_json(ProbeSpec::maxent())).is_maxent());
}

TEST_CASE("malformed input raises ParseError") {
    CHECK_THROWS_AS(matrix_from_json(Json{{"rows", 2}, {"cols", 2}}), ParseError);
    CHECK_THROWS_AS(state_from_json(Json{{"dim", 2}, {"amps", {{1.0, 0.0}}}}), ParseError);
    CHECK_THROWS_AS(ensemble_from_json(Json{{"states", Json::array()}}), ParseError);
    CHECK_THROWS_AS(probe_from_json(Json{{"kind", "weird"}}), ParseError);
    CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), ParseError);
    // non-normalized state amplitudes
    CHECK_THROWS_AS(
        state_from_json(Json{{"dim", 2}, {"amps", {{0.5, 0.0}, {0.0, 0.0}}}}),
        ParseError);
}

TEST_SUITE_END();
