#include <doctest.h>

#include "kernelpath/automaton.hpp"
#include "kernelpath/errors.hpp"
#include "kernelpath/model.hpp"
#include "kernelpath/oracle.hpp"

#include <sstream>

using namespace kernelpath;

namespace {

// t^a * u^b as a laurent entry
ULaurent tu(int a, int b, int order) { return ULaurent::term(b, TruncSeries::t_power(a, order)); }

} // namespace

TEST_CASE("prefix automaton for a length-two factor") {
    const ConstraintSpec spec = parse_spec("steps U=(1,1) D=(1,-1) F=(2,0) ; avoid U F");
    const Automaton a = automaton_for_spec(spec);
    REQUIRE(a.state_count() == 2);
    const int order = 8;
    const UMatrix m = adjacency(a, order);
    // state 0: D and F keep no progress, U starts the pattern
    // state 1: F would complete UF (absent), D resets, U stays
    UMatrix want(2, order);
    want.at(0, 0) = tu(1, -1, order) + tu(2, 0, order);
    want.at(0, 1) = tu(1, 1, order);
    want.at(1, 0) = tu(1, -1, order);
    want.at(1, 1) = tu(1, 1, order);
    CHECK(m == want);
}

TEST_CASE("prefix automaton for an overlapping length-four factor") {
    const ConstraintSpec spec = parse_spec("steps U=(1,1) D=(1,-1) F=(2,0) ; avoid U F U D");
    const Automaton a = automaton_for_spec(spec);
    REQUIRE(a.state_count() == 4);
    CHECK(a.defined_transition_count() == 11);
    const int order = 8;
    const UMatrix m = adjacency(a, order);
    UMatrix want(4, order);
    want.at(0, 0) = tu(2, 0, order) + tu(1, -1, order); // F, D
    want.at(0, 1) = tu(1, 1, order);                    // U
    want.at(1, 0) = tu(1, -1, order);                   // D resets
    want.at(1, 1) = tu(1, 1, order);                    // U keeps one
    want.at(1, 2) = tu(2, 0, order);                    // F extends to UF
    want.at(2, 0) = tu(2, 0, order) + tu(1, -1, order); // F, D reset
    want.at(2, 3) = tu(1, 1, order);                    // U extends to UFU
    want.at(3, 1) = tu(1, 1, order);                    // U falls back to the U prefix
    want.at(3, 2) = tu(2, 0, order);                    // F falls back to UF
    CHECK(m == want);

    const std::string dot = export_dot(a);
    // one rendered edge per defined transition
    std::size_t edges = 0, pos = 0;
    while ((pos = dot.find(" -> ", pos)) != std::string::npos) {
        ++edges;
        pos += 4;
    }
    CHECK(edges == 11);
}

TEST_CASE("ascent automaton marks transitions that close a climb") {
    const ConstraintSpec spec = parse_spec("steps U=(1,1) D=(1,-1) F=(2,0) ;");
    const Automaton a = build_ascent_automaton(spec.steps);
    REQUIRE(a.state_count() == 2);
    CHECK(a.has_marks());
    const int order = 8;
    const UMatrix m = adjacency(a, order);
    const ULaurent stay = tu(1, -1, order) + tu(2, 0, order);
    UMatrix want(2, order);
    want.at(0, 0) = stay;
    want.at(0, 1) = tu(1, 1, order);
    want.at(1, 0) = stay * ULaurent::constant(TruncSeries::constant(VPoly::variable(), order));
    want.at(1, 1) = tu(1, 1, order);
    CHECK(m == want);
    CHECK_THROWS_AS(build_ascent_automaton(parse_spec("steps D=(1,-1) F=(2,0) ;").steps),
                    UnsupportedStepSet);
}

TEST_CASE("pattern automata reproduce the word scanner on every short word") {
    struct Case {
        std::string model;
    };
    const std::string models[] = {
        "steps U=(1,1) D=(1,-1) F=(2,0) ; avoid U F",
        "steps U=(1,1) D=(1,-1) F=(2,0) ; avoid U F U D",
        "steps U=(1,1) D=(1,-1) T=(3,0) ; avoid U T",
        "steps U=(1,1) D=(1,-1) F=(1,0) G=(2,0) ; avoid U G",
        "steps U=(1,1) D=(1,-1) F=(2,0) ; mark U D",
        "steps U=(1,1) D=(1,-1) F=(2,0) ; mark U U",
        "steps U=(1,1) D=(1,-1) F=(1,0) ; mark D D D",
    };
    for (const auto& text : models) {
        CAPTURE(text);
        const ConstraintSpec spec = parse_spec(text);
        const Automaton a = automaton_for_spec(spec);
        const auto paths = enumerate_paths(spec.steps, 8);
        for (const PathRecord& p : paths) {
            const auto run = a.run(p.steps);
            if (spec.pattern.mode == PatternMode::Avoid) {
                const bool hit = contains_factor(p.steps, spec.pattern.step_indices);
                CHECK(run.has_value() == !hit);
                if (run) CHECK(run->marks == 0);
            } else {
                REQUIRE(run.has_value());
                CHECK(run->marks == count_factor_occurrences(p.steps, spec.pattern.step_indices));
            }
        }
    }
}

TEST_CASE("ascent automaton reproduces the maximal-run scanner") {
    const ConstraintSpec spec = parse_spec("steps U=(1,1) D=(1,-1) F=(2,0) ;");
    const Automaton a = build_ascent_automaton(spec.steps);
    for (const PathRecord& p : enumerate_paths(spec.steps, 8)) {
        const auto run = a.run(p.steps);
        REQUIRE(run.has_value());
        // a trailing climb is only closed by the end of the word
        int scanned = count_ascents(p.steps, spec.steps);
        const bool open_tail = !p.steps.empty() && spec.steps.at(p.steps.back()).altitude > 0;
        CHECK(run->marks == scanned - (open_tail ? 1 : 0));
    }
}

TEST_CASE("trivial automaton accepts everything unmarked") {
    const ConstraintSpec spec = parse_spec("steps U=(1,1) D=(1,-1) ;");
    const Automaton a = automaton_for_spec(spec);
    CHECK(a.state_count() == 1);
    CHECK(!a.has_marks());
    CHECK(a.defined_transition_count() == 2);
    for (const PathRecord& p : enumerate_paths(spec.steps, 6)) {
        const auto run = a.run(p.steps);
        REQUIRE(run.has_value());
        CHECK(run->final_state == 0);
        CHECK(run->marks == 0);
    }
}

TEST_CASE("automaton construction is deterministic") {
    const ConstraintSpec spec = parse_spec("steps U=(1,1) D=(1,-1) F=(2,0) ; avoid U F U D");
    const Automaton a = automaton_for_spec(spec);
    const Automaton b = automaton_for_spec(spec);
    CHECK(export_dot(a) == export_dot(b));
    CHECK(adjacency(a, 12) == adjacency(b, 12));
}

TEST_CASE("automaton file loader and its errors") {
    const StepSet s = parse_spec("steps U=(1,1) D=(1,-1) ;").steps;
    {
        std::istringstream in("# comment\nstates 2\ninitial 0\ntrans 0 U 1\ntrans 1 D 0 marked\n");
        const Automaton a = load_automaton(in, s);
        CHECK(a.state_count() == 2);
        CHECK(a.has_marks());
        CHECK(a.defined_transition_count() == 2);
        CHECK(a.transition(1, 1)->marked);
    }
    auto load = [&](const std::string& text) {
        std::istringstream in(text);
        return load_automaton(in, s);
    };
    CHECK_THROWS_AS(load("initial 0\ntrans 0 U 0\n"), ParseError);          // no states
    CHECK_THROWS_AS(load("states 1\ninitial 1\ntrans 0 U 0\n"), DanglingState); // initial out of range
    CHECK_THROWS_AS(load("states 2\ninitial 1\ntrans 0 U 0\n"), ParseError);    // initial not 0
    CHECK_THROWS_AS(load("states 1\ninitial 0\ntrans 0 U 5\n"), DanglingState);
    CHECK_THROWS_AS(load("states 1\ninitial 0\ntrans 7 U 0\n"), DanglingState);
    CHECK_THROWS_AS(load("states 1\ninitial 0\ntrans 0 X 0\n"), UnknownStep);
    CHECK_THROWS_AS(load("states 1\ninitial 0\ntrans 0 U 0\ntrans 0 U 0\n"), ParseError);
    CHECK_THROWS_AS(load("states 1\ninitial 0\nfrobnicate\n"), ParseError);
    CHECK_THROWS_AS(load("states 1\ninitial 0\ntrans 0 U 0 bogus\n"), ParseError);
    CHECK_THROWS_AS(load_automaton_file("/nonexistent/path.aut", s), ParseError);
}

TEST_CASE("mark mode counts overlapping occurrences") {
    const ConstraintSpec spec = parse_spec("steps U=(1,1) D=(1,-1) ; mark U U");
    const Automaton a = automaton_for_spec(spec);
    const auto run = a.run({0, 0, 0}); // UUU contains UU twice
    REQUIRE(run.has_value());
    CHECK(run->marks == 2);
    CHECK(count_factor_occurrences({0, 0, 0}, {0, 0}) == 2);
}
