#include <doctest.h>

#include "kernelpath/automaton.hpp"
#include "kernelpath/errors.hpp"
#include "kernelpath/model.hpp"
#include "kernelpath/oracle.hpp"

#include <map>

using namespace kernelpath;

namespace {

const char* SCHRODER = "steps U=(1,1) D=(1,-1) F=(2,0) ;";
const char* SCHRODER_UF = "steps U=(1,1) D=(1,-1) F=(2,0) ; avoid U F";

// Recount a class from the flat word enumeration, marks included.
std::map<int, VPoly> recount(const ConstraintSpec& spec, const Automaton& a, char cls,
                             int max_length) {
    std::map<int, VPoly> table;
    for (int n = 0; n <= max_length; ++n) table[n] = VPoly(0L);
    for (const PathRecord& p : enumerate_paths(spec.steps, max_length)) {
        const auto run = a.run(p.steps);
        if (!run) continue;
        const bool nonneg = p.min_altitude >= 0;
        const bool closes = p.final_altitude == 0;
        bool in_class = true;
        if (cls == 'B') in_class = closes;
        if (cls == 'M') in_class = nonneg;
        if (cls == 'E') in_class = nonneg && closes;
        if (!in_class) continue;
        table[p.total_length] += VPoly::monomial(run->marks, Rat(1));
    }
    return table;
}

} // namespace

TEST_CASE("enumeration agrees with the forward count on every class") {
    const char* models[] = {SCHRODER, SCHRODER_UF, "steps U=(1,1) D=(1,-1) T=(3,0) ; avoid U T",
                            "steps U=(1,1) D=(1,-1) F=(2,0) ; mark U D"};
    for (const char* text : models) {
        CAPTURE(text);
        const ConstraintSpec spec = parse_spec(text);
        const Automaton a = automaton_for_spec(spec);
        const int L = 8;
        const DPTable walk(a, PathMode::Walk, L);
        const DPTable mdr(a, PathMode::Meander, L);
        for (char cls : {'W', 'B', 'M', 'E'}) {
            const auto flat = recount(spec, a, cls, L);
            const auto fast = (cls == 'W' || cls == 'B') ? walk.class_series(cls)
                                                         : mdr.class_series(cls);
            for (int n = 0; n <= L; ++n) {
                CAPTURE(cls);
                CAPTURE(n);
                CHECK(fast[n] == flat.at(n));
            }
        }
    }
}

TEST_CASE("classic sequences come out of the table") {
    const Automaton dyck = automaton_for_spec(parse_spec("steps U=(1,1) D=(1,-1) ;"));
    const DPTable m(dyck, PathMode::Meander, 14);
    // Catalan numbers at even lengths
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int k = 0; k <= 7; ++k) {
        CHECK(m.at_altitude(2 * k, 0) == VPoly(catalan[k]));
        if (2 * k + 1 <= 14) CHECK(m.at_altitude(2 * k + 1, 0).is_zero());
    }

    const Automaton schroder = automaton_for_spec(parse_spec(SCHRODER));
    const DPTable se(schroder, PathMode::Meander, 12);
    const long schr[] = {1, 2, 6, 22, 90, 394, 1806};
    for (int k = 0; k <= 6; ++k) CHECK(se.at_altitude(2 * k, 0) == VPoly(schr[k]));

    const DPTable sw(schroder, PathMode::Walk, 4);
    CHECK(sw.total(4) == VPoly(29L)); // walks count all altitudes

    const Automaton uf = automaton_for_spec(parse_spec(SCHRODER_UF));
    const DPTable ue(uf, PathMode::Meander, 12);
    const long small[] = {1, 2, 5, 15, 51, 188, 731};
    for (int k = 0; k <= 6; ++k) CHECK(ue.at_altitude(2 * k, 0) == VPoly(small[k]));
}

TEST_CASE("class queries demand the matching mode") {
    const Automaton a = automaton_for_spec(parse_spec(SCHRODER));
    const DPTable walk(a, PathMode::Walk, 4);
    const DPTable mdr(a, PathMode::Meander, 4);
    CHECK_THROWS_AS(walk.class_series('M'), InvalidConfig);
    CHECK_THROWS_AS(mdr.class_series('W'), InvalidConfig);
    CHECK_THROWS_AS(walk.total(5), OutOfOrder);
    CHECK_THROWS_AS(walk.class_series('x'), InvalidConfig);
}

TEST_CASE("word enumeration is bounded") {
    const StepSet s = parse_spec("steps U=(1,1) D=(1,-1) ;").steps;
    CHECK_THROWS_AS(enumerate_paths(s, 13), LimitExceeded);
    const auto paths = enumerate_paths(s, 3);
    // empty word + 2 + 4 + 8
    CHECK(paths.size() == 15);
}

TEST_CASE("scanners on raw words") {
    // word UUDFU over the schroder alphabet: U=0 D=1 F=2
    const StepSet s = parse_spec(SCHRODER).steps;
    const std::vector<int> w = {0, 0, 1, 2, 0};
    CHECK(contains_factor(w, {0, 1}));
    CHECK(!contains_factor(w, {1, 1}));
    CHECK(count_factor_occurrences(w, {0, 0}) == 1);
    CHECK(count_factor_occurrences({0, 0, 0, 0}, {0, 0}) == 3);
    CHECK(count_factor_occurrences(w, {2}) == 1);
    CHECK(count_ascents(w, s) == 2); // UU..., ...U
    CHECK(count_ascents({1, 2, 1}, s) == 0);
    CHECK(count_ascents({}, s) == 0);
}

TEST_CASE("streaming excursion distribution matches the dense table") {
    const char* models[] = {"steps U=(1,1) D=(1,-1) F=(2,0) ; automaton schroder-ascents.aut",
                            "steps U=(1,1) D=(1,-1) F=(2,0) ; mark U D", SCHRODER_UF};
    for (const char* text : models) {
        CAPTURE(text);
        ConstraintSpec spec = parse_spec(text);
        Automaton a = spec.kind == ConstraintKind::ExplicitAutomaton
                          ? build_ascent_automaton(spec.steps)
                          : automaton_for_spec(spec);
        const int L = 12;
        const DPTable mdr(a, PathMode::Meander, L);
        const auto stream = excursion_distribution(a, L);
        REQUIRE(stream.size() == static_cast<std::size_t>(L) + 1);
        for (int n = 0; n <= L; ++n) CHECK(stream[n] == mdr.at_altitude(n, 0));
    }
}

TEST_CASE("first-passage recursion reproduces the avoid-UF excursions") {
    const auto fp = first_passage_schroder_uf(12);
    const Automaton a = automaton_for_spec(parse_spec(SCHRODER_UF));
    const DPTable mdr(a, PathMode::Meander, 22);
    for (int k = 0; k < 12; ++k) {
        CHECK(VPoly(fp[k]) == mdr.at_altitude(2 * k, 0));
    }
}
