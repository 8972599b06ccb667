#include <doctest.h>

#include "kernelpath/automaton.hpp"
#include "kernelpath/errors.hpp"
#include "kernelpath/gf.hpp"
#include "kernelpath/kernel.hpp"
#include "kernelpath/model.hpp"
#include "kernelpath/oracle.hpp"
#include "kernelpath/series.hpp"

using namespace kernelpath;

namespace {

struct Routes {
    GFBundle bundle;
    KernelSystem ks;
    ULaurent closed_w;
    BoundaryData bd;
    ULaurent closed_m;
};

Routes both_routes(const Automaton& a, int order) {
    Routes r;
    const UMatrix adj = adjacency(a, order);
    r.bundle = iterate_bundle(adj, order);
    r.ks = analyze_kernel(adj);
    r.closed_w = closed_form_walks(r.ks);
    r.bd = boundary_data(adj, r.ks, r.bundle.meander_vector);
    r.closed_m = closed_form_meanders(r.ks, r.bd);
    return r;
}

Automaton for_text(const std::string& text) { return automaton_for_spec(parse_spec(text)); }

// test-local sqrt with constant coefficients, head 1
TruncSeries sqrt_series(const TruncSeries& a) {
    REQUIRE(a.coeff(0) == VPoly(1L));
    const int order = a.order();
    std::vector<Rat> s(static_cast<std::size_t>(order), Rat(0));
    s[0] = 1;
    for (int n = 1; n < order; ++n) {
        Rat acc = a.coeff(n).coeff(0);
        for (int i = 1; i < n; ++i) acc -= s[i] * s[n - i];
        s[n] = acc / 2;
    }
    TruncSeries out(order);
    for (int n = 0; n < order; ++n) out.set_coeff(n, VPoly(s[n]));
    return out;
}

} // namespace

TEST_CASE("both routes agree deep into the series") {
    const char* models[] = {
        "steps U=(1,1) D=(1,-1) ;",
        "steps U=(1,1) D=(1,-1) F=(2,0) ; avoid U F",
        "steps U=(1,1) D=(1,-1) F=(2,0) ; avoid U F U D",
        "steps U=(1,1) D=(1,-1) F=(2,0) ; mark U D",
        "steps U=(1,1) D=(1,-1) T=(3,0) ; avoid U T",
    };
    const int order = 24;
    for (const char* text : models) {
        CAPTURE(text);
        const Routes r = both_routes(for_text(text), order);
        CHECK(agree_to_order(r.bundle.W, r.closed_w, order));
        CHECK(agree_to_order(r.bundle.M, r.closed_m, order));
    }
}

TEST_CASE("closed forms reproduce the exhaustive counts") {
    const char* models[] = {
        "steps U=(1,1) D=(1,-1) F=(2,0) ;",
        "steps U=(1,1) D=(1,-1) F=(1,0) G=(2,0) ; avoid U G",
        "steps U=(1,1) D=(1,-1) F=(2,0) ; mark U D",
    };
    const int L = 12;
    for (const char* text : models) {
        CAPTURE(text);
        const Automaton a = for_text(text);
        const Routes r = both_routes(a, L + 1);
        const DPTable walk(a, PathMode::Walk, L), mdr(a, PathMode::Meander, L);
        const TruncSeries w1 = r.closed_w.eval_u1();
        const TruncSeries b0 = r.closed_w.coeff_u(0);
        const TruncSeries m1 = r.closed_m.eval_u1();
        const TruncSeries e0 = r.closed_m.eval_u(Rat(0));
        const auto ws = walk.class_series('W'), bs = walk.class_series('B');
        const auto ms = mdr.class_series('M'), es = mdr.class_series('E');
        for (int n = 0; n <= L; ++n) {
            CHECK(w1.coeff(n) == ws[n]);
            CHECK(b0.coeff(n) == bs[n]);
            CHECK(m1.coeff(n) == ms[n]);
            CHECK(e0.coeff(n) == es[n]);
        }
    }
}

TEST_CASE("boundary identities of the factor-avoiding schroder model") {
    const int order = 24;
    const Routes r = both_routes(for_text("steps U=(1,1) D=(1,-1) F=(2,0) ; avoid U F"), order);
    REQUIRE(r.ks.factor.e == 1);

    // G collapses to the constant 1
    CHECK(r.bd.g == ULaurent::term(0, TruncSeries::one(order)));

    // phi = u - t m0(t) with m0 the excursion series
    const TruncSeries m0 = r.bundle.E;
    ULaurent phi_want = ULaurent::u_power(1, order);
    phi_want -= ULaurent::constant(m0.shifted_t(1));
    CHECK(r.bd.phi == phi_want);

    // the small root itself is t m0(t)
    const TruncSeries root = -r.ks.factor.small.coeff_u(0);
    CHECK(root == m0.shifted_t(1));
}

TEST_CASE("boundary identities of the ascent-marked schroder model") {
    const int order = 24;
    const StepSet s = parse_spec("steps U=(1,1) D=(1,-1) F=(2,0) ;").steps;
    const Routes r = both_routes(build_ascent_automaton(s), order);
    REQUIRE(r.ks.factor.e == 1);
    CHECK(r.bd.g == ULaurent::term(0, TruncSeries::one(order)));
    const TruncSeries m0 = r.bundle.E;
    ULaurent phi_want = ULaurent::u_power(1, order);
    phi_want -= ULaurent::constant(m0.shifted_t(1));
    CHECK(r.bd.phi == phi_want);
    const TruncSeries root = -r.ks.factor.small.coeff_u(0);
    CHECK(root == m0.shifted_t(1));
}

TEST_CASE("excursions expand the printed radical closed form") {
    // E(t) = (1 - t^2 - sqrt(1 - 6 t^2 + 5 t^4)) / (2 t^2 (1 - t^2))
    const int order = 20;
    const Routes r = both_routes(for_text("steps U=(1,1) D=(1,-1) F=(2,0) ; avoid U F"), order);
    const TruncSeries e_engine = r.closed_m.eval_u(Rat(0));

    TruncSeries disc(order + 2);
    disc.set_coeff(0, VPoly(1L));
    disc.set_coeff(2, VPoly(-6L));
    disc.set_coeff(4, VPoly(5L));
    TruncSeries num(order + 2);
    num.set_coeff(0, VPoly(1L));
    num.set_coeff(2, VPoly(-1L));
    num = num - sqrt_series(disc);
    TruncSeries den(order + 2); // 2 (1 - t^2)
    den.set_coeff(0, VPoly(2L));
    den.set_coeff(2, VPoly(-2L));
    const TruncSeries e_rad = (num * series_invert(den)).divided_by_t(2);
    for (int n = 0; n < order; ++n) CHECK(e_engine.coeff(n) == e_rad.coeff(n));
    // and the first semilength values read 1, 2, 5, 15, 51, 188, 731
    const TruncSeries semi = substitute_semilength(e_engine);
    const long want[] = {1, 2, 5, 15, 51, 188, 731};
    for (int k = 0; k <= 6; ++k) CHECK(semi.coeff(k) == VPoly(want[k]));
}

TEST_CASE("bounded-height automaton collapses walks and meanders") {
    const ConstraintSpec spec = parse_spec("steps U=(1,1) D=(1,-1) ;");
    // height cap at 2, encoded by states = altitudes
    Automaton strip(spec.steps, 3);
    strip.set_transition(0, 0, {1, false});
    strip.set_transition(1, 0, {2, false});
    strip.set_transition(1, 1, {0, false});
    strip.set_transition(2, 1, {1, false});
    const int order = 16;
    const Routes r = both_routes(strip, order);
    CHECK(agree_to_order(r.closed_w, r.closed_m, order));
    // transfer-matrix recount with an explicit ceiling
    std::vector<std::vector<long>> dp(static_cast<std::size_t>(order),
                                      std::vector<long>(3, 0));
    dp[0][0] = 1;
    for (int n = 0; n + 1 < order; ++n)
        for (int h = 0; h <= 2; ++h) {
            if (h + 1 <= 2) dp[n + 1][h + 1] += dp[n][h];
            if (h - 1 >= 0) dp[n + 1][h - 1] += dp[n][h];
        }
    const TruncSeries m1 = r.closed_m.eval_u1();
    for (int n = 0; n < order; ++n) {
        long total = dp[n][0] + dp[n][1] + dp[n][2];
        CHECK(m1.coeff(n) == VPoly(total));
    }
}

TEST_CASE("semilength substitution demands even support") {
    TruncSeries even(6);
    even.set_coeff(0, VPoly(1L));
    even.set_coeff(2, VPoly(3L));
    even.set_coeff(4, VPoly(7L));
    const TruncSeries semi = substitute_semilength(even);
    CHECK(semi.order() == 3);
    CHECK(semi.coeff(1) == VPoly(3L));
    CHECK(semi.coeff(2) == VPoly(7L));
    TruncSeries odd(6);
    odd.set_coeff(3, VPoly(1L));
    CHECK_THROWS_AS(substitute_semilength(odd), OddCoefficientPresent);
}

TEST_CASE("distribution table rows and the order guard") {
    const Automaton a = for_text("steps U=(1,1) D=(1,-1) F=(2,0) ; mark U D");
    const Routes r = both_routes(a, 9);
    const TruncSeries e0 = r.closed_m.eval_u(Rat(0));
    // semilength 2: FF, FUD, UDF, UDUD, UUDD, UFD -> 2 unmarked, 3 with one
    // peak, UDUD with two
    const VPoly row = distribution_table(substitute_semilength(e0), 2);
    CHECK(row == VPoly(std::vector<Rat>{Rat(2), Rat(3), Rat(1)}));
    CHECK_THROWS_AS(distribution_table(e0, 40), OutOfOrder);
}

TEST_CASE("walk vector solves its defining fixed point") {
    const int order = 14;
    const Automaton a = for_text("steps U=(1,1) D=(1,-1) F=(2,0) ; avoid U F");
    const UMatrix adj = adjacency(a, order);
    const GFBundle b = iterate_bundle(adj, order);
    // V = e0 + V A, entrywise
    for (int j = 0; j < adj.dim; ++j) {
        ULaurent rhs = j == 0 ? ULaurent::term(0, TruncSeries::one(order))
                              : ULaurent::zero(order);
        for (int i = 0; i < adj.dim; ++i) rhs += b.walk_vector[i] * adj.at(i, j);
        CHECK(agree_to_order(b.walk_vector[j], rhs, order));
    }
    // meanders: V = e0 + {u >= 0}(V A)
    for (int j = 0; j < adj.dim; ++j) {
        ULaurent acc = ULaurent::zero(order);
        for (int i = 0; i < adj.dim; ++i) acc += b.meander_vector[i] * adj.at(i, j);
        ULaurent rhs = acc.project_nonneg_u();
        if (j == 0) rhs += ULaurent::term(0, TruncSeries::one(order));
        CHECK(agree_to_order(b.meander_vector[j], rhs, order));
    }
}
