#include <doctest.h>

#include "kernelpath/automaton.hpp"
#include "kernelpath/errors.hpp"
#include "kernelpath/gf.hpp"
#include "kernelpath/kernel.hpp"
#include "kernelpath/model.hpp"

using namespace kernelpath;

namespace {

ULaurent tu(int a, int b, int order) { return ULaurent::term(b, TruncSeries::t_power(a, order)); }

// sqrt of a series with constant coefficients and head 1, by the direct
// coefficient recurrence s_n = (a_n - sum_{0<i<n} s_i s_{n-i}) / 2
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

TruncSeries poly_t(std::initializer_list<std::pair<int, long>> terms, int order) {
    TruncSeries s(order);
    for (const auto& [k, c] : terms) s.set_coeff(k, VPoly(c));
    return s;
}

KernelSystem system_for(const std::string& text, int order) {
    const Automaton a = automaton_for_spec(parse_spec(text));
    return analyze_kernel(adjacency(a, order));
}

} // namespace

TEST_CASE("kernel of the factor-avoiding schroder model") {
    const int order = 16;
    const KernelSystem ks = system_for("steps U=(1,1) D=(1,-1) F=(2,0) ; avoid U F", order);
    // K(t,u) = -t/u + (1 - t^2) + (t^3 - t) u
    ULaurent want = tu(1, -1, order);
    want = -want;
    want += ULaurent::term(0, poly_t({{0, 1}, {2, -1}}, order));
    want += ULaurent::term(1, poly_t({{3, 1}, {1, -1}}, order));
    CHECK(ks.kernel == want);
    CHECK(ks.factor.c_K == 1);
    CHECK(ks.factor.e == 1);
}

TEST_CASE("kernel of the ascent-marked schroder model") {
    const int order = 16;
    const StepSet s = parse_spec("steps U=(1,1) D=(1,-1) F=(2,0) ;").steps;
    const KernelSystem ks = analyze_kernel(adjacency(build_ascent_automaton(s), order));
    // K(t,u,v) = -t/u + (1 - v t^2) + ((1-v) t^3 - t) u
    const VPoly v = VPoly::variable();
    ULaurent want = -tu(1, -1, order);
    TruncSeries mid(order);
    mid.set_coeff(0, VPoly(1L));
    mid.set_coeff(2, -v);
    TruncSeries top(order);
    top.set_coeff(1, VPoly(-1L));
    top.set_coeff(3, VPoly(1L) - v);
    want += ULaurent::term(0, mid) + ULaurent::term(1, top);
    CHECK(ks.kernel == want);

    // at v = 1 marking is invisible: the unconstrained kernel of the same steps
    const KernelSystem plain = system_for("steps U=(1,1) D=(1,-1) F=(2,0) ;", order);
    CHECK(ks.kernel.evaluate_v(Rat(1)) == plain.kernel);
    CHECK(ks.factor.small.evaluate_v(Rat(1)) == plain.factor.small);
}

TEST_CASE("adjugate identity on corpus-shaped systems") {
    const char* models[] = {
        "steps U=(1,1) D=(1,-1) ;",
        "steps U=(1,1) D=(1,-1) F=(2,0) ; avoid U F U D",
        "steps U=(1,1) D=(1,-1) T=(3,0) ; avoid U T",
        "steps U=(1,1) D=(1,-1) F=(1,0) G=(2,0) ; avoid U G",
    };
    const int order = 16;
    for (const char* text : models) {
        CAPTURE(text);
        const KernelSystem ks = system_for(text, order);
        const UMatrix prod = ks.eye_minus_a * ks.adjug;
        for (int i = 0; i < prod.dim; ++i)
            for (int j = 0; j < prod.dim; ++j)
                CHECK(agree_to_order(prod.at(i, j),
                                     i == j ? ks.kernel : ULaurent::zero(order), order));
    }
}

TEST_CASE("factor split is exact and canonical") {
    const char* models[] = {
        "steps U=(1,1) D=(1,-1) ;",
        "steps U=(1,1) D=(1,-1) F=(2,0) ;",
        "steps U=(1,1) D=(1,-1) F=(2,0) ; avoid U F U D",
        "steps U=(1,1) D=(1,-1) T=(3,0) ; avoid U T",
        "steps U=(1,2) D=(1,-2) F=(1,0) ;", // jumps of two
    };
    const int order = 32;
    for (const char* text : models) {
        CAPTURE(text);
        const KernelSystem ks = system_for(text, order);
        const KernelData& kd = ks.factor;
        CHECK(kd.e == kd.c_K);
        CHECK(kd.small * kd.unit == kd.cleared);
        CHECK(kd.cleared == ks.kernel.shifted_u(kd.c_K));
        // t^0 slices: u^e and 1
        REQUIRE(kd.small.max_deg() == kd.e);
        CHECK(kd.small.min_deg() >= 0);
        for (int k = 0; k <= kd.e; ++k) {
            const Rat c = kd.small.coeff_u(k).coeff(0).coeff(0);
            CHECK(c == (k == kd.e ? 1 : 0));
        }
        CHECK(kd.unit.coeff_u(0).coeff(0) == VPoly(1L));
        // the monic top coefficient stays exactly 1 at every t-order
        CHECK(kd.small.coeff_u(kd.e) == TruncSeries::one(kd.small.order()));
    }
}

TEST_CASE("small roots annihilate the cleared kernel") {
    const int order = 24;
    const KernelSystem ks = system_for("steps U=(1,1) D=(1,-1) F=(2,0) ; avoid U F", order);
    REQUIRE(ks.factor.e == 1);
    // small = u + c0, so the root is -c0
    const TruncSeries root = -ks.factor.small.coeff_u(0);
    CHECK(root.valuation() >= 1);
    TruncSeries acc(order);
    TruncSeries upow = TruncSeries::one(order);
    for (int k = 0; k <= ks.factor.cleared.max_deg(); ++k) {
        acc = acc + ks.factor.cleared.coeff_u(k) * upow;
        upow = upow * root;
    }
    CHECK(acc == TruncSeries(order)); // zero
}

TEST_CASE("the small root matches its radical form") {
    // cleared kernel (t^3 - t) u^2 + (1 - t^2) u - t has discriminant
    // 1 - 6t^2 + 5t^4; the branch vanishing at t = 0 satisfies
    // 2 (t^3 - t) u1 = -(1 - t^2) + sqrt(1 - 6 t^2 + 5 t^4)
    const int order = 24;
    const KernelSystem ks = system_for("steps U=(1,1) D=(1,-1) F=(2,0) ; avoid U F", order);
    const TruncSeries root = -ks.factor.small.coeff_u(0);
    const TruncSeries disc = poly_t({{0, 1}, {2, -6}, {4, 5}}, order);
    const TruncSeries lhs = poly_t({{3, 2}, {1, -2}}, order) * root;
    const TruncSeries rhs = poly_t({{2, 1}, {0, -1}}, order) + sqrt_series(disc);
    CHECK(lhs == rhs);
}

TEST_CASE("degenerate kernels are rejected") {
    // t^0 slice 1 - u is not a pure power of u after clearing
    ULaurent bad = ULaurent::term(0, TruncSeries::one(8)) - ULaurent::u_power(1, 8);
    CHECK_THROWS_AS(small_factor(bad), DegenerateKernel);
}

TEST_CASE("division helpers enforce their contracts") {
    const int order = 8;
    // divide_unit_t needs a t^0 slice equal to the constant 1
    const ULaurent num = ULaurent::u_power(1, order);
    const ULaurent bad_den = ULaurent::constant(TruncSeries::t_power(1, order));
    CHECK_THROWS_AS(divide_unit_t(num, bad_den), NotAUnit);
    // division by u + (-t) leaves a remainder for u^2 + 1
    ULaurent monic = ULaurent::u_power(1, order);
    monic += ULaurent::constant(-TruncSeries::t_power(1, order));
    ULaurent rem_case = ULaurent::u_power(2, order) + ULaurent::u_power(0, order);
    CHECK_THROWS_AS(divide_exact_monic_u(rem_case, monic), NonzeroRemainder);
    // u^2 - t^2 divides exactly by u - t ... quotient u + t
    ULaurent square = ULaurent::u_power(2, order) -
                      ULaurent::constant(TruncSeries::t_power(2, order));
    const ULaurent q = divide_exact_monic_u(square, monic);
    ULaurent want = ULaurent::u_power(1, order) + ULaurent::constant(TruncSeries::t_power(1, order));
    CHECK(q == want);
}

TEST_CASE("determinant expansion handles signs and memoization") {
    const int order = 6;
    // permutation-ish matrix with laurent entries
    UMatrix m(3, order);
    m.at(0, 1) = tu(1, 1, order);
    m.at(1, 0) = tu(1, -1, order);
    m.at(2, 2) = ULaurent::term(0, TruncSeries::one(order));
    // det = -t^2 * 1 ... expansion sign on the swap
    const ULaurent d = determinant(m);
    ULaurent want = -ULaurent::constant(TruncSeries::t_power(2, order));
    CHECK(d == want);
    const UMatrix adj = adjugate(m);
    const UMatrix prod = m * adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(agree_to_order(prod.at(i, j), i == j ? d : ULaurent::zero(order), order));
}
