#ifndef KERNELPATH_SERIES_HPP
#define KERNELPATH_SERIES_HPP

#include "kernelpath/vpoly.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace kernelpath {

// Truncated power series in t whose coefficients are VPoly. `order` is the
// number of known coefficients (t^0 .. t^{order-1}) and the coefficient
// vector always has exactly that length. Binary operations truncate to the
// minimum of the operand orders so an unknown tail can never contaminate a
// known coefficient.
class TruncSeries {
public:
    explicit TruncSeries(int order);
    TruncSeries(int order, std::vector<VPoly> coeffs);

    static TruncSeries constant(const VPoly& value, int order);
    static TruncSeries one(int order) { return constant(VPoly(1L), order); }
    static TruncSeries t_power(int k, int order);
    static TruncSeries from_terms(std::initializer_list<std::pair<int, VPoly>> terms, int order);

    int order() const { return order_; }
    const VPoly& coeff(int k) const;
    void set_coeff(int k, VPoly value);

    bool is_zero() const;
    // t-valuation: index of first nonzero coefficient, or order() if none
    int valuation() const;

    TruncSeries truncated(int new_order) const;
    TruncSeries shifted_t(int k) const; // * t^k, known window shrinks by k
    // exact division by t^k: requires the low k coefficients to vanish;
    // the result is known to order() - k coefficients
    TruncSeries divided_by_t(int k) const;

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    TruncSeries scaled(const VPoly& s) const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    TruncSeries evaluate_v(const Rat& v) const;

    std::string str(const std::string& tvar = "t") const;

private:
    int order_ = 0;
    std::vector<VPoly> c_;
};

// Multiplicative inverse up to the operand's order. The t^0 coefficient must
// be a nonzero constant in v; with v_order > 0 a t^0 coefficient that has a
// nonzero v^0 term is also accepted and inverted in Q[v]/(v^{v_order}), with
// every coefficient of the result truncated accordingly.
TruncSeries series_invert(const TruncSeries& a, int v_order = 0);

// first `count` coefficients as VPoly values
std::vector<VPoly> series_prefix(const TruncSeries& a, int count);

bool agree_to_order(const TruncSeries& a, const TruncSeries& b, int order);

} // namespace kernelpath

#endif
