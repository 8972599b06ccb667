#ifndef KERNELPATH_ULAURENT_HPP
#define KERNELPATH_ULAURENT_HPP

#include "kernelpath/series.hpp"

#include <string>
#include <vector>

namespace kernelpath {

// Laurent polynomial in u whose coefficients are truncated t-series. All
// coefficients share one truncation order. Canonical form: the lowest and
// highest u-coefficients are nonzero series; the zero element has an empty
// coefficient vector and min_deg 0.
class ULaurent {
public:
    ULaurent() : order_(0) {}
    explicit ULaurent(int order) : order_(order) {}
    ULaurent(int min_deg, std::vector<TruncSeries> coeffs);

    static ULaurent zero(int order) { return ULaurent(order); }
    static ULaurent constant(const TruncSeries& s);
    static ULaurent u_power(int k, int order);
    // single term coef * u^k
    static ULaurent term(int k, const TruncSeries& coef);

    int order() const { return order_; }
    int min_deg() const { return min_deg_; }
    int max_deg() const { return min_deg_ + static_cast<int>(c_.size()) - 1; } // < min_deg for zero
    bool is_zero() const { return c_.empty(); }

    // coefficient of u^k (zero series when outside the span)
    TruncSeries coeff_u(int k) const;

    ULaurent operator-() const;
    friend ULaurent operator+(const ULaurent& a, const ULaurent& b);
    friend ULaurent operator-(const ULaurent& a, const ULaurent& b);
    friend ULaurent operator*(const ULaurent& a, const ULaurent& b);
    ULaurent& operator+=(const ULaurent& o) { return *this = *this + o; }
    ULaurent& operator-=(const ULaurent& o) { return *this = *this - o; }
    ULaurent& operator*=(const ULaurent& o) { return *this = *this * o; }

    friend bool operator==(const ULaurent& a, const ULaurent& b) {
        return a.order_ == b.order_ && a.min_deg_ == b.min_deg_ && a.c_ == b.c_;
    }
    friend bool operator!=(const ULaurent& a, const ULaurent& b) { return !(a == b); }

    ULaurent shifted_u(int k) const; // * u^k
    ULaurent scaled(const TruncSeries& s) const;
    ULaurent truncated(int new_order) const;

    // {u^{>=0}} part and its complement {u^{<0}}
    ULaurent project_nonneg_u() const;
    ULaurent project_neg_u() const;

    // substitute a rational for u; negative exponents require u != 0
    TruncSeries eval_u(const Rat& u) const;
    TruncSeries eval_u1() const; // sum of all u-coefficients

    ULaurent evaluate_v(const Rat& v) const;

    std::string str() const;

private:
    void normalize();
    int order_ = 0;
    int min_deg_ = 0;
    std::vector<TruncSeries> c_;
};

ULaurent ulaurent_mul(const ULaurent& a, const ULaurent& b);

bool agree_to_order(const ULaurent& a, const ULaurent& b, int order);

// A t-slice of a Laurent object: dense u-coefficients, VPoly entries.
struct ULayer {
    int min_deg = 0;
    std::vector<VPoly> c;

    bool is_zero() const;
    VPoly coeff(int k) const;
    void add_shifted(const ULayer& o, int u_shift, const VPoly& scale);
    void drop_negative();
};

// decompose into t-slices (index = t-exponent, length = order)
std::vector<ULayer> to_layers(const ULaurent& a);
ULaurent from_layers(const std::vector<ULayer>& layers, int order);

} // namespace kernelpath

#endif
