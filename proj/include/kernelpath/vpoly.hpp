#ifndef KERNELPATH_VPOLY_HPP
#define KERNELPATH_VPOLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kernelpath {

using Int = mpz_class;
using Rat = mpq_class;

// Polynomial in the single mark variable v with rational coefficients.
// Canonical form: no trailing zero coefficients, so equality is equality
// of the coefficient vectors. The zero polynomial has an empty vector.
class VPoly {
public:
    VPoly() = default;
    VPoly(long value);               // NOLINT: implicit for literals
    VPoly(const Rat& value);         // NOLINT: implicit for scalars
    explicit VPoly(std::vector<Rat> coeffs);

    static VPoly variable();                       // v
    static VPoly monomial(int k, const Rat& coef); // coef * v^k

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const;
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    Rat coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    VPoly& operator+=(const VPoly& o);
    VPoly& operator-=(const VPoly& o);
    VPoly& operator*=(const VPoly& o);
    VPoly& operator*=(const Rat& s);
    VPoly operator-() const;

    friend VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
    friend VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
    friend VPoly operator*(const VPoly& a, const VPoly& b);
    friend VPoly operator*(VPoly a, const Rat& s) { return a *= s; }
    friend bool operator==(const VPoly& a, const VPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const VPoly& a, const VPoly& b) { return !(a == b); }

    // add o * v^shift in place; the workhorse of the enumeration DP
    void add_shifted(const VPoly& o, int shift);

    VPoly shifted(int k) const; // * v^k, k >= 0
    VPoly truncated(int max_deg) const;

    Rat eval(const Rat& v) const;
    Rat eval_one() const; // sum of coefficients

    // sum_i i(i-1)...(i-r+1) c_i; r = 0 gives eval_one()
    Rat factorial_moment_sum(int r) const;

    // inverse in Q[v]/(v^{order}); requires nonzero constant term
    VPoly inverse_mod(int order) const;

    std::string str(const std::string& var = "v") const;

private:
    void strip();
    std::vector<Rat> c_;
};

std::string rat_str(const Rat& q);

} // namespace kernelpath

#endif
