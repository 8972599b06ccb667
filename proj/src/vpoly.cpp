#include "kernelpath/vpoly.hpp"

#include "kernelpath/errors.hpp"

#include <sstream>

namespace kernelpath {

VPoly::VPoly(long value) {
    if (value != 0) c_.emplace_back(value);
}

VPoly::VPoly(const Rat& value) {
    if (value != 0) c_.push_back(value);
}

VPoly::VPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { strip(); }

VPoly VPoly::variable() { return monomial(1, Rat(1)); }

VPoly VPoly::monomial(int k, const Rat& coef) {
    VPoly p;
    if (coef != 0) {
        p.c_.assign(static_cast<size_t>(k) + 1, Rat(0));
        p.c_[static_cast<size_t>(k)] = coef;
    }
    return p;
}

bool VPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rat VPoly::coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= c_.size()) return Rat(0);
    return c_[static_cast<size_t>(k)];
}

void VPoly::strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

VPoly& VPoly::operator+=(const VPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    strip();
    return *this;
}

VPoly& VPoly::operator-=(const VPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    strip();
    return *this;
}

VPoly operator*(const VPoly& a, const VPoly& b) {
    VPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.strip();
    return r;
}

VPoly& VPoly::operator*=(const VPoly& o) {
    *this = *this * o;
    return *this;
}

VPoly& VPoly::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

VPoly VPoly::operator-() const {
    VPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

void VPoly::add_shifted(const VPoly& o, int shift) {
    if (o.is_zero()) return;
    size_t need = o.c_.size() + static_cast<size_t>(shift);
    if (need > c_.size()) c_.resize(need, Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i + static_cast<size_t>(shift)] += o.c_[i];
    strip();
}

VPoly VPoly::shifted(int k) const {
    VPoly r;
    r.add_shifted(*this, k);
    return r;
}

VPoly VPoly::truncated(int max_deg) const {
    VPoly r(*this);
    if (max_deg < 0) return VPoly();
    if (r.c_.size() > static_cast<size_t>(max_deg) + 1) r.c_.resize(static_cast<size_t>(max_deg) + 1);
    r.strip();
    return r;
}

Rat VPoly::eval(const Rat& v) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
}

Rat VPoly::eval_one() const {
    Rat acc(0);
    for (const auto& x : c_) acc += x;
    return acc;
}

Rat VPoly::factorial_moment_sum(int r) const {
    Rat acc(0);
    for (size_t i = 0; i < c_.size(); ++i) {
        Rat f(1);
        for (int j = 0; j < r; ++j) f *= Rat(static_cast<long>(i) - j);
        acc += f * c_[i];
    }
    return acc;
}

VPoly VPoly::inverse_mod(int order) const {
    if (is_zero() || c_[0] == 0) throw NotAUnit("constant term in v vanishes");
    if (order <= 0) return VPoly();
    std::vector<Rat> inv(static_cast<size_t>(order), Rat(0));
    Rat lead = 1 / c_[0];
    inv[0] = lead;
    for (int k = 1; k < order; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j) acc += coeff(j) * inv[static_cast<size_t>(k - j)];
        inv[static_cast<size_t>(k)] = -lead * acc;
    }
    return VPoly(std::move(inv));
}

std::string rat_str(const Rat& q) {
    Rat canon(q);
    canon.canonicalize();
    if (canon.get_den() == 1) return canon.get_num().get_str();
    return canon.get_num().get_str() + "/" + canon.get_den().get_str();
}

std::string VPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Rat& q = c_[i];
        if (q == 0) continue;
        Rat a = q > 0 ? q : Rat(-q);
        if (first) {
            if (q < 0) out << "-";
            first = false;
        } else {
            out << (q < 0 ? " - " : " + ");
        }
        bool unit = (a == 1) && i > 0;
        if (!unit) out << rat_str(a);
        if (i >= 1) {
            out << var;
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace kernelpath
