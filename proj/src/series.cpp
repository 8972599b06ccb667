#include "kernelpath/series.hpp"

#include "kernelpath/errors.hpp"

#include <algorithm>
#include <sstream>

namespace kernelpath {

TruncSeries::TruncSeries(int order) : order_(order) {
    if (order < 0) throw InvalidConfig("series order must be non-negative");
    c_.assign(static_cast<size_t>(order), VPoly());
}

TruncSeries::TruncSeries(int order, std::vector<VPoly> coeffs) : TruncSeries(order) {
    if (coeffs.size() > static_cast<size_t>(order)) throw InvalidConfig("coefficient list longer than order");
    std::move(coeffs.begin(), coeffs.end(), c_.begin());
}

TruncSeries TruncSeries::constant(const VPoly& value, int order) {
    TruncSeries s(order);
    if (order > 0) s.c_[0] = value;
    return s;
}

TruncSeries TruncSeries::t_power(int k, int order) {
    TruncSeries s(order);
    if (k >= 0 && k < order) s.c_[static_cast<size_t>(k)] = VPoly(1L);
    return s;
}

TruncSeries TruncSeries::from_terms(std::initializer_list<std::pair<int, VPoly>> terms, int order) {
    TruncSeries s(order);
    for (const auto& [k, p] : terms) {
        if (k >= 0 && k < order) s.c_[static_cast<size_t>(k)] += p;
    }
    return s;
}

const VPoly& TruncSeries::coeff(int k) const {
    if (k < 0 || k >= order_) throw OutOfOrder("coefficient index beyond truncation order");
    return c_[static_cast<size_t>(k)];
}

void TruncSeries::set_coeff(int k, VPoly value) {
    if (k < 0 || k >= order_) throw OutOfOrder("coefficient index beyond truncation order");
    c_[static_cast<size_t>(k)] = std::move(value);
}

bool TruncSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const VPoly& p) { return p.is_zero(); });
}

int TruncSeries::valuation() const {
    for (int k = 0; k < order_; ++k)
        if (!c_[static_cast<size_t>(k)].is_zero()) return k;
    return order_;
}

TruncSeries TruncSeries::truncated(int new_order) const {
    if (new_order >= order_) return *this;
    TruncSeries s(new_order);
    std::copy(c_.begin(), c_.begin() + new_order, s.c_.begin());
    return s;
}

TruncSeries TruncSeries::shifted_t(int k) const {
    TruncSeries s(order_);
    for (int i = 0; i + k < order_; ++i) {
        if (i + k >= 0) s.c_[static_cast<size_t>(i + k)] = c_[static_cast<size_t>(i)];
    }
    return s;
}

TruncSeries TruncSeries::divided_by_t(int k) const {
    if (k < 0 || k > order_) throw InvalidConfig("bad t-division exponent");
    for (int i = 0; i < k; ++i)
        if (!c_[static_cast<size_t>(i)].is_zero())
            throw NonzeroRemainder("series is not divisible by t^" + std::to_string(k));
    TruncSeries s(order_ - k);
    for (int i = 0; i < s.order_; ++i) s.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i + k)];
    return s;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries s(*this);
    for (auto& p : s.c_) p = -p;
    return s;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries s(std::min(a.order_, b.order_));
    for (int k = 0; k < s.order_; ++k) s.c_[static_cast<size_t>(k)] = a.c_[static_cast<size_t>(k)] + b.c_[static_cast<size_t>(k)];
    return s;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries s(std::min(a.order_, b.order_));
    for (int k = 0; k < s.order_; ++k) s.c_[static_cast<size_t>(k)] = a.c_[static_cast<size_t>(k)] - b.c_[static_cast<size_t>(k)];
    return s;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries s(std::min(a.order_, b.order_));
    for (int i = 0; i < s.order_; ++i) {
        const VPoly& ai = a.c_[static_cast<size_t>(i)];
        if (ai.is_zero()) continue;
        for (int j = 0; i + j < s.order_; ++j) {
            const VPoly& bj = b.c_[static_cast<size_t>(j)];
            if (bj.is_zero()) continue;
            s.c_[static_cast<size_t>(i + j)] += ai * bj;
        }
    }
    return s;
}

TruncSeries TruncSeries::scaled(const VPoly& s) const {
    TruncSeries r(order_);
    if (s.is_zero()) return r;
    for (int k = 0; k < order_; ++k) r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)] * s;
    return r;
}

TruncSeries TruncSeries::evaluate_v(const Rat& v) const {
    TruncSeries r(order_);
    for (int k = 0; k < order_; ++k) r.c_[static_cast<size_t>(k)] = VPoly(c_[static_cast<size_t>(k)].eval(v));
    return r;
}

TruncSeries series_invert(const TruncSeries& a, int v_order) {
    int n = a.order();
    if (n == 0) return TruncSeries(0);
    const VPoly& head = a.coeff(0);
    VPoly head_inv;
    bool truncate_v = false;
    if (!head.is_zero() && head.is_constant()) {
        head_inv = VPoly(Rat(1) / head.coeff(0));
    } else if (v_order > 0 && head.coeff(0) != 0) {
        head_inv = head.inverse_mod(v_order);
        truncate_v = true;
    } else {
        throw NotAUnit("t^0 coefficient is not invertible");
    }
    TruncSeries inv(n);
    inv.set_coeff(0, head_inv);
    for (int k = 1; k < n; ++k) {
        VPoly acc;
        for (int j = 1; j <= k; ++j) acc += a.coeff(j) * inv.coeff(k - j);
        VPoly next = -(head_inv * acc);
        if (truncate_v) next = next.truncated(v_order - 1);
        inv.set_coeff(k, std::move(next));
    }
    return inv;
}

std::vector<VPoly> series_prefix(const TruncSeries& a, int count) {
    if (count > a.order()) throw OutOfOrder("requested more coefficients than the truncation order holds");
    std::vector<VPoly> out;
    out.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) out.push_back(a.coeff(k));
    return out;
}

bool agree_to_order(const TruncSeries& a, const TruncSeries& b, int order) {
    if (a.order() < order || b.order() < order) return false;
    for (int k = 0; k < order; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

std::string TruncSeries::str(const std::string& tvar) const {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < order_; ++k) {
        const VPoly& p = c_[static_cast<size_t>(k)];
        if (p.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        bool wrap = !p.is_constant() || (k > 0 && !p.is_one());
        if (k == 0) {
            out << (p.is_constant() ? p.str() : "(" + p.str() + ")");
        } else {
            if (wrap)
                out << "(" << p.str() << ")*";
            else if (!p.is_one())
                out << p.str() << "*";
            out << tvar;
            if (k > 1) out << "^" << k;
        }
    }
    if (first) out << "0";
    out << " + O(" << tvar << "^" << order_ << ")";
    return out.str();
}

} // namespace kernelpath
