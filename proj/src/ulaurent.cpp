#include "kernelpath/ulaurent.hpp"

#include "kernelpath/errors.hpp"

#include <algorithm>
#include <sstream>

namespace kernelpath {

ULaurent::ULaurent(int min_deg, std::vector<TruncSeries> coeffs) : min_deg_(min_deg), c_(std::move(coeffs)) {
    order_ = c_.empty() ? 0 : c_.front().order();
    for (auto& s : c_) order_ = std::min(order_, s.order());
    for (auto& s : c_) s = s.truncated(order_);
    normalize();
}

ULaurent ULaurent::constant(const TruncSeries& s) { return term(0, s); }

ULaurent ULaurent::u_power(int k, int order) { return term(k, TruncSeries::one(order)); }

ULaurent ULaurent::term(int k, const TruncSeries& coef) {
    ULaurent r(coef.order());
    if (!coef.is_zero()) {
        r.min_deg_ = k;
        r.c_.push_back(coef);
    }
    return r;
}

void ULaurent::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        min_deg_ += static_cast<int>(lead);
    }
    if (c_.empty()) min_deg_ = 0;
}

TruncSeries ULaurent::coeff_u(int k) const {
    int idx = k - min_deg_;
    if (idx < 0 || static_cast<size_t>(idx) >= c_.size()) return TruncSeries(order_);
    return c_[static_cast<size_t>(idx)];
}

ULaurent ULaurent::operator-() const {
    ULaurent r(*this);
    for (auto& s : r.c_) s = -s;
    return r;
}

ULaurent operator+(const ULaurent& a, const ULaurent& b) {
    if (a.is_zero()) return b.truncated(std::min(a.order_, b.order_));
    if (b.is_zero()) return a.truncated(std::min(a.order_, b.order_));
    int order = std::min(a.order_, b.order_);
    int lo = std::min(a.min_deg_, b.min_deg_);
    int hi = std::max(a.max_deg(), b.max_deg());
    std::vector<TruncSeries> c;
    c.reserve(static_cast<size_t>(hi - lo + 1));
    for (int k = lo; k <= hi; ++k) c.push_back((a.coeff_u(k) + b.coeff_u(k)).truncated(order));
    return ULaurent(lo, std::move(c));
}

ULaurent operator-(const ULaurent& a, const ULaurent& b) { return a + (-b); }

ULaurent operator*(const ULaurent& a, const ULaurent& b) {
    int order = std::min(a.order_, b.order_);
    if (a.is_zero() || b.is_zero()) return ULaurent::zero(order);
    int lo = a.min_deg_ + b.min_deg_;
    int hi = a.max_deg() + b.max_deg();
    std::vector<TruncSeries> c(static_cast<size_t>(hi - lo + 1), TruncSeries(order));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            c[i + j] += (a.c_[i] * b.c_[j]).truncated(order);
        }
    }
    return ULaurent(lo, std::move(c));
}

ULaurent ulaurent_mul(const ULaurent& a, const ULaurent& b) { return a * b; }

ULaurent ULaurent::shifted_u(int k) const {
    ULaurent r(*this);
    if (!r.c_.empty()) r.min_deg_ += k;
    return r;
}

ULaurent ULaurent::scaled(const TruncSeries& s) const {
    ULaurent r(std::min(order_, s.order()));
    if (s.is_zero() || is_zero()) return r;
    std::vector<TruncSeries> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back((x * s).truncated(r.order_));
    return ULaurent(min_deg_, std::move(c));
}

ULaurent ULaurent::truncated(int new_order) const {
    if (new_order >= order_) return *this;
    std::vector<TruncSeries> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x.truncated(new_order));
    ULaurent r(min_deg_, std::move(c));
    r.order_ = new_order;
    return r;
}

ULaurent ULaurent::project_nonneg_u() const {
    if (min_deg_ >= 0) return *this;
    std::vector<TruncSeries> c;
    for (int k = 0; k <= max_deg(); ++k) c.push_back(coeff_u(k));
    ULaurent r(0, std::move(c));
    r.order_ = order_;
    return r;
}

ULaurent ULaurent::project_neg_u() const {
    if (is_zero() || min_deg_ >= 0) return ULaurent::zero(order_);
    std::vector<TruncSeries> c;
    for (int k = min_deg_; k < 0; ++k) c.push_back(coeff_u(k));
    return ULaurent(min_deg_, std::move(c));
}

TruncSeries ULaurent::eval_u(const Rat& u) const {
    if (u == 0) {
        if (min_deg_ < 0) throw InvalidConfig("cannot evaluate negative u-powers at u = 0");
        return coeff_u(0);
    }
    TruncSeries acc(order_);
    Rat p(1);
    for (int k = 0; k < min_deg_; ++k) p *= u;
    for (int k = min_deg_; k < 0; ++k) p /= u; // u^{min_deg} for negative min_deg
    for (const auto& s : c_) {
        acc += s.scaled(VPoly(p));
        p *= u;
    }
    return acc;
}

TruncSeries ULaurent::eval_u1() const {
    TruncSeries acc(order_);
    for (const auto& s : c_) acc += s;
    return acc;
}

ULaurent ULaurent::evaluate_v(const Rat& v) const {
    std::vector<TruncSeries> c;
    c.reserve(c_.size());
    for (const auto& s : c_) c.push_back(s.evaluate_v(v));
    ULaurent r(min_deg_, std::move(c));
    r.order_ = order_;
    r.normalize();
    return r;
}

bool agree_to_order(const ULaurent& a, const ULaurent& b, int order) {
    int lo = std::min(a.min_deg(), b.min_deg());
    int hi = std::max(a.max_deg(), b.max_deg());
    for (int k = lo; k <= hi; ++k)
        if (!agree_to_order(a.coeff_u(k), b.coeff_u(k), order)) return false;
    return true;
}

std::string ULaurent::str() const {
    if (is_zero()) return "0 + O(t^" + std::to_string(order_) + ")";
    std::ostringstream out;
    bool first = true;
    for (int k = min_deg_; k <= max_deg(); ++k) {
        TruncSeries s = coeff_u(k);
        if (s.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        std::string body = s.str();
        body = body.substr(0, body.rfind(" + O("));
        if (k == 0) {
            out << "(" << body << ")";
        } else {
            out << "(" << body << ")*u";
            if (k != 1) out << "^" << k;
        }
    }
    out << " + O(t^" << order_ << ")";
    return out.str();
}

bool ULayer::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const VPoly& p) { return p.is_zero(); });
}

VPoly ULayer::coeff(int k) const {
    int idx = k - min_deg;
    if (idx < 0 || static_cast<size_t>(idx) >= c.size()) return VPoly();
    return c[static_cast<size_t>(idx)];
}

void ULayer::add_shifted(const ULayer& o, int u_shift, const VPoly& scale) {
    if (o.c.empty() || scale.is_zero()) return;
    int olo = o.min_deg + u_shift;
    int ohi = olo + static_cast<int>(o.c.size()) - 1;
    if (c.empty()) {
        min_deg = olo;
        c.assign(o.c.size(), VPoly());
    }
    int lo = std::min(min_deg, olo);
    int hi = std::max(min_deg + static_cast<int>(c.size()) - 1, ohi);
    if (lo < min_deg || hi >= min_deg + static_cast<int>(c.size())) {
        std::vector<VPoly> grown(static_cast<size_t>(hi - lo + 1));
        for (size_t i = 0; i < c.size(); ++i) grown[static_cast<size_t>(min_deg - lo) + i] = std::move(c[i]);
        c = std::move(grown);
        min_deg = lo;
    }
    bool scale_one = scale.is_one();
    for (size_t i = 0; i < o.c.size(); ++i) {
        if (o.c[i].is_zero()) continue;
        VPoly& dst = c[static_cast<size_t>(olo - min_deg) + i];
        if (scale_one)
            dst += o.c[i];
        else
            dst += o.c[i] * scale;
    }
}

void ULayer::drop_negative() {
    if (min_deg >= 0) return;
    int cut = std::min(static_cast<int>(c.size()), -min_deg);
    c.erase(c.begin(), c.begin() + cut);
    min_deg = 0;
}

std::vector<ULayer> to_layers(const ULaurent& a) {
    std::vector<ULayer> layers(static_cast<size_t>(a.order()));
    for (auto& l : layers) l.min_deg = a.min_deg();
    int width = a.is_zero() ? 0 : a.max_deg() - a.min_deg() + 1;
    for (auto& l : layers) l.c.assign(static_cast<size_t>(width), VPoly());
    for (int k = a.min_deg(); k <= a.max_deg(); ++k) {
        TruncSeries s = a.coeff_u(k);
        for (int n = 0; n < a.order(); ++n) layers[static_cast<size_t>(n)].c[static_cast<size_t>(k - a.min_deg())] = s.coeff(n);
    }
    return layers;
}

ULaurent from_layers(const std::vector<ULayer>& layers, int order) {
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto& l : layers) {
        for (size_t i = 0; i < l.c.size(); ++i) {
            if (l.c[i].is_zero()) continue;
            int k = l.min_deg + static_cast<int>(i);
            if (!any) {
                lo = hi = k;
                any = true;
            } else {
                lo = std::min(lo, k);
                hi = std::max(hi, k);
            }
        }
    }
    if (!any) return ULaurent::zero(order);
    std::vector<TruncSeries> c(static_cast<size_t>(hi - lo + 1), TruncSeries(order));
    for (size_t n = 0; n < layers.size() && static_cast<int>(n) < order; ++n) {
        const ULayer& l = layers[n];
        for (size_t i = 0; i < l.c.size(); ++i) {
            if (l.c[i].is_zero()) continue;
            c[static_cast<size_t>(l.min_deg + static_cast<int>(i) - lo)].set_coeff(static_cast<int>(n), l.c[i]);
        }
    }
    return ULaurent(lo, std::move(c));
}

} // namespace kernelpath
