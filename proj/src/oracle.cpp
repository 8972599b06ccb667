#include "kernelpath/oracle.hpp"

#include "kernelpath/errors.hpp"

#include <algorithm>

namespace kernelpath {

DPTable::DPTable(const Automaton& a, PathMode mode, int max_length) : max_length_(max_length), mode_(mode) {
    if (max_length < 0) throw InvalidConfig("negative path length");
    const StepSet& s = a.steps();
    int amp = 0;
    for (const auto& st : s.steps) amp = std::max(amp, std::abs(st.altitude));
    amp_ = amp * max_length;
    int width = 2 * amp_ + 1;
    int states = a.state_count();
    counts_.assign(static_cast<size_t>(max_length) + 1,
                   std::vector<std::vector<VPoly>>(static_cast<size_t>(width), std::vector<VPoly>(static_cast<size_t>(states))));
    counts_[0][static_cast<size_t>(amp_)][0] = VPoly(1L);

    for (int n = 0; n < max_length; ++n) {
        for (int alt = -amp_; alt <= amp_; ++alt) {
            if (mode == PathMode::Meander && alt < 0) continue;
            for (int state = 0; state < states; ++state) {
                const VPoly& src = counts_[static_cast<size_t>(n)][static_cast<size_t>(alt + amp_)][static_cast<size_t>(state)];
                if (src.is_zero()) continue;
                for (int step = 0; step < s.size(); ++step) {
                    auto tr = a.transition(state, step);
                    if (!tr) continue;
                    int n2 = n + s.at(step).length;
                    if (n2 > max_length) continue;
                    int alt2 = alt + s.at(step).altitude;
                    if (mode == PathMode::Meander && alt2 < 0) continue;
                    if (alt2 < -amp_ || alt2 > amp_) continue;
                    counts_[static_cast<size_t>(n2)][static_cast<size_t>(alt2 + amp_)][static_cast<size_t>(tr->target)]
                        .add_shifted(src, tr->marked ? 1 : 0);
                }
            }
        }
    }
}

VPoly DPTable::count(int length, int altitude, int state) const {
    if (length < 0 || length > max_length_) throw OutOfOrder("length outside table");
    if (altitude < -amp_ || altitude > amp_) return VPoly();
    return counts_[static_cast<size_t>(length)][static_cast<size_t>(altitude + amp_)][static_cast<size_t>(state)];
}

VPoly DPTable::at_altitude(int length, int altitude) const {
    if (length < 0 || length > max_length_) throw OutOfOrder("length outside table");
    if (altitude < -amp_ || altitude > amp_) return VPoly();
    VPoly acc;
    for (const auto& c : counts_[static_cast<size_t>(length)][static_cast<size_t>(altitude + amp_)]) acc += c;
    return acc;
}

VPoly DPTable::total(int length) const {
    if (length < 0 || length > max_length_) throw OutOfOrder("length outside table");
    VPoly acc;
    for (const auto& row : counts_[static_cast<size_t>(length)])
        for (const auto& c : row) acc += c;
    return acc;
}

std::vector<VPoly> DPTable::class_series(char cls) const {
    bool want_walk = cls == 'W' || cls == 'B';
    if (want_walk != (mode_ == PathMode::Walk))
        throw InvalidConfig("class does not match table mode");
    std::vector<VPoly> out;
    out.reserve(static_cast<size_t>(max_length_) + 1);
    for (int n = 0; n <= max_length_; ++n) {
        if (cls == 'W' || cls == 'M')
            out.push_back(total(n));
        else if (cls == 'B' || cls == 'E')
            out.push_back(at_altitude(n, 0));
        else
            throw InvalidConfig("unknown class");
    }
    return out;
}

DPTable dp_count(const Automaton& a, PathMode mode, int max_length) { return DPTable(a, mode, max_length); }

std::vector<PathRecord> enumerate_paths(const StepSet& s, int max_length) {
    if (max_length > 12) throw LimitExceeded("enumeration capped at total length 12");
    std::vector<PathRecord> out;
    PathRecord cur;
    // depth-first over words ordered by the step indices
    auto rec = [&](auto&& self) -> void {
        out.push_back(cur);
        for (int step = 0; step < s.size(); ++step) {
            const Step& st = s.at(step);
            if (cur.total_length + st.length > max_length) continue;
            PathRecord saved = cur;
            cur.steps.push_back(step);
            cur.total_length += st.length;
            cur.final_altitude += st.altitude;
            cur.min_altitude = std::min(cur.min_altitude, cur.final_altitude);
            self(self);
            cur = std::move(saved);
        }
    };
    rec(rec);
    return out;
}

bool contains_factor(const std::vector<int>& word, const std::vector<int>& pattern) {
    return count_factor_occurrences(word, pattern) > 0;
}

int count_factor_occurrences(const std::vector<int>& word, const std::vector<int>& pattern) {
    if (pattern.empty() || pattern.size() > word.size()) return 0;
    int n = 0;
    for (size_t i = 0; i + pattern.size() <= word.size(); ++i) {
        if (std::equal(pattern.begin(), pattern.end(), word.begin() + static_cast<long>(i))) ++n;
    }
    return n;
}

int count_ascents(const std::vector<int>& word, const StepSet& s) {
    int runs = 0;
    bool climbing = false;
    for (int step : word) {
        bool up = s.at(step).altitude > 0;
        if (up && !climbing) ++runs;
        climbing = up;
    }
    return runs;
}

std::vector<VPoly> excursion_distribution(const Automaton& a, int max_length) {
    const StepSet& s = a.steps();
    int states = a.state_count();
    int maxlen = std::max(1, s.max_length());
    int maxup = s.max_up();

    // steepest possible descent rate as a fraction drop_num/drop_den
    long drop_num = 0, drop_den = 1;
    for (const auto& st : s.steps) {
        if (st.altitude < 0 && static_cast<long>(-st.altitude) * drop_den > drop_num * st.length) {
            drop_num = -st.altitude;
            drop_den = st.length;
        }
    }
    auto bound = [&](int len) {
        long by_climb = static_cast<long>(maxup) * len;
        long by_return = (drop_num * (max_length - len)) / drop_den;
        return static_cast<int>(std::min(by_climb, by_return));
    };

    using Layer = std::vector<std::vector<VPoly>>; // [altitude][state]
    std::vector<Layer> ring(static_cast<size_t>(maxlen) + 1);
    auto slot = [&](int len) -> Layer& { return ring[static_cast<size_t>(len % (maxlen + 1))]; };
    for (int len = 0; len <= maxlen && len <= max_length; ++len)
        slot(len).assign(static_cast<size_t>(bound(len)) + 1, std::vector<VPoly>(static_cast<size_t>(states)));
    slot(0)[0][0] = VPoly(1L);

    std::vector<VPoly> h(static_cast<size_t>(max_length) + 1);
    for (int len = 0; len <= max_length; ++len) {
        Layer& cur = slot(len);
        for (int state = 0; state < states; ++state) h[static_cast<size_t>(len)] += cur[0][static_cast<size_t>(state)];

        int reuse = len + maxlen;
        if (reuse <= max_length && reuse > maxlen)
            slot(reuse).assign(static_cast<size_t>(bound(reuse)) + 1, std::vector<VPoly>(static_cast<size_t>(states)));

        int top = static_cast<int>(cur.size()) - 1;
        for (int alt = 0; alt <= top; ++alt) {
            for (int state = 0; state < states; ++state) {
                const VPoly& src = cur[static_cast<size_t>(alt)][static_cast<size_t>(state)];
                if (src.is_zero()) continue;
                for (int step = 0; step < s.size(); ++step) {
                    auto tr = a.transition(state, step);
                    if (!tr) continue;
                    int len2 = len + s.at(step).length;
                    if (len2 > max_length) continue;
                    int alt2 = alt + s.at(step).altitude;
                    Layer& dst = slot(len2);
                    if (alt2 < 0 || alt2 >= static_cast<int>(dst.size())) continue;
                    dst[static_cast<size_t>(alt2)][static_cast<size_t>(tr->target)].add_shifted(src, tr->marked ? 1 : 0);
                }
            }
        }
    }
    return h;
}

std::vector<Rat> first_passage_schroder_uf(int terms) {
    if (terms <= 0) return {};
    size_t n = static_cast<size_t>(terms);
    std::vector<Rat> f(n, Rat(0)), one(n, Rat(0));
    one[0] = 1;
    f[0] = 1;
    auto mul = [n](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> r(n, Rat(0));
        for (size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    };
    auto shift = [n](const std::vector<Rat>& a) {
        std::vector<Rat> r(n, Rat(0));
        for (size_t i = 0; i + 1 < n; ++i) r[i + 1] = a[i];
        return r;
    };
    for (int pass = 0; pass < terms; ++pass) {
        // F = 1 + 2xF + x(F - 1 - xF)F
        std::vector<Rat> inner(n, Rat(0));
        std::vector<Rat> xf = shift(f);
        for (size_t i = 0; i < n; ++i) inner[i] = f[i] - one[i] - xf[i];
        std::vector<Rat> prod = shift(mul(inner, f));
        std::vector<Rat> next(n, Rat(0));
        for (size_t i = 0; i < n; ++i) next[i] = one[i] + 2 * xf[i] + prod[i];
        if (next == f) break;
        f = std::move(next);
    }
    return f;
}

} // namespace kernelpath
