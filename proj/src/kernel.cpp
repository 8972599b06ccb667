#include "kernelpath/kernel.hpp"

#include "kernelpath/errors.hpp"

#include <unordered_map>

namespace kernelpath {

namespace {

// determinant of the submatrix formed by the last |cols| rows and the
// column set `cols` (bitmask); memoized over column sets
class MinorTable {
public:
    explicit MinorTable(const UMatrix& m) : m_(m), n_(m.dim) {}

    ULaurent det() { return minor_of(n_ == 32 ? ~0u : (1u << n_) - 1u); }

private:
    ULaurent minor_of(unsigned cols) {
        if (cols == 0) return ULaurent::u_power(0, m_.order);
        auto hit = memo_.find(cols);
        if (hit != memo_.end()) return hit->second;
        int size = __builtin_popcount(cols);
        int row = n_ - size;
        ULaurent acc = ULaurent::zero(m_.order);
        int sign = 1;
        for (int j = 0; j < n_; ++j) {
            if (!(cols & (1u << j))) continue;
            const ULaurent& entry = m_.at(row, j);
            if (!entry.is_zero()) {
                ULaurent sub = minor_of(cols & ~(1u << j));
                acc += (sign > 0) ? entry * sub : -(entry * sub);
            }
            sign = -sign;
        }
        memo_.emplace(cols, acc);
        return acc;
    }

    const UMatrix& m_;
    int n_;
    std::unordered_map<unsigned, ULaurent> memo_;
};

} // namespace

ULaurent determinant(const UMatrix& m) {
    if (m.dim > 24) throw InvalidConfig("determinant dimension limit exceeded");
    return MinorTable(m).det();
}

UMatrix adjugate(const UMatrix& m) {
    UMatrix r(m.dim, m.order);
    if (m.dim == 1) {
        r.at(0, 0) = ULaurent::u_power(0, m.order);
        return r;
    }
    for (int i = 0; i < m.dim; ++i) {
        for (int j = 0; j < m.dim; ++j) {
            UMatrix sub(m.dim - 1, m.order);
            for (int a = 0, ra = 0; a < m.dim; ++a) {
                if (a == i) continue;
                for (int b = 0, rb = 0; b < m.dim; ++b) {
                    if (b == j) continue;
                    sub.at(ra, rb) = m.at(a, b);
                    ++rb;
                }
                ++ra;
            }
            ULaurent c = determinant(sub);
            r.at(j, i) = ((i + j) % 2 == 0) ? c : -c; // transposed cofactor
        }
    }
    return r;
}

std::vector<ULaurent> autocorrelation_vector(const UMatrix& eye_minus_a) {
    UMatrix adj = adjugate(eye_minus_a);
    std::vector<ULaurent> v;
    v.reserve(static_cast<size_t>(adj.dim));
    for (int i = 0; i < adj.dim; ++i) {
        ULaurent acc = ULaurent::zero(adj.order);
        for (int j = 0; j < adj.dim; ++j) acc += adj.at(i, j);
        v.push_back(acc);
    }
    return v;
}

namespace {

// dense u-slices (min_deg 0) used by the lifting loop
using Slice = std::vector<VPoly>;

Slice conv(const Slice& a, const Slice& b) {
    Slice r;
    if (a.empty() || b.empty()) return r;
    r.assign(a.size() + b.size() - 1, VPoly());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

} // namespace

KernelData small_factor(const ULaurent& kernel) {
    KernelData kd;
    kd.kernel = kernel;
    int order = kernel.order();
    kd.c_K = kernel.min_deg() < 0 ? -kernel.min_deg() : 0;
    kd.e = kd.c_K;
    kd.cleared = kernel.shifted_u(kd.c_K);

    // the t = 0 slice of the cleared kernel must be exactly u^{c_K}
    for (int k = kd.cleared.min_deg(); k <= kd.cleared.max_deg(); ++k) {
        if (order == 0) break;
        VPoly head = kd.cleared.coeff_u(k).coeff(0);
        if (k == kd.c_K ? !head.is_one() : !head.is_zero())
            throw DegenerateKernel("kernel does not reduce to 1 at t = 0");
    }

    int e = kd.e;
    if (e == 0) {
        kd.small = ULaurent::u_power(0, order);
        kd.unit = kd.cleared;
        return kd;
    }

    int width = kd.cleared.max_deg() + 1; // u-degrees 0 .. width-1
    if (width <= e) width = e + 1;
    int uwidth = width - e;

    // t-slices of the cleared kernel
    std::vector<Slice> C(static_cast<size_t>(order), Slice(static_cast<size_t>(width)));
    for (int k = 0; k < width; ++k) {
        TruncSeries s = kd.cleared.coeff_u(k);
        for (int n = 0; n < order; ++n) C[static_cast<size_t>(n)][static_cast<size_t>(k)] = s.coeff(n);
    }

    std::vector<Slice> N(static_cast<size_t>(order), Slice(static_cast<size_t>(e)));
    std::vector<Slice> U(static_cast<size_t>(order), Slice(static_cast<size_t>(uwidth)));
    if (order > 0) U[0][0] = VPoly(1L);
    // N[0] is the zero slice: the t^0 part of the small factor is bare u^e.

    for (int k = 1; k < order; ++k) {
        Slice R = C[static_cast<size_t>(k)];
        for (int i = 1; i < k; ++i) {
            Slice prod = conv(N[static_cast<size_t>(i)], U[static_cast<size_t>(k - i)]);
            for (size_t d = 0; d < prod.size() && d < R.size(); ++d) R[d] -= prod[d];
            for (size_t d = R.size(); d < prod.size(); ++d)
                if (!prod[d].is_zero()) throw InvariantViolation("lift correction exceeds kernel degree");
        }
        // u^e * U_k contribution sits at degrees >= e, N_k below
        for (int d = 0; d < e; ++d) N[static_cast<size_t>(k)][static_cast<size_t>(d)] = R[static_cast<size_t>(d)];
        for (int d = e; d < width; ++d) U[static_cast<size_t>(k)][static_cast<size_t>(d - e)] = R[static_cast<size_t>(d)];
    }

    auto assemble = [order](const std::vector<Slice>& slices, int width_, int monic_deg) {
        std::vector<TruncSeries> coeffs(static_cast<size_t>(std::max(width_, monic_deg + 1)), TruncSeries(order));
        for (int n = 0; n < order; ++n)
            for (int d = 0; d < width_; ++d)
                if (!slices[static_cast<size_t>(n)][static_cast<size_t>(d)].is_zero())
                    coeffs[static_cast<size_t>(d)].set_coeff(n, slices[static_cast<size_t>(n)][static_cast<size_t>(d)]);
        if (monic_deg >= 0 && order > 0) {
            TruncSeries lead = coeffs[static_cast<size_t>(monic_deg)];
            lead.set_coeff(0, VPoly(1L));
            coeffs[static_cast<size_t>(monic_deg)] = lead;
        }
        return ULaurent(0, std::move(coeffs));
    };

    kd.small = assemble(N, e, e);
    kd.unit = assemble(U, uwidth, -1);
    return kd;
}

ULaurent divide_unit_t(const ULaurent& num, const ULaurent& den) {
    int order = std::min(num.order(), den.order());
    if (order == 0) return ULaurent::zero(0);
    std::vector<ULayer> d = to_layers(den.truncated(order));
    for (size_t i = 0; i < d[0].c.size(); ++i) {
        int deg = d[0].min_deg + static_cast<int>(i);
        if (deg == 0 ? !d[0].c[i].is_one() : !d[0].c[i].is_zero())
            throw NotAUnit("denominator t^0 slice is not the constant 1");
    }
    std::vector<ULayer> n = to_layers(num.truncated(order));
    std::vector<ULayer> q(static_cast<size_t>(order));
    for (int k = 0; k < order; ++k) {
        ULayer acc = n[static_cast<size_t>(k)];
        for (int m = 1; m <= k; ++m) {
            const ULayer& dm = d[static_cast<size_t>(m)];
            const ULayer& qk = q[static_cast<size_t>(k - m)];
            if (dm.is_zero() || qk.is_zero()) continue;
            for (size_t i = 0; i < dm.c.size(); ++i) {
                if (dm.c[i].is_zero()) continue;
                acc.add_shifted(qk, dm.min_deg + static_cast<int>(i), -dm.c[i]);
            }
        }
        q[static_cast<size_t>(k)] = std::move(acc);
    }
    return from_layers(q, order);
}

ULaurent divide_exact_monic_u(const ULaurent& num, const ULaurent& monic) {
    int order = std::min(num.order(), monic.order());
    if (monic.is_zero() || monic.min_deg() < 0) throw InvalidConfig("divisor must be a polynomial in u");
    int e = monic.max_deg();
    {
        TruncSeries lead = monic.coeff_u(e);
        if (order > 0 && !lead.coeff(0).is_one()) throw InvalidConfig("divisor is not monic in u");
        for (int k = 1; k < order; ++k)
            if (!lead.coeff(k).is_zero()) throw InvalidConfig("divisor is not monic in u");
    }
    if (num.is_zero()) return ULaurent::zero(order);
    if (num.min_deg() < 0) throw InvalidConfig("dividend must be a polynomial in u");

    int top = num.max_deg();
    std::vector<TruncSeries> r;
    r.reserve(static_cast<size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) r.push_back(num.coeff_u(k).truncated(order));

    if (top < e) {
        for (const auto& s : r)
            if (!s.is_zero()) throw NonzeroRemainder("dividend degree below divisor degree");
        return ULaurent::zero(order);
    }

    std::vector<TruncSeries> q(static_cast<size_t>(top - e) + 1, TruncSeries(order));
    for (int d = top; d >= e; --d) {
        TruncSeries qc = r[static_cast<size_t>(d)];
        q[static_cast<size_t>(d - e)] = qc;
        if (qc.is_zero()) continue;
        for (int j = 0; j < e; ++j) {
            TruncSeries nj = monic.coeff_u(j).truncated(order);
            if (nj.is_zero()) continue;
            r[static_cast<size_t>(d - e + j)] -= qc * nj;
        }
        r[static_cast<size_t>(d)] = TruncSeries(order);
    }
    for (int j = 0; j < e; ++j)
        if (!r[static_cast<size_t>(j)].is_zero()) throw NonzeroRemainder("nonzero remainder in u-division");
    return ULaurent(0, std::move(q));
}

KernelSystem analyze_kernel(const UMatrix& a) {
    KernelSystem ks{UMatrix::identity(a.dim, a.order) - a, ULaurent::zero(a.order), UMatrix(a.dim, a.order), {}, {}};
    ks.kernel = determinant(ks.eye_minus_a);
    ks.adjug = adjugate(ks.eye_minus_a);
    ks.autocorr.reserve(static_cast<size_t>(a.dim));
    for (int i = 0; i < a.dim; ++i) {
        ULaurent acc = ULaurent::zero(a.order);
        for (int j = 0; j < a.dim; ++j) acc += ks.adjug.at(i, j);
        ks.autocorr.push_back(acc);
    }
    ks.factor = small_factor(ks.kernel);
    return ks;
}

} // namespace kernelpath
