#include "kernelpath/gf.hpp"

#include "kernelpath/errors.hpp"

namespace kernelpath {

namespace {

struct Term {
    int t_exp;
    int u_exp;
    VPoly weight;
};

// sparse view of the adjacency matrix: terms[i][j] drives i -> j flow;
// a t^0 term would make the fixed point self-referential, so reject it
std::vector<std::vector<std::vector<Term>>> term_table(const UMatrix& a) {
    std::vector<std::vector<std::vector<Term>>> terms(
        static_cast<size_t>(a.dim), std::vector<std::vector<Term>>(static_cast<size_t>(a.dim)));
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            const ULaurent& entry = a.at(i, j);
            for (int k = entry.min_deg(); k <= entry.max_deg(); ++k) {
                TruncSeries s = entry.coeff_u(k);
                for (int m = 0; m < s.order(); ++m) {
                    if (s.coeff(m).is_zero()) continue;
                    if (m == 0) throw DegenerateKernel("adjacency entry with a t^0 term");
                    terms[static_cast<size_t>(i)][static_cast<size_t>(j)].push_back({m, k, s.coeff(m)});
                }
            }
        }
    return terms;
}

std::vector<ULaurent> iterate_vector(const UMatrix& a, int order, bool drop_negative) {
    auto terms = term_table(a);
    size_t dim = static_cast<size_t>(a.dim);
    std::vector<std::vector<ULayer>> layers(dim, std::vector<ULayer>(static_cast<size_t>(order)));
    if (order > 0) layers[0][0] = ULayer{0, {VPoly(1L)}};
    for (int n = 1; n < order; ++n) {
        for (size_t j = 0; j < dim; ++j) {
            ULayer acc;
            for (size_t i = 0; i < dim; ++i) {
                for (const Term& tm : terms[i][j]) {
                    if (tm.t_exp > n) continue;
                    acc.add_shifted(layers[i][static_cast<size_t>(n - tm.t_exp)], tm.u_exp, tm.weight);
                }
            }
            if (drop_negative) acc.drop_negative();
            layers[j][static_cast<size_t>(n)] = std::move(acc);
        }
    }
    std::vector<ULaurent> out;
    out.reserve(dim);
    for (size_t j = 0; j < dim; ++j) out.push_back(from_layers(layers[j], order));
    return out;
}

} // namespace

std::vector<ULaurent> iterate_walks(const UMatrix& a, int order) { return iterate_vector(a, order, false); }

std::vector<ULaurent> iterate_meanders(const UMatrix& a, int order) { return iterate_vector(a, order, true); }

ULaurent closed_form_walks(const KernelSystem& ks) {
    ULaurent num = ULaurent::zero(ks.kernel.order());
    for (int j = 0; j < ks.adjug.dim; ++j) num += ks.adjug.at(0, j);
    return divide_unit_t(num, ks.kernel);
}

BoundaryData boundary_data(const UMatrix& a, const KernelSystem& ks, const std::vector<ULaurent>& meander_vector) {
    if (static_cast<int>(meander_vector.size()) != a.dim) throw InvalidConfig("meander vector has wrong dimension");
    BoundaryData bd{{}, ULaurent(0), ULaurent(0)};
    int order = ks.kernel.order();
    bd.forbidden.reserve(static_cast<size_t>(a.dim));
    for (int j = 0; j < a.dim; ++j) {
        ULaurent ma = ULaurent::zero(order);
        for (int i = 0; i < a.dim; ++i) ma += meander_vector[static_cast<size_t>(i)] * a.at(i, j);
        ULaurent f = -(ma.project_neg_u());
        if (j == 0) f += ULaurent::u_power(0, order);
        bd.forbidden.push_back(f);
    }
    ULaurent fv = ULaurent::zero(order);
    for (int j = 0; j < a.dim; ++j) fv += bd.forbidden[static_cast<size_t>(j)] * ks.autocorr[static_cast<size_t>(j)];
    bd.phi = fv.shifted_u(ks.factor.e);
    if (bd.phi.min_deg() < 0)
        throw InvariantViolation("boundary polynomial has negative u-exponents");
    bd.g = divide_exact_monic_u(bd.phi, ks.factor.small);
    return bd;
}

ULaurent closed_form_meanders(const KernelSystem& ks, const BoundaryData& bd) {
    ULaurent m = divide_unit_t(bd.g, ks.factor.unit);
    if (m.min_deg() < 0) throw InvariantViolation("meander series has negative u-exponents");
    return m;
}

GFBundle iterate_bundle(const UMatrix& a, int order) {
    GFBundle b;
    b.order = order;
    b.walk_vector = iterate_walks(a, order);
    b.meander_vector = iterate_meanders(a, order);
    b.W = ULaurent::zero(order);
    for (const auto& w : b.walk_vector) b.W += w;
    b.M = ULaurent::zero(order);
    for (const auto& m : b.meander_vector) b.M += m;
    b.B = b.W.coeff_u(0);
    b.E = b.M.eval_u(Rat(0));
    return b;
}

VPoly distribution_table(const TruncSeries& series, int n) {
    return series.coeff(n); // OutOfOrder beyond the truncation
}

TruncSeries substitute_semilength(const TruncSeries& series) {
    int order = series.order();
    TruncSeries out((order + 1) / 2);
    for (int k = 0; k < order; ++k) {
        if (k % 2 == 1) {
            if (!series.coeff(k).is_zero())
                throw OddCoefficientPresent("odd t-coefficient at index " + std::to_string(k));
        } else {
            out.set_coeff(k / 2, series.coeff(k));
        }
    }
    return out;
}

} // namespace kernelpath
