#include "kernelpath/asymptotics.hpp"

#include "kernelpath/decimal.hpp"
#include "kernelpath/errors.hpp"

namespace kernelpath {

Moments exact_moments(const VPoly& h) {
    const Rat total = h.eval_one();
    if (total == 0) throw EmptyClass("moment of an empty class");
    const Rat f1 = h.factorial_moment_sum(1) / total;
    const Rat f2 = h.factorial_moment_sum(2) / total;
    Moments m;
    m.mean = f1;
    m.variance = f2 + f1 - f1 * f1;
    return m;
}

std::vector<MomentRow> moment_table(const std::vector<VPoly>& dists) {
    std::vector<MomentRow> rows;
    for (std::size_t n = 0; n < dists.size(); ++n) {
        if (dists[n].eval_one() == 0) continue;
        const Moments m = exact_moments(dists[n]);
        rows.push_back({static_cast<int>(n), m.mean, m.variance});
    }
    return rows;
}

RhoEstimate estimate_rho(const std::vector<Rat>& coeffs) {
    // Longest all-nonzero suffix.
    std::size_t start = coeffs.size();
    while (start > 0 && coeffs[start - 1] != 0) --start;
    const std::size_t tail = coeffs.size() - start;
    if (tail < 50)
        throw InsufficientData("estimate_rho: need a trailing run of at least 50 nonzero coefficients");

    // Ratios r_n = a_n / a_{n+1}, indexed by the absolute position n.
    std::vector<int> idx;
    std::vector<Rat> level;
    for (std::size_t n = start; n + 1 < coeffs.size(); ++n) {
        idx.push_back(static_cast<int>(n));
        level.push_back(coeffs[n] / coeffs[n + 1]);
    }
    RhoEstimate est;
    est.raw_ratio = level.back();

    // Richardson: t_n^(k) = ((n+k) t_{n+1}^(k-1) - n t_n^(k-1)) / k kills the
    // leading 1/n correction term at each level.
    for (int k = 1; k <= 2; ++k) {
        std::vector<Rat> next;
        for (std::size_t i = 0; i + 1 < level.size(); ++i) {
            const Rat n(idx[i]);
            next.push_back(((n + k) * level[i + 1] - n * level[i]) / Rat(k));
        }
        level = std::move(next);
        idx.pop_back();
    }
    if (level.empty()) throw InsufficientData("estimate_rho: ratio table too short after acceleration");
    est.value = level.back();
    return est;
}

SlopeEstimate estimate_slopes(const std::vector<MomentRow>& table) {
    if (table.empty() || table.back().n < 200)
        throw InsufficientData("estimate_slopes: table must reach size 200");
    const int top = table.back().n;
    const int cutoff = top - top / 10;  // rows with n > cutoff form the top decile

    Rat mean_sum(0), var_sum(0);
    long count = 0;
    for (std::size_t i = 1; i < table.size(); ++i) {
        if (table[i].n <= cutoff) continue;
        if (table[i - 1].n != table[i].n - 1)
            throw InsufficientData("estimate_slopes: gap in the top decile of the moment table");
        mean_sum += table[i].mean - table[i - 1].mean;
        var_sum += table[i].variance - table[i - 1].variance;
        ++count;
    }
    if (count == 0) throw InsufficientData("estimate_slopes: empty top decile");
    SlopeEstimate s;
    s.mean_slope = mean_sum / Rat(count);
    s.variance_slope = var_sum / Rat(count);
    return s;
}

Rat normality_diagnostic(const VPoly& h) {
    const Rat total = h.eval_one();
    if (total == 0) throw EmptyClass("skewness of an empty class");
    const Rat f1 = h.factorial_moment_sum(1) / total;
    const Rat f2 = h.factorial_moment_sum(2) / total;
    const Rat f3 = h.factorial_moment_sum(3) / total;
    const Rat m1 = f1;
    const Rat m2 = f2 + f1;
    const Rat m3 = f3 + 3 * f2 + f1;
    const Rat var = m2 - m1 * m1;
    if (var == 0) throw ZeroVariance("skewness undefined: zero variance");
    const Rat central3 = m3 - 3 * m1 * m2 + 2 * m1 * m1 * m1;
    return central3 / (var * rat_sqrt(var));
}

} // namespace kernelpath
