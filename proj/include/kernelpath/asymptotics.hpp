#ifndef KERNELPATH_ASYMPTOTICS_HPP
#define KERNELPATH_ASYMPTOTICS_HPP

#include "kernelpath/vpoly.hpp"

#include <vector>

namespace kernelpath {

// Statistics of the mark count over one exact distribution polynomial h(v):
// h's coefficient of v^k is the number of objects carrying k marks.
struct Moments {
    Rat mean;
    Rat variance;
};

// Throws EmptyClass when h(1) == 0 (no objects at this size).
Moments exact_moments(const VPoly& h);

struct MomentRow {
    int n = 0;
    Rat mean;
    Rat variance;
};

// One row per size with a nonempty class; sizes are the vector indices.
std::vector<MomentRow> moment_table(const std::vector<VPoly>& dists);

struct RhoEstimate {
    Rat value;      // Richardson-accelerated limit of a_n / a_{n+1}
    Rat raw_ratio;  // last unaccelerated ratio, for convergence reporting
};

// Estimates the radius of convergence of sum a_n t^n from the coefficient
// ratios a_n / a_{n+1}, accelerated by two Richardson extrapolation levels.
// Requires a trailing run of at least 50 nonzero coefficients.
RhoEstimate estimate_rho(const std::vector<Rat>& coeffs);

struct SlopeEstimate {
    Rat mean_slope;
    Rat variance_slope;
};

// First differences of mean and variance averaged over the top decile of
// sizes. Requires a table reaching n >= 200 with contiguous rows there.
SlopeEstimate estimate_slopes(const std::vector<MomentRow>& table);

// Skewness of the mark distribution: third central moment / variance^(3/2).
// The square root is a 128-bit rational approximation; everything else is
// exact. Throws ZeroVariance when the distribution is concentrated.
Rat normality_diagnostic(const VPoly& h);

} // namespace kernelpath

#endif
