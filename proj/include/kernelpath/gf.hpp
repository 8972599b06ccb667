#ifndef KERNELPATH_GF_HPP
#define KERNELPATH_GF_HPP

#include "kernelpath/kernel.hpp"
#include "kernelpath/umatrix.hpp"

#include <vector>

namespace kernelpath {

// State-resolved series solved by t-adic fixed-point iteration. These need
// no kernel theory and serve as ground truth for the closed forms.
//
// walks:    V = e_0 + V * A          (free altitude)
// meanders: V = e_0 + {u^{>=0}}(V * A)
std::vector<ULaurent> iterate_walks(const UMatrix& adjacency_matrix, int order);
std::vector<ULaurent> iterate_meanders(const UMatrix& adjacency_matrix, int order);

// W(t,u) = first row of adj(I-A) summed, divided by K
ULaurent closed_form_walks(const KernelSystem& ks);

struct BoundaryData {
    std::vector<ULaurent> forbidden; // F = e_0 - {u^{<0}}(M * A), entrywise
    ULaurent phi;                    // u^e * (F . autocorrelation), polynomial in u
    ULaurent g;                      // phi / small factor
};

// The boundary unknowns are read off the iterated meander vector, never
// solved symbolically; phi must come out free of negative u-powers and
// exactly divisible by the small factor.
BoundaryData boundary_data(const UMatrix& adjacency_matrix, const KernelSystem& ks,
                           const std::vector<ULaurent>& meander_vector);

// M(t,u) = g * small / (u^e K) = g / unit
ULaurent closed_form_meanders(const KernelSystem& ks, const BoundaryData& bd);

struct GFBundle {
    int order = 0;
    std::vector<ULaurent> walk_vector;
    std::vector<ULaurent> meander_vector;
    ULaurent W; // sum of walk_vector
    ULaurent M; // sum of meander_vector
    TruncSeries B; // [u^0] W
    TruncSeries E; // M at u = 0

    GFBundle() : W(0), M(0), B(0), E(0) {}
};

GFBundle iterate_bundle(const UMatrix& adjacency_matrix, int order);

// row n of the distribution: VPoly in the mark variable
VPoly distribution_table(const TruncSeries& series, int n);

// reindex an even series by semilength; odd coefficients must vanish
TruncSeries substitute_semilength(const TruncSeries& series);

} // namespace kernelpath

#endif
