#ifndef KERNELPATH_KERNEL_HPP
#define KERNELPATH_KERNEL_HPP

#include "kernelpath/umatrix.hpp"

#include <vector>

namespace kernelpath {

// Division-free determinant (memoized Laplace expansion). Entries may carry
// negative u-powers; no entry inversions are ever needed.
ULaurent determinant(const UMatrix& m);

// adj(m) with m * adj(m) = det(m) * I, computed from signed minors.
UMatrix adjugate(const UMatrix& m);

// adj(I - A) applied to the all-ones vector
std::vector<ULaurent> autocorrelation_vector(const UMatrix& eye_minus_a);

// Factorization data of the kernel K = det(I - A):
//   u^{c_K} K = small * unit,  small monic of u-degree e = c_K with
//   small(0, u) = u^e, unit(0, u) = 1.
struct KernelData {
    ULaurent kernel;  // K itself, Laurent in u
    ULaurent cleared; // u^{c_K} K, polynomial in u
    int c_K = 0;      // pole order of K at u = 0
    int e = 0;        // number of small roots, equals c_K
    ULaurent small;   // monic factor carrying the small roots
    ULaurent unit;    // invertible cofactor
};

// Order-by-order lift from the t = 0 split u^{c_K} * 1. At each t-order the
// correction R_k is divided by u^{c_K}: the remainder (u-degree < c_K)
// updates the small factor, the quotient updates the unit; this is the
// unique solution with deg_u(small correction) < c_K.
KernelData small_factor(const ULaurent& kernel);

// num / den where den's t^0 slice is the constant 1: solve layer by layer
// in t (den need not be monic or polynomial in u).
ULaurent divide_unit_t(const ULaurent& num, const ULaurent& den);

// Exact long division by a u-monic polynomial; throws NonzeroRemainder if
// the remainder is nonzero anywhere in the known window.
ULaurent divide_exact_monic_u(const ULaurent& num, const ULaurent& monic);

struct KernelSystem {
    UMatrix eye_minus_a;
    ULaurent kernel;
    UMatrix adjug;
    std::vector<ULaurent> autocorr;
    KernelData factor;
};

KernelSystem analyze_kernel(const UMatrix& adjacency_matrix);

} // namespace kernelpath

#endif
