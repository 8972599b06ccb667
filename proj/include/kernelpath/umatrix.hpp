#ifndef KERNELPATH_UMATRIX_HPP
#define KERNELPATH_UMATRIX_HPP

#include "kernelpath/ulaurent.hpp"

#include <vector>

namespace kernelpath {

// Square matrix over the Laurent-in-u series ring.
struct UMatrix {
    int dim = 0;
    int order = 0;
    std::vector<std::vector<ULaurent>> e;

    UMatrix() = default;
    UMatrix(int dim_, int order_)
        : dim(dim_), order(order_), e(static_cast<size_t>(dim_), std::vector<ULaurent>(static_cast<size_t>(dim_), ULaurent::zero(order_))) {}

    static UMatrix identity(int dim, int order);

    const ULaurent& at(int i, int j) const { return e[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    ULaurent& at(int i, int j) { return e[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
};

UMatrix operator-(const UMatrix& a, const UMatrix& b);
UMatrix operator*(const UMatrix& a, const UMatrix& b);
bool operator==(const UMatrix& a, const UMatrix& b);

} // namespace kernelpath

#endif
