#include "kernelpath/umatrix.hpp"

#include "kernelpath/errors.hpp"

namespace kernelpath {

UMatrix UMatrix::identity(int dim, int order) {
    UMatrix m(dim, order);
    for (int i = 0; i < dim; ++i) m.at(i, i) = ULaurent::u_power(0, order);
    return m;
}

UMatrix operator-(const UMatrix& a, const UMatrix& b) {
    if (a.dim != b.dim) throw InvalidConfig("matrix dimension mismatch");
    UMatrix r(a.dim, std::min(a.order, b.order));
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

UMatrix operator*(const UMatrix& a, const UMatrix& b) {
    if (a.dim != b.dim) throw InvalidConfig("matrix dimension mismatch");
    UMatrix r(a.dim, std::min(a.order, b.order));
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            ULaurent acc = ULaurent::zero(r.order);
            for (int k = 0; k < a.dim; ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

bool operator==(const UMatrix& a, const UMatrix& b) {
    if (a.dim != b.dim || a.order != b.order) return false;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (!(a.at(i, j) == b.at(i, j))) return false;
    return true;
}

} // namespace kernelpath
