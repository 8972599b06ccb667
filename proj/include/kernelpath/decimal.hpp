#ifndef KERNELPATH_DECIMAL_HPP
#define KERNELPATH_DECIMAL_HPP

#include "kernelpath/vpoly.hpp"

#include <string>

namespace kernelpath {

// Fixed-point decimal rendering of an exact rational, rounded half-up at
// `sig` significant digits, trailing zeros stripped. Deterministic.
std::string decimal_string(const Rat& q, int sig = 30);

// Rational approximation of sqrt(q) with absolute error below 2^-bits.
Rat rat_sqrt(const Rat& q, int bits = 128);

} // namespace kernelpath

#endif
