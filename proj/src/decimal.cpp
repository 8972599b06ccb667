#include "kernelpath/decimal.hpp"

#include "kernelpath/errors.hpp"

#include <gmpxx.h>

namespace kernelpath {

std::string decimal_string(const Rat& q, int sig) {
    if (sig < 1) throw InvalidConfig("decimal_string: sig must be positive");
    if (q == 0) return "0";
    const bool neg = q < 0;
    Int num = abs(q.get_num());
    Int den = q.get_den();

    // Decimal exponent adjustment G such that num*10^G/den has `sig` digits.
    int G;
    Int ip = num / den;
    if (ip > 0) {
        G = sig - static_cast<int>(ip.get_str().size());
    } else {
        Int scaled = num;
        int z = 0;
        while (scaled < den) {
            scaled *= 10;
            ++z;
        }
        G = sig + z - 1;
    }

    Int pow10(1);
    for (int i = 0; i < (G >= 0 ? G : -G); ++i) pow10 *= 10;
    const Int r = G >= 0 ? Int(num * pow10) : num;
    const Int rem_scale = G >= 0 ? den : Int(den * pow10);
    Int digits = r / rem_scale;
    Int rem = r - digits * rem_scale;
    if (2 * rem >= rem_scale) digits += 1;

    std::string s = digits.get_str();
    const int len = static_cast<int>(s.size());
    const int point = len - G;  // digits before the decimal point
    std::string out;
    if (point >= len) {
        out = s + std::string(point - len, '0');
    } else if (point > 0) {
        out = s.substr(0, point) + "." + s.substr(point);
    } else {
        out = "0." + std::string(-point, '0') + s;
    }
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return neg ? "-" + out : out;
}

Rat rat_sqrt(const Rat& q, int bits) {
    if (q < 0) throw InvalidConfig("rat_sqrt: negative argument");
    if (q == 0) return Rat(0);
    Int num = q.get_num();
    Int den = q.get_den();
    Int scaled = num * den;
    scaled <<= 2 * bits;
    Int root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Int denom = den;
    denom <<= bits;
    Rat result(root, denom);
    result.canonicalize();
    return result;
}

} // namespace kernelpath
