#pragma once

#include <gmpxx.h>
#include <string>

namespace superchar {

// All coefficient arithmetic is exact. No floating point anywhere in the
// library; dimensions and series coefficients live in mpz.
using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int pow2(long e) {
    Int r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

} // namespace superchar
