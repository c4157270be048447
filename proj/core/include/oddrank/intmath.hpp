#pragma once

#include <cstdint>
#include <gmpxx.h>

namespace oddrank {

// Exact integer coefficients everywhere; no floating point in the library.
using Int = mpz_class;
using Rat = mpq_class;
using Exp = std::int64_t;

constexpr Exp exp_min = INT64_MIN / 4;

inline Exp floor_div(Exp a, Exp b) {
    // b > 0 assumed
    Exp q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline Exp ceil_div(Exp a, Exp b) {
    // b > 0 assumed
    Exp q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

inline Exp gcd_exp(Exp a, Exp b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Exp t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// floor(sqrt(x)) for x >= 0, exact
inline Int isqrt(const Int& x) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow5(unsigned long e) { return pow_int(5, e); }

inline bool is_perfect_square(const Int& x) {
    return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

} // namespace oddrank
