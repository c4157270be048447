#pragma once

#include "oddrank/qseries.hpp"

namespace oddrank {

/* Bilateral series  sign * sum_{n in Z} (-1)^n q^(An^2+Bn+C) / (1 - q^(dn+e)).
 *
 * A > 0 keeps the series truncatable. The linear form dn+e must not vanish at
 * an integer. residue_split introduces a constant sign (-1)^r, carried in the
 * sign field so sub-series remain values of the same type. */
struct LambertSpec {
    Exp A = 1, B = 0, C = 0; // quadratic exponent Q(n) = An^2 + Bn + C
    Exp d = 0, e = 1;        // denominator exponent L(n) = dn + e
    bool alternating = false;
    int sign = 1;

    Exp quad(Exp n) const { return A * n * n + B * n + C; }
    Exp lin(Exp n) const { return d * n + e; }
};

// exact expansion through q^prec; negative L(n) handled by
// 1/(1 - q^L) = -q^-L / (1 - q^-L)
QSeries lambert_expand(const LambertSpec& spec, Exp prec);

// substitute n -> m*n + r; the (-1)^r factor lands in the sign field
LambertSpec residue_split(const LambertSpec& spec, Exp m, Exp r);

} // namespace oddrank
