#include "oddrank/lambert.hpp"

#include <algorithm>
#include <string>

namespace oddrank {

namespace {

void validate(const LambertSpec& spec) {
    if (spec.A <= 0) fail(errc::divergence, "Lambert spec needs A > 0 to be truncatable");
    if (spec.d == 0) {
        if (spec.e == 0) fail(errc::pole, "denominator exponent is identically zero");
    } else if (spec.e % spec.d == 0) {
        Exp n0 = -spec.e / spec.d;
        fail(errc::pole, "denominator 1 - q^(" + std::to_string(spec.d) + "n+" +
                             std::to_string(spec.e) + ") vanishes at n = " + std::to_string(n0));
    }
}

/* Integer interval covering { n : an^2 + bn + c < bound }, widened by one on
 * each side; exact integer square roots only. Empty interval -> lo > hi. */
struct Range {
    Exp lo = 0, hi = -1;
};

Range sublevel_range(Exp a, Exp b, Exp c, Exp bound) {
    // roots of a n^2 + b n + (c - bound)
    Int disc = Int(b) * b - Int(4) * a * (Int(c) - bound);
    if (disc <= 0) return {};
    Int root = isqrt(disc) + 1; // ceil-ish cover
    Int two_a = 2 * a;
    Int lo = (-Int(b) - root) / two_a - 2;
    Int hi = (-Int(b) + root) / two_a + 2;
    return {static_cast<Exp>(lo.get_si()), static_cast<Exp>(hi.get_si())};
}

} // namespace

QSeries lambert_expand(const LambertSpec& spec, Exp prec) {
    validate(spec);

    // cover both branches: L(n) > 0 contributes from Q(n), L(n) < 0 from Q(n) - L(n)
    Range r1 = sublevel_range(spec.A, spec.B, spec.C, prec);
    Range r2 = sublevel_range(spec.A, spec.B - spec.d, spec.C - spec.e, prec);
    Exp n_lo = std::min(r1.lo, r2.lo);
    Exp n_hi = std::max(r1.hi, r2.hi);

    // lowest exponent any term can contribute
    Exp vmin = prec - 1;
    for (Exp n = n_lo; n <= n_hi; ++n) {
        Exp L = spec.lin(n);
        Exp m0 = spec.quad(n) + std::max<Exp>(0, -L);
        vmin = std::min(vmin, m0);
    }
    if (n_lo > n_hi) return QSeries::zero(prec);

    std::vector<Int> c(static_cast<std::size_t>(prec - vmin));
    auto bump = [&](Exp e, int s) {
        if (e < prec) c[static_cast<std::size_t>(e - vmin)] += s;
    };

    for (Exp n = n_lo; n <= n_hi; ++n) {
        Exp L = spec.lin(n);
        int s = spec.sign;
        if (spec.alternating && (n % 2 != 0)) s = -s;
        Exp q0 = spec.quad(n);
        if (L > 0) {
            // q^Q(n) * (1 + q^L + q^2L + ...)
            for (Exp e = q0; e < prec; e += L) bump(e, s);
        } else {
            // 1/(1 - q^L) = -q^-L * (1 + q^-L + ...), L < 0
            for (Exp e = q0 - L; e < prec; e -= L) bump(e, -s);
        }
    }
    return QSeries(vmin, std::move(c));
}

LambertSpec residue_split(const LambertSpec& spec, Exp m, Exp r) {
    if (m <= 0) fail(errc::domain, "residue_split modulus must be positive");
    LambertSpec out;
    out.A = spec.A * m * m;
    out.B = 2 * spec.A * m * r + spec.B * m;
    out.C = spec.quad(r);
    out.d = spec.d * m;
    out.e = spec.d * r + spec.e;
    out.sign = spec.sign;
    out.alternating = spec.alternating;
    if (spec.alternating) {
        if (r % 2 != 0) out.sign = -out.sign; // (-1)^r
        out.alternating = (m % 2 != 0);       // (-1)^(mn) survives only for odd m
    }
    return out;
}

} // namespace oddrank
