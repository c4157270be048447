#include "oddrank/products.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace oddrank {

namespace {

// in-place multiply of a unit window [0, prec) by (1 - q^m)
void apply_factor(std::vector<Int>& c, Exp m) {
    for (Exp i = static_cast<Exp>(c.size()) - 1; i >= m; --i) {
        std::size_t hi = static_cast<std::size_t>(i);
        std::size_t lo = static_cast<std::size_t>(i - m);
        if (c[lo] != 0) c[hi] -= c[lo];
    }
}

Exp euler_phi(Exp n) {
    Exp result = n;
    for (Exp p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

} // namespace

Rat EtaQuotient::prefactor() const {
    Exp s = 0;
    for (auto& [delta, r] : pairs) s += delta * r;
    Rat p(s, 24);
    p.canonicalize();
    return p;
}

Exp EtaQuotient::integral_prefactor() const {
    Exp s = 0;
    for (auto& [delta, r] : pairs) s += delta * r;
    if (s % 24 != 0)
        fail(errc::fractional_power,
             "eta-quotient prefactor " + std::to_string(s) + "/24 is not an integer");
    return s / 24;
}

QSeries pochhammer_expand(Exp a, Exp b, Exp prec) {
    if (a < 1 || b < 1) fail(errc::domain, "pochhammer_expand needs a >= 1, b >= 1");
    if (prec < 1) return QSeries::zero(prec);
    std::vector<Int> c(static_cast<std::size_t>(prec));
    c[0] = 1;
    for (Exp m = a; m < prec; m += b) apply_factor(c, m);
    return QSeries(0, std::move(c));
}

QSeries product_expand(const ProductSpec& spec, Exp prec) {
    QSeries acc = QSeries::one(prec);
    for (const auto& f : spec.factors) {
        QSeries base = pochhammer_expand(f.a, f.b, prec);
        if (f.e != 1) base = base.pow(f.e);
        acc = acc * base;
    }
    return acc.truncated(prec);
}

QSeries bracket_expand(const std::vector<Exp>& residues, Exp modulus, Exp prec) {
    if (modulus < 1) fail(errc::domain, "bracket modulus must be >= 1");
    if (prec < 1) return QSeries::zero(prec);
    std::vector<Int> c(static_cast<std::size_t>(prec));
    c[0] = 1;
    for (Exp x : residues) {
        if (x < 0)
            fail(errc::domain, "negative bracket residue " + std::to_string(x) +
                                   "; normalize with [q^-a; q^M] = -q^-a [q^a; q^M] first");
        Exp r = x % modulus;
        if (r == 0)
            fail(errc::zero_factor,
                 "bracket residue " + std::to_string(x) + " vanishes mod " + std::to_string(modulus));
        for (Exp m = r; m < prec; m += modulus) apply_factor(c, m);
        for (Exp m = modulus - r; m < prec; m += modulus) apply_factor(c, m);
    }
    return QSeries(0, std::move(c));
}

QSeries eta_quotient_expand(const EtaQuotient& eq, Exp prec) {
    Exp shift = eq.integral_prefactor();
    Exp rel = prec - shift;
    if (rel < 1) return QSeries::zero(prec);
    QSeries num = QSeries::one(rel);
    QSeries den = QSeries::one(rel);
    for (auto& [delta, r] : eq.pairs) {
        if (r == 0) continue;
        QSeries p = pochhammer_expand(delta, delta, rel).pow(r > 0 ? r : -r);
        if (r > 0)
            num = num * p;
        else
            den = den * p;
    }
    return (num * den.inverse()).truncated(rel).shifted(shift);
}

ModularityCertificate check_modularity(const EtaQuotient& eq, Exp level) {
    ModularityCertificate cert;
    cert.level = level;
    Int num = 1, den = 1;
    for (auto& [delta, r] : eq.pairs) {
        if (delta < 1 || level % delta != 0)
            fail(errc::level, "delta " + std::to_string(delta) + " does not divide the level " +
                                  std::to_string(level));
        cert.weight_sum += r;
        cert.delta_weighted += delta * r;
        cert.codelta_weighted += (level / delta) * r;
        if (r > 0)
            num *= pow_int(delta, static_cast<unsigned long>(r));
        else if (r < 0)
            den *= pow_int(delta, static_cast<unsigned long>(-r));
    }
    cert.exponent_product = Rat(num, den);
    cert.exponent_product.canonicalize();
    cert.weight_ok = cert.weight_sum == 0;
    cert.delta_ok = cert.delta_weighted % 24 == 0;
    cert.codelta_ok = cert.codelta_weighted % 24 == 0;
    cert.square_ok = is_perfect_square(cert.exponent_product.get_num()) &&
                     is_perfect_square(cert.exponent_product.get_den());
    return cert;
}

std::vector<CuspOrder> cusp_orders(const EtaQuotient& eq, Exp level) {
    for (auto& [delta, r] : eq.pairs) {
        (void)r;
        if (delta < 1 || level % delta != 0)
            fail(errc::level, "delta " + std::to_string(delta) + " does not divide the level " +
                                  std::to_string(level));
    }
    std::vector<CuspOrder> out;
    for (Exp c = 1; c <= level; ++c) {
        if (level % c != 0) continue;
        Rat sum = 0;
        for (auto& [delta, r] : eq.pairs) {
            Exp g = gcd_exp(c, delta);
            Rat term(Int(g) * g * r, delta);
            term.canonicalize();
            sum += term;
        }
        Exp g = gcd_exp(c, level / c);
        Rat scale(level, 24 * c * g);
        scale.canonicalize();
        CuspOrder co;
        co.c = c;
        co.order = scale * sum;
        co.order.canonicalize();
        co.count = euler_phi(g);
        out.push_back(std::move(co));
    }
    return out;
}

Rat order_at_infinity(const EtaQuotient& eq, Exp level) {
    for (const auto& co : cusp_orders(eq, level))
        if (co.c == level) return co.order;
    fail(errc::integrity, "cusp class at infinity missing");
}

EtaQuotient eta_rho() { return EtaQuotient{{{1, -4}, {2, 2}, {5, 4}, {10, -2}}}; }
EtaQuotient eta_t() { return EtaQuotient{{{1, -2}, {2, -2}, {5, 2}, {10, 2}}}; }
EtaQuotient eta_z() { return EtaQuotient{{{2, -1}, {50, 1}}}; }
EtaQuotient eta_h() { return EtaQuotient{{{1, 2}, {25, -2}}}; }

} // namespace oddrank
