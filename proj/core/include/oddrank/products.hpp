#pragma once

#include <map>
#include <vector>

#include "oddrank/qseries.hpp"

namespace oddrank {

/* One (q^a; q^b)_inf^e factor; a, b >= 1 so every factor is a unit series. */
struct PochFactor {
    Exp a = 1;
    Exp b = 1;
    Exp e = 1;
};

struct ProductSpec {
    std::vector<PochFactor> factors;
};

/* Finite product of eta(delta * tau)^r over distinct deltas. The q-prefactor
 * sum(delta * r) / 24 is kept as an exact rational ledger; a q-expansion is
 * only permitted when it is an integer. */
struct EtaQuotient {
    std::map<Exp, Exp> pairs; // delta -> r_delta, delta >= 1

    Rat prefactor() const;
    Exp integral_prefactor() const; // errc::fractional_power if not an integer
};

// Pi_{k>=0} (1 - q^(a+kb)) through q^prec; a, b >= 1
QSeries pochhammer_expand(Exp a, Exp b, Exp prec);

// expand a full ProductSpec
QSeries product_expand(const ProductSpec& spec, Exp prec);

/* [x_1, ..., x_m; q^M]: product of (q^r; q^M)(q^(M-r); q^M) over the residues.
 * Residues are reduced mod M and must land in (0, M); negative inputs are
 * refused so the sign/shift normalization [q^-a] = -q^-a [q^a] stays at the
 * caller (the identity catalog applies it symbolically). */
QSeries bracket_expand(const std::vector<Exp>& residues, Exp modulus, Exp prec);

// q^prefactor * Pi (q^d; q^d)^r through q^prec; valuation may be negative
QSeries eta_quotient_expand(const EtaQuotient& eq, Exp prec);

/* Modularity certificate for an eta-quotient of weight zero on Gamma_0(N):
 * sum r = 0, sum(delta r) and sum((N/delta) r) divisible by 24, and
 * prod delta^r a rational square. */
struct ModularityCertificate {
    Exp level = 0;
    Exp weight_sum = 0;        // sum r_delta (must be 0)
    Exp delta_weighted = 0;    // sum delta * r_delta (mod 24)
    Exp codelta_weighted = 0;  // sum (N/delta) * r_delta (mod 24)
    Rat exponent_product;      // prod delta^r_delta
    bool weight_ok = false;
    bool delta_ok = false;
    bool codelta_ok = false;
    bool square_ok = false;
    bool pass() const { return weight_ok && delta_ok && codelta_ok && square_ok; }
};

ModularityCertificate check_modularity(const EtaQuotient& eq, Exp level);

/* Order at the cusp class represented by c | N (Ligozat):
 *   (N / (24 c gcd(c, N/c))) * sum_delta gcd(c, delta)^2 r_delta / delta.
 * count is the number of cusps in the class, phi(gcd(c, N/c)). */
struct CuspOrder {
    Exp c = 1;
    Rat order;
    Exp count = 1;
};

std::vector<CuspOrder> cusp_orders(const EtaQuotient& eq, Exp level);

// convenience: the order at the cusp infinity (class c = N)
Rat order_at_infinity(const EtaQuotient& eq, Exp level);

// the four functions of the Gamma_0(10) / Gamma_0(50) setup
EtaQuotient eta_rho(); // eta(2)^2 eta(5)^4 / (eta(1)^4 eta(10)^2)
EtaQuotient eta_t();   // eta(5)^2 eta(10)^2 / (eta(1)^2 eta(2)^2)
EtaQuotient eta_z();   // eta(50) / eta(2)
EtaQuotient eta_h();   // eta(1)^2 / eta(25)^2

} // namespace oddrank
