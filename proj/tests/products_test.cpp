#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "oddrank/products.hpp"
#include "oracles.hpp"

using namespace oddrank;

TEST_CASE("(q;q) expansion matches the brute-force factor product") {
    oracle::Poly want = oracle::poch(1, 1, 8);
    CHECK(want == oracle::Poly{1, -1, -1, 0, 0, 1, 0, 1});
    QSeries got = pochhammer_expand(1, 1, 8);
    CHECK(oracle::matches(got, want, 8));

    // and deeper, against the oracle at q^120
    oracle::Poly deep = oracle::poch(1, 1, 120);
    CHECK(oracle::matches(pochhammer_expand(1, 1, 120), deep, 120));
}

TEST_CASE("factors beyond the window contribute nothing") {
    QSeries s = pochhammer_expand(50, 50, 50);
    CHECK(s.coeff(0) == 1);
    for (Exp e = 1; e < 50; ++e) CHECK(s.coeff(e) == 0);
}

TEST_CASE("Euler interleaving: (q;q^2)(q^2;q^2) = (q;q)") {
    Exp N = 100;
    QSeries lhs = pochhammer_expand(1, 2, N) * pochhammer_expand(2, 2, N);
    CHECK(lhs.equal_through(pochhammer_expand(1, 1, N), N));
}

TEST_CASE("bracket expansions") {
    // [q^10, q^20; q^50] through q^9 is 1
    QSeries b = bracket_expand({10, 20}, 50, 10);
    CHECK(b.coeff(0) == 1);
    for (Exp e = 1; e < 10; ++e) CHECK(b.coeff(e) == 0);

    // [q^5; q^50] = (q^5; q^50)(q^45; q^50), checked against the naive product
    oracle::Poly want = oracle::mul(oracle::poch(5, 50, 100), oracle::poch(45, 50, 100), 100);
    CHECK(want[5] == -1);
    CHECK(want[45] == -1);
    CHECK(oracle::matches(bracket_expand({5}, 50, 100), want, 100));

    // residues are reduced mod M first
    CHECK(bracket_expand({55}, 50, 60) == bracket_expand({5}, 50, 60));
}

TEST_CASE("bracket symmetry in the residue") {
    for (Exp a : {3, 10, 22}) {
        QSeries lhs = bracket_expand({a}, 50, 120);
        QSeries rhs = bracket_expand({50 - a}, 50, 120);
        CHECK(lhs.equal_through(rhs, 120));
    }
}

TEST_CASE("bracket rejects zero and raw negative residues") {
    CHECK_THROWS_AS(bracket_expand({50}, 50, 10), Error);
    CHECK_THROWS_AS(bracket_expand({100}, 50, 10), Error);
    CHECK_THROWS_AS(bracket_expand({-5}, 50, 10), Error);
}

TEST_CASE("negative-residue normalization rule [q^-a; q^M] = -q^-a [q^a; q^M]") {
    // expand (1 - q^-5)(q^45; q^50)(q^55; q^50) directly and compare
    Exp N = 120;
    QSeries direct = (QSeries::one(N + 5).plus_term(-1, -5)) *
                     pochhammer_expand(45, 50, N + 5) * pochhammer_expand(55, 50, N + 5);
    QSeries normalized = (-bracket_expand({5}, 50, N + 5)).shifted(-5);
    CHECK(direct.equal_through(normalized, N));
}

TEST_CASE("eta-quotient expansions of rho, t, Z, H (frozen)") {
    QSeries rho = eta_quotient_expand(eta_rho(), 3);
    CHECK(rho.coeff(0) == 1);
    CHECK(rho.coeff(1) == 4);
    CHECK(rho.coeff(2) == 12);

    QSeries t = eta_quotient_expand(eta_t(), 4);
    CHECK(t.valuation() == 1);
    CHECK(t.coeff(1) == 1);
    CHECK(t.coeff(2) == 2);
    CHECK(t.coeff(3) == 7);

    // Z = q^2 sum p(m) q^(2m)
    auto p = oracle::partitions(10);
    QSeries z = eta_quotient_expand(eta_z(), 9);
    CHECK(z.coeff(2) == 1);
    CHECK(z.coeff(4) == p[1]);
    CHECK(z.coeff(6) == p[2]);
    CHECK(z.coeff(8) == p[3]);
    for (Exp e = z.valuation(); e < 9; ++e)
        if (e % 2 == 1) CHECK(z.coeff(e) == 0);

    // H = q^-2 (q;q)^2 / (q^25;q^25)^2 starts q^-2 - 2 q^-1 - 1
    QSeries h = eta_quotient_expand(eta_h(), 1);
    CHECK(h.valuation() == -2);
    CHECK(h.coeff(-2) == 1);
    CHECK(h.coeff(-1) == -2);
    CHECK(h.coeff(0) == -1);
}

TEST_CASE("eta-quotient with fractional prefactor is refused") {
    EtaQuotient bad{{{1, 1}}}; // eta(tau) alone carries q^(1/24)
    CHECK_THROWS_AS(eta_quotient_expand(bad, 10), Error);
    CHECK(bad.prefactor() == Rat(1, 24));
}

TEST_CASE("modularity certificates") {
    auto rho_cert = check_modularity(eta_rho(), 10);
    CHECK(rho_cert.pass());

    auto t_cert = check_modularity(eta_t(), 10);
    CHECK(t_cert.pass());
    CHECK(t_cert.delta_weighted == 24);

    auto z_cert = check_modularity(eta_z(), 50);
    CHECK(z_cert.pass());
    CHECK(z_cert.delta_weighted == 48);
    CHECK(z_cert.codelta_weighted == -24);
    CHECK(z_cert.exponent_product == 25);

    auto h_cert = check_modularity(eta_h(), 25);
    CHECK(h_cert.pass());

    // eta(1)/eta(2) fails the mod-24 condition at level 2
    EtaQuotient bad{{{1, 1}, {2, -1}}};
    auto bad_cert = check_modularity(bad, 2);
    CHECK_FALSE(bad_cert.pass());
    CHECK(bad_cert.delta_weighted == -1);
}

TEST_CASE("level divisibility is enforced") {
    CHECK_THROWS_AS(check_modularity(eta_z(), 10), Error); // 50 does not divide 10
    CHECK_THROWS_AS(cusp_orders(eta_h(), 10), Error);
}

TEST_CASE("cusp orders of t on level 10 (frozen) and the degree-zero sums") {
    auto orders = cusp_orders(eta_t(), 10);
    REQUIRE(orders.size() == 4);
    std::map<Exp, Rat> want = {{1, Rat(-1)}, {2, Rat(-1)}, {5, Rat(1)}, {10, Rat(1)}};
    Rat total = 0;
    for (const auto& co : orders) {
        CHECK(co.order == want.at(co.c));
        CHECK(co.count == 1);
        total += co.order * co.count;
    }
    CHECK(total == 0);

    Rat rho_total = 0;
    for (const auto& co : cusp_orders(eta_rho(), 10)) rho_total += co.order * co.count;
    CHECK(rho_total == 0);
}

TEST_CASE("order at infinity equals the expansion valuation") {
    struct Case {
        EtaQuotient eq;
        Exp level;
    };
    for (const auto& c : {Case{eta_rho(), 10}, Case{eta_t(), 10}, Case{eta_z(), 50},
                          Case{eta_h(), 25}}) {
        Rat inf = order_at_infinity(c.eq, c.level);
        QSeries s = eta_quotient_expand(c.eq, 12);
        auto ord = s.order();
        REQUIRE(ord.has_value());
        CHECK(inf == Rat(*ord));
    }
    // H on level 25 at infinity is -2 specifically
    CHECK(order_at_infinity(eta_h(), 25) == Rat(-2));
}

TEST_CASE("all-zero exponents give all-zero orders") {
    EtaQuotient trivial{{{1, 0}, {5, 0}}};
    for (const auto& co : cusp_orders(trivial, 10)) CHECK(co.order == 0);
}

TEST_CASE("product_expand multiplies ProductSpec factors") {
    ProductSpec spec;
    spec.factors = {{1, 2, 1}, {2, 2, 1}}; // (q;q^2)(q^2;q^2)
    QSeries s = product_expand(spec, 60);
    CHECK(s.equal_through(pochhammer_expand(1, 1, 60), 60));

    ProductSpec inv;
    inv.factors = {{2, 2, -1}}; // 1/(q^2;q^2)
    auto p = oracle::partitions(20);
    QSeries si = product_expand(inv, 41);
    for (Exp m = 0; m <= 20; ++m) CHECK(si.coeff(2 * m) == p[static_cast<std::size_t>(m)]);
}
