#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddrank/expr.hpp"
#include "oracles.hpp"

using namespace oddrank;

TEST_CASE("eta-quotient expressions parse into exponent maps") {
    auto eq = Expr::parse("eta(2)^2*eta(5)^4/(eta(1)^4*eta(10)^2)").as_eta_quotient();
    REQUIRE(eq.has_value());
    CHECK(eq->pairs == std::map<Exp, Exp>{{1, -4}, {2, 2}, {5, 4}, {10, -2}});

    auto z = Expr::parse("eta(50)/eta(2)").as_eta_quotient();
    REQUIRE(z.has_value());
    CHECK(z->pairs == std::map<Exp, Exp>{{2, -1}, {50, 1}});

    CHECK_FALSE(Expr::parse("P(1;1)").as_eta_quotient().has_value());
}

TEST_CASE("expression evaluation matches the module operations") {
    Workspace ws;
    QSeries t = Expr::parse("eta(5)^2*eta(10)^2/(eta(1)^2*eta(2)^2)").evaluate(ws, 20);
    CHECK(t.equal_through(ws.t(20), 20));

    QSeries p = Expr::parse("P(1;1)").evaluate(ws, 8);
    CHECK(oracle::matches(p, oracle::poch(1, 1, 8), 8));

    QSeries j = Expr::parse("J(10,20;50)").evaluate(ws, 60);
    CHECK(j.equal_through(bracket_expand({10, 20}, 50, 60), 60));

    QSeries lam = Expr::parse("L(3,5,2;10,5;alt)").evaluate(ws, 40);
    LambertSpec spec;
    spec.A = 3;
    spec.B = 5;
    spec.C = 2;
    spec.d = 10;
    spec.e = 5;
    spec.alternating = true;
    CHECK(lam.equal_through(lambert_expand(spec, 40), 40));
}

TEST_CASE("monomials, constants, and division") {
    Workspace ws;
    QSeries s = Expr::parse("q^2*P(1;1)").evaluate(ws, 10);
    CHECK(s.coeff(2) == 1);
    CHECK(s.coeff(3) == -1);

    QSeries c = Expr::parse("3*q^-1").evaluate(ws, 5);
    CHECK(c.coeff(-1) == 3);

    // 1/(q^2;q^2) carries partition numbers
    auto p = oracle::partitions(10);
    QSeries inv = Expr::parse("1/P(2;2)").evaluate(ws, 21);
    for (Exp m = 0; m <= 10; ++m) CHECK(inv.coeff(2 * m) == p[static_cast<std::size_t>(m)]);

    // mixed eta and product atoms: Z / P(50;50) = q^2 / (q^2;q^2)
    QSeries mixed = Expr::parse("eta(50)/eta(2)/P(50;50)").evaluate(ws, 15);
    QSeries direct = ws.poch(2, 2, 15).inverse().shifted(2).truncated(15);
    CHECK(mixed.equal_through(direct, 15));
}

TEST_CASE("parse errors carry positions and land as errc::parse") {
    for (const char* bad : {"", "eta(", "P(1)", "J(;50)", "eta(2)*", "Q(1;1)", "eta(2) trailing",
                            "L(1,2,3;4,5;x)"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Expr::parse(bad), Error);
        try {
            Expr::parse(bad);
        } catch (const Error& e) {
            CHECK(e.code() == errc::parse);
        }
    }
}

TEST_CASE("fractional eta prefactor surfaces on evaluation, not parse") {
    Workspace ws;
    Expr e = Expr::parse("eta(1)");
    CHECK_THROWS_AS(e.evaluate(ws, 10), Error);
}
