#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oddrank/identities.hpp"
#include "oddrank/products.hpp"

using namespace oddrank;

TEST_CASE("catalog shape: names unique, defaults sane") {
    Workspace ws;
    std::set<std::string> names;
    for (const auto& e : catalog()) {
        CHECK(names.insert(e.name).second);
        CHECK(e.default_prec(ws) / e.period >= 4); // at least four structural periods
    }
    CHECK(catalog().size() == 39);
    CHECK_THROWS_AS(catalog_entry("NOPE"), Error);
}

TEST_CASE("spot verifications at reduced precision") {
    Workspace ws;
    for (const char* name : {"G1.2", "G2.3", "G3.2", "G4.4", "T2"}) {
        Report r = verify(ws, name, name == std::string("T2") ? 60 : 100);
        CAPTURE(name);
        CHECK(r.pass);
        CHECK_FALSE(r.first_mismatch.has_value());
    }
}

TEST_CASE("period-50 entries at q^150") {
    Workspace ws;
    for (const char* name : {"LEPP1", "LEPP2", "S41", "S32", "CHAN", "MAO", "DISP", "LEAA", "BR1",
                             "BR2", "BR3", "BR4", "BR5", "PP51", "PP52", "CHU1", "CHU2", "PAA"}) {
        Report r = verify(ws, name, 150);
        CAPTURE(name);
        CHECK(r.pass);
    }
}

TEST_CASE("negative controls fail wherever the corruption lands") {
    Workspace ws;
    for (const char* name : {"G1.1", "MAO", "T2"}) {
        Exp prec = name == std::string("T2") ? 40 : 80;
        for (Exp where : {prec - 1, prec / 2, Exp(5)}) {
            Report r = negative_control(ws, name, prec, where);
            CAPTURE(name);
            CAPTURE(where);
            CHECK_FALSE(r.pass);
            REQUIRE(r.first_mismatch.has_value());
            CHECK(r.first_mismatch->exponent <= where);
        }
    }
}

TEST_CASE("randomized negative controls across the catalog") {
    Workspace ws;
    std::mt19937_64 rng(ws.options().seed);
    std::uniform_int_distribution<std::size_t> pick(0, catalog().size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
        const CatalogEntry& e = catalog()[pick(rng)];
        Exp prec = e.prec_class == PrecClass::oracle ? 40 : 80;
        Exp where = std::uniform_int_distribution<Exp>(0, prec - 1)(rng);
        Report r = negative_control(ws, e.name, prec, where);
        CAPTURE(e.name);
        CAPTURE(where);
        CHECK_FALSE(r.pass);
    }
}

TEST_CASE("extracting the 5n+2 progression from the A2 product gives the e-series") {
    // the residue-extraction step tying the catalog back to the oracle side
    Workspace ws;
    Exp p = 210;
    QSeries a2 = (bracket_expand({25}, 50, p) * ws.poch(50, 50, p) *
                  bracket_expand({10, 20}, 50, p).inverse())
                     .shifted(2);
    QSeries extracted = a2.extract_progression(5, 2);
    CHECK(extracted.equal_through(ws.e_series(40), 40));
}

TEST_CASE("congruence checks via the e-series") {
    Workspace ws;
    Report r1 = check_congruence_e(ws, 1, 40);
    CHECK(r1.pass);
    Report r3 = check_congruence_e(ws, 3, 10);
    CHECK(r3.pass);
    CHECK_THROWS_AS(check_congruence_e(ws, 0, 5), Error);
}

TEST_CASE("congruence checks via the oracle, with budget errors") {
    Workspace ws;
    Report r1 = check_theorem_main(ws, 1, 5);
    CHECK(r1.pass);
    Report r2 = check_theorem_main(ws, 2, 3);
    CHECK(r2.pass);
    CHECK_THROWS_AS(check_theorem_main(ws, 3, 5), Error); // needs n near 5^4
    try {
        check_theorem_main(ws, 3, 5);
    } catch (const Error& e) {
        CHECK(e.code() == errc::budget);
    }
}

TEST_CASE("JSON report array round-trips") {
    Workspace ws;
    std::vector<Report> reports;
    reports.push_back(verify(ws, "G1.2", 60));
    reports.push_back(negative_control(ws, "G1.2", 60));
    std::string text = reports_to_json(reports);
    auto back = reports_from_json(text);
    REQUIRE(back.size() == reports.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].name == reports[i].name);
        CHECK(back[i].precision == reports[i].precision);
        CHECK(back[i].pass == reports[i].pass);
        CHECK(back[i].period == reports[i].period);
        CHECK(back[i].margin_periods == reports[i].margin_periods);
        CHECK(back[i].ms == reports[i].ms);
        CHECK(back[i].first_mismatch.has_value() == reports[i].first_mismatch.has_value());
        if (back[i].first_mismatch) {
            CHECK(back[i].first_mismatch->exponent == reports[i].first_mismatch->exponent);
            CHECK(back[i].first_mismatch->lhs == reports[i].first_mismatch->lhs);
            CHECK(back[i].first_mismatch->rhs == reports[i].first_mismatch->rhs);
        }
    }
}

TEST_CASE("precision overrides flow through verify") {
    Workspace ws;
    Report r = verify(ws, "G1.1", 77);
    CHECK(r.precision == 77);
    CHECK(r.period == 10);
    CHECK(r.margin_periods == 7);
}
