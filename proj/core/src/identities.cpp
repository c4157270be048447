#include "oddrank/identities.hpp"

#include <chrono>
#include <utility>

#include <json.hpp>

#include "oddrank/arrays.hpp"
#include "oddrank/durfee.hpp"
#include "oddrank/lambert.hpp"
#include "oddrank/products.hpp"

namespace oddrank {

namespace {

using Sides = std::pair<QSeries, QSeries>;

constexpr Exp PAD = 80; // covers every negative valuation in the period-50 entries

LambertSpec lam(Exp A, Exp B, Exp C, Exp d, Exp e) {
    LambertSpec s;
    s.A = A;
    s.B = B;
    s.C = C;
    s.d = d;
    s.e = e;
    s.alternating = true;
    return s;
}

// the five residue-class pieces of sum (-1)^n q^(3n^2+7n+3) / (1 - q^(10n+5))
const LambertSpec S1 = lam(75, 5, -1, 50, -5);
const LambertSpec S2 = lam(75, 35, 3, 50, 5);
const LambertSpec S3 = lam(75, 65, 13, 50, 15);
const LambertSpec S4 = lam(75, 95, 29, 50, 25);
const LambertSpec S5 = lam(75, 125, 51, 50, 35);

QSeries J(Workspace& ws, std::vector<Exp> res, Exp prec) {
    (void)ws;
    return bracket_expand(res, 50, prec);
}

// [q^10, q^20; q^50] (q^50; q^50)^2 / [q^5-type denominators]: the P products
QSeries P0(Workspace& ws, Exp prec) {
    Exp p = prec + PAD;
    QSeries num = J(ws, {10, 20}, p) * ws.poch(50, 50, p).pow(2);
    return (num * J(ws, {5, 5, 15}, p).inverse()).truncated(prec);
}
QSeries P3(Workspace& ws, Exp prec) {
    Exp p = prec + PAD;
    QSeries num = J(ws, {10, 20}, p) * ws.poch(50, 50, p).pow(2);
    return (num * J(ws, {5, 15, 15}, p).inverse()).shifted(3).truncated(prec);
}
QSeries P4(Workspace& ws, Exp prec) {
    Exp p = prec + PAD;
    QSeries num = J(ws, {10, 20}, p) * ws.poch(50, 50, p).pow(2);
    return (num * J(ws, {5, 15, 25}, p).inverse()).shifted(4).truncated(prec);
}

QSeries A_term(Workspace& ws, int which, Exp prec) {
    Exp p = prec + PAD;
    switch (which) {
    case 0: return (J(ws, {15, 15}, p) * ws.poch(50, 50, p) * J(ws, {5, 10, 20}, p).inverse()).truncated(prec);
    case 1: return (J(ws, {5}, p) * ws.poch(50, 50, p) * J(ws, {10, 20}, p).inverse()).shifted(6).truncated(prec);
    case 2: return (J(ws, {25}, p) * ws.poch(50, 50, p) * J(ws, {10, 20}, p).inverse()).shifted(2).truncated(prec);
    case 3:
        // the minus sign is forced by the residue-class bookkeeping (the
        // class-3 bracket identity pins it); see the q^3-shifted term of BR4
        return (-(J(ws, {15}, p) * ws.poch(50, 50, p) * J(ws, {10, 20}, p).inverse()))
            .shifted(3)
            .truncated(prec);
    case 4:
        return (-(J(ws, {5, 5}, p) * ws.poch(50, 50, p) * J(ws, {10, 15, 20}, p).inverse()))
            .shifted(9)
            .truncated(prec);
    }
    fail(errc::domain, "A_term index out of range");
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;

    // the twenty U-operator identities
    const char* group_statements[4] = {
        "U5(Z t^k) as an integer polynomial in t and rho",
        "U5(Z rho t^k) as an integer polynomial in t and rho",
        "U5(H t^k) as an integer polynomial in t and rho",
        "U5(H rho t^k) as an integer polynomial in t and rho",
    };
    for (int g = 0; g < 4; ++g) {
        int i = g / 2, j = g % 2;
        for (int idx = 1; idx <= 5; ++idx) {
            Exp k = 1 - idx;
            CatalogEntry e;
            e.name = "G" + std::to_string(g + 1) + "." + std::to_string(idx);
            e.statement = std::string(group_statements[g]) + ", k = " + std::to_string(k);
            e.prec_class = PrecClass::group;
            e.period = 10;
            e.sides = [i, j, k](Workspace& ws, Exp prec) -> Sides {
                return {u_ij(ws, i, j, k, prec), group_rhs(i, j, k).evaluate(ws, prec)};
            };
            cat.push_back(std::move(e));
        }
    }

    auto add = [&](std::string name, std::string statement, PrecClass cls, Exp period,
                   std::function<Sides(Workspace&, Exp)> sides) {
        cat.push_back({std::move(name), std::move(statement), cls, period, std::move(sides)});
    };

    add("LEPP1", "odd-spaced Lambert sum equals its 50-periodic residue form plus P3 + P4", PrecClass::period50, 50,
        [](Workspace& ws, Exp prec) -> Sides {
            Exp p = prec + PAD;
            QSeries lhs = lambert_expand(lam(3, 7, 3, 10, 5), prec);
            QSeries factor = ws.poch(2, 2, p) * ws.poch(50, 50, p).inverse();
            QSeries rhs = (factor * lambert_expand(lam(75, 125, 49, 50, 35), p)).truncated(prec) +
                          P3(ws, prec) + P4(ws, prec);
            return {lhs, rhs};
        });
    add("LEPP2", "companion Lambert sum equals minus its residue form plus P0 - P4", PrecClass::period50, 50,
        [](Workspace& ws, Exp prec) -> Sides {
            Exp p = prec + PAD;
            QSeries lhs = lambert_expand(lam(3, 5, 2, 10, 5), prec);
            QSeries factor = ws.poch(2, 2, p) * ws.poch(50, 50, p).inverse();
            QSeries rhs = (-(factor * lambert_expand(lam(75, 25, 0, 50, 5), p))).truncated(prec) +
                          P0(ws, prec) - P4(ws, prec);
            return {lhs, rhs};
        });
    add("S41", "S4 - S1 = ([20]/q^2[10]) S5 + P4", PrecClass::period50, 50, [](Workspace& ws, Exp prec) -> Sides {
        Exp p = prec + PAD;
        QSeries lhs = lambert_expand(S4, prec) - lambert_expand(S1, prec);
        QSeries coef = (J(ws, {20}, p) * J(ws, {10}, p).inverse()).shifted(-2);
        QSeries rhs = (coef * lambert_expand(S5, p)).truncated(prec) + P4(ws, prec);
        return {lhs, rhs};
    });
    add("S32", "S3 - S2 = (q^2[10]/[20]) S5 - P3", PrecClass::period50, 50, [](Workspace& ws, Exp prec) -> Sides {
        Exp p = prec + PAD;
        QSeries lhs = lambert_expand(S3, prec) - lambert_expand(S2, prec);
        QSeries coef = (J(ws, {10}, p) * J(ws, {20}, p).inverse()).shifted(2);
        QSeries rhs = (coef * lambert_expand(S5, p)).truncated(prec) - P3(ws, prec);
        return {lhs, rhs};
    });
    add("CHAN", "three-term partial-fraction split of (q^50;q^50)^2 / [q^-5,q^25,q^35; q^50]", PrecClass::period50,
        50, [](Workspace& ws, Exp prec) -> Sides {
            Exp p = prec + PAD;
            // [q^-5, q^25, q^35] = -q^-5 [q^5, q^25, q^35]
            QSeries lhs =
                (-(ws.poch(50, 50, p).pow(2) * J(ws, {5, 25, 35}, p).inverse())).shifted(5).truncated(prec);
            QSeries term1 = J(ws, {30, 40}, p).inverse() * lambert_expand(lam(75, 5, 0, 50, -5), p);
            // 1/[q^-30, q^10] = -q^30 / [q^30, q^10]
            QSeries term2 =
                (-(J(ws, {10, 30}, p).inverse() * lambert_expand(lam(75, 95, 0, 50, 25), p)))
                    .shifted(30);
            // 1/[q^-10, q^-40] = q^50 / [q^10, q^40]
            QSeries term3 =
                (J(ws, {10, 40}, p).inverse() * lambert_expand(lam(75, 125, 0, 50, 35), p))
                    .shifted(50);
            QSeries rhs = (term1 + term2 + term3).truncated(prec);
            return {lhs, rhs};
        });
    add("MAO", "(q^2;q^2) split into its three residue-class products mod 50", PrecClass::period50, 50,
        [](Workspace& ws, Exp prec) -> Sides {
            Exp p = prec + PAD;
            QSeries lhs = ws.poch(2, 2, prec);
            QSeries rhs = (J(ws, {20}, p) * ws.poch(50, 50, p) * J(ws, {10}, p).inverse() -
                           ws.poch(50, 50, p).shifted(2) -
                           (J(ws, {10}, p) * ws.poch(50, 50, p) * J(ws, {20}, p).inverse()).shifted(4))
                              .truncated(prec);
            return {lhs, rhs};
        });
    add("DISP", "1 - [20]/q^2[10] + q^2[10]/[20] = -(q^2;q^2)/(q^2 (q^50;q^50))", PrecClass::period50, 50,
        [](Workspace& ws, Exp prec) -> Sides {
            Exp p = prec + PAD;
            QSeries lhs = (QSeries::one(p + 2) - (J(ws, {20}, p) * J(ws, {10}, p).inverse()).shifted(-2) +
                           (J(ws, {10}, p) * J(ws, {20}, p).inverse()).shifted(2))
                              .truncated(prec);
            QSeries rhs =
                (-(ws.poch(2, 2, p) * ws.poch(50, 50, p).inverse())).shifted(-2).truncated(prec);
            return {lhs, rhs};
        });
    add("LEAA", "(P0 - P3 - 2 P4)/(q^2;q^2) = A0 + A1 + A2 + A3 + A4", PrecClass::period50, 50,
        [](Workspace& ws, Exp prec) -> Sides {
            Exp p = prec + PAD;
            QSeries combo = P0(ws, p) - P3(ws, p) - P4(ws, p).scaled(2);
            QSeries lhs = (combo * ws.poch(2, 2, p).inverse()).truncated(prec);
            QSeries rhs = (A_term(ws, 0, prec) + A_term(ws, 1, prec) + A_term(ws, 2, prec) +
                           A_term(ws, 3, prec) + A_term(ws, 4, prec))
                              .truncated(prec);
            return {lhs, rhs};
        });

    auto bracket_combo = [](Workspace& ws, Exp prec,
                            std::vector<std::tuple<int, Exp, std::vector<Exp>, std::vector<Exp>>>
                                terms) -> QSeries {
        // sum of sign * q^shift * [num]/[den]
        Exp p = prec + PAD;
        std::optional<QSeries> acc;
        for (auto& [sign, shift, num, den] : terms) {
            QSeries t = J(ws, {}, p);
            if (!num.empty()) t = J(ws, num, p);
            if (!den.empty()) t = t * J(ws, den, p).inverse();
            t = t.shifted(shift);
            if (sign < 0) t = -t;
            acc = acc ? (*acc + t) : t;
        }
        return acc->truncated(prec);
    };

    add("BR1", "[15,15]/[5,10,10] + q^5[15]/[10,20] - q^10[5]/[20,20] = [10,20]/[5,5,15]", PrecClass::period50, 50,
        [bracket_combo](Workspace& ws, Exp prec) -> Sides {
            QSeries lhs = bracket_combo(ws, prec,
                                        {{+1, 0, {15, 15}, {5, 10, 10}},
                                         {+1, 5, {15}, {10, 20}},
                                         {-1, 10, {5}, {20, 20}}});
            QSeries rhs = bracket_combo(ws, prec, {{+1, 0, {10, 20}, {5, 5, 15}}});
            return {lhs, rhs};
        });
    add("BR2", "q^6[5]/[10,10] + q^11[5,5]/[10,15,20] - q^6[25]/[20,20] = 0", PrecClass::period50, 50,
        [bracket_combo](Workspace& ws, Exp prec) -> Sides {
            QSeries lhs = bracket_combo(ws, prec,
                                        {{+1, 6, {5}, {10, 10}},
                                         {+1, 11, {5, 5}, {10, 15, 20}},
                                         {-1, 6, {25}, {20, 20}}});
            return {lhs, QSeries::zero(prec)};
        });
    add("BR3", "q^2[25]/[10,10] - q^2[15,15]/[5,10,20] + q^7[15]/[20,20] = 0", PrecClass::period50, 50,
        [bracket_combo](Workspace& ws, Exp prec) -> Sides {
            QSeries lhs = bracket_combo(ws, prec,
                                        {{+1, 2, {25}, {10, 10}},
                                         {-1, 2, {15, 15}, {5, 10, 20}},
                                         {+1, 7, {15}, {20, 20}}});
            return {lhs, QSeries::zero(prec)};
        });
    add("BR4", "q^3[15]/[10,10] + q^8[5]/[10,20] - q^13[5,5]/[15,20,20] = q^3[10,20]/[5,15,15]",
        PrecClass::period50, 50, [bracket_combo](Workspace& ws, Exp prec) -> Sides {
            QSeries lhs = bracket_combo(ws, prec,
                                        {{+1, 3, {15}, {10, 10}},
                                         {+1, 8, {5}, {10, 20}},
                                         {-1, 13, {5, 5}, {15, 20, 20}}});
            QSeries rhs = bracket_combo(ws, prec, {{+1, 3, {10, 20}, {5, 15, 15}}});
            return {lhs, rhs};
        });
    add("BR5",
        "q^9[5,5]/[10,10,15] + q^4[25]/[10,20] + q^4[15,15]/[5,20,20] = 2 q^4[10,20]/[5,15,25]",
        PrecClass::period50, 50, [bracket_combo](Workspace& ws, Exp prec) -> Sides {
            QSeries lhs = bracket_combo(ws, prec,
                                        {{+1, 9, {5, 5}, {10, 10, 15}},
                                         {+1, 4, {25}, {10, 20}},
                                         {+1, 4, {15, 15}, {5, 20, 20}}});
            QSeries rhs = bracket_combo(ws, prec, {{+1, 4, {10, 20}, {5, 15, 25}}}).scaled(2);
            return {lhs, rhs};
        });
    add("PP51",
        "q^10[5,5,10,10] - [15,15,20,20] = q^5[5,10,15,20] - [10,10,10,20,20,20]/[5,15]", PrecClass::period50, 50,
        [bracket_combo](Workspace& ws, Exp prec) -> Sides {
            QSeries lhs = bracket_combo(ws, prec,
                                        {{+1, 10, {5, 5, 10, 10}, {}}, {-1, 0, {15, 15, 20, 20}, {}}});
            QSeries rhs = bracket_combo(
                ws, prec,
                {{+1, 5, {5, 10, 15, 20}, {}}, {-1, 0, {10, 10, 10, 20, 20, 20}, {5, 15}}});
            return {lhs, rhs};
        });
    add("PP52", "[15,15,20,20] - [10,20,25,25] = q^10[5,5,10,10]", PrecClass::period50, 50,
        [bracket_combo](Workspace& ws, Exp prec) -> Sides {
            QSeries lhs = bracket_combo(ws, prec,
                                        {{+1, 0, {15, 15, 20, 20}, {}}, {-1, 0, {10, 20, 25, 25}, {}}});
            QSeries rhs = bracket_combo(ws, prec, {{+1, 10, {5, 5, 10, 10}, {}}});
            return {lhs, rhs};
        });
    add("CHU1", "quadruple-bracket difference at (A,b,c,d,e) = (45,10,30,25,25) mod 50", PrecClass::period50, 50,
        [bracket_combo](Workspace& ws, Exp prec) -> Sides {
            QSeries lhs = bracket_combo(ws, prec,
                                        {{+1, 0, {35, 15, 20, 20}, {}}, {-1, 0, {10, 30, 25, 25}, {}}});
            QSeries rhs = bracket_combo(ws, prec, {{+1, 10, {45, 5, 10, 10}, {}}});
            return {lhs, rhs};
        });
    add("CHU2", "quadruple-bracket difference at (A,b,c,d,e) = (45,5,35,25,25) mod 50", PrecClass::period50, 50,
        [bracket_combo](Workspace& ws, Exp prec) -> Sides {
            QSeries lhs = bracket_combo(ws, prec,
                                        {{+1, 0, {40, 10, 20, 20}, {}}, {-1, 0, {5, 35, 25, 25}, {}}});
            QSeries rhs = bracket_combo(ws, prec, {{+1, 5, {45, 5, 15, 15}, {}}});
            return {lhs, rhs};
        });
    add("PAA", "rank-difference generating function in its 50-periodic product form", PrecClass::period50, 50,
        [](Workspace& ws, Exp prec) -> Sides {
            Exp p = prec + PAD;
            QSeries diff = lambert_expand(lam(3, 5, 2, 10, 5), p) - lambert_expand(lam(3, 7, 3, 10, 5), p);
            QSeries lhs = (diff * ws.poch(2, 2, p).inverse()).truncated(prec);
            // both period-50 sums enter negated: the first inherits the minus
            // of the companion Lambert identity when it is substituted in
            QSeries tail = -(lambert_expand(lam(75, 25, 0, 50, 5), p) +
                             lambert_expand(lam(75, 125, 49, 50, 35), p));
            QSeries rhs = (tail * ws.poch(50, 50, p).inverse()).truncated(prec) + A_term(ws, 0, prec) +
                          A_term(ws, 1, prec) + A_term(ws, 2, prec) + A_term(ws, 3, prec) +
                          A_term(ws, 4, prec);
            return {lhs, rhs};
        });
    add("T2", "N0(1,5,5n+2) - N0(2,5,5n+2) generating series equals (q^5;q^5)^2/(q^2;q^2)",
        PrecClass::oracle, 5,
        [](Workspace& ws, Exp prec) -> Sides {
            const RankTable& table = ws.ranks(5 * (prec - 1) + 2);
            QSeries lhs = rank_diff_series(table, 1, 2, 5, 5, 2, prec);
            return {lhs, ws.e_series(prec)};
        });

    return cat;
}

Report compare_sides(const std::string& name, const QSeries& lhs, const QSeries& rhs, Exp prec,
                     Exp period, std::chrono::steady_clock::time_point start) {
    Report rep;
    rep.name = name;
    rep.precision = prec;
    rep.period = period;
    rep.margin_periods = prec / period;
    if (lhs.precision() < prec || rhs.precision() < prec)
        fail(errc::degenerate_precision, "entry " + name + " built sides short of q^" +
                                             std::to_string(prec));
    auto m = lhs.first_mismatch(rhs);
    if (m && *m < prec) {
        rep.pass = false;
        rep.first_mismatch = Mismatch{*m, lhs.coeff(*m), rhs.coeff(*m)};
    } else {
        rep.pass = true;
    }
    rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                   start)
                 .count();
    return rep;
}

} // namespace

Exp CatalogEntry::default_prec(const Workspace& ws) const {
    switch (prec_class) {
    case PrecClass::group: return ws.options().group_prec;
    case PrecClass::period50: return ws.options().s3_prec;
    case PrecClass::oracle: return ws.options().oracle_prec;
    }
    return ws.options().s3_prec;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    fail(errc::unknown_name, "no catalog entry named '" + name + "'");
}

Report verify(Workspace& ws, const std::string& name, std::optional<Exp> prec) {
    const CatalogEntry& e = catalog_entry(name);
    Exp p = prec.value_or(e.default_prec(ws));
    auto start = std::chrono::steady_clock::now();
    auto [lhs, rhs] = e.sides(ws, p);
    return compare_sides(e.name, lhs, rhs, p, e.period, start);
}

std::vector<Report> verify_all(Workspace& ws, std::optional<Exp> prec) {
    std::vector<Report> out;
    for (const auto& e : catalog()) out.push_back(verify(ws, e.name, prec));
    return out;
}

Report negative_control(Workspace& ws, const std::string& name, std::optional<Exp> prec,
                        std::optional<Exp> perturb_exponent) {
    const CatalogEntry& e = catalog_entry(name);
    Exp p = prec.value_or(e.default_prec(ws));
    auto start = std::chrono::steady_clock::now();
    auto [lhs, rhs] = e.sides(ws, p);
    Exp where = perturb_exponent.value_or(p - 1);
    if (where >= p) fail(errc::domain, "perturbation exponent outside the compared range");
    QSeries corrupted = rhs.plus_term(1, where);
    Report rep = compare_sides(e.name + "#control", lhs, corrupted, p, e.period, start);
    return rep;
}

Report check_congruence_e(Workspace& ws, Exp alpha, Exp n_count) {
    if (alpha < 1 || n_count < 1) fail(errc::domain, "alpha and n_count must be >= 1");
    Exp lam = lambda_value(alpha);
    Exp p5 = 1;
    for (Exp i = 0; i < alpha; ++i) p5 *= 5;
    Exp modulus_pow = (alpha + 1) / 2;
    auto start = std::chrono::steady_clock::now();
    Exp e_prec = p5 * (n_count - 1) + lam + 1;
    QSeries e = ws.e_series(e_prec);
    Report rep;
    rep.name = "conen(alpha=" + std::to_string(alpha) + ")";
    rep.precision = e_prec;
    rep.period = 1;
    rep.margin_periods = e_prec;
    rep.pass = true;
    for (Exp n = 0; n < n_count; ++n) {
        Exp arg = p5 * n + lam;
        const Int& value = e.coeff(arg);
        if (!padic_at_least(value, modulus_pow)) {
            rep.pass = false;
            rep.first_mismatch = Mismatch{arg, value, Int(0)};
            break;
        }
    }
    rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                   start)
                 .count();
    return rep;
}

Report check_theorem_main(Workspace& ws, Exp alpha, Exp n_count) {
    if (alpha < 1 || n_count < 1) fail(errc::domain, "alpha and n_count must be >= 1");
    Exp lam = lambda_value(alpha);
    Exp p5 = 1;
    for (Exp i = 0; i < alpha + 1; ++i) p5 *= 5;
    Exp largest = p5 * (n_count - 1) + 5 * lam + 2;
    if (largest > ws.options().oracle_budget) {
        Exp feasible = floor_div(ws.options().oracle_budget - 5 * lam - 2, p5) + 1;
        fail(errc::budget,
             "odd-rank oracle needed up to n = " + std::to_string(largest) + " (budget " +
                 std::to_string(ws.options().oracle_budget) + "); " +
                 (feasible >= 1 ? "feasible count is " + std::to_string(feasible) + "; " : "") +
                 "use the e-series congruence route for larger alpha");
    }
    Exp modulus_pow = (alpha + 1) / 2;
    Int modulus = pow5(static_cast<unsigned long>(modulus_pow));
    auto start = std::chrono::steady_clock::now();
    const RankTable& table = ws.ranks(largest);
    Report rep;
    rep.name = "thmain(alpha=" + std::to_string(alpha) + ")";
    rep.precision = n_count;
    rep.period = 1;
    rep.margin_periods = n_count;
    rep.pass = true;
    for (Exp n = 0; n < n_count; ++n) {
        Exp arg = p5 * n + 5 * lam + 2;
        Int lhs = n0(table, 1, 5, arg);
        Int rhs = n0(table, 2, 5, arg);
        if ((lhs - rhs) % modulus != 0) {
            rep.pass = false;
            rep.first_mismatch = Mismatch{arg, lhs, rhs};
            break;
        }
    }
    rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                   start)
                 .count();
    return rep;
}

std::string reports_to_json(const std::vector<Report>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json j;
        j["name"] = r.name;
        j["precision"] = r.precision;
        j["pass"] = r.pass;
        if (r.first_mismatch) {
            j["first_mismatch"] = {{"exponent", r.first_mismatch->exponent},
                                   {"lhs", r.first_mismatch->lhs.get_str()},
                                   {"rhs", r.first_mismatch->rhs.get_str()}};
        } else {
            j["first_mismatch"] = nullptr;
        }
        j["period"] = r.period;
        j["margin_periods"] = r.margin_periods;
        j["ms"] = r.ms;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::vector<Report> reports_from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    std::vector<Report> out;
    for (const auto& j : arr) {
        Report r;
        r.name = j.at("name").get<std::string>();
        r.precision = j.at("precision").get<Exp>();
        r.pass = j.at("pass").get<bool>();
        if (!j.at("first_mismatch").is_null()) {
            Mismatch m;
            m.exponent = j.at("first_mismatch").at("exponent").get<Exp>();
            m.lhs = Int(j.at("first_mismatch").at("lhs").get<std::string>());
            m.rhs = Int(j.at("first_mismatch").at("rhs").get<std::string>());
            r.first_mismatch = std::move(m);
        }
        r.period = j.at("period").get<Exp>();
        r.margin_periods = j.at("margin_periods").get<Exp>();
        r.ms = j.at("ms").get<long long>();
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace oddrank
