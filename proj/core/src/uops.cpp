#include "oddrank/uops.hpp"

#include <algorithm>
#include <string>

namespace oddrank {

QSeries TRhoExpr::evaluate(Workspace& ws, Exp prec) const {
    auto part = [&](const std::map<Exp, Int>& coeffs) -> std::optional<QSeries> {
        std::optional<QSeries> acc;
        for (auto& [n, c] : coeffs) {
            if (c == 0 || n >= prec) continue; // t^n with n >= prec is invisible
            QSeries term = ws.t_power(n, prec).scaled(c);
            acc = acc ? (*acc + term) : term;
        }
        return acc;
    };
    auto p_part = part(p);
    auto r_part = part(r);
    if (r_part) {
        Exp pad = std::max<Exp>(0, -r_part->valuation());
        QSeries rr = ws.rho(prec + pad) * *r_part;
        p_part = p_part ? (*p_part + rr) : rr;
    }
    if (!p_part) return QSeries::zero(prec);
    return p_part->truncated(prec);
}

QSeries u5(const QSeries& f) { return f.extract_progression(5, 0); }

QSeries u_ij(Workspace& ws, int i, int j, Exp k, Exp prec) {
    if ((i != 0 && i != 1) || (j != 0 && j != 1)) fail(errc::domain, "u_ij needs i, j in {0, 1}");
    Exp inner = 5 * prec; // coefficient 5(prec-1) is the last one used
    QSeries w = ws.w_rho(i, j, inner - k);
    QSeries tk = ws.t_power(k, inner - w.valuation());
    QSeries product = w * tk;
    QSeries result = u5(product);
    if (result.precision() < prec)
        fail(errc::integrity, "internal precision fell short in u_ij");
    return result.truncated(prec);
}

namespace {

// Lemma-style reduction polynomials; coefficients are 5-power ladders
const TRhoExpr a_polys[5] = {
    {{{1, -1}}, {}},
    {{{1, -10}, {2, -25}}, {}},
    {{{1, -55}, {2, -250}, {3, -625}}, {}},
    {{{1, -140}, {2, -1375}, {3, -6250}, {4, -15625}}, {}},
    {{{1, -175}, {2, -3500}, {3, -34375}, {4, -156250}, {5, -390625}}, {}},
};

struct GroupTable {
    // index [k0 - k] for k = 0, -1, -2, -3, -4
    TRhoExpr rows[5];
};

const GroupTable group_tables[2][2] = {
    {
        // i = 0, j = 0
        {{
            {{{1, 5}, {2, 25}}, {{1, -5}}},
            {{{0, 1}, {1, 5}}, {{0, -1}}},
            {{{0, -3}, {1, -15}}, {{0, 4}, {1, -25}}},
            {{{0, -1}, {1, 100}, {2, 750}, {3, 3125}}, {{0, -5}, {1, 100}}},
            {{{0, 63}, {1, -825}, {2, -10625}, {3, -56250}, {4, -78125}},
             {{0, -50}, {1, 625}, {2, 6250}, {3, 31250}}},
        }},
        // i = 0, j = 1
        {{
            {{{1, -4}, {2, 25}, {3, -1875}, {4, -12500}, {5, -78125}},
             {{1, 40}, {2, 1500}, {3, 21875}, {4, 125000}, {5, 390625}}},
            {{{1, 5}}, {}},
            {{{0, 1}}, {}},
            {{{0, -7}, {1, 60}, {2, 875}, {3, 3125}}, {{0, 5}, {1, -100}, {2, -625}}},
            {{{0, 23}, {1, -475}, {2, -8125}, {3, -40625}, {4, -78125}},
             {{0, -30}, {1, 875}, {2, 6250}, {3, 15625}}},
        }},
    },
    {
        // i = 1, j = 0
        {{
            {{{0, -1}}, {}},
            {{{-1, 1}, {0, -5}, {1, -25}}, {{-1, -1}, {0, 25}}},
            {{{-1, -4}, {0, 20}, {2, -625}}, {{-1, 4}, {0, -100}}},
            {{{-1, 1}, {0, 250}, {1, 4375}, {2, 28125}, {3, 62500}},
             {{0, -250}, {1, -3125}, {2, -15625}}},
            {{{-1, 80}, {0, -2950}, {1, -43750}, {2, -281250}, {3, -781250}, {4, -390625}},
             {{-1, -90}, {0, 4750}, {1, 31250}, {2, 156250}}},
        }},
        // i = 1, j = 1
        {{
            {{{0, -2}}, {{0, 5}}},
            {{{0, -5}, {1, -25}}, {{0, 5}}},
            {{{-1, 1}, {0, -5}, {1, -125}, {2, -625}}, {{-1, -1}, {0, 25}, {1, 125}}},
            {{{-1, -8}, {0, 295}, {1, 4375}, {2, 25000}, {3, 62500}},
             {{-1, 9}, {0, -475}, {1, -3125}, {2, -12500}}},
            {{{-1, 29}, {0, -1675}, {1, -26250}, {2, -168750}, {3, -546875}, {4, -390625}},
             {{-1, -35}, {0, 2375}, {1, 18750}, {2, 93750}, {3, 78125}}},
        }},
    },
};

} // namespace

const TRhoExpr& a_l_poly(int l) {
    if (l < 0 || l > 4) fail(errc::domain, "a_l is defined for 0 <= l <= 4");
    return a_polys[l];
}

const TRhoExpr& group_rhs(int i, int j, Exp k) {
    if ((i != 0 && i != 1) || (j != 0 && j != 1)) fail(errc::domain, "group tables need i, j in {0, 1}");
    if (k > 0 || k < -4)
        fail(errc::domain, "group tables cover -4 <= k <= 0, got k = " + std::to_string(k));
    return group_tables[i][j].rows[-k];
}

bool reduce_check(Workspace& ws, int i, int j, Exp k, Exp prec) {
    QSeries lhs = u_ij(ws, i, j, k, prec);
    std::optional<QSeries> sum;
    for (int l = 0; l <= 4; ++l) {
        QSeries u = u_ij(ws, i, j, k + l - 5, prec + 2);
        Exp pad = std::max<Exp>(0, -u.valuation());
        QSeries term = a_l_poly(l).evaluate(ws, prec + pad + 1) * u;
        sum = sum ? (*sum + term) : term;
    }
    return lhs.equal_through(-*sum, prec);
}

} // namespace oddrank
