#pragma once

#include <map>

#include "oddrank/qseries.hpp"
#include "oddrank/workspace.hpp"

namespace oddrank {

/* Finite integer combination  sum_n p[n] t^n  +  rho * sum_n r[n] t^n,
 * with possibly negative exponents. Evaluates exactly to a QSeries. */
struct TRhoExpr {
    std::map<Exp, Int> p;
    std::map<Exp, Int> r;

    QSeries evaluate(Workspace& ws, Exp prec) const;

    bool operator==(const TRhoExpr&) const = default;
};

// U_5 on q-expansions: sum a(n) q^n -> sum a(5n) q^n
QSeries u5(const QSeries& f);

/* U^(i,j)(t^k) = U_5( (i == 0 ? Z : H) * rho^j * t^k ) through q^prec.
 * Internal expansion precision is raised to cover the negative valuations of
 * H and t^k, so the result is exact on the full window. */
QSeries u_ij(Workspace& ws, int i, int j, Exp k, Exp prec);

// the reduction polynomials a_0 .. a_4 (pure t-polynomials)
const TRhoExpr& a_l_poly(int l);

// tabulated right sides of the twenty U^(i,j)(t^k) identities, -4 <= k <= 0
const TRhoExpr& group_rhs(int i, int j, Exp k);

/* check U^(i,j)(t^k) = - sum_{l=0..4} a_l(t) U^(i,j)(t^(k+l-5)) through q^prec */
bool reduce_check(Workspace& ws, int i, int j, Exp k, Exp prec);

} // namespace oddrank
