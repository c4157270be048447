#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddrank/qseries.hpp"
#include "oddrank/uops.hpp"
#include "oddrank/workspace.hpp"

namespace oddrank {

// 5-adic order; nullopt encodes pi(0) = +infinity, above every integer
std::optional<Exp> padic5(const Int& x);
bool padic_at_least(const Int& x, Exp bound);

enum class Family : int { a00 = 0, a01, a10, a11, b00, b01, b10, b11 };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
Family a_family(int i, int j);
Family b_family(int i, int j);

/* One row m(k, -) of a discrete array: entries for n in [lo, lo + size).
 * A complete row is known to vanish outside the stored range; an incomplete
 * one was clipped at the build cap and reads beyond it are refused. */
struct Row {
    Exp lo = 0;
    std::vector<Int> v;
    bool complete = true;

    Exp hi() const { return lo + static_cast<Exp>(v.size()); } // exclusive
    const Int& at(Exp n) const;
    bool is_zero() const;
};

/* The eight a/b families of Lemma-style discrete arrays. Rows -4..0 are the
 * transcribed seed data; other rows follow the five-term recurrence, run
 * upward as stated and downward by solving for the trailing m(k-5, n-1). */
class ArrayStore {
public:
    ArrayStore();

    // support shift s_ij: rows vanish below n = ceil((k - s_ij)/5)
    static Exp support_shift(int i, int j);
    static Exp support_shift(Family f);
    static Exp lower_support(Family f, Exp k);

    // structural upper bound for the stored support of row k (no bignums)
    Exp upper_bound(Family f, Exp k);

    /* make rows k_min..k_max available with entries exact for n <= n_cap;
     * growing the cap rebuilds the derived rows from the seeds */
    void ensure(Exp k_min, Exp k_max, Exp n_cap);

    const Row& row(Family f, Exp k) const; // errc::coverage if not built
    Exp built_lo() const { return built_lo_; }
    Exp built_hi() const { return built_hi_; }
    Exp n_cap() const { return n_cap_; }

    // evaluate row k of (a_ij, b_ij) as  sum a t^n + rho sum b t^n
    TRhoExpr row_expr(int i, int j, Exp k) const;

private:
    void seed();
    void build_up(Exp k);   // from rows k-5..k-1
    void build_down(Exp k); // from rows k+1..k+5

    std::array<std::map<Exp, Row>, 8> rows_;
    std::array<std::map<Exp, Exp>, 8> ub_; // structural upper bounds
    Exp built_lo_ = -4, built_hi_ = 0;
    Exp n_cap_ = 0;
};

/* Valuation audit of one family over a window: every stored entry is tested
 * against its floor bound; min_slack is empty when every entry was zero. */
struct ValuationReport {
    std::string family;
    Exp k_lo = 0, k_hi = 0;
    Exp n_lo = 0, n_hi = 0;
    long checked = 0;
    std::optional<Exp> min_slack;
    bool pass = true;
    Exp worst_k = 0, worst_n = 0;
};

// floor((5n - k + gamma_f)/3), the per-family valuation bound
Exp lepi_bound(Family f, Exp k, Exp n);

struct LepiReport {
    std::vector<ValuationReport> families; // one per a00..b11
    bool seed_strip_ok = false;            // bounds hold on five consecutive k
    bool pass() const;
};

// check all eight bounds for k in [k_lo, k_hi], n in [support, n_hi]
LepiReport check_lepi(ArrayStore& store, Exp k_lo, Exp k_hi, Exp n_hi);

/* The c/d arrays: row alpha is exact for n <= window[alpha]; deeper levels
 * are built on wider windows so the convolutions never read clipped data. */
struct CdArrays {
    std::map<Exp, Row> c, d;
    std::map<Exp, Exp> window;
    Exp alpha_max = 0;
};

CdArrays cd_arrays(ArrayStore& store, Exp alpha_max, Exp final_cap);

// lambda_alpha = (2*5^alpha - 1)/3 for odd alpha, (5^alpha - 1)/3 otherwise
Exp lambda_value(Exp alpha);

// valuation bounds of the c/d rows
Exp l2al_bound_c(Exp alpha, Exp n);
Exp l2al_bound_d(Exp alpha, Exp n);

// audit the c/d rows over their stored windows (n <= n_max when given)
std::vector<ValuationReport> check_l2al(const CdArrays& cd, std::optional<Exp> n_max = {});

enum class LRoute { definition, u_recursion, t_rho };

/* L_alpha through q^prec by one of three routes:
 *   definition  - the eta-prefactored e(5^alpha n + lambda_alpha) series
 *   u_recursion - L_{s+1} = U^(0,0) or U^(1,0) of L_s from L_0 = 1
 *   t_rho       - evaluate sum c(alpha,n) t^n + rho sum d(alpha,n) t^n */
QSeries L_series(Workspace& ws, Exp alpha, Exp prec, LRoute route);

} // namespace oddrank
