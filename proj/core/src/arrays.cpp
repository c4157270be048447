#include "oddrank/arrays.hpp"

#include <algorithm>
#include <string>

namespace oddrank {

namespace {

const Int zero_int = 0;

// Eq. (2.17)-style recurrence: m(k,n) = sum coeff * m(k - dk, n - dn)
struct RecTerm {
    Exp dk, dn;
    long coeff;
};
const RecTerm rec_terms[] = {
    {1, 1, 175}, {1, 2, 3500}, {1, 3, 34375}, {1, 4, 156250}, {1, 5, 390625},
    {2, 1, 140}, {2, 2, 1375}, {2, 3, 6250},  {2, 4, 15625},
    {3, 1, 55},  {3, 2, 250},  {3, 3, 625},
    {4, 1, 10},  {4, 2, 25},
    {5, 1, 1},
};
// widest n-shift per k-step, for support bounds
const Exp rec_width[6] = {0, 5, 4, 3, 2, 1};

} // namespace

std::optional<Exp> padic5(const Int& x) {
    if (x == 0) return std::nullopt;
    Int tmp;
    static const Int five = 5;
    mp_bitcnt_t v = mpz_remove(tmp.get_mpz_t(), x.get_mpz_t(), five.get_mpz_t());
    return static_cast<Exp>(v);
}

bool padic_at_least(const Int& x, Exp bound) {
    auto v = padic5(x);
    return !v || *v >= bound;
}

const char* family_name(Family f) {
    static const char* names[8] = {"a00", "a01", "a10", "a11", "b00", "b01", "b10", "b11"};
    return names[static_cast<int>(f)];
}

std::optional<Family> family_from_name(const std::string& name) {
    for (int i = 0; i < 8; ++i)
        if (name == family_name(static_cast<Family>(i))) return static_cast<Family>(i);
    return std::nullopt;
}

Family a_family(int i, int j) { return static_cast<Family>(2 * i + j); }
Family b_family(int i, int j) { return static_cast<Family>(4 + 2 * i + j); }

const Int& Row::at(Exp n) const {
    if (n < lo) return zero_int;
    if (n < hi()) return v[static_cast<std::size_t>(n - lo)];
    if (complete) return zero_int;
    fail(errc::coverage, "array row read at n = " + std::to_string(n) +
                             " beyond the built window (hi = " + std::to_string(hi()) + ")");
}

bool Row::is_zero() const {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Exp ArrayStore::support_shift(int i, int j) {
    if (i == 0) return j == 0 ? -1 : -2;
    return j == 0 ? 4 : 3;
}

Exp ArrayStore::support_shift(Family f) {
    int idx = static_cast<int>(f) % 4;
    return support_shift(idx / 2, idx % 2);
}

Exp ArrayStore::lower_support(Family f, Exp k) { return ceil_div(k - support_shift(f), 5); }

ArrayStore::ArrayStore() { seed(); }

void ArrayStore::seed() {
    for (auto& m : rows_) m.clear();
    for (auto& m : ub_) m.clear();
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j)
            for (Exp k = -4; k <= 0; ++k) {
                const TRhoExpr& e = group_rhs(i, j, k);
                auto make_row = [](const std::map<Exp, Int>& c) {
                    Row row;
                    if (c.empty()) {
                        row.lo = 0;
                        row.v = {};
                        row.complete = true;
                        return row;
                    }
                    row.lo = c.begin()->first;
                    Exp hi = c.rbegin()->first;
                    row.v.assign(static_cast<std::size_t>(hi - row.lo + 1), Int(0));
                    for (auto& [n, x] : c) row.v[static_cast<std::size_t>(n - row.lo)] = x;
                    row.complete = true;
                    return row;
                };
                rows_[static_cast<int>(a_family(i, j))][k] = make_row(e.p);
                rows_[static_cast<int>(b_family(i, j))][k] = make_row(e.r);
            }
    for (int f = 0; f < 8; ++f)
        for (Exp k = -4; k <= 0; ++k) {
            const Row& r = rows_[f].at(k);
            ub_[f][k] = r.v.empty() ? r.lo - 1 : r.hi() - 1;
        }
    built_lo_ = -4;
    built_hi_ = 0;
}

Exp ArrayStore::upper_bound(Family f, Exp k) {
    if (k < -4) fail(errc::coverage, "support bounds are tracked for k >= -4 only");
    auto& ub = ub_[static_cast<int>(f)];
    for (Exp kk = ub.rbegin()->first + 1; kk <= k; ++kk) {
        Exp best = exp_min;
        for (Exp dk = 1; dk <= 5; ++dk) best = std::max(best, ub.at(kk - dk) + rec_width[dk]);
        ub[kk] = best;
    }
    return ub.at(k);
}

void ArrayStore::build_up(Exp k) {
    for (int f = 0; f < 8; ++f) {
        Family fam = static_cast<Family>(f);
        auto& rows = rows_[f];
        Exp lo = rows.at(k - 1).lo + 1;
        for (Exp dk = 2; dk <= 5; ++dk) lo = std::min(lo, rows.at(k - dk).lo + 1);
        Exp hi = std::min(upper_bound(fam, k), n_cap_);
        Row row;
        row.lo = lo;
        row.complete = upper_bound(fam, k) <= n_cap_;
        if (hi < lo) {
            row.v = {};
            rows[k] = std::move(row);
            continue;
        }
        row.v.assign(static_cast<std::size_t>(hi - lo + 1), Int(0));
        for (Exp n = lo; n <= hi; ++n) {
            Int& dst = row.v[static_cast<std::size_t>(n - lo)];
            for (const auto& t : rec_terms) {
                const Int& src = rows.at(k - t.dk).at(n - t.dn);
                if (src != 0) dst += t.coeff * src;
            }
        }
        rows[k] = std::move(row);
    }
}

void ArrayStore::build_down(Exp k) {
    // solve m(k, n-1) = m(k+5, n) - (all terms from rows k+1 .. k+4)
    for (int f = 0; f < 8; ++f) {
        auto& rows = rows_[f];
        const Row& top = rows.at(k + 5);
        for (Exp dk = 1; dk <= 4; ++dk)
            if (!rows.at(k + 5 - dk).complete)
                fail(errc::coverage, "downward extension needs complete source rows");
        if (!top.complete) fail(errc::coverage, "downward extension needs complete source rows");

        Exp lo = top.lo - 1;
        Exp hi = top.hi() - 2;
        for (Exp dk = 1; dk <= 4; ++dk) {
            const Row& src = rows.at(k + 5 - dk);
            lo = std::min(lo, src.lo);
            hi = std::max(hi, src.hi() + rec_width[dk] - 2);
        }
        Row row;
        row.complete = true;
        if (hi < lo) {
            row.lo = 0;
            row.v = {};
            rows[k] = std::move(row);
            continue;
        }
        row.lo = lo;
        row.v.assign(static_cast<std::size_t>(hi - lo + 1), Int(0));
        for (Exp n1 = lo; n1 <= hi; ++n1) {
            Exp n = n1 + 1; // index into row k+5 relation
            Int val = top.at(n);
            for (const auto& t : rec_terms) {
                if (t.dk == 5) continue;
                const Int& src = rows.at(k + 5 - t.dk).at(n - t.dn);
                if (src != 0) val -= t.coeff * src;
            }
            row.v[static_cast<std::size_t>(n1 - lo)] = std::move(val);
        }
        // trim zero edges so supports stay honest
        Exp first = row.lo, last = row.hi() - 1;
        while (first <= last && row.at(first) == 0) ++first;
        while (last >= first && row.at(last) == 0) --last;
        if (first > last) {
            row.lo = 0;
            row.v = {};
        } else {
            std::vector<Int> trimmed(row.v.begin() + static_cast<std::size_t>(first - row.lo),
                                     row.v.begin() + static_cast<std::size_t>(last - row.lo + 1));
            row.v = std::move(trimmed);
            row.lo = first;
        }
        rows[k] = std::move(row);
    }
}

void ArrayStore::ensure(Exp k_min, Exp k_max, Exp n_cap) {
    if (n_cap > n_cap_) {
        Exp keep_lo = built_lo_, keep_hi = built_hi_;
        seed();
        n_cap_ = n_cap;
        ensure(std::min(k_min, keep_lo), std::max(k_max, keep_hi), n_cap);
        return;
    }
    for (Exp k = built_hi_ + 1; k <= k_max; ++k) build_up(k);
    built_hi_ = std::max(built_hi_, k_max);
    for (Exp k = built_lo_ - 1; k >= k_min; --k) build_down(k);
    built_lo_ = std::min(built_lo_, k_min);
}

const Row& ArrayStore::row(Family f, Exp k) const {
    const auto& rows = rows_[static_cast<int>(f)];
    auto it = rows.find(k);
    if (it == rows.end())
        fail(errc::coverage, std::string("row k = ") + std::to_string(k) + " of " +
                                 family_name(f) + " is not built; call ensure() first");
    return it->second;
}

TRhoExpr ArrayStore::row_expr(int i, int j, Exp k) const {
    TRhoExpr e;
    const Row& a = row(a_family(i, j), k);
    const Row& b = row(b_family(i, j), k);
    for (Exp n = a.lo; n < a.hi(); ++n)
        if (a.at(n) != 0) e.p[n] = a.at(n);
    for (Exp n = b.lo; n < b.hi(); ++n)
        if (b.at(n) != 0) e.r[n] = b.at(n);
    return e;
}

Exp lepi_bound(Family f, Exp k, Exp n) {
    static const Exp gamma[8] = {-2, -3, 2, 2, -1, 0, 5, 4}; // a00 a01 a10 a11 b00 b01 b10 b11
    return floor_div(5 * n - k + gamma[static_cast<int>(f)], 3);
}

bool LepiReport::pass() const {
    if (!seed_strip_ok) return false;
    return std::all_of(families.begin(), families.end(),
                       [](const ValuationReport& r) { return r.pass; });
}

namespace {

ValuationReport audit_family(ArrayStore& store, Family f, Exp k_lo, Exp k_hi, Exp n_hi) {
    ValuationReport rep;
    rep.family = family_name(f);
    rep.k_lo = k_lo;
    rep.k_hi = k_hi;
    rep.n_hi = n_hi;
    rep.n_lo = n_hi;
    for (Exp k = k_lo; k <= k_hi; ++k) {
        const Row& row = store.row(f, k);
        rep.n_lo = std::min(rep.n_lo, row.lo);
        for (Exp n = row.lo; n < row.hi() && n <= n_hi; ++n) {
            const Int& x = row.at(n);
            ++rep.checked;
            auto v = padic5(x);
            if (!v) continue; // zero entry, pi = +infinity
            Exp slack = *v - lepi_bound(f, k, n);
            if (!rep.min_slack || slack < *rep.min_slack) {
                rep.min_slack = slack;
                rep.worst_k = k;
                rep.worst_n = n;
            }
        }
    }
    rep.pass = !rep.min_slack || *rep.min_slack >= 0;
    return rep;
}

} // namespace

LepiReport check_lepi(ArrayStore& store, Exp k_lo, Exp k_hi, Exp n_hi) {
    store.ensure(std::min<Exp>(k_lo, -4), std::max<Exp>(k_hi, 0), std::max(n_hi, store.n_cap()));
    LepiReport rep;
    for (int f = 0; f < 8; ++f)
        rep.families.push_back(audit_family(store, static_cast<Family>(f), k_lo, k_hi, n_hi));
    // induction base: the bounds on five consecutive rows (the seed strip)
    rep.seed_strip_ok = true;
    for (int f = 0; f < 8; ++f) {
        auto r = audit_family(store, static_cast<Family>(f), -4, 0, n_hi);
        if (!r.pass) rep.seed_strip_ok = false;
    }
    return rep;
}

CdArrays cd_arrays(ArrayStore& store, Exp alpha_max, Exp final_cap) {
    if (alpha_max < 1) fail(errc::domain, "alpha_max must be >= 1");
    if (final_cap < 2) final_cap = 2;

    // natural support bounds per level
    std::map<Exp, Exp> support;
    support[1] = 2;
    for (Exp alpha = 2; alpha <= alpha_max; ++alpha) {
        bool even = alpha % 2 == 0;
        Exp k_lo = even ? 1 : 0;
        Exp best = 0;
        for (Exp k = k_lo; k <= support[alpha - 1]; ++k) {
            for (Family f : even ? std::array<Family, 4>{Family::a10, Family::a11, Family::b10,
                                                         Family::b11}
                                 : std::array<Family, 4>{Family::a00, Family::a01, Family::b00,
                                                         Family::b01})
                best = std::max(best, store.upper_bound(f, k));
        }
        support[alpha] = best;
    }

    // windows: level alpha exact for n <= window[alpha]
    CdArrays out;
    out.alpha_max = alpha_max;
    out.window[alpha_max] = std::min(final_cap, support[alpha_max]);
    for (Exp alpha = alpha_max - 1; alpha >= 1; --alpha)
        out.window[alpha] = std::min(support[alpha], 5 * out.window[alpha + 1] + 4);

    Exp k_need = 0, n_need = 0;
    for (Exp alpha = 2; alpha <= alpha_max; ++alpha) {
        k_need = std::max(k_need, out.window[alpha - 1]);
        n_need = std::max(n_need, out.window[alpha]);
    }
    store.ensure(-4, std::max<Exp>(k_need, 0), std::max(n_need, store.n_cap()));

    // level 1 is literal: c = 5t + 25t^2, d = -5t
    {
        Row c1;
        c1.lo = 1;
        c1.v = {Int(5), Int(25)};
        c1.complete = true;
        Row d1;
        d1.lo = 1;
        d1.v = {Int(-5)};
        d1.complete = true;
        out.c[1] = std::move(c1);
        out.d[1] = std::move(d1);
    }

    for (Exp alpha = 2; alpha <= alpha_max; ++alpha) {
        bool even = alpha % 2 == 0;
        Family fa0 = even ? Family::a10 : Family::a00;
        Family fa1 = even ? Family::a11 : Family::a01;
        Family fb0 = even ? Family::b10 : Family::b00;
        Family fb1 = even ? Family::b11 : Family::b01;
        Exp k_lo = even ? 1 : 0;
        const Row& pc = out.c.at(alpha - 1);
        const Row& pd = out.d.at(alpha - 1);
        Exp w_prev = out.window.at(alpha - 1);
        Exp w = out.window.at(alpha);

        Row rc, rd;
        rc.lo = 0;
        rd.lo = 0;
        rc.v.assign(static_cast<std::size_t>(w + 1), Int(0));
        rd.v.assign(static_cast<std::size_t>(w + 1), Int(0));
        rc.complete = w >= support.at(alpha);
        rd.complete = rc.complete;
        for (Exp n = 0; n <= w; ++n) {
            Int& cv = rc.v[static_cast<std::size_t>(n)];
            Int& dv = rd.v[static_cast<std::size_t>(n)];
            for (Exp k = k_lo; k <= w_prev; ++k) {
                const Int& ck = pc.at(k);
                const Int& dk = pd.at(k);
                if (ck != 0) {
                    const Int& a0 = store.row(fa0, k).at(n);
                    if (a0 != 0) cv += ck * a0;
                    const Int& b0 = store.row(fb0, k).at(n);
                    if (b0 != 0) dv += ck * b0;
                }
                if (dk != 0) {
                    const Int& a1 = store.row(fa1, k).at(n);
                    if (a1 != 0) cv += dk * a1;
                    const Int& b1 = store.row(fb1, k).at(n);
                    if (b1 != 0) dv += dk * b1;
                }
            }
        }
        out.c[alpha] = std::move(rc);
        out.d[alpha] = std::move(rd);
    }
    return out;
}

Exp lambda_value(Exp alpha) {
    if (alpha < 1) fail(errc::domain, "lambda is defined for alpha >= 1");
    if (alpha > 24) fail(errc::budget, "lambda overflows the exponent type for alpha > 24");
    Exp p = 1;
    for (Exp i = 0; i < alpha; ++i) p *= 5;
    return (alpha % 2 == 1) ? (2 * p - 1) / 3 : (p - 1) / 3;
}

Exp l2al_bound_c(Exp alpha, Exp n) {
    if (alpha % 2 == 1) return (alpha - 1) / 2 + floor_div(5 * n - 2, 3);
    return alpha / 2 + floor_div(5 * n + 1, 3);
}

Exp l2al_bound_d(Exp alpha, Exp n) {
    if (alpha % 2 == 1) return (alpha - 1) / 2 + floor_div(5 * n - 1, 3);
    return alpha / 2 + floor_div(5 * n + 3, 3);
}

std::vector<ValuationReport> check_l2al(const CdArrays& cd, std::optional<Exp> n_max) {
    std::vector<ValuationReport> reps;
    for (Exp alpha = 1; alpha <= cd.alpha_max; ++alpha) {
        for (int which = 0; which < 2; ++which) {
            const Row& row = which == 0 ? cd.c.at(alpha) : cd.d.at(alpha);
            ValuationReport rep;
            rep.family = which == 0 ? "c" : "d";
            rep.k_lo = rep.k_hi = alpha;
            rep.n_lo = row.lo;
            rep.n_hi = n_max ? std::min(*n_max, row.hi() - 1) : row.hi() - 1;
            for (Exp n = row.lo; n <= rep.n_hi; ++n) {
                const Int& x = row.at(n);
                ++rep.checked;
                auto v = padic5(x);
                if (!v) continue;
                Exp bound = which == 0 ? l2al_bound_c(alpha, n) : l2al_bound_d(alpha, n);
                Exp slack = *v - bound;
                if (!rep.min_slack || slack < *rep.min_slack) {
                    rep.min_slack = slack;
                    rep.worst_k = alpha;
                    rep.worst_n = n;
                }
            }
            rep.pass = !rep.min_slack || *rep.min_slack >= 0;
            reps.push_back(std::move(rep));
        }
    }
    return reps;
}

QSeries L_series(Workspace& ws, Exp alpha, Exp prec, LRoute route) {
    if (alpha < 0) fail(errc::domain, "alpha must be >= 0");
    if (alpha == 0) return QSeries::one(prec);

    switch (route) {
    case LRoute::definition: {
        Exp lam = lambda_value(alpha);
        Exp p5 = 1;
        for (Exp i = 0; i < alpha; ++i) p5 *= 5;
        bool odd = alpha % 2 == 1;
        Exp first = odd ? 1 : 0; // q-exponent of the n = 0 term
        Exp count = prec - first;
        if (count <= 0) return QSeries::zero(prec);
        Exp e_prec = p5 * (count - 1) + lam + 1;
        QSeries e = ws.e_series(e_prec);
        std::vector<Int> v(static_cast<std::size_t>(count));
        for (Exp n = 0; n < count; ++n) v[static_cast<std::size_t>(n)] = e.coeff(p5 * n + lam);
        QSeries tail(first, std::move(v));
        QSeries pref = odd ? ws.poch(10, 10, prec) * ws.poch(1, 1, prec).pow(-2)
                           : ws.poch(2, 2, prec) * ws.poch(5, 5, prec).pow(-2);
        return (pref * tail).truncated(prec);
    }
    case LRoute::u_recursion: {
        std::vector<Exp> target(static_cast<std::size_t>(alpha) + 1);
        target[static_cast<std::size_t>(alpha)] = prec;
        for (Exp s = alpha; s >= 1; --s) {
            Exp vw = (s % 2 == 1) ? 2 : -2;
            target[static_cast<std::size_t>(s - 1)] = 5 * target[static_cast<std::size_t>(s)] - 4 - vw;
        }
        QSeries L = QSeries::one(target[0]);
        for (Exp s = 1; s <= alpha; ++s) {
            Exp goal = 5 * target[static_cast<std::size_t>(s)] - 4;
            Exp pw = goal - L.valuation();
            QSeries W = (s % 2 == 1) ? ws.z(pw) : ws.h(pw);
            QSeries prod = W * L;
            L = u5(prod).truncated(target[static_cast<std::size_t>(s)]);
            if (L.precision() < target[static_cast<std::size_t>(s)])
                fail(errc::integrity, "u-recursion lost precision");
        }
        return L;
    }
    case LRoute::t_rho: {
        const CdArrays& cd = ws.cd(alpha, std::max<Exp>(prec, 2));
        if (!cd.c.at(alpha).complete && cd.window.at(alpha) < prec - 1)
            fail(errc::coverage, "c/d window too small for the requested precision");
        TRhoExpr expr;
        const Row& rc = cd.c.at(alpha);
        const Row& rd = cd.d.at(alpha);
        for (Exp n = rc.lo; n < rc.hi(); ++n)
            if (rc.at(n) != 0) expr.p[n] = rc.at(n);
        for (Exp n = rd.lo; n < rd.hi(); ++n)
            if (rd.at(n) != 0) expr.r[n] = rd.at(n);
        return expr.evaluate(ws, prec);
    }
    }
    fail(errc::domain, "unknown L route");
}

} // namespace oddrank
