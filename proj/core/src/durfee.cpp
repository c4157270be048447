#include "oddrank/durfee.hpp"

#include <algorithm>
#include <string>

#include "oddrank/lambert.hpp"
#include "oddrank/products.hpp"

namespace oddrank {

namespace {
const Int zero_int = 0;
}

Int OddDurfeeCount::total() const {
    Int t = 0;
    for (auto& [r, c] : counts) {
        (void)r;
        t += c;
    }
    return t;
}

RankTable::RankTable(Exp n_max) : n_max_(n_max) {
    if (n_max < 1) fail(errc::domain, "rank table budget must be >= 1");
    std::size_t width = static_cast<std::size_t>(2 * n_max + 1);
    h_.assign(static_cast<std::size_t>(n_max + 1), std::vector<Int>(width));

    // scratch DP over (weight w, rank r) for a single subscript D
    std::vector<std::vector<Int>> dp;
    for (Exp D = 0;; ++D) {
        Exp off = 2 * D * D + 2 * D + 1;
        if (off > n_max) break;
        Exp W = n_max - off;
        dp.assign(static_cast<std::size_t>(W + 1),
                  std::vector<Int>(static_cast<std::size_t>(2 * W + 1)));
        dp[0][static_cast<std::size_t>(W)] = 1;

        // |rank| <= weight throughout, so sources live in [-(w-o), w-o]
        for (Exp o = 1; o <= 2 * D + 1; o += 2) {
            for (Exp w = o; w <= W; ++w) { // top row: rank +1 per part
                auto& row = dp[static_cast<std::size_t>(w)];
                auto& src = dp[static_cast<std::size_t>(w - o)];
                for (Exp r = -(w - o) + 1; r <= (w - o) + 1; ++r) {
                    const Int& s = src[static_cast<std::size_t>(r - 1 + W)];
                    if (s != 0) row[static_cast<std::size_t>(r + W)] += s;
                }
            }
        }
        for (Exp o = 1; o <= 2 * D + 1; o += 2) {
            for (Exp w = o; w <= W; ++w) { // bottom row: rank -1 per part
                auto& row = dp[static_cast<std::size_t>(w)];
                auto& src = dp[static_cast<std::size_t>(w - o)];
                for (Exp r = (w - o) - 1; r >= -(w - o) - 1; --r) {
                    const Int& s = src[static_cast<std::size_t>(r + 1 + W)];
                    if (s != 0) row[static_cast<std::size_t>(r + W)] += s;
                }
            }
        }

        for (Exp w = 0; w <= W; ++w) {
            auto& row = dp[static_cast<std::size_t>(w)];
            auto& dst = h_[static_cast<std::size_t>(w + off)];
            for (Exp r = -w; r <= w; ++r) {
                const Int& s = row[static_cast<std::size_t>(r + W)];
                if (s != 0) dst[static_cast<std::size_t>(r + n_max_)] += s;
            }
        }
    }
}

const Int& RankTable::rank_count(Exp rank, Exp n) const {
    if (n < 0 || n > n_max_ || rank < -n_max_ || rank > n_max_) return zero_int;
    return h_[static_cast<std::size_t>(n)][static_cast<std::size_t>(rank + n_max_)];
}

OddDurfeeCount enumerate_ranks(const RankTable& table, Exp n) {
    if (n < 1) fail(errc::domain, "odd Durfee symbols exist only for n >= 1");
    if (n > table.n_max())
        fail(errc::budget, "n = " + std::to_string(n) + " beyond the rank table budget " +
                               std::to_string(table.n_max()));
    OddDurfeeCount out;
    out.n = n;
    for (Exp r = -n; r <= n; ++r) {
        const Int& c = table.rank_count(r, n);
        if (c != 0) out.counts[r] = c;
    }
    return out;
}

Int n0(const RankTable& table, Exp m, Exp k, Exp n) {
    if (k < 1) fail(errc::domain, "modulus k must be >= 1");
    if (n < 1) fail(errc::domain, "odd Durfee symbols exist only for n >= 1");
    if (n > table.n_max())
        fail(errc::budget, "n = " + std::to_string(n) + " beyond the rank table budget " +
                               std::to_string(table.n_max()));
    Exp m0 = ((m % k) + k) % k;
    Int total = 0;
    for (Exp r = -n; r <= n; ++r) {
        if (((r % k) + k) % k != m0) continue;
        total += table.rank_count(r, n);
    }
    return total;
}

QSeries rank_diff_series(const RankTable& table, Exp m1, Exp m2, Exp k, Exp step, Exp offset,
                         Exp prec) {
    if (step < 1) fail(errc::domain, "progression step must be >= 1");
    Exp largest_arg = step * (prec - 1) + offset;
    if (largest_arg > table.n_max()) {
        Exp feasible = floor_div(table.n_max() - offset, step) + 1;
        fail(errc::budget, "progression reaches n = " + std::to_string(largest_arg) +
                               " beyond the rank table budget " + std::to_string(table.n_max()) +
                               "; largest feasible precision is " + std::to_string(feasible));
    }
    std::vector<Int> c(static_cast<std::size_t>(prec));
    for (Exp n = 0; n < prec; ++n) {
        Exp arg = step * n + offset;
        if (arg < 1) continue; // no symbols below 1
        c[static_cast<std::size_t>(n)] = n0(table, m1, k, arg) - n0(table, m2, k, arg);
    }
    return QSeries(0, std::move(c));
}

QSeries cui_gf(Exp t, Exp s, Exp prec) {
    if (t < 0 || s < 1) fail(errc::domain, "cui_gf needs t >= 0, s >= 1");
    LambertSpec spec;
    spec.A = 3;
    spec.B = 3 + 2 * t;
    spec.C = 1 + t;
    spec.d = 2 * s;
    spec.e = s;
    spec.alternating = true;
    QSeries num = lambert_expand(spec, prec);
    QSeries den = pochhammer_expand(2, 2, prec - std::min<Exp>(0, num.valuation()));
    return (num * den.inverse()).truncated(prec);
}

} // namespace oddrank
