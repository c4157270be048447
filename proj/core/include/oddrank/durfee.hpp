#pragma once

#include <map>

#include "oddrank/qseries.hpp"

namespace oddrank {

/* Rank histogram of the odd Durfee symbols of n: two rows of odd entries
 * bounded by 2D+1 with n = (row sums) + 2D^2 + 2D + 1, rank = #top - #bottom. */
struct OddDurfeeCount {
    Exp n = 0;
    std::map<Exp, Int> counts; // rank -> number of symbols, zero entries omitted

    Int total() const;
};

/* Rank-by-weight table for all n up to a budget, built once by a DP over
 * (rank, weight) for each subscript D: per odd part value the top row shifts
 * rank by +1 and the bottom row by -1, both with unbounded multiplicity.
 * Independent of all modular machinery. */
class RankTable {
public:
    explicit RankTable(Exp n_max);

    Exp n_max() const { return n_max_; }
    const Int& rank_count(Exp rank, Exp n) const; // 0 outside the stored range

private:
    Exp n_max_;
    std::vector<std::vector<Int>> h_; // [n][rank + n_max]
};

// full histogram for one n; n >= 1
OddDurfeeCount enumerate_ranks(const RankTable& table, Exp n);

// number of odd Durfee symbols of n with rank congruent to m mod k
Int n0(const RankTable& table, Exp m, Exp k, Exp n);

/* sum_n ( N0(m1,k,step n + offset) - N0(m2,k,step n + offset) ) q^n through
 * q^prec; arguments beyond the table budget raise errc::budget and name the
 * largest feasible precision. */
QSeries rank_diff_series(const RankTable& table, Exp m1, Exp m2, Exp k, Exp step, Exp offset,
                         Exp prec);

/* (1/(q^2;q^2)_inf) * sum_{n in Z} (-1)^n q^(3n^2+(3+2t)n+1+t) / (1 - q^(2sn+s)),
 * the quoted single-residue generating function; t >= 0, s >= 1. */
QSeries cui_gf(Exp t, Exp s, Exp prec);

} // namespace oddrank
