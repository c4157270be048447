#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>

#include "oddrank/durfee.hpp"
#include "oddrank/products.hpp"
#include "oddrank/qseries.hpp"

namespace oddrank {

class ArrayStore;
struct CdArrays;

/* Shared expansion caches for one verification run. Values handed out are
 * immutable copies; the caches only ever grow, guarded by one lock, so a
 * Workspace may be shared across threads. */
class Workspace {
public:
    struct Options {
        Exp group_prec = 500;  // default precision for the U-operator identities
        Exp s3_prec = 400;     // default for the period-50 product identities
        Exp oracle_prec = 60;  // default for oracle-bound identities
        Exp max_precision = 2'000'000;
        Exp oracle_budget = 400; // largest n the Durfee DP will accept
        std::uint64_t seed = 0x0dd5eedULL;
    };

    Workspace();
    explicit Workspace(Options opts);
    ~Workspace();

    Workspace(const Workspace&) = delete;
    Workspace& operator=(const Workspace&) = delete;

    const Options& options() const { return opts_; }

    // (q^a; q^b)_inf through q^prec, cached per (a, b)
    QSeries poch(Exp a, Exp b, Exp prec);

    // the four eta-quotient expansions
    QSeries rho(Exp prec); // valuation 0
    QSeries t(Exp prec);   // valuation 1
    QSeries z(Exp prec);   // valuation 2
    QSeries h(Exp prec);   // valuation -2

    // t^k with precision >= prec, built incrementally and cached
    QSeries t_power(Exp k, Exp prec);

    // (i == 0 ? Z : H) * rho^j with precision >= prec
    QSeries w_rho(int i, int j, Exp prec);

    // (q^5;q^5)^2 / (q^2;q^2): the e(n) series
    QSeries e_series(Exp prec);
    Int e_coeff(Exp n);

    // odd Durfee rank histogram oracle, grown on demand up to oracle_budget
    const RankTable& ranks(Exp n_max);

    // the a/b discrete-array store (seeded lazily)
    ArrayStore& arrays();

    // c/d arrays through alpha_max with the final window exact to n <= final_cap
    const CdArrays& cd(Exp alpha_max, Exp final_cap);

private:
    void check_budget(Exp prec) const;

    Options opts_;
    std::recursive_mutex mu_;

    struct PochKey {
        Exp a, b;
        bool operator<(const PochKey& o) const { return a < o.a || (a == o.a && b < o.b); }
    };
    std::map<PochKey, QSeries> poch_;

    std::map<int, QSeries> eta_; // 0=rho 1=t 2=Z 3=H
    QSeries eta_expansion(int which, Exp prec);

    struct PowerBucket {
        Exp rel; // relative precision of every power in the bucket
        std::map<Exp, QSeries> pow;
    };
    std::map<Exp, PowerBucket> t_powers_; // keyed by requested prec
    std::map<std::tuple<int, int, Exp>, QSeries> w_rho_;

    std::unique_ptr<QSeries> e_;
    std::unique_ptr<RankTable> ranks_;
    std::unique_ptr<ArrayStore> arrays_;
    std::unique_ptr<CdArrays> cd_;
};

} // namespace oddrank
