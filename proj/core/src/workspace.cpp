#include "oddrank/workspace.hpp"

#include <algorithm>
#include <string>

#include "oddrank/arrays.hpp"

namespace oddrank {

Workspace::Workspace() : Workspace(Options{}) {}
Workspace::Workspace(Options opts) : opts_(opts) {}
Workspace::~Workspace() = default;

void Workspace::check_budget(Exp prec) const {
    if (prec > opts_.max_precision)
        fail(errc::budget, "requested precision " + std::to_string(prec) +
                               " exceeds the budget " + std::to_string(opts_.max_precision));
}

QSeries Workspace::poch(Exp a, Exp b, Exp prec) {
    check_budget(prec);
    std::lock_guard lock(mu_);
    auto it = poch_.find({a, b});
    if (it == poch_.end() || it->second.precision() < prec) {
        QSeries s = pochhammer_expand(a, b, prec);
        it = poch_.insert_or_assign(PochKey{a, b}, std::move(s)).first;
    }
    return it->second.truncated(prec);
}

QSeries Workspace::eta_expansion(int which, Exp prec) {
    check_budget(prec);
    std::lock_guard lock(mu_);
    auto it = eta_.find(which);
    if (it == eta_.end() || it->second.precision() < prec) {
        static const EtaQuotient defs[4] = {eta_rho(), eta_t(), eta_z(), eta_h()};
        // build from the pochhammer cache rather than eta_quotient_expand so
        // the big (q;q), (q^2;q^2) windows are shared across callers
        const EtaQuotient& eq = defs[which];
        Exp shift = eq.integral_prefactor();
        Exp rel = prec - shift;
        if (rel < 1) return QSeries::zero(prec);
        QSeries num = QSeries::one(rel);
        QSeries den = num;
        for (auto& [delta, r] : eq.pairs) {
            if (r == 0) continue;
            QSeries p = poch(delta, delta, rel).pow(r > 0 ? r : -r);
            (r > 0 ? num : den) = (r > 0 ? num : den) * p;
        }
        QSeries s = (num * den.inverse()).truncated(rel).shifted(shift);
        it = eta_.insert_or_assign(eta_.end(), which, std::move(s));
    }
    return it->second.truncated(prec);
}

QSeries Workspace::rho(Exp prec) { return eta_expansion(0, prec); }
QSeries Workspace::t(Exp prec) { return eta_expansion(1, prec); }
QSeries Workspace::z(Exp prec) { return eta_expansion(2, prec); }
QSeries Workspace::h(Exp prec) { return eta_expansion(3, prec); }

QSeries Workspace::t_power(Exp k, Exp prec) {
    check_budget(prec);
    if (k == 0) return QSeries::one(prec);
    std::lock_guard lock(mu_);
    if (k > 64 || k < -64) {
        // off the memo range; compute directly at the needed relative precision
        QSeries base = t(1 + (prec - k) + 1);
        return base.pow(k);
    }
    // bucket on a rounded precision so nearby requests share one power table
    Exp key = ceil_div(std::max<Exp>(prec, 1), 256) * 256;
    auto& bucket = t_powers_[key];
    if (bucket.pow.empty()) {
        bucket.rel = key + 66;
        bucket.pow.emplace(0, QSeries::one(bucket.rel));
    }
    auto grow = [&](Exp dir) {
        Exp have = 0;
        while (bucket.pow.count(have + dir)) have += dir;
        if ((dir > 0 && have >= k) || (dir < 0 && have <= k)) return;
        QSeries step = t(1 + bucket.rel);
        if (dir < 0) step = step.inverse();
        QSeries cur = bucket.pow.at(have);
        for (Exp i = have + dir; dir > 0 ? i <= k : i >= k; i += dir) {
            cur = cur * step;
            bucket.pow.emplace(i, cur);
        }
    };
    grow(k > 0 ? 1 : -1);
    return bucket.pow.at(k);
}

QSeries Workspace::w_rho(int i, int j, Exp prec) {
    if ((i != 0 && i != 1) || (j != 0 && j != 1)) fail(errc::domain, "u_ij needs i, j in {0, 1}");
    check_budget(prec);
    std::lock_guard lock(mu_);
    Exp p = ceil_div(std::max<Exp>(prec, 1), 256) * 256; // share across nearby requests
    auto key = std::make_tuple(i, j, p);
    auto it = w_rho_.find(key);
    if (it == w_rho_.end()) {
        QSeries w = (i == 0) ? z(p) : h(p + 2);
        if (j == 1) w = w * rho(p - w.valuation());
        it = w_rho_.emplace(key, w.truncated(p)).first;
    }
    return it->second;
}

QSeries Workspace::e_series(Exp prec) {
    check_budget(prec);
    std::lock_guard lock(mu_);
    if (!e_ || e_->precision() < prec) {
        QSeries num = poch(5, 5, prec);
        QSeries den = poch(2, 2, prec);
        e_ = std::make_unique<QSeries>((num * num * den.inverse()).truncated(prec));
    }
    return e_->truncated(prec);
}

Int Workspace::e_coeff(Exp n) { return e_series(n + 1).coeff(n); }

const RankTable& Workspace::ranks(Exp n_max) {
    if (n_max > opts_.oracle_budget)
        fail(errc::budget, "rank oracle for n = " + std::to_string(n_max) +
                               " exceeds the budget " + std::to_string(opts_.oracle_budget) +
                               "; use the e-series route instead");
    std::lock_guard lock(mu_);
    if (!ranks_ || ranks_->n_max() < n_max) ranks_ = std::make_unique<RankTable>(n_max);
    return *ranks_;
}

ArrayStore& Workspace::arrays() {
    std::lock_guard lock(mu_);
    if (!arrays_) arrays_ = std::make_unique<ArrayStore>();
    return *arrays_;
}

const CdArrays& Workspace::cd(Exp alpha_max, Exp final_cap) {
    std::lock_guard lock(mu_);
    bool reuse = cd_ && cd_->alpha_max >= alpha_max && cd_->window.count(alpha_max) &&
                 (cd_->window.at(alpha_max) >= final_cap || cd_->c.at(alpha_max).complete);
    if (!reuse) cd_ = std::make_unique<CdArrays>(cd_arrays(arrays(), alpha_max, final_cap));
    return *cd_;
}

} // namespace oddrank
