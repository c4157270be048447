#include "oddrank/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace oddrank {

namespace {
const Int zero_int = 0;

// indexes of nonzero entries, so convolutions can skip structural zeros
std::vector<std::size_t> nonzero_positions(const std::vector<Int>& v) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) idx.push_back(i);
    return idx;
}
} // namespace

QSeries::QSeries(Exp valuation, std::vector<Int> coeffs) : val_(valuation), c_(std::move(coeffs)) {
    if (c_.empty()) fail(errc::degenerate_precision, "empty validity range");
}

QSeries QSeries::zero(Exp prec) {
    Exp lo = std::min<Exp>(0, prec - 1);
    return QSeries(lo, std::vector<Int>(static_cast<std::size_t>(prec - lo)));
}

QSeries QSeries::one(Exp prec) {
    if (prec < 1) fail(errc::degenerate_precision, "one() needs precision >= 1");
    std::vector<Int> c(static_cast<std::size_t>(prec));
    c[0] = 1;
    return QSeries(0, std::move(c));
}

QSeries QSeries::monomial(Int c, Exp e, Exp prec) {
    if (prec <= e) fail(errc::degenerate_precision, "monomial exponent at or above precision");
    Exp lo = std::min<Exp>(0, e);
    std::vector<Int> v(static_cast<std::size_t>(prec - lo));
    v[static_cast<std::size_t>(e - lo)] = std::move(c);
    return QSeries(lo, std::move(v));
}

const Int& QSeries::coeff(Exp e) const {
    if (e >= precision())
        fail(errc::degenerate_precision,
             "coefficient of q^" + std::to_string(e) + " requested beyond precision q^" +
                 std::to_string(precision()));
    if (e < val_) return zero_int;
    return c_[static_cast<std::size_t>(e - val_)];
}

std::optional<Exp> QSeries::order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return val_ + static_cast<Exp>(i);
    return std::nullopt;
}

QSeries QSeries::operator-() const {
    std::vector<Int> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return QSeries(val_, std::move(c));
}

QSeries QSeries::operator+(const QSeries& rhs) const {
    Exp lo = std::min(val_, rhs.val_);
    Exp hi = std::min(precision(), rhs.precision());
    if (hi <= lo) fail(errc::degenerate_precision, "empty validity range after addition");
    std::vector<Int> c(static_cast<std::size_t>(hi - lo));
    for (Exp e = std::max(lo, val_); e < std::min(hi, precision()); ++e)
        c[static_cast<std::size_t>(e - lo)] = c_[static_cast<std::size_t>(e - val_)];
    for (Exp e = std::max(lo, rhs.val_); e < std::min(hi, rhs.precision()); ++e)
        c[static_cast<std::size_t>(e - lo)] += rhs.c_[static_cast<std::size_t>(e - rhs.val_)];
    return QSeries(lo, std::move(c));
}

QSeries QSeries::operator-(const QSeries& rhs) const { return *this + (-rhs); }

QSeries QSeries::operator*(const QSeries& rhs) const {
    Exp lo = val_ + rhs.val_;
    Exp hi = std::min(precision() + rhs.val_, rhs.precision() + val_);
    if (hi <= lo) fail(errc::degenerate_precision, "empty validity range after multiplication");
    std::vector<Int> c(static_cast<std::size_t>(hi - lo));

    auto na = nonzero_positions(c_);
    auto nb = nonzero_positions(rhs.c_);
    // iterate the sparser operand on the outside
    const bool a_outer = na.size() <= nb.size();
    const auto& outer_idx = a_outer ? na : nb;
    const auto& outer = a_outer ? c_ : rhs.c_;
    const auto& inner = a_outer ? rhs.c_ : c_;
    const Exp len = hi - lo;
    for (std::size_t i : outer_idx) {
        const Int& x = outer[i];
        Exp base = static_cast<Exp>(i);
        if (base >= len) break; // stored positions beyond the propagated window
        std::size_t jmax = std::min(inner.size(), static_cast<std::size_t>(len - base));
        for (std::size_t j = 0; j < jmax; ++j) {
            if (inner[j] == 0) continue;
            Int& dst = c[static_cast<std::size_t>(base) + j];
            mpz_addmul(dst.get_mpz_t(), x.get_mpz_t(), inner[j].get_mpz_t());
        }
    }
    return QSeries(lo, std::move(c));
}

QSeries QSeries::scaled(const Int& x) const {
    std::vector<Int> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * x;
    return QSeries(val_, std::move(c));
}

QSeries QSeries::plus_term(const Int& x, Exp e) const {
    if (e >= precision()) return *this; // invisible at this precision
    if (e >= val_) {
        std::vector<Int> c = c_;
        c[static_cast<std::size_t>(e - val_)] += x;
        return QSeries(val_, std::move(c));
    }
    std::vector<Int> c(static_cast<std::size_t>(precision() - e));
    c[0] = x;
    std::copy(c_.begin(), c_.end(), c.begin() + static_cast<std::size_t>(val_ - e));
    return QSeries(e, std::move(c));
}

QSeries QSeries::shifted(Exp k) const { return QSeries(val_ + k, c_); }

QSeries QSeries::truncated(Exp n) const {
    if (n >= precision()) return *this;
    if (n <= val_) return zero(n);
    return QSeries(val_, std::vector<Int>(c_.begin(), c_.begin() + static_cast<std::size_t>(n - val_)));
}

QSeries QSeries::dilated(Exp k) const {
    if (k < 1) fail(errc::domain, "dilation step must be >= 1");
    // exponents k*e for stored e, zeros in between; precision k*(prec-1)+1
    Exp lo = k * val_;
    Exp hi = k * (precision() - 1) + 1;
    std::vector<Int> c(static_cast<std::size_t>(hi - lo));
    for (std::size_t i = 0; i < c_.size(); ++i) c[static_cast<std::size_t>(k) * i] = c_[i];
    return QSeries(lo, std::move(c));
}

QSeries QSeries::inverse() const {
    auto ord = order();
    if (!ord) fail(errc::non_invertible, "zero series has no inverse");
    const Int& lead = coeff(*ord);
    if (lead != 1 && lead != -1)
        fail(errc::non_invertible, "leading coefficient " + lead.get_str() + " is not a unit");
    Exp rel = precision() - *ord;
    std::size_t n = static_cast<std::size_t>(rel);
    std::size_t off = static_cast<std::size_t>(*ord - val_);

    // b0 = 1/lead; b_m = -(1/lead) * sum_{k=1..m} a_k b_{m-k}, a_k = coeff(ord+k)
    std::vector<std::size_t> nz;
    for (std::size_t k = 1; k < n; ++k)
        if (c_[off + k] != 0) nz.push_back(k);

    std::vector<Int> b(n);
    b[0] = lead;
    Int acc;
    for (std::size_t m = 1; m < n; ++m) {
        acc = 0;
        for (std::size_t k : nz) {
            if (k > m) break;
            mpz_addmul(acc.get_mpz_t(), c_[off + k].get_mpz_t(), b[m - k].get_mpz_t());
        }
        b[m] = (lead == 1) ? -acc : acc;
    }
    return QSeries(-*ord, std::move(b));
}

QSeries QSeries::pow(Exp k) const {
    if (k < 0) return inverse().pow(-k);
    if (k == 0) return one(precision() - val_);
    QSeries base = *this;
    QSeries acc = base;
    Exp bits = k;
    // consume the leading bit via acc = base
    int top = 63;
    while (top > 0 && ((bits >> top) & 1) == 0) --top;
    for (int i = top - 1; i >= 0; --i) {
        acc = acc * acc;
        if ((bits >> i) & 1) acc = acc * base;
    }
    return acc;
}

QSeries QSeries::extract_progression(Exp k, Exp r) const {
    if (k < 1 || r < 0 || r >= k) fail(errc::domain, "extract_progression needs k >= 1, 0 <= r < k");
    Exp hi = ceil_div(precision() - r, k);
    Exp lo = ceil_div(val_ - r, k);
    if (lo >= hi) lo = hi - 1; // everything below hi is a known zero
    std::vector<Int> c(static_cast<std::size_t>(hi - lo));
    for (Exp m = std::max(lo, ceil_div(val_ - r, k)); m < hi; ++m) {
        Exp e = k * m + r;
        if (e >= val_ && e < precision())
            c[static_cast<std::size_t>(m - lo)] = c_[static_cast<std::size_t>(e - val_)];
    }
    return QSeries(lo, std::move(c));
}

std::optional<Exp> QSeries::first_mismatch(const QSeries& rhs) const {
    Exp hi = std::min(precision(), rhs.precision());
    Exp lo = std::min(val_, rhs.val_);
    for (Exp e = lo; e < hi; ++e)
        if (coeff(e) != rhs.coeff(e)) return e;
    return std::nullopt;
}

bool QSeries::equal_through(const QSeries& rhs, Exp n) const {
    if (precision() < n || rhs.precision() < n)
        fail(errc::degenerate_precision,
             "equality through q^" + std::to_string(n) + " requested but operands are valid to q^" +
                 std::to_string(precision()) + " and q^" + std::to_string(rhs.precision()));
    auto m = first_mismatch(rhs);
    return !m || *m >= n;
}

std::string QSeries::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QSeries& s) {
    bool printed = false;
    for (Exp e = s.valuation(); e < s.precision(); ++e) {
        const Int& c = s.coeff(e);
        if (c == 0) continue;
        if (printed)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        Int a = abs(c);
        if (e == 0)
            os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << "q" << (e == 1 ? std::string() : "^" + std::to_string(e));
        }
        printed = true;
    }
    if (!printed) os << "0";
    os << " + O(q^" << s.precision() << ")";
    return os;
}

} // namespace oddrank
