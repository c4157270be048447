#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "oddrank/error.hpp"
#include "oddrank/intmath.hpp"

namespace oddrank {

/* Truncated formal Laurent series in q over arbitrary-precision integers.
 *
 * A value stores exact coefficients for exponents in [valuation, precision)
 * and asserts that every exponent below the valuation has coefficient zero.
 * Nothing is claimed at or above the precision. Binary operations propagate
 * the validity range pessimistically:
 *
 *   add:  precision = min(pa, pb)
 *   mul:  precision = min(pa + vb, pb + va), valuation = va + vb
 *
 * so a result never reports a coefficient that the operands did not
 * determine. Values are immutable after construction. */
class QSeries {
public:
    // coeffs[i] is the coefficient of q^(valuation + i); coeffs must be non-empty
    QSeries(Exp valuation, std::vector<Int> coeffs);

    // the zero series known modulo q^prec
    static QSeries zero(Exp prec);
    // the constant 1 with window [0, prec); prec >= 1
    static QSeries one(Exp prec);
    // c * q^e with window [min(0, e), prec); prec > e
    static QSeries monomial(Int c, Exp e, Exp prec);

    Exp valuation() const { return val_; }
    Exp precision() const { return val_ + static_cast<Exp>(c_.size()); }

    // coefficient of q^e; zero below the valuation, error at or above precision
    const Int& coeff(Exp e) const;

    // lowest exponent with a nonzero stored coefficient, if any
    std::optional<Exp> order() const;
    bool is_zero() const { return !order().has_value(); }

    QSeries operator-() const;
    QSeries operator+(const QSeries& rhs) const;
    QSeries operator-(const QSeries& rhs) const;
    QSeries operator*(const QSeries& rhs) const;

    // exact rescale / term insertion; these do not narrow the window
    QSeries scaled(const Int& c) const;
    QSeries plus_term(const Int& c, Exp e) const; // no-op if e >= precision

    QSeries shifted(Exp k) const;    // multiply by q^k
    QSeries truncated(Exp n) const;  // narrow precision to min(precision, n)
    QSeries dilated(Exp k) const;    // substitute q -> q^k, k >= 1

    // multiplicative inverse; the lowest nonzero coefficient must be +-1
    QSeries inverse() const;
    QSeries pow(Exp k) const;
    QSeries operator/(const QSeries& rhs) const { return *this * rhs.inverse(); }

    // sum of a(kn + r) q^n over the valid range; k >= 1, 0 <= r < k
    QSeries extract_progression(Exp k, Exp r) const;

    // first exponent below min(precisions) where the coefficients differ
    std::optional<Exp> first_mismatch(const QSeries& rhs) const;

    // coefficient-wise equality on the common valid range
    bool operator==(const QSeries& rhs) const { return !first_mismatch(rhs).has_value(); }

    // exact equality through q^n; both operands must be valid that far
    bool equal_through(const QSeries& rhs, Exp n) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const QSeries& s);

private:
    Exp val_;
    std::vector<Int> c_;
};

} // namespace oddrank
