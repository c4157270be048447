#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oddrank/lambert.hpp"
#include "oddrank/products.hpp"
#include "oddrank/workspace.hpp"

namespace oddrank {

/* Parsed product expression over the CLI text formats:
 *
 *   eta(5)                      Dedekind eta of 5*tau (carries q^(5/24))
 *   P(a;b)                      (q^a; q^b)_inf
 *   J(a1,...,am;M)              bracket [q^a1, ..., q^am; q^M]
 *   L(A,B,C;d,e[;alt])          bilateral Lambert series
 *   q, q^k                      monomials
 *
 * combined with *, /, ^int and parentheses. */
class Expr {
public:
    struct EtaAtom {
        Exp delta;
    };
    struct PochAtom {
        Exp a, b;
    };
    struct BracketAtom {
        std::vector<Exp> residues;
        Exp modulus;
    };
    struct LambertAtom {
        LambertSpec spec;
    };
    struct MonoAtom {
        Exp e;
    };
    struct ConstAtom {
        Int value;
    };
    using Atom = std::variant<EtaAtom, PochAtom, BracketAtom, LambertAtom, MonoAtom, ConstAtom>;

    static Expr parse(const std::string& text); // errc::parse on malformed input

    // exact expansion through q^prec
    QSeries evaluate(Workspace& ws, Exp prec) const;

    // the whole expression as an eta-quotient, when it is one
    std::optional<EtaQuotient> as_eta_quotient() const;

    const std::vector<std::pair<Atom, Exp>>& factors() const { return factors_; }

private:
    std::vector<std::pair<Atom, Exp>> factors_; // atom, exponent
};

} // namespace oddrank
