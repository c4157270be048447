#include "oddrank/expr.hpp"

#include <algorithm>
#include <cctype>

namespace oddrank {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            fail(errc::parse, std::string("expected '") + c + "' at position " +
                                  std::to_string(pos) + " in '" + text + "'");
    }

    Exp integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits)
            fail(errc::parse, "expected an integer at position " + std::to_string(start) + " in '" +
                                  text + "'");
        return std::stoll(text.substr(start, pos - start));
    }

    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        return text.substr(start, pos - start);
    }

    std::vector<std::pair<Expr::Atom, Exp>> expr() {
        auto out = term();
        while (true) {
            if (accept('*')) {
                auto rhs = term();
                out.insert(out.end(), rhs.begin(), rhs.end());
            } else if (accept('/')) {
                auto rhs = term();
                for (auto& [a, e] : rhs) out.emplace_back(a, -e);
            } else {
                break;
            }
        }
        return out;
    }

    std::vector<std::pair<Expr::Atom, Exp>> term() {
        auto out = atom();
        if (accept('^')) {
            Exp e = integer();
            for (auto& [a, ex] : out) ex *= e;
        }
        return out;
    }

    std::vector<std::pair<Expr::Atom, Exp>> atom() {
        skip_ws();
        if (accept('(')) {
            auto inner = expr();
            expect(')');
            return inner;
        }
        if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '-')) {
            return {{Expr::ConstAtom{Int(integer())}, 1}};
        }
        std::string w = word();
        if (w == "eta") {
            expect('(');
            Exp delta = integer();
            expect(')');
            if (delta < 1) fail(errc::parse, "eta argument must be >= 1");
            return {{Expr::EtaAtom{delta}, 1}};
        }
        if (w == "P") {
            expect('(');
            Exp a = integer();
            expect(';');
            Exp b = integer();
            expect(')');
            return {{Expr::PochAtom{a, b}, 1}};
        }
        if (w == "J") {
            expect('(');
            std::vector<Exp> res;
            res.push_back(integer());
            while (accept(',')) res.push_back(integer());
            expect(';');
            Exp m = integer();
            expect(')');
            return {{Expr::BracketAtom{std::move(res), m}, 1}};
        }
        if (w == "L") {
            expect('(');
            LambertSpec s;
            s.A = integer();
            expect(',');
            s.B = integer();
            expect(',');
            s.C = integer();
            expect(';');
            s.d = integer();
            expect(',');
            s.e = integer();
            if (accept(';')) {
                std::string flag = word();
                if (flag != "alt")
                    fail(errc::parse, "unknown Lambert flag '" + flag + "' (expected 'alt')");
                s.alternating = true;
            }
            expect(')');
            return {{Expr::LambertAtom{s}, 1}};
        }
        if (w == "q") {
            Exp e = 1;
            if (accept('^')) e = integer();
            return {{Expr::MonoAtom{e}, 1}};
        }
        fail(errc::parse, "unexpected token at position " + std::to_string(pos) + " in '" + text +
                              "'");
    }
};

} // namespace

Expr Expr::parse(const std::string& text) {
    Parser p{text};
    Expr out;
    out.factors_ = p.expr();
    if (!p.eof())
        fail(errc::parse,
             "trailing input at position " + std::to_string(p.pos) + " in '" + text + "'");
    if (out.factors_.empty()) fail(errc::parse, "empty expression");
    return out;
}

std::optional<EtaQuotient> Expr::as_eta_quotient() const {
    EtaQuotient eq;
    for (const auto& [atom, e] : factors_) {
        const auto* eta = std::get_if<EtaAtom>(&atom);
        if (!eta) return std::nullopt;
        eq.pairs[eta->delta] += e;
    }
    std::erase_if(eq.pairs, [](const auto& kv) { return kv.second == 0; });
    return eq;
}

QSeries Expr::evaluate(Workspace& ws, Exp prec) const {
    // split the eta part off so its prefactor ledger is applied exactly once
    EtaQuotient eq;
    std::vector<std::pair<const Atom*, Exp>> rest;
    for (const auto& [atom, e] : factors_) {
        if (const auto* eta = std::get_if<EtaAtom>(&atom))
            eq.pairs[eta->delta] += e;
        else
            rest.emplace_back(&atom, e);
    }
    std::erase_if(eq.pairs, [](const auto& kv) { return kv.second == 0; });

    for (Exp attempt = prec + 64;; attempt += attempt - prec) {
        QSeries acc = QSeries::one(attempt);
        if (!eq.pairs.empty()) {
            Exp shift = eq.integral_prefactor();
            QSeries unit = QSeries::one(attempt);
            for (auto& [delta, r] : eq.pairs)
                unit = unit * ws.poch(delta, delta, attempt).pow(r);
            acc = unit.truncated(attempt).shifted(shift);
        }
        for (const auto& [atom, e] : rest) {
            if (const auto* mono = std::get_if<MonoAtom>(atom)) {
                acc = acc.shifted(mono->e * e);
                continue;
            }
            QSeries piece = std::visit(
                [&](const auto& a) -> QSeries {
                    using T = std::decay_t<decltype(a)>;
                    if constexpr (std::is_same_v<T, PochAtom>)
                        return ws.poch(a.a, a.b, attempt);
                    else if constexpr (std::is_same_v<T, BracketAtom>)
                        return bracket_expand(a.residues, a.modulus, attempt);
                    else if constexpr (std::is_same_v<T, LambertAtom>)
                        return lambert_expand(a.spec, attempt);
                    else if constexpr (std::is_same_v<T, ConstAtom>)
                        return QSeries::monomial(a.value, 0, attempt);
                    else
                        fail(errc::integrity, "unhandled atom");
                },
                *atom);
            acc = acc * piece.pow(e);
        }
        if (acc.precision() >= prec) return acc.truncated(prec);
        if (attempt > prec + 4096)
            fail(errc::budget, "expression precision did not converge; deep negative valuations");
    }
}

} // namespace oddrank
