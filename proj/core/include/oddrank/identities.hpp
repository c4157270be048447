#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oddrank/qseries.hpp"
#include "oddrank/workspace.hpp"

namespace oddrank {

struct Mismatch {
    Exp exponent = 0;
    Int lhs, rhs;
};

/* Machine-readable outcome of one exact verification. margin_periods is the
 * checked precision divided by the entry's structural period. */
struct Report {
    std::string name;
    Exp precision = 0;
    bool pass = false;
    std::optional<Mismatch> first_mismatch;
    Exp period = 1;
    Exp margin_periods = 0;
    long long ms = 0;
};

/* One named identity: both sides built from module operations, compared as
 * exact integer series through a configurable precision. The precision class
 * selects which Workspace::Options default applies. */
enum class PrecClass { group, period50, oracle };

struct CatalogEntry {
    std::string name;
    std::string statement;
    PrecClass prec_class = PrecClass::period50;
    Exp period = 50;
    std::function<std::pair<QSeries, QSeries>(Workspace&, Exp)> sides;

    Exp default_prec(const Workspace& ws) const;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name); // errc::unknown_name

Report verify(Workspace& ws, const std::string& name, std::optional<Exp> prec = {});
std::vector<Report> verify_all(Workspace& ws, std::optional<Exp> prec = {});

/* re-run an entry with one coefficient of the right side corrupted; the
 * returned report must NOT pass (used as a negative control) */
Report negative_control(Workspace& ws, const std::string& name, std::optional<Exp> prec = {},
                        std::optional<Exp> perturb_exponent = {});

// e(5^alpha n + lambda_alpha) == 0 mod 5^floor((alpha+1)/2) for n < n_count
Report check_congruence_e(Workspace& ws, Exp alpha, Exp n_count);

// the same congruence read off the Durfee oracle:
// N0(1,5,arg) == N0(2,5,arg) mod 5^floor((alpha+1)/2), arg = 5^(alpha+1) n + 5 lambda_alpha + 2
Report check_theorem_main(Workspace& ws, Exp alpha, Exp n_count);

// JSON array codec for reports; parse(print(r)) == r
std::string reports_to_json(const std::vector<Report>& reports);
std::vector<Report> reports_from_json(const std::string& text);

} // namespace oddrank
