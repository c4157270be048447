#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddrank/acceptance.hpp"
#include "oddrank/arrays.hpp"
#include "oddrank/durfee.hpp"
#include "oddrank/expr.hpp"
#include "oddrank/identities.hpp"
#include "oddrank/products.hpp"
#include "oddrank/workspace.hpp"

namespace {

using namespace oddrank;

// exit codes: 0 all pass, 1 usage, 2 verification failure, 3 budget
constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_verification = 2;
constexpr int exit_budget = 3;

void emit(const nlohmann::json& payload, const std::string& out_file) {
    nlohmann::json envelope;
    envelope["schema"] = 1;
    for (auto& [k, v] : payload.items()) envelope[k] = v;
    std::string text = envelope.dump(2);
    if (!out_file.empty()) {
        std::ofstream os(out_file);
        os << text << "\n";
    } else {
        std::cout << text << "\n";
    }
}

void print_series(const QSeries& s, std::ostream& os) {
    int on_line = 0;
    for (Exp e = s.valuation(); e < s.precision(); ++e) {
        os << s.coeff(e).get_str() << "*q^" << e;
        if (++on_line == 10) {
            os << "\n";
            on_line = 0;
        } else if (e + 1 < s.precision()) {
            os << "  ";
        }
    }
    if (on_line != 0) os << "\n";
    os << "# coefficients exact for exponents below q^" << s.precision() << "\n";
}

nlohmann::json series_json(const QSeries& s) {
    nlohmann::json j;
    j["valuation"] = s.valuation();
    j["precision"] = s.precision();
    nlohmann::json coeffs = nlohmann::json::array();
    for (Exp e = s.valuation(); e < s.precision(); ++e) coeffs.push_back(s.coeff(e).get_str());
    j["coeffs"] = coeffs;
    return j;
}

std::optional<Exp> env_default_prec() {
    if (const char* v = std::getenv("ODDRANK_PREC")) {
        Exp p = 0;
        try {
            p = std::stoll(v);
        } catch (...) {
            fail(errc::parse, "ODDRANK_PREC is not an integer");
        }
        if (p < 1) fail(errc::parse, "ODDRANK_PREC must be >= 1");
        return p;
    }
    return std::nullopt;
}

int run(int argc, char** argv) {
    CLI::App app{"exact q-series toolkit for odd-rank congruences modulo powers of 5"};
    app.require_subcommand(1);

    bool json_out = false;
    std::string out_file;
    app.add_flag("--json", json_out, "emit JSON instead of a human table");
    app.add_option("--out", out_file, "write the JSON report to a file");

    Workspace::Options opts;
    app.add_option("--seed", opts.seed, "seed for randomized property checks");
    app.add_option("--max-exponent", opts.max_precision, "budget cap on series precision")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-oracle-n", opts.oracle_budget, "budget cap on the Durfee oracle")
        ->check(CLI::PositiveNumber);

    // expand
    auto* cmd_expand = app.add_subcommand("expand", "expand a product/Lambert expression");
    std::string expr_text;
    Exp expand_prec = 20;
    cmd_expand->add_option("--expr", expr_text, "expression, e.g. eta(50)/eta(2) or P(1;1)")
        ->required();
    cmd_expand->add_option("--prec", expand_prec, "exclusive exponent bound")
        ->check(CLI::PositiveNumber);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "verify identity catalog entries");
    bool verify_all_flag = false;
    std::string verify_id;
    std::optional<Exp> verify_prec;
    bool control_flag = false;
    cmd_verify->add_flag("--all", verify_all_flag, "verify every catalog entry");
    cmd_verify->add_option("--id", verify_id, "verify one entry by name");
    cmd_verify
        ->add_option("--prec",
                     [&verify_prec](const std::vector<std::string>& v) {
                         verify_prec = std::stoll(v.at(0));
                         return true;
                     },
                     "precision override")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_flag("--negative-control", control_flag,
                         "corrupt one coefficient and require the check to fail (diagnostics)");

    // congruence
    auto* cmd_cong = app.add_subcommand("congruence", "check the power-of-5 congruence family");
    Exp cong_alpha = 1;
    Exp cong_count = 5;
    std::string cong_via = "e";
    cmd_cong->add_option("--alpha", cong_alpha, "power index alpha")->required();
    cmd_cong->add_option("--count", cong_count, "number of progression terms");
    cmd_cong->add_option("--via", cong_via, "oracle | e")->check(CLI::IsMember({"oracle", "e"}));

    // oracle
    auto* cmd_oracle = app.add_subcommand("oracle", "odd Durfee rank counts for one n");
    Exp oracle_n = 1;
    Exp oracle_mod = 5;
    cmd_oracle->add_option("--n", oracle_n, "weight n")->required();
    cmd_oracle->add_option("--modulus", oracle_mod, "rank modulus");

    // arrays
    auto* cmd_arrays = app.add_subcommand("arrays", "dump discrete-array windows");
    std::string arrays_family = "a00";
    std::string arrays_k = "-4..4";
    std::string arrays_n;
    Exp arrays_alpha = 2;
    bool arrays_valuations = false;
    cmd_arrays->add_option("--family", arrays_family, "a00..b11, c, or d");
    cmd_arrays->add_option("--k", arrays_k, "k range, e.g. -5..10");
    cmd_arrays->add_option("--n", arrays_n, "n range, e.g. 0..12");
    cmd_arrays->add_option("--alpha", arrays_alpha, "alpha bound for the c/d families");
    cmd_arrays->add_flag("--valuations", arrays_valuations, "print 5-adic orders and bounds");

    // cusps
    auto* cmd_cusps = app.add_subcommand("cusps", "cusp orders and modularity of an eta-quotient");
    std::string cusps_eta;
    Exp cusps_level = 0;
    cmd_cusps->add_option("--eta", cusps_eta, "eta-quotient expression")->required();
    cmd_cusps->add_option("--level", cusps_level, "Gamma_0 level N (default: lcm of the deltas)");

    // selftest
    auto* cmd_selftest = app.add_subcommand("selftest", "run the full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    Workspace ws(opts);
    auto env_prec = env_default_prec();

    if (*cmd_expand) {
        Exp prec = cmd_expand->count("--prec") ? expand_prec : env_prec.value_or(expand_prec);
        QSeries s = Expr::parse(expr_text).evaluate(ws, prec);
        if (json_out) {
            nlohmann::json j;
            j["expr"] = expr_text;
            j["series"] = series_json(s);
            emit(j, out_file);
        } else {
            print_series(s, std::cout);
        }
        return exit_ok;
    }

    if (*cmd_verify) {
        if (!verify_prec && env_prec) verify_prec = env_prec;
        if (verify_all_flag == !verify_id.empty())
            fail(errc::parse, "verify needs exactly one of --all or --id NAME");
        std::vector<Report> reports;
        if (verify_all_flag) {
            if (control_flag) fail(errc::parse, "--negative-control needs --id");
            reports = verify_all(ws, verify_prec);
        } else if (control_flag) {
            reports.push_back(negative_control(ws, verify_id, verify_prec));
            // the control is healthy exactly when the corrupted comparison fails
            reports.back().pass = !reports.back().pass;
        } else {
            reports.push_back(verify(ws, verify_id, verify_prec));
        }
        bool ok = true;
        for (const auto& r : reports) ok = ok && r.pass;
        if (json_out) {
            nlohmann::json j;
            j["reports"] = nlohmann::json::parse(reports_to_json(reports));
            emit(j, out_file);
        } else {
            for (const auto& r : reports)
                std::cout << (r.pass ? "pass " : "FAIL ") << r.name << "  q^" << r.precision
                          << "  margin " << r.margin_periods << " periods  " << r.ms << " ms"
                          << (r.first_mismatch
                                  ? "  first mismatch at q^" + std::to_string(r.first_mismatch->exponent)
                                  : std::string())
                          << "\n";
        }
        return ok ? exit_ok : exit_verification;
    }

    if (*cmd_cong) {
        Report rep = cong_via == "oracle" ? check_theorem_main(ws, cong_alpha, cong_count)
                                          : check_congruence_e(ws, cong_alpha, cong_count);
        if (json_out) {
            nlohmann::json j;
            j["reports"] = nlohmann::json::parse(reports_to_json({rep}));
            emit(j, out_file);
        } else {
            std::cout << (rep.pass ? "pass " : "FAIL ") << rep.name << "  " << cong_count
                      << " cases  " << rep.ms << " ms\n";
            if (rep.first_mismatch)
                std::cout << "first failure at argument " << rep.first_mismatch->exponent << "\n";
        }
        return rep.pass ? exit_ok : exit_verification;
    }

    if (*cmd_oracle) {
        const RankTable& table = ws.ranks(oracle_n);
        OddDurfeeCount counts = enumerate_ranks(table, oracle_n);
        if (json_out) {
            nlohmann::json j;
            j["n"] = oracle_n;
            j["modulus"] = oracle_mod;
            nlohmann::json row = nlohmann::json::array();
            for (Exp m = 0; m < oracle_mod; ++m)
                row.push_back(n0(table, m, oracle_mod, oracle_n).get_str());
            j["residue_counts"] = row;
            nlohmann::json hist;
            for (auto& [r, c] : counts.counts) hist[std::to_string(r)] = c.get_str();
            j["rank_histogram"] = hist;
            j["total"] = counts.total().get_str();
            emit(j, out_file);
        } else {
            std::cout << "N0(m, " << oracle_mod << ", " << oracle_n << ") for m = 0.."
                      << oracle_mod - 1 << ":\n";
            for (Exp m = 0; m < oracle_mod; ++m)
                std::cout << "  m=" << m << ": " << n0(table, m, oracle_mod, oracle_n).get_str()
                          << "\n";
            std::cout << "rank histogram of " << oracle_n << " (" << counts.total().get_str()
                      << " symbols):\n";
            for (auto& [r, c] : counts.counts)
                std::cout << "  rank " << r << ": " << c.get_str() << "\n";
        }
        return exit_ok;
    }

    if (*cmd_arrays) {
        auto parse_range = [](const std::string& text, Exp dflt_lo, Exp dflt_hi) {
            if (text.empty()) return std::pair<Exp, Exp>{dflt_lo, dflt_hi};
            auto dots = text.find("..");
            if (dots == std::string::npos) fail(errc::parse, "range must look like a..b");
            return std::pair<Exp, Exp>{std::stoll(text.substr(0, dots)),
                                       std::stoll(text.substr(dots + 2))};
        };
        nlohmann::json jrows = nlohmann::json::array();
        if (arrays_family == "c" || arrays_family == "d") {
            const CdArrays& cd = ws.cd(arrays_alpha, 40);
            for (Exp alpha = 1; alpha <= arrays_alpha; ++alpha) {
                const Row& row = (arrays_family == "c" ? cd.c : cd.d).at(alpha);
                for (Exp n = row.lo; n < row.hi(); ++n) {
                    if (row.at(n) == 0) continue;
                    nlohmann::json jr;
                    jr["alpha"] = alpha;
                    jr["n"] = n;
                    jr["value"] = row.at(n).get_str();
                    if (arrays_valuations) {
                        auto v = padic5(row.at(n));
                        jr["padic"] = v ? nlohmann::json(*v) : nlohmann::json("inf");
                        jr["bound"] = arrays_family == "c" ? l2al_bound_c(alpha, n)
                                                           : l2al_bound_d(alpha, n);
                    }
                    jrows.push_back(std::move(jr));
                }
            }
        } else {
            auto fam = family_from_name(arrays_family);
            if (!fam) fail(errc::unknown_name, "unknown family '" + arrays_family + "'");
            auto [k_lo, k_hi] = parse_range(arrays_k, -4, 4);
            auto [n_lo, n_hi] = parse_range(arrays_n, 0, 12);
            ArrayStore& store = ws.arrays();
            store.ensure(std::min<Exp>(k_lo, -4), std::max<Exp>(k_hi, 0),
                         std::max(n_hi, store.n_cap()));
            for (Exp k = k_lo; k <= k_hi; ++k) {
                const Row& row = store.row(*fam, k);
                for (Exp n = std::max(n_lo, row.lo); n < row.hi() && n <= n_hi; ++n) {
                    nlohmann::json jr;
                    jr["k"] = k;
                    jr["n"] = n;
                    jr["value"] = row.at(n).get_str();
                    if (arrays_valuations) {
                        auto v = padic5(row.at(n));
                        jr["padic"] = v ? nlohmann::json(*v) : nlohmann::json("inf");
                        jr["bound"] = lepi_bound(*fam, k, n);
                    }
                    jrows.push_back(std::move(jr));
                }
            }
        }
        if (json_out) {
            nlohmann::json j;
            j["family"] = arrays_family;
            j["entries"] = jrows;
            emit(j, out_file);
        } else {
            for (const auto& jr : jrows) {
                if (jr.contains("alpha"))
                    std::cout << "alpha=" << jr["alpha"] << " n=" << jr["n"];
                else
                    std::cout << "k=" << jr["k"] << " n=" << jr["n"];
                std::cout << "  " << jr["value"].get<std::string>();
                if (arrays_valuations)
                    std::cout << "  pi=" << jr["padic"].dump() << " bound=" << jr["bound"];
                std::cout << "\n";
            }
        }
        return exit_ok;
    }

    if (*cmd_cusps) {
        auto eq_opt = Expr::parse(cusps_eta).as_eta_quotient();
        if (!eq_opt) fail(errc::parse, "cusps needs a pure eta-quotient expression");
        Exp level = cusps_level;
        if (level == 0)
            for (auto& [delta, r] : eq_opt->pairs) {
                (void)r;
                level = level == 0 ? delta : level / gcd_exp(level, delta) * delta;
            }
        auto cert = check_modularity(*eq_opt, level);
        auto orders = cusp_orders(*eq_opt, level);
        if (json_out) {
            nlohmann::json j;
            j["level"] = level;
            j["modular"] = cert.pass();
            j["certificate"] = {{"weight_sum", cert.weight_sum},
                                {"delta_weighted", cert.delta_weighted},
                                {"codelta_weighted", cert.codelta_weighted},
                                {"exponent_product", cert.exponent_product.get_str()},
                                {"square_ok", cert.square_ok}};
            nlohmann::json jo = nlohmann::json::array();
            for (const auto& co : orders)
                jo.push_back({{"class", co.c}, {"order", co.order.get_str()}, {"count", co.count}});
            j["cusp_orders"] = jo;
            emit(j, out_file);
        } else {
            std::cout << "level N = " << level << ", modular: " << (cert.pass() ? "yes" : "no")
                      << "\n";
            std::cout << "  weight sum " << cert.weight_sum << ", sum(delta r) = "
                      << cert.delta_weighted << ", sum((N/delta) r) = " << cert.codelta_weighted
                      << ", product = " << cert.exponent_product.get_str() << "\n";
            for (const auto& co : orders)
                std::cout << "  class c=" << co.c << "  order " << co.order.get_str() << "  ("
                          << co.count << " cusp" << (co.count == 1 ? "" : "s") << ")\n";
        }
        return exit_ok;
    }

    if (*cmd_selftest) {
        auto results = run_acceptance(ws, json_out ? nullptr : &std::cout);
        bool ok = all_pass(results);
        if (json_out) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : results)
                arr.push_back({{"index", r.index},
                               {"title", r.title},
                               {"pass", r.pass},
                               {"detail", r.detail},
                               {"ms", r.ms}});
            nlohmann::json j;
            j["criteria"] = arr;
            j["pass"] = ok;
            emit(j, out_file);
        } else {
            std::cout << (ok ? "all criteria pass" : "SOME CRITERIA FAILED") << "\n";
        }
        return ok ? exit_ok : exit_verification;
    }

    return exit_usage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == errc::budget ? exit_budget : exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
