#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qflag/flagbasis.hpp"
#include "qflag/geometry.hpp"
#include "qflag/orthocell.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;
using namespace qflag;

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

struct RunReport {
    std::string command;
    ordered_json params = ordered_json::object();
    std::vector<Check> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Runs fn() -> CheckReport under a timer and folds it into one check line.
template <class F>
void run_check(RunReport& rr, const std::string& name, F&& fn) {
    Check c;
    c.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        CheckReport rep = fn();
        c.pass = rep.ok();
        c.detail = std::to_string(rep.checks) + " checks";
        if (!rep.ok()) {
            c.detail += ", " + std::to_string(rep.failures.size()) + " failures; first: " +
                        rep.failures.front();
        }
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
    }
    c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count();
    rr.checks.push_back(std::move(c));
}

void run_flag(RunReport& rr, const std::string& name, bool pass, const std::string& detail) {
    rr.checks.push_back(Check{name, pass, detail, 0.0});
}

void emit_report(const RunReport& rr, const std::string& format) {
    if (format == "json") {
        ordered_json out;
        out["command"] = rr.command;
        out["parameters"] = rr.params;
        out["checks"] = ordered_json::array();
        for (const auto& c : rr.checks) {
            out["checks"].push_back({{"name", c.name},
                                     {"status", c.pass ? "pass" : "fail"},
                                     {"detail", c.detail},
                                     {"elapsed_ms", c.ms}});
        }
        out["overall"] = rr.ok() ? "pass" : "fail";
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : rr.checks)
            std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  (" << c.detail
                      << ", " << c.ms << " ms)\n";
        std::cout << "overall: " << (rr.ok() ? "pass" : "FAIL") << "\n";
    }
}

std::string pair_tag(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void suite_relations(RunReport& rr, int n) {
    for (int i = 1; i < n; ++i)
        run_check(rr, "relations V^" + std::to_string(i),
                  [&] { return verify_relations(n, {i}); });
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            run_check(rr, "relations V^" + std::to_string(i) + "(x)V^" + std::to_string(j),
                      [&] { return verify_relations(n, {i, j}); });
}

void suite_ijinv(RunReport& rr, int n) {
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            run_check(rr, "closure " + pair_tag(i, j), [&] { return check_closure(n, i, j); });
            run_check(rr, "K eigenvalue " + pair_tag(i, j), [&] {
                CheckReport rep;
                for (const auto& c : enumerate_effective_all(n, i, j))
                    for (int b = 1; b < n; ++b)
                        rep.require(k_eigen_check(c, i, j, b),
                                    "K exponent " + cell_str(c) + " beta=" + std::to_string(b));
                return rep;
            });
        }
    }
}

void suite_tables(RunReport& rr, int n) {
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            run_check(rr, "case tables " + pair_tag(i, j),
                      [&] { return verify_case_tables(n, i, j); });
}

void suite_intertwiner(RunReport& rr, int n) {
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            run_check(rr, "intertwiner " + pair_tag(i, j),
                      [&] { return verify_intertwiner(n, i, j); });
}

void suite_braid(RunReport& rr, int n) {
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            for (int k = 1; k < n; ++k)
                run_check(rr,
                          "braid (" + std::to_string(i) + "," + std::to_string(j) + "," +
                              std::to_string(k) + ")",
                          [&] { return verify_braid(n, i, j, k); });
}

void suite_spanned(RunReport& rr, int n, int samples, unsigned long long seed,
                   const Rational& q0) {
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            run_check(rr, "spanned " + pair_tag(i, j),
                      [&] { return check_spanned(n, i, j, samples, seed, q0); });
}

void suite_gluing(RunReport& rr, int n) {
    for (int i = 1; i < n; ++i)
        run_check(rr, "gluing i=" + std::to_string(i), [&] {
            CheckReport rep;
            for (const auto& c : enumerate_monogressive(n)) rep.merge(gluing_check(c, i));
            return rep;
        });
}

void suite_normalform(RunReport& rr, int n) {
    for (int i = 1; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            run_check(rr, "normal form " + pair_tag(i, j), [&] {
                CheckReport rep;
                rep.require(count_ij_normal(n, i, j) == dim_formula(n, i, j),
                            "normal count = D " + pair_tag(i, j));
                for (const auto& c : enumerate_effective_all(n, i, j)) {
                    Orthocell nf = ij_normalize(c, i, j);
                    rep.require(ij_normalize(make_cell(n, nf.roots, nf.w), i, j) == nf,
                                "idempotent " + cell_str(c));
                    TensorVector en = e_vector_at(n, nf.roots, nf.w, i, j);
                    TensorVector ec = e_vector(c, i, j);
                    rep.require(en == ec || en == ec * Laurent(-1),
                                "sign invariance " + cell_str(c));
                }
                return rep;
            });
        }
    }
}

int max_n() {
    if (const char* env = std::getenv("QFLAG_MAX_N")) return std::atoi(env);
    return 7;
}

json frac_json(const LaurentFrac& f) {
    if (f.is_laurent()) return json(f.as_laurent());
    return json{{"num", f.num()}, {"den", f.den()}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for monogressive orthocells, the e-basis of "
                 "V^{ij}, R-maps, and the associated quantum flag geometry"};
    app.require_subcommand(1);

    int n = 3, i = 1, j = 1, rank = -1, samples = 100;
    unsigned long long seed = 42;
    std::string q_str = "2", format = "table", filter = "monogressive", suite = "all";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "rank parameter of SL(n)");
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
    };

    auto* c_orth = app.add_subcommand("orthocells", "enumerate orthocells");
    add_common(c_orth);
    c_orth->add_option("--rank", rank, "restrict to this rank");
    c_orth->add_option("--filter", filter)
        ->check(CLI::IsMember({"all", "monogressive", "effective"}));
    c_orth->add_option("--i", i);
    c_orth->add_option("--j", j);

    auto* c_dims = app.add_subcommand("dims", "dimension table D_{n;i,j} vs e-span rank");
    add_common(c_dims);

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    add_common(c_verify);
    c_verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"relations", "ijinv", "tables", "intertwiner", "braid",
                               "spanned", "gluing", "normalform", "all"}));
    c_verify->add_option("--samples", samples);
    c_verify->add_option("--seed", seed);
    c_verify->add_option("--q", q_str, "rational specialization NUM/DEN");

    auto* c_rel = app.add_subcommand("relations", "quadratic relation basis for (i,j)");
    add_common(c_rel);
    c_rel->add_option("--i", i)->required();
    c_rel->add_option("--j", j)->required();

    auto* c_rep = app.add_subcommand("report", "run every suite and emit a consolidated report");
    add_common(c_rep);
    c_rep->add_option("--samples", samples);
    c_rep->add_option("--seed", seed);
    c_rep->add_option("--q", q_str);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    if (n < 2 || n > max_n()) {
        std::cerr << "error: --n must be in [2," << max_n() << "] (QFLAG_MAX_N overrides)\n";
        return 2;
    }
    if (n > 5 && (c_verify->parsed() || c_rep->parsed()))
        std::cerr << "warning: algebraic suites beyond n=5 may take very long\n";

    Rational q0;
    try {
        q0 = parse_rational(q_str);
        if (q0 == 0 || q0 == 1 || q0 == -1)
            throw std::invalid_argument("q must avoid {0,1,-1}");
    } catch (const std::exception& e) {
        std::cerr << "error: bad --q: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_orth->parsed()) {
            std::vector<Orthocell> cells;
            if (filter == "effective") {
                if (i < 1 || i >= n || j < 1 || j >= n) {
                    std::cerr << "error: --i/--j must be in [1," << n - 1 << "]\n";
                    return 2;
                }
                cells = enumerate_effective_all(n, i, j);
            } else if (filter == "monogressive") {
                cells = enumerate_monogressive(n);
            } else {
                // every orthocell: all disjoint root sets over all bases
                std::set<Orthocell> all;
                std::vector<int> perm(n);
                for (int p = 0; p < n; ++p) perm[p] = p + 1;
                std::vector<Permutation> sn;
                do { sn.emplace_back(perm); } while (std::next_permutation(perm.begin(), perm.end()));
                std::function<void(std::vector<PositiveRoot>&, int)> rec =
                    [&](std::vector<PositiveRoot>& rs, int from) {
                        for (const auto& w : sn) all.insert(make_cell(n, rs, w));
                        for (int a = from; a <= n; ++a) {
                            for (int b = a + 1; b <= n; ++b) {
                                PositiveRoot r(a, b);
                                bool ok = true;
                                for (const auto& o : rs)
                                    ok = ok && root_pairing(o, r) == 0;
                                if (!ok) continue;
                                rs.push_back(r);
                                rec(rs, a + 1);
                                rs.pop_back();
                            }
                        }
                    };
                std::vector<PositiveRoot> rs;
                rec(rs, 1);
                cells.assign(all.begin(), all.end());
            }
            if (rank >= 0)
                std::erase_if(cells, [&](const Orthocell& c) { return c.rank() != rank; });
            if (format == "json") {
                json out = {{"n", n}, {"filter", filter}, {"count", cells.size()},
                            {"cells", cells}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "count " << cells.size() << "\n";
                for (const auto& c : cells) std::cout << cell_str(c) << "\n";
            }
            return 0;
        }

        if (c_dims->parsed()) {
            bool all_match = true;
            ordered_json rows = ordered_json::array();
            for (int a = 1; a < n; ++a) {
                for (int b = a; b < n; ++b) {
                    const SpanBasis* sb = nullptr;
                    long long rk = -1;
                    try {
                        sb = &span_basis(n, a, b);
                        rk = static_cast<long long>(sb->solver.rank());
                    } catch (const std::exception&) {
                        rk = -1;
                    }
                    long long D = dim_formula(n, a, b);
                    bool match = rk == D;
                    all_match = all_match && match;
                    if (format == "json")
                        rows.push_back({{"i", a}, {"j", b}, {"D", D}, {"rank", rk},
                                        {"match", match}});
                    else
                        std::cout << a << " " << b << "  D=" << D << "  rank=" << rk << "  "
                                  << (match ? "ok" : "MISMATCH") << "\n";
                }
            }
            if (format == "json") std::cout << rows.dump(2) << "\n";
            return all_match ? 0 : 1;
        }

        if (c_rel->parsed()) {
            if (i < 1 || i >= n || j < 1 || j >= n) {
                std::cerr << "error: --i/--j must be in [1," << n - 1 << "]\n";
                return 2;
            }
            RelationSet rs = quadratic_relations(n, i, j);
            if (format == "json") {
                json out;
                out["n"] = n;
                out["i"] = i;
                out["j"] = j;
                out["typeI"] = json::array();
                for (const auto& phi : rs.type_one) {
                    json row = json::array();
                    for (const auto& c : phi) row.push_back(frac_json(c));
                    out["typeI"].push_back(row);
                }
                out["typeII"] = json::array();
                for (const auto& r : rs.type_two) {
                    json row = json::array();
                    for (const auto& c : r) row.push_back(frac_json(c));
                    out["typeII"].push_back(row);
                }
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "typeI (" << rs.type_one.size() << " relations):\n";
                for (const auto& phi : rs.type_one)
                    std::cout << "  " << relation_str(n, i, j, phi) << " = 0\n";
                std::cout << "typeII: matrix of R on the e-basis ("
                          << rs.type_two.size() << "x" << rs.type_two.size() << ")\n";
            }
            return 0;
        }

        RunReport rr;
        rr.params = {{"n", n}, {"seed", seed}, {"q", q_str}, {"samples", samples}};
        if (c_verify->parsed()) {
            rr.command = "verify";
            rr.params["suite"] = suite;
            if (suite == "relations" || suite == "all") suite_relations(rr, n);
            if (suite == "ijinv" || suite == "all") suite_ijinv(rr, n);
            if (suite == "tables" || suite == "all") suite_tables(rr, n);
            if (suite == "normalform" || suite == "all") suite_normalform(rr, n);
            if (suite == "intertwiner" || suite == "all") suite_intertwiner(rr, n);
            if (suite == "braid" || suite == "all") suite_braid(rr, n);
            if (suite == "gluing" || suite == "all") suite_gluing(rr, n);
            if (suite == "spanned" || suite == "all") suite_spanned(rr, n, samples, seed, q0);
            emit_report(rr, format);
            return rr.ok() ? 0 : 1;
        }

        // report: every suite plus the n-specific example checks
        rr.command = "report";
        suite_relations(rr, n);
        suite_ijinv(rr, n);
        suite_tables(rr, n);
        suite_normalform(rr, n);
        suite_intertwiner(rr, n);
        suite_braid(rr, n);
        suite_gluing(rr, n);
        suite_spanned(rr, n, samples, seed, q0);
        if (n == 2) {
            RelationSet rs = quadratic_relations(2, 1, 1);
            // x{1}(x)x{2} - q x{2}(x)x{1} in the basis order 11,12,21,22
            std::vector<LaurentFrac> want{LaurentFrac(0), LaurentFrac(1),
                                          LaurentFrac(Laurent::q(1, -1)), LaurentFrac(0)};
            bool good = rs.type_one.size() == 1 && rs.type_one[0] == want;
            run_flag(rr, "SL(2) quadratic relation", good,
                     rs.type_one.empty() ? "wrong dimension"
                                         : relation_str(2, 1, 1, rs.type_one[0]));
        }
        if (n == 3) {
            auto ratios = component_ratios(q0);
            std::map<std::pair<Rational, Rational>, int> want{
                {{Rational(1), q0}, 3}, {{q0, Rational(1)}, 3}, {{q0, q0}, 2}};
            run_flag(rr, "sigma component ratio multiset", ratios == want,
                     "3 classes over 8 components");
        }
        emit_report(rr, format);
        return rr.ok() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
