// dfn: number-theory workbench around the Smarandache function eta.
// Subcommands: sieve, pi, factor, eta, tables, primality, euler-gen,
// solve (linear2|linsys|poly|quad), search, aux.
#include <gmpxx.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "dfn/arithfun.hpp"
#include "dfn/congruence.hpp"
#include "dfn/counting.hpp"
#include "dfn/dioph_linear.hpp"
#include "dfn/dioph_quad.hpp"
#include "dfn/eta.hpp"
#include "dfn/primality.hpp"
#include "dfn/search.hpp"
#include "dfn/tables_io.hpp"
#include "json.hpp"

using namespace dfn;
using nlohmann::json;

namespace {

struct GlobalConfig {
    std::filesystem::path tables_dir;
    u64 seed = 0;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    bool regen = false;
};

constexpr u64 TABLE_N = 1000000;

// Tables are generated into tables_dir on first use and reused; the PRN
// anchor checks reject stale or foreign files, in which case we rebuild.
class TableCache {
public:
    explicit TableCache(const GlobalConfig& cfg) : cfg_(cfg) {}

    const ValueTable& get(Fn fn) {
        auto& slot = slot_of(fn);
        if (slot.n == 0) slot = load(fn);
        return slot;
    }

    const PrimeTable& primes() {
        if (primes_.primes.empty()) primes_ = sieve(TABLE_N);
        return primes_;
    }

    TableSet table_set(const EquationSpec& eq) {
        TableSet ts;
        for (Fn f : eq.needs) ts.set(get(f));
        if (eq.needs_pi) ts.set_primes(primes());
        return ts;
    }

private:
    ValueTable& slot_of(Fn fn) { return cache_[size_t(fn)]; }

    ValueTable load(Fn fn) {
        std::filesystem::path dir = cfg_.tables_dir;
        if (dir.empty()) {
            generate_only_ = true;
            return gen_table(fn, TABLE_N);
        }
        std::filesystem::create_directories(dir);
        auto path = dir / (std::string(to_string(fn)) + "_1000000.prn");
        if (!cfg_.regen && std::filesystem::exists(path)) {
            try {
                auto t = read_table(path, fn);
                if (t.n == TABLE_N) return t;
            } catch (const std::exception& e) {
                std::cerr << "note: regenerating " << path.string() << " (" << e.what() << ")\n";
            }
        }
        auto t = gen_table(fn, TABLE_N);
        write_table(t, path);
        return t;
    }

    const GlobalConfig& cfg_;
    ValueTable cache_[6];
    PrimeTable primes_;
    bool generate_only_ = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

// "m=2..10;n=1..10;x=1..16:2" -> dims (step after ':')
SearchDomain parse_domain(const std::string& text) {
    SearchDomain d;
    for (const auto& part : split(text, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("domain", "expected name=a..b");
        Dim dim;
        dim.name = part.substr(0, eq);
        std::string range = part.substr(eq + 1);
        i64 step = 1;
        if (auto colon = range.find(':'); colon != std::string::npos) {
            step = std::stoll(range.substr(colon + 1));
            range = range.substr(0, colon);
        }
        auto dots = range.find("..");
        if (dots == std::string::npos) throw CLI::ValidationError("domain", "expected a..b");
        dim.a = std::stoll(range.substr(0, dots));
        dim.b = std::stoll(range.substr(dots + 2));
        dim.r = step;
        if (dim.r < 1) throw CLI::ValidationError("domain", "step must be >= 1");
        d.dims.push_back(dim);
    }
    return d;
}

int dim_index(const EquationSpec& eq, const std::string& name) {
    for (size_t i = 0; i < eq.default_domain.dims.size(); ++i)
        if (eq.default_domain.dims[i].name == name) return int(i);
    throw CLI::ValidationError("filter", "unknown variable " + name);
}

// coprime(m,n) / nonprime(x) / less(x,y) / not_equal(x,y) / not_coprime(x,y)
Filter parse_filter(const EquationSpec& eq, const std::string& text) {
    auto open = text.find('(');
    auto close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw CLI::ValidationError("filter", "expected kind(args)");
    std::string kind = text.substr(0, open);
    auto args = split(text.substr(open + 1, close - open - 1), ',');
    auto idx = [&](size_t k) { return dim_index(eq, args.at(k)); };
    if (kind == "coprime") return f_coprime(idx(0), idx(1), text);
    if (kind == "not_coprime") return f_not_coprime(idx(0), idx(1), text);
    if (kind == "nonprime") return f_nonprime(idx(0), text);
    if (kind == "less") return f_less(idx(0), idx(1), text);
    if (kind == "not_equal") return f_not_equal(idx(0), idx(1), text);
    throw CLI::ValidationError("filter", "unknown filter kind " + kind);
}

const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::prime: return "prime";
        case Verdict::composite: return "composite";
        case Verdict::invalid: return "invalid";
    }
    return "?";
}

mpq_class parse_rational(const std::string& tok) {
    mpq_class q(tok);
    q.canonicalize();
    return q;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"number theory workbench: sieves, eta, factorization, "
                 "Diophantine solvers and the empirical search harness"};
    app.require_subcommand(1);

    app.fallthrough();
    GlobalConfig cfg;
    if (const char* env = std::getenv("DF_TABLES_DIR")) cfg.tables_dir = env;
    app.add_option("--tables-dir", cfg.tables_dir, "directory for cached PRN tables");
    app.add_option("--seed", cfg.seed, "PRNG seed for probabilistic tests");
    app.add_option("--workers", cfg.workers, "worker threads for searches")
        ->check(CLI::PositiveNumber);
    app.add_flag("--regen", cfg.regen, "force table regeneration");

    TableCache cache(cfg);

    // ---- sieve -------------------------------------------------------------
    auto* c_sieve = app.add_subcommand("sieve", "generate primes up to a limit");
    u64 sieve_limit = 100;
    std::string sieve_algo = "batched";
    bool sieve_stats = false;
    c_sieve->add_option("--limit", sieve_limit)->required();
    c_sieve->add_option("--algo", sieve_algo);
    c_sieve->add_flag("--stats", sieve_stats);
    c_sieve->callback([&] {
        auto algo = sieve_algo_from_string(sieve_algo);
        if (!algo) throw CLI::ValidationError("--algo", "unknown algorithm " + sieve_algo);
        auto [table, stats] = sieve(sieve_limit, *algo);
        if (sieve_stats) {
            std::cout << to_string(stats.algorithm) << "," << stats.zero_assignments << ","
                      << stats.memory_cells << ","
                      << std::chrono::duration_cast<std::chrono::milliseconds>(stats.elapsed)
                             .count()
                      << "\n";
        } else {
            for (u64 p : table.primes) std::cout << p << "\n";
        }
    });

    // ---- pi ----------------------------------------------------------------
    auto* c_pi = app.add_subcommand("pi", "count primes up to x");
    u64 pi_x = 0;
    std::string pi_method = "table";
    c_pi->add_option("--x", pi_x)->required();
    c_pi->add_option("--method", pi_method)->check(CLI::IsMember({"table", "eta", "bounds"}));
    c_pi->callback([&] {
        if (pi_method == "bounds") {
            auto [lo, hi] = pi_bounds(pi_x);
            std::cout << lo << " " << hi << "\n";
        } else if (pi_method == "eta") {
            std::cout << pi_via_eta(pi_x, cache.get(Fn::eta)) << "\n";
        } else {
            auto table = pi_x <= TABLE_N ? cache.primes() : sieve(pi_x);
            std::cout << pi_count(pi_x, table) << "\n";
        }
    });

    // ---- factor ------------------------------------------------------------
    auto* c_factor = app.add_subcommand("factor", "integer factorization");
    u64 factor_n = 0;
    std::string factor_method = "trial";
    u64 factor_bound = 0;
    c_factor->add_option("n", factor_n)->required();
    c_factor->add_option("--method", factor_method)
        ->check(CLI::IsMember({"trial", "fermat", "rho", "p1", "ps"}));
    c_factor->add_option("--bound", factor_bound);
    c_factor->callback([&] {
        auto print_factors = [](const Factorization& f) {
            for (size_t i = 0; i < f.factors.size(); ++i) {
                if (i) std::cout << " * ";
                std::cout << f.factors[i].first << "^" << f.factors[i].second;
            }
            std::cout << "\n";
        };
        if (factor_method == "trial") {
            u64 root = isqrt(factor_n) + 1;
            auto table = root <= TABLE_N ? cache.primes() : sieve(root);
            print_factors(factorize(factor_n, table));
        } else if (factor_method == "fermat") {
            auto [a, b] = fermat_factor(factor_n);
            std::cout << a << " * " << b << "\n";
        } else if (factor_method == "rho") {
            auto d = pollard_rho(factor_n);
            if (d)
                std::cout << *d << " * " << factor_n / *d << "\n";
            else
                std::cout << "failure: another function must be chosen\n";
        } else if (factor_method == "p1") {
            auto d = pollard_p1(factor_n, factor_bound ? factor_bound : 100);
            if (d)
                std::cout << *d << " * " << factor_n / *d << "\n";
            else
                std::cout << "failure\n";
        } else {
            u64 b = factor_bound ? factor_bound : isqrt(factor_n);
            auto d = pollard_strassen(factor_n, b);
            if (d)
                std::cout << *d << "\n";
            else
                std::cout << "failure: no prime factor up to " << b << "\n";
        }
    });

    // ---- eta ---------------------------------------------------------------
    auto* c_eta = app.add_subcommand("eta", "Smarandache function");
    u64 eta_value = 0;
    std::string eta_factored_str;
    u64 eta_table_n = 0;
    std::string eta_out;
    c_eta->add_option("--value", eta_value);
    c_eta->add_option("--factored", eta_factored_str,
                      "comma-separated prime powers, e.g. 2^1000,5^1000");
    c_eta->add_option("--table", eta_table_n);
    c_eta->add_option("--out", eta_out);
    c_eta->callback([&] {
        if (!eta_factored_str.empty()) {
            Factorization f;
            for (const auto& part : split(eta_factored_str, ',')) {
                auto caret = part.find('^');
                u64 p = std::stoull(part.substr(0, caret));
                u32 a = caret == std::string::npos ? 1 : u32(std::stoul(part.substr(caret + 1)));
                f.factors.emplace_back(p, a);
            }
            std::cout << eta_factored(f) << "\n";
        } else if (eta_table_n > 0) {
            auto t = eta_table(eta_table_n);
            if (eta_out.empty()) throw CLI::ValidationError("--out", "output path required");
            auto prn = write_table(t, eta_out);
            std::cout << "wrote " << prn.count << " values to " << prn.path.string() << "\n";
        } else if (eta_value > 0) {
            u64 root = isqrt(eta_value) + 1;
            auto table = root <= TABLE_N ? cache.primes() : sieve(root);
            std::cout << eta(eta_value, table) << "\n";
        } else {
            throw CLI::ValidationError("eta", "one of --value/--factored/--table required");
        }
    });

    // ---- tables ------------------------------------------------------------
    auto* c_tables = app.add_subcommand("tables", "PRN table files");
    auto* c_gen = c_tables->add_subcommand("gen", "generate a table file");
    std::string gen_fn = "eta", gen_out;
    u64 gen_limit = 0;
    c_gen->add_option("--fn", gen_fn)->required();
    c_gen->add_option("--limit", gen_limit)->required();
    c_gen->add_option("--out", gen_out)->required();
    c_gen->callback([&] {
        auto fn = fn_from_string(gen_fn);
        if (!fn) throw CLI::ValidationError("--fn", "unknown function " + gen_fn);
        auto prn = write_table(gen_table(*fn, gen_limit), gen_out);
        std::cout << "wrote " << prn.count << " values to " << prn.path.string() << "\n";
    });
    auto* c_verify = c_tables->add_subcommand("verify", "validate a table file");
    std::string verify_file, verify_fn = "eta";
    c_verify->add_option("file", verify_file)->required();
    c_verify->add_option("--fn", verify_fn)->required();
    c_verify->callback([&] {
        auto fn = fn_from_string(verify_fn);
        if (!fn) throw CLI::ValidationError("--fn", "unknown function " + verify_fn);
        auto t = read_table(verify_file, *fn);
        std::cout << "ok: " << t.n << " values\n";
    });

    // ---- primality ---------------------------------------------------------
    auto* c_prim = app.add_subcommand("primality", "primality tests");
    u64 prim_n = 0;
    std::string prim_test = "eta";
    c_prim->add_option("n", prim_n)->required();
    c_prim->add_option("--test", prim_test)
        ->check(CLI::IsMember({"eta", "csp1", "csp2", "csp3", "csp4", "mr", "ll", "bsearch"}));
    c_prim->callback([&] {
        Verdict v;
        if (prim_test == "eta") {
            v = tp_eta(prim_n, cache.get(Fn::eta));
        } else if (prim_test.rfind("csp", 0) == 0) {
            v = csp(prim_test[3] - '0', prim_n);
        } else if (prim_test == "mr") {
            v = miller_rabin(mpz_class(static_cast<unsigned long>(prim_n)), 25, cfg.seed);
        } else if (prim_test == "ll") {
            auto [m, verdict] = lucas_lehmer(u32(prim_n));
            std::cout << m << " is " << verdict_str(verdict) << "\n";
            return;
        } else {
            auto table = prim_n <= TABLE_N ? cache.primes() : sieve(prim_n);
            v = bisect_is_prime(prim_n, table) ? Verdict::prime : Verdict::composite;
        }
        std::cout << verdict_str(v) << "\n";
    });

    // ---- euler-gen ---------------------------------------------------------
    auto* c_euler = app.add_subcommand("euler-gen", "generalized Euler pair (s, m_s)");
    u64 eg_a = 0, eg_m = 0;
    bool eg_verify = false;
    c_euler->add_option("a", eg_a)->required();
    c_euler->add_option("m", eg_m)->required();
    c_euler->add_flag("--verify", eg_verify);
    c_euler->callback([&] {
        auto [s, ms] = euler_gen(eg_a, eg_m);
        std::cout << s << " " << ms << "\n";
        if (eg_verify)
            std::cout << (verify_euler_gen(eg_a, eg_m) ? "verified" : "FAILED") << "\n";
    });

    // ---- solve -------------------------------------------------------------
    auto* c_solve = app.add_subcommand("solve", "analytical Diophantine solvers");

    auto* c_lin2 = c_solve->add_subcommand("linear2", "a*x - b*y = c in naturals");
    i64 l2a = 0, l2b = 0, l2c = 0;
    u64 l2terms = 5;
    c_lin2->add_option("a", l2a)->required();
    c_lin2->add_option("b", l2b)->required();
    c_lin2->add_option("c", l2c)->required();
    c_lin2->add_option("--terms", l2terms);
    c_lin2->callback([&] {
        auto s = solve_linear2(l2a, l2b, l2c);
        if (!s) {
            std::cout << "no solution: gcd(a,b) does not divide c\n";
            return;
        }
        std::cout << "x = " << s->gen_x << "*k + " << s->x0 << ", y = " << s->gen_y << "*k + "
                  << s->y0 << ", natural for k >= " << s->k_min << "\n";
        for (mpz_class k = s->k_min; k < s->k_min + i64(l2terms); ++k)
            std::cout << "k=" << k << ": (" << s->gen_x * k + s->x0 << ", "
                      << s->gen_y * k + s->y0 << ")\n";
    });

    auto* c_linsys = c_solve->add_subcommand("linsys", "linear system from CSV (last col = b)");
    std::string linsys_file;
    c_linsys->add_option("--file", linsys_file)->required();
    c_linsys->callback([&] {
        std::ifstream in(linsys_file);
        if (!in) throw std::runtime_error("cannot open " + linsys_file);
        RationalMatrix a;
        std::vector<mpq_class> b;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto toks = split(line, ',');
            std::vector<mpq_class> row;
            for (const auto& t : toks) row.push_back(parse_rational(t));
            b.push_back(row.back());
            row.pop_back();
            a.push_back(row);
        }
        auto sol = solve_system(a, b);
        switch (sol.kind) {
            case SystemSolution::Kind::inconsistent: std::cout << "no solution\n"; break;
            case SystemSolution::Kind::unique:
                std::cout << "unique solution:";
                for (const auto& v : sol.particular) std::cout << " " << v;
                std::cout << "\n";
                break;
            case SystemSolution::Kind::parametric:
                std::cout << "parametric solution, free columns:";
                for (int c : sol.free_cols) std::cout << " x" << c + 1;
                std::cout << "\nparticular:";
                for (const auto& v : sol.particular) std::cout << " " << v;
                std::cout << "\n";
                for (size_t j = 0; j < sol.basis.size(); ++j) {
                    std::cout << "direction x" << sol.free_cols[j] + 1 << ":";
                    for (const auto& v : sol.basis[j]) std::cout << " " << v;
                    std::cout << "\n";
                }
                break;
        }
    });

    auto* c_poly = c_solve->add_subcommand("poly", "roots of an integer polynomial");
    std::string poly_coeffs, poly_mode = "rational";
    c_poly->add_option("--coeffs", poly_coeffs, "a0,a1,...,an")->required();
    c_poly->add_option("--mode", poly_mode)
        ->check(CLI::IsMember({"rational", "integer", "natural"}));
    c_poly->callback([&] {
        std::vector<mpz_class> coeffs;
        for (const auto& t : split(poly_coeffs, ',')) coeffs.emplace_back(t);
        RootMode mode = poly_mode == "rational"
                            ? RootMode::rational
                            : poly_mode == "integer" ? RootMode::integer : RootMode::natural;
        auto roots = poly_roots(coeffs, mode);
        for (size_t i = 0; i < roots.size(); ++i)
            std::cout << roots[i] << (i + 1 < roots.size() ? " " : "");
        std::cout << "\n";
    });

    auto* c_quad = c_solve->add_subcommand("quad", "a*x^2 - b*y^2 + c = 0");
    u64 qa = 0, qb = 0;
    i64 qc = 0;
    u64 qterms = 5;
    std::string qbranch = "s0";
    c_quad->add_option("a", qa)->required();
    c_quad->add_option("b", qb)->required();
    c_quad->add_option("c", qc)->required();
    c_quad->add_option("--terms", qterms);
    c_quad->add_option("--branch", qbranch)->check(CLI::IsMember({"s0", "s1"}));
    c_quad->callback([&] {
        auto solver = make_quad_solver(qa, qb, qc);
        if (!solver) {
            std::cout << "not found: basis matrix or minimal solution out of bound\n";
            return;
        }
        std::cout << "A = [[" << solver->basis.a11 << ", " << solver->basis.a12 << "], ["
                  << solver->basis.a21 << ", " << solver->basis.a22 << "]]\n";
        Branch br = qbranch == "s0" ? Branch::s0 : Branch::s1;
        for (u64 n = 0; n < qterms; ++n) {
            auto [x, y] = iterate(*solver, n, br);
            std::cout << "n=" << n << ": (" << x << ", " << y << ")\n";
        }
    });

    // ---- search ------------------------------------------------------------
    auto* c_search = app.add_subcommand("search", "empirical equation search");
    std::string search_id, search_domain;
    std::vector<std::string> search_filters;
    bool search_json = false;
    bool search_list = false;
    c_search->add_option("id", search_id, "equation id, e.g. 2069 or guy12");
    c_search->add_option("--domain", search_domain, "override, e.g. m=2..10;n=1..10;x=1..16");
    c_search->add_option("--tables", cfg.tables_dir, "directory for cached PRN tables");
    c_search->add_option("--filter", search_filters, "extra filters, e.g. coprime(m,n)");
    c_search->add_flag("--json", search_json);
    c_search->add_flag("--list", search_list, "list all registered equations");
    c_search->callback([&] {
        if (search_list) {
            for (const auto& e : registry()) std::cout << e.id << "\t" << e.form << "\n";
            return;
        }
        if (search_id.empty()) throw CLI::ValidationError("search", "equation id required");
        const EquationSpec* eq = find_equation(search_id);
        if (!eq) throw CLI::ValidationError("search", "unknown equation " + search_id);
        SearchDomain domain =
            search_domain.empty() ? eq->default_domain : parse_domain(search_domain);
        std::vector<Filter> filters = eq->default_filters;
        for (const auto& f : search_filters) filters.push_back(parse_filter(*eq, f));
        TableSet ts = cache.table_set(*eq);
        auto result = run(*eq, domain, filters, ts, cfg.workers);
        if (search_json) {
            json j;
            j["id"] = eq->id;
            j["form"] = eq->form;
            json dom = json::array();
            for (const auto& d : domain.dims)
                dom.push_back({{"name", d.name}, {"a", d.a}, {"r", d.r}, {"b", d.b}});
            j["domain"] = dom;
            j["possible"] = result.possible;
            j["analyzed"] = result.analyzed;
            j["count"] = result.solutions.size();
            j["solutions"] = result.solutions;
            j["elapsed_ms"] = result.elapsed.count();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << eq->form << "\n";
            std::cout << "possible " << result.possible << ", analyzed " << result.analyzed
                      << ", solutions " << result.solutions.size() << " ("
                      << result.elapsed.count() << " ms)\n";
            for (const auto& s : result.solutions) {
                for (size_t i = 0; i < s.size(); ++i)
                    std::cout << (i ? "," : "(") << s[i];
                std::cout << ")\n";
            }
        }
    });

    // ---- aux ---------------------------------------------------------------
    auto* c_aux = app.add_subcommand("aux", "auxiliary searches");
    auto* c_es = c_aux->add_subcommand("erdos-straus", "4/n as three unit fractions");
    u64 es_n = 0, es_cap = 100;  // the book's boxed lists stop near z = 100
    c_es->add_option("n", es_n)->required();
    c_es->add_option("--cap", es_cap);
    c_es->callback([&] {
        for (auto [x, y, z] : erdos_straus(es_n, es_cap))
            std::cout << x << "," << y << "," << z << "\n";
    });
    auto* c_229 = c_aux->add_subcommand("r229", "p + reverse(p) prime?");
    u64 r229_p = 0;
    c_229->add_option("p", r229_p)->required();
    c_229->callback(
        [&] { std::cout << (has_229_property(r229_p) ? "yes" : "no") << "\n"; });
    auto* c_narc = c_aux->add_subcommand("narcissistic", "digit-power fixed points");
    u64 narc_base = 10;
    u32 narc_len = 1;
    c_narc->add_option("base", narc_base)->required();
    c_narc->add_option("length", narc_len)->required();
    c_narc->callback([&] {
        for (u64 v : narcissistic(narc_base, narc_len)) std::cout << v << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;  // usage errors exit 1
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::string what = e.what();
        if (what.find("cannot open") != std::string::npos ||
            what.find("write failed") != std::string::npos)
            return 2;
        return 1;
    }
}
