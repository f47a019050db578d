// eqcol: command-line front end for the equitable-coloring library.
//
// Subcommands: color, check, gen, oracle, m0, bench.  Exit codes are uniform
// across subcommands: 0 success / 2 proven negative (no coloring, check
// violation, verification mismatch) / 3 no applicable algorithm or search
// budget exhausted / 1 usage or I/O errors.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqcol/eqcol.hpp"

namespace {

using namespace eqcol;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw io_error("failed while writing '" + path + "'");
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
}

std::string fmt_ms(double ms) {
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(3);
    ss << ms;
    return ss.str();
}

// One tab-separated run-report line on stderr:
// instance, algorithm, k, outcome, shifts, wall ms, validator verdict.
void report(const std::string& instance, const std::string& algo, int k,
            const std::string& outcome, const std::string& shifts, double ms,
            const std::string& verdict) {
    std::cerr << instance << '\t' << algo << '\t' << k << '\t' << outcome
              << '\t' << shifts << '\t' << fmt_ms(ms) << '\t' << verdict
              << '\n';
}

// --- color -----------------------------------------------------------------

struct ColorArgs {
    std::string input, out = "-", trace, algo = "auto";
    int k = 0;
    std::uint64_t seed = 0;  // accepted for interface stability; unused
};

int run_color(const ColorArgs& a) {
    Graph g = graph_from_dimacs(slurp(a.input));
    const int k = a.k;
    auto [dmax, ore_deg, dmin] = degree_stats(g);
    (void)dmin;
    const bool acyclic = is_forest(g);

    std::string algo = a.algo;
    if (algo == "auto") {
        if (acyclic && k >= 3) algo = "forest";
        else if (dmax < k) algo = "hs";
        else if (ore_deg < 2 * k) algo = "ore";
        else algo = "oracle";
    }

    Coloring f;
    ShiftLog log;
    bool have_log = false;
    auto t0 = std::chrono::steady_clock::now();

    if (algo == "hs") {
        if (dmax >= k) {
            std::cerr << "not applicable: max degree " << dmax
                      << " is not below k=" << k << "\n";
            report(a.input, algo, k, "inapplicable", "-", elapsed_ms(t0), "-");
            return 3;
        }
        HsResult r = equitable_color_hs(g, k);
        f = std::move(r.coloring);
        log = std::move(r.log);
        have_log = true;
    } else if (algo == "ore") {
        if (ore_deg >= 2 * k) {
            std::cerr << "not applicable: Ore degree " << ore_deg
                      << " is not below 2k=" << 2 * k << "\n";
            report(a.input, algo, k, "inapplicable", "-", elapsed_ms(t0), "-");
            return 3;
        }
        try {
            f = equitable_color_ore(g, k);
        } catch (const budget_exceeded& e) {
            std::cerr << "error: " << e.what() << "\n";
            report(a.input, algo, k, "budget", "-", elapsed_ms(t0), "-");
            return 3;
        }
    } else if (algo == "forest") {
        if (!acyclic) {
            std::cerr << "not applicable: input has a cycle\n";
            report(a.input, algo, k, "inapplicable", "-", elapsed_ms(t0), "-");
            return 3;
        }
        if (k < 3) {
            std::cerr << "not applicable: the forest construction needs k >= 3\n";
            report(a.input, algo, k, "inapplicable", "-", elapsed_ms(t0), "-");
            return 3;
        }
        ForestFeasibility feas = forest_feasible(g, k);
        if (!feas.feasible) {
            std::cerr << "no equitable " << k << "-coloring: vertex "
                      << feas.witness + 1
                      << " is in no independent set of size " << g.n / k
                      << "\n";
            report(a.input, algo, k, "no", "-", elapsed_ms(t0), "-");
            return 2;
        }
        f = forest_equitable_color(g, k);
    } else if (algo == "oracle") {
        DecideResult r;
        try {
            r = decide_equitable(g, k);
        } catch (const budget_exceeded& e) {
            std::cerr << "error: " << e.what() << "\n";
            report(a.input, algo, k, "budget", "-", elapsed_ms(t0), "-");
            return 3;
        }
        if (r.status == Status::no) {
            std::cerr << "no equitable " << k
                      << "-coloring exists (exhaustive search)\n";
            report(a.input, algo, k, "no", "-", elapsed_ms(t0), "-");
            return 2;
        }
        if (r.status == Status::unknown) {
            std::cerr << "undecided: search budget exhausted\n";
            report(a.input, algo, k, "budget", "-", elapsed_ms(t0), "-");
            return 3;
        }
        f = std::move(r.coloring);
    } else {
        std::cerr << "error: unknown algorithm '" << algo << "'\n";
        return 1;
    }

    double ms = elapsed_ms(t0);
    // Independent re-validation before declaring success.
    Verdict v = check_coloring(g, f, CheckMode::equitable, {}, k);
    if (!v.ok)
        throw internal_error("solver output failed validation: " + v.reason);

    spill(a.out, coloring_to_text(f));
    if (!a.trace.empty()) {
        if (have_log) {
            std::string text;
            for (const ShiftEntry& e : log)
                text += std::to_string(e.vertex + 1) + " " +
                        std::to_string(e.from) + " " + std::to_string(e.to) +
                        "\n";
            spill(a.trace, text);
        } else {
            std::cerr << "note: only the hs algorithm produces a shift trace; "
                         "no trace written\n";
        }
    }
    report(a.input, algo, k, "ok",
           have_log ? std::to_string(log.size()) : "-", ms, "valid");
    return 0;
}

// --- check -------------------------------------------------------------------

struct CheckArgs {
    std::string graph, coloring, lists, mode = "equitable";
    int k = 0;
};

int run_check(const CheckArgs& a) {
    Graph g = graph_from_dimacs(slurp(a.graph));
    Coloring f = coloring_from_text(slurp(a.coloring), g.n);

    CheckMode mode;
    bool list_mode = false;
    if (a.mode == "proper") mode = CheckMode::proper;
    else if (a.mode == "equitable") mode = CheckMode::equitable;
    else if (a.mode == "nearly-equitable") mode = CheckMode::nearly_equitable;
    else if (a.mode == "list") { mode = CheckMode::equitable_list; list_mode = true; }
    else if (a.mode == "se") { mode = CheckMode::se_list; list_mode = true; }
    else if (a.mode == "proportional") { mode = CheckMode::proportional; list_mode = true; }
    else {
        std::cerr << "error: unknown mode '" << a.mode << "'\n";
        return 1;
    }

    if ((mode == CheckMode::equitable || mode == CheckMode::nearly_equitable) &&
        a.k < 1) {
        std::cerr << "error: mode '" << a.mode << "' needs --k\n";
        return 1;
    }

    Lists L;
    if (list_mode) {
        if (!a.lists.empty()) {
            L = lists_from_text(slurp(a.lists), g.n);
        } else if (a.k >= 1) {
            L = constant_lists(g.n, a.k);
        } else {
            std::cerr << "error: list modes need --lists or --k\n";
            return 1;
        }
    }

    Verdict v = check_coloring(g, f, mode, L, a.k);
    if (v.ok) {
        std::cout << "ok\n";
        return 0;
    }
    std::cout << "violation: " << v.reason << "\n";
    return 2;
}

// --- gen ---------------------------------------------------------------------

struct GenArgs {
    std::string family, out = "-", lists_out;
    std::vector<long long> params;
    std::uint64_t seed = 0;
};

int run_gen(const GenArgs& a) {
    Graph g = generate(a.family, a.params, a.seed);
    spill(a.out, graph_to_dimacs(g));
    if (!a.lists_out.empty()) {
        if (a.family != "gk") {
            std::cerr << "error: --lists-out is only available for family gk\n";
            return 1;
        }
        spill(a.lists_out,
              lists_to_text(gk_example(static_cast<int>(a.params[0])).lists));
    }
    return 0;
}

// --- oracle ------------------------------------------------------------------

struct OracleArgs {
    std::string graph, lists, cert, question = "equitable", mode = "equitable";
    int k = 0;
    long long budget = 100'000'000;
};

int run_oracle(const OracleArgs& a) {
    Graph g = graph_from_dimacs(slurp(a.graph));

    ListMode lm;
    if (a.mode == "equitable") lm = ListMode::equitable;
    else if (a.mode == "se") lm = ListMode::se;
    else if (a.mode == "proportional") lm = ListMode::proportional;
    else {
        std::cerr << "error: unknown mode '" << a.mode << "'\n";
        return 1;
    }

    Status st;
    Coloring cert_coloring;
    Lists cert_lists;
    bool coloring_cert = false;

    if (a.question == "equitable") {
        if (a.k < 1) { std::cerr << "error: --k is required\n"; return 1; }
        DecideResult r = decide_equitable(g, a.k, a.budget);
        st = r.status;
        cert_coloring = std::move(r.coloring);
        coloring_cert = true;
    } else if (a.question == "list") {
        Lists L;
        if (!a.lists.empty()) L = lists_from_text(slurp(a.lists), g.n);
        else if (a.k >= 1) L = constant_lists(g.n, a.k);
        else { std::cerr << "error: question 'list' needs --lists or --k\n"; return 1; }
        DecideResult r = decide_list(g, L, lm, a.budget);
        st = r.status;
        cert_coloring = std::move(r.coloring);
        coloring_cert = true;
    } else if (a.question == "choosable") {
        if (a.k < 1) { std::cerr << "error: --k is required\n"; return 1; }
        ChoosableResult r = decide_choosable(g, a.k, lm, a.budget);
        st = r.status;
        cert_lists = std::move(r.witness);
    } else {
        std::cerr << "error: unknown question '" << a.question << "'\n";
        return 1;
    }

    std::cout << (st == Status::yes ? "yes" : st == Status::no ? "no" : "unknown")
              << "\n";
    if (!a.cert.empty()) {
        if (coloring_cert && st == Status::yes)
            spill(a.cert, coloring_to_text(cert_coloring));
        else if (!coloring_cert && st == Status::no)
            spill(a.cert, lists_to_text(cert_lists));
        else
            std::cerr << "note: no certificate for this verdict\n";
    }
    return st == Status::yes ? 0 : st == Status::no ? 2 : 3;
}

// --- m0 ----------------------------------------------------------------------

struct M0Args {
    int n = 0, k = 0;
    bool verify = false;
    long long budget = 4'000'000'000;
};

int run_m0(const M0Args& a) {
    auto fv = m0_formula(a.n, a.k);
    std::string fstr = fv ? std::to_string(*fv) : "infinite";
    if (!a.verify) {
        std::cout << "formula=" << fstr << "\n";
        return 0;
    }
    M0Result r;
    try {
        r = m0_exhaustive(a.n, a.k, a.budget);
    } catch (const budget_exceeded& e) {
        std::cout << "formula=" << fstr << " exhaustive=unknown UNKNOWN\n";
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    std::string estr = r.finite ? std::to_string(r.edges) : "infinite";
    bool pass = fv.has_value() == r.finite && (!fv || *fv == r.edges);
    std::cout << "formula=" << fstr << " exhaustive=" << estr << " "
              << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 2;
}

// --- bench -------------------------------------------------------------------

struct BenchArgs {
    std::vector<int> sizes;
    int k_offset = 0, delta = 8, repeats = 3;
    std::uint64_t seed = 1;
};

int run_bench(const BenchArgs& a) {
    if (a.delta < 1 || a.repeats < 1 || a.sizes.empty()) {
        std::cerr << "error: bench needs --sizes, --delta >= 1, --repeats >= 1\n";
        return 1;
    }
    int k = a.delta + 1 + a.k_offset;
    if (k <= a.delta) {
        std::cerr << "error: k = delta+1+offset must exceed delta\n";
        return 1;
    }
    std::cout << "# n\tk\tmedian_ms\tmax_shifts\n";
    for (int n : a.sizes) {
        std::vector<double> times;
        long long max_shifts = 0;
        for (int rep = 0; rep < a.repeats; ++rep) {
            Graph g = random_graph_bounded_degree(
                n, a.delta, static_cast<long long>(n) * a.delta / 2,
                a.seed * 1000003ULL + static_cast<std::uint64_t>(rep));
            auto t0 = std::chrono::steady_clock::now();
            HsResult r = equitable_color_hs(g, k);
            times.push_back(elapsed_ms(t0));
            long long np = (n + k - 1) / k * k;
            EQCOL_CHECK_MSG(
                static_cast<long long>(r.log.size()) <= 2LL * k * np,
                "shift count exceeded 2k * padded n");
            max_shifts = std::max(max_shifts,
                                  static_cast<long long>(r.log.size()));
        }
        std::sort(times.begin(), times.end());
        std::size_t h = times.size() / 2;
        double median = times.size() % 2 ? times[h]
                                         : (times[h - 1] + times[h]) / 2.0;
        std::cout << n << '\t' << k << '\t' << fmt_ms(median) << '\t'
                  << max_shifts << "\n";
    }
    return 0;
}

// --- plumbing ------------------------------------------------------------------

// Runs fn, mapping library exceptions to exit codes.  Precondition violations
// mean "no applicable algorithm" for color but plain usage errors elsewhere.
int guarded(const std::function<int()>& fn, int precondition_exit) {
    try {
        return fn();
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return precondition_exit;
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equitable graph coloring toolkit"};
    app.require_subcommand(1);

    ColorArgs ca;
    CLI::App* color = app.add_subcommand(
        "color", "construct an equitable k-coloring of a DIMACS graph");
    color->add_option("input", ca.input, "input graph (.col, '-' for stdin)")
        ->required();
    color->add_option("--k", ca.k, "number of colors")
        ->required()
        ->check(CLI::PositiveNumber);
    color->add_option("--algo", ca.algo, "algorithm (default auto)")
        ->check(CLI::IsMember({"hs", "ore", "forest", "auto"}));
    color->add_option("--out", ca.out, "coloring output file ('-' = stdout)");
    color->add_option("--trace", ca.trace,
                      "shift trace output ('v from to' per line; hs only)");
    color->add_option("--seed", ca.seed,
                      "reserved; all solvers are deterministic");

    CheckArgs ka;
    CLI::App* check = app.add_subcommand(
        "check", "validate a coloring file against a graph");
    check->add_option("graph", ka.graph, "graph file (.col)")->required();
    check->add_option("coloring", ka.coloring, "coloring file")->required();
    check
        ->add_option("--mode", ka.mode,
                     "proper|equitable|nearly-equitable|list|se|proportional")
        ->check(CLI::IsMember({"proper", "equitable", "nearly-equitable",
                               "list", "se", "proportional"}));
    check->add_option("--k", ka.k, "number of colors");
    check->add_option("--lists", ka.lists,
                      "lists file for the list modes (default: {0..k-1})");

    GenArgs ga;
    CLI::App* gen = app.add_subcommand("gen", "generate an instance family");
    gen->add_option("family", ga.family,
                    "complete|bipartite|star|path|cycle|edgeless|tree|bounded|"
                    "degenerate|gk|knminusclique|gluedstars")
        ->required();
    gen->add_option("params", ga.params, "family parameters");
    gen->add_option("--seed", ga.seed, "random seed (random families)");
    gen->add_option("--out", ga.out, "output DIMACS file ('-' = stdout)");
    gen->add_option("--lists-out", ga.lists_out,
                    "also write color lists (family gk only)");

    OracleArgs oa;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "exact brute-force decisions on small graphs");
    oracle->add_option("graph", oa.graph, "graph file (.col)")->required();
    oracle->add_option("--question", oa.question, "equitable|list|choosable")
        ->check(CLI::IsMember({"equitable", "list", "choosable"}));
    oracle->add_option("--mode", oa.mode,
                       "list/choosable variant: equitable|se|proportional")
        ->check(CLI::IsMember({"equitable", "se", "proportional"}));
    oracle->add_option("--k", oa.k, "number of colors / list size");
    oracle->add_option("--lists", oa.lists, "lists file (question 'list')");
    oracle->add_option("--budget", oa.budget, "search-node budget")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--cert", oa.cert,
                       "certificate output (coloring on yes; lists on "
                       "choosable no)");

    M0Args ma;
    CLI::App* m0 = app.add_subcommand(
        "m0", "fewest edges of a graph on n vertices with no equitable "
              "k-coloring");
    m0->add_option("--n", ma.n, "vertex count")
        ->required()
        ->check(CLI::PositiveNumber);
    m0->add_option("--k", ma.k, "number of colors")
        ->required()
        ->check(CLI::PositiveNumber);
    m0->add_flag("--verify-exhaustive", ma.verify,
                 "check the formula against direct enumeration");
    m0->add_option("--budget", ma.budget, "search-node budget")
        ->check(CLI::PositiveNumber);

    BenchArgs ba;
    CLI::App* bench = app.add_subcommand(
        "bench", "time the max-degree solver on random bounded-degree graphs");
    bench->add_option("--sizes", ba.sizes, "comma-separated vertex counts")
        ->required()
        ->delimiter(',');
    bench->add_option("--k-offset", ba.k_offset, "k = delta + 1 + offset");
    bench->add_option("--delta", ba.delta, "max degree of the random graphs");
    bench->add_option("--repeats", ba.repeats, "runs per size (median)");
    bench->add_option("--seed", ba.seed, "base random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (color->parsed()) return guarded([&] { return run_color(ca); }, 3);
    if (check->parsed()) return guarded([&] { return run_check(ka); }, 1);
    if (gen->parsed()) return guarded([&] { return run_gen(ga); }, 1);
    if (oracle->parsed()) return guarded([&] { return run_oracle(oa); }, 1);
    if (m0->parsed()) return guarded([&] { return run_m0(ma); }, 1);
    if (bench->parsed()) return guarded([&] { return run_bench(ba); }, 1);
    return 1;  // unreachable: require_subcommand(1)
}
