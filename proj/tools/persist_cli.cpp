// persist: command-line front end. Exit codes: 0 success, 1 verified
// failure, 2 usage error, 3 guard or resource limit.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "persist/digits.hpp"
#include "persist/equations.hpp"
#include "persist/even.hpp"
#include "persist/genealogy.hpp"
#include "persist/oracle.hpp"
#include "persist/report.hpp"
#include "persist/solver.hpp"

namespace {

using namespace persist;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_guard = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string format = "text";
    std::string out;
    unsigned threads = 1;
    u64 seed = 1;

    Format fmt() const { return format == "json" ? Format::json : Format::text; }
};

void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + cfg.out);
    f << text;
}

int odd_target(int d)
{
    if (d < 1 || d > 9 || d % 2 == 0)
        throw UsageError("target " + std::to_string(d) + " is not an odd digit; even targets are unsupported");
    return d;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Multiplicative persistence for odd targets: equation solver, proof checker and scans"};
    app.require_subcommand(1, 1);
    RunConfig cfg;
    cfg.threads = default_thread_count();
    app.add_option("--threads", cfg.threads, "worker threads (default PERSIST_THREADS or 1)")->check(CLI::Range(1u, 1024u));
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", cfg.out, "write output to PATH instead of stdout");
    app.add_option("--seed", cfg.seed, "RNG seed for sampled checks");

    std::string eq_id;
    std::optional<int> target;
    bool no_cofactor = false;
    auto* solve = app.add_subcommand("solve", "solve one equation or all equations of a target");
    auto* solve_eq = solve->add_option("--eq", eq_id, "equation id, e.g. 5.23");
    auto* solve_target = solve->add_option("--target", target, "odd target digit");
    solve_eq->excludes(solve_target);
    solve->add_flag("--no-cofactor-filter", no_cofactor, "skip the mod 27 / mod 7 test at the mod-48 stage");

    auto* prove = app.add_subcommand("prove", "verify the antecedent tree of odd targets");
    prove->add_option("--target", target, "target digit (default: all five odd digits)");
    prove->add_flag("--no-cofactor-filter", no_cofactor, "skip the mod 27 / mod 7 test at the mod-48 stage");

    u64 limit = 0;
    std::string mode = "naive";
    std::string csv;
    auto* scan = app.add_subcommand("scan", "exhaustive persistence scan of 0..N");
    scan->add_option("--limit", limit, "N")->required();
    scan->add_option("--mode", mode, "naive or multiset")->check(CLI::IsMember({"naive", "multiset"}));
    scan->add_option("--csv", csv, "also write the height histogram as CSV");

    auto* even_stats = app.add_subcommand("even-stats", "even-target equation census");

    std::string multiset;
    int e_max = 60;
    auto* two_bound = app.add_subcommand("two-bound", "power-of-two bound for a digit multiset");
    two_bound->add_option("--multiset", multiset, "digits, e.g. 4,4,7 (default: every factorization of 112)");
    two_bound->add_option("--emax", e_max, "largest suffix length tried")->check(CLI::Range(1, 200));

    auto* selftest = app.add_subcommand("selftest", "re-verify every embedded constant and claim");

    u64 bound = 12;
    bool no_R = false;
    auto* brute = app.add_subcommand("brute", "brute-force one equation with every a_i below a bound");
    brute->add_option("--eq", eq_id, "equation id")->required();
    brute->add_option("--bound", bound, "exponent cap");
    brute->add_flag("--no-R", no_R, "keep tuples violating (R)");

    auto* closure = app.add_subcommand("closure", "check f(n) against the tree of an odd target for n <= N");
    closure->add_option("--target", target, "odd target digit")->required();
    closure->add_option("--limit", limit, "N")->required();

    std::size_t samples = 10000;
    auto* sample = app.add_subcommand("sample", "sample members of every preimage family");
    sample->add_option("--target", target, "odd target digit (default: all five)");
    sample->add_option("--count", samples, "members per target");

    auto* equations = app.add_subcommand("equations", "published odd-target equations as CSV");
    auto* graph = app.add_subcommand("graph", "edges of a built-in antecedent tree");
    graph->add_option("--target", target, "target digit")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    SolverOptions options;
    options.threads = cfg.threads;
    options.cofactor_filter = !no_cofactor;

    try {
        if (*solve) {
            std::vector<SolutionSet> sets;
            if (!eq_id.empty()) {
                const Equation* eq = find_equation(eq_id);
                if (!eq) throw UsageError("unknown equation id " + eq_id);
                sets.push_back(solve_equation(*eq, options));
            } else if (target) {
                odd_target(*target);
                for (const auto& eq : appendix_a_table())
                    if (eq.target_d == *target) sets.push_back(solve_equation(eq, options));
            } else {
                throw UsageError("solve needs --eq or --target");
            }
            emit(cfg, render_solutions(sets, cfg.fmt()));
            for (const auto& s : sets)
                if (s.has_unresolved()) return exit_failure;
            return exit_ok;
        }
        if (*prove) {
            std::vector<ProofReport> proofs;
            if (target) {
                proofs.push_back(prove_odd_target(odd_target(*target), options));
            } else {
                for (int d : {1, 3, 5, 7, 9}) proofs.push_back(prove_odd_target(d, options));
            }
            emit(cfg, render_proofs(proofs, cfg.fmt()));
            for (const auto& p : proofs)
                if (!p.proved) return exit_failure;
            return exit_ok;
        }
        if (*scan) {
            const ScanReport r =
                scan_persistence(limit, mode == "naive" ? ScanMode::naive : ScanMode::multiset, cfg.threads);
            emit(cfg, render_scan(r, cfg.fmt()));
            if (!csv.empty()) {
                std::ofstream f(csv, std::ios::binary);
                if (!f) throw std::runtime_error("cannot write " + csv);
                f << scan_histogram_csv(r);
            }
            return r.violations.empty() ? exit_ok : exit_failure;
        }
        if (*even_stats) {
            emit(cfg, render_census(complexity_table(), cfg.fmt()));
            return exit_ok;
        }
        if (*two_bound) {
            if (multiset.empty()) {
                emit(cfg, render_bounds(power_of_two_table(), cfg.fmt()));
                return exit_ok;
            }
            DigitMultiset ms;
            try {
                ms = DigitMultiset::parse(multiset);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            const BoundReport b = lemma1_bound(ms, e_max);
            emit(cfg, render_bound(b, cfg.fmt()));
            return b.conclusive ? exit_ok : exit_failure;
        }
        if (*selftest) {
            const SelftestReport r = run_selftest();
            emit(cfg, render_selftest(r, cfg.fmt()));
            return r.ok() ? exit_ok : exit_failure;
        }
        if (*brute) {
            const Equation* eq = find_equation(eq_id);
            if (!eq) throw UsageError("unknown equation id " + eq_id);
            if (bound < 1) throw UsageError("--bound must be at least 1");
            const auto sols = brute_solve_equation(*eq, bound, !no_R, cfg.threads);
            emit(cfg, render_brute(*eq, bound, !no_R, sols, cfg.fmt()));
            return exit_ok;
        }
        if (*closure) {
            const ClosureReport r = verify_graph_closure(odd_target(*target), limit);
            emit(cfg, render_closure(r, cfg.fmt()));
            return r.ok() ? exit_ok : exit_failure;
        }
        if (*sample) {
            std::vector<SamplingReport> reports;
            if (target) {
                reports.push_back(sample_preimage_families(odd_target(*target), samples, cfg.seed));
            } else {
                for (int d : {1, 3, 5, 7, 9}) reports.push_back(sample_preimage_families(d, samples, cfg.seed));
            }
            emit(cfg, render_sampling(reports, cfg.fmt()));
            for (const auto& r : reports)
                if (!r.ok()) return exit_failure;
            return exit_ok;
        }
        if (*equations) {
            emit(cfg, appendix_a_csv());
            return exit_ok;
        }
        if (*graph) {
            if (!has_builtin_graph(*target)) throw UsageError("no built-in tree for target " + std::to_string(*target));
            emit(cfg, builtin_graph(*target).to_text());
            return exit_ok;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return exit_guard;
    } catch (const std::bad_alloc&) {
        std::cerr << "out of memory\n";
        return exit_guard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}
