#include "revgcd/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "revgcd/proofkit.hpp"
#include "revgcd/residue.hpp"
#include "revgcd/search.hpp"
#include "revgcd/sequence.hpp"

namespace revgcd::cli {

namespace {

constexpr const char* kCacheEnv = "REVGCD_CACHE";

enum class Format { text, lines };

struct SearchFlags {
    std::size_t max_digits = 80;
    std::string mode = "pruned";
    std::optional<std::size_t> class_index;
    unsigned workers = 1;
    std::optional<double> time_budget;  // seconds
};

void add_search_flags(CLI::App* cmd, SearchFlags& f) {
    cmd->add_option("--max-digits", f.max_digits, "Largest candidate length searched")->check(CLI::PositiveNumber);
    cmd->add_option("--mode", f.mode, "Search strategy")
        ->check(CLI::IsMember({"brute", "pruned", "single_class"}));
    cmd->add_option("--class", f.class_index, "Residue class for single_class mode");
    cmd->add_option("--workers", f.workers, "Worker threads for brute force")->check(CLI::PositiveNumber);
    cmd->add_option("--time-budget", f.time_budget, "Wall-clock budget in seconds")->check(CLI::PositiveNumber);
}

SearchConfig to_config(const SearchFlags& f, std::ostream& err) {
    SearchConfig cfg;
    cfg.max_digits = f.max_digits;
    cfg.mode = parse_search_mode(f.mode);
    cfg.class_index = f.class_index;
    cfg.workers = f.workers;
    if (f.time_budget) {
        cfg.time_budget = std::chrono::milliseconds(static_cast<long long>(*f.time_budget * 1000));
    }
    cfg.progress = [&err](std::uint64_t n) { err << "... " << n << " candidates examined" << std::endl; };
    return cfg;
}

std::optional<std::string> cache_path(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv(kCacheEnv); env && *env) return std::string(env);
    return std::nullopt;
}

// Resolves the mutually exclusive index/modulus pair to a modulus.
long long resolve_x(const std::optional<long long>& n, const std::optional<long long>& x) {
    if (n && x) throw std::domain_error("give either an index n or --x, not both");
    if (!n && !x) throw std::domain_error("give an index n or --x");
    if (n) return coprime_index(*n);
    require_search_modulus(*x);
    return *x;
}

int exit_for(SearchStatus status) {
    return status == SearchStatus::found ? kOk : kExhausted;
}

void emit_outcome_line(std::ostream& out, long long x, const SearchOutcome& o) {
    out << "search\tx=" << x << "\tstatus=" << to_string(o.status);
    if (o.solution) {
        const auto& r = *o.solution;
        out << "\tdigits=" << r.digits.str() << "\tbase2=" << base2_value(r.digits) << "\tlength=" << r.length()
            << "\tzeros=" << r.zeros << "\tones=" << r.ones << "\tlong=" << (r.long_solution() ? 1 : 0)
            << "\tgcd=" << r.gcd;
    } else {
        out << "\tmax_digits=" << o.max_digits;
    }
    out << "\tcandidates=" << o.candidates << "\n";
}

// ---------------------------------------------------------------------------

int cmd_term(std::optional<long long> n, std::optional<long long> x, const SearchFlags& flags,
             const std::string& cache_flag, Format format, std::ostream& out, std::ostream& err) {
    const long long modulus = resolve_x(n, x);
    const long long index = index_of(modulus);
    auto cfg = to_config(flags, err);

    const auto path = cache_path(cache_flag);
    std::optional<TermCache> cache;
    if (path) cache = TermCache::load(*path);

    const auto entry = term(index, cfg, cache ? &*cache : nullptr);
    if (cache) cache->save(*path);

    if (format == Format::lines) {
        out << "term\tn=" << entry.n << "\tx=" << entry.x
            << "\tdigits=" << (entry.digits ? entry.digits->str() : "-")
            << "\tbase2=" << (entry.encoded ? entry.encoded->str() : "-") << "\tstatus=" << to_string(entry.status)
            << "\n";
    } else {
        render_term(out, entry);
    }
    return entry.status == TermStatus::verified ? kOk : kExhausted;
}

int cmd_verify(const std::string& digits, long long x, Format format, std::ostream& out) {
    require_search_modulus(x);
    const auto d = DigitString::parse(digits);
    const auto verdict = verify_solution(d, x);
    if (const auto* rec = std::get_if<SolutionRecord>(&verdict)) {
        if (format == Format::lines) {
            out << "verify\tdigits=" << d.str() << "\tx=" << x << "\tresult=accepted\tgcd=" << rec->gcd
                << "\tdigit_sum=" << rec->digit_sum << "\tlong=" << (rec->long_solution() ? 1 : 0) << "\n";
        } else {
            out << "accepted\n";
            render_record(out, *rec);
        }
        return kOk;
    }
    const auto& rej = std::get<Rejection>(verdict);
    if (format == Format::lines) {
        out << "verify\tdigits=" << d.str() << "\tx=" << x << "\tresult=rejected\tgcd=" << rej.gcd
            << "\tdigit_sum=" << rej.digit_sum << "\tpalindrome=" << (rej.palindrome ? 1 : 0) << "\n";
    } else {
        out << "rejected: " << rej.describe(x) << "\n"
            << "gcd        " << rej.gcd << "\n"
            << "digit sum  " << rej.digit_sum << "\n";
    }
    return kRejected;
}

int cmd_prove(long long x, long long cofactor, bool list, bool trace, Format format, std::ostream& out) {
    const auto report = verify_long_solution_theorem(x, cofactor);
    if (format == Format::lines) {
        out << "prove\tx=" << report.modulus << "\tcofactor=" << report.cofactor << "\texamined=" << report.examined
            << "\tfeasible=" << report.feasible << "\tsingle_class=" << report.single_class
            << "\tcofactor_divisible=" << report.cofactor_divisible
            << "\tcounterexamples=" << report.counterexample_count
            << "\tverified=" << (report.verified() ? 1 : 0) << "\n";
        if (list) {
            for (const auto& c : report.feasible_list) {
                out << "composition\tsums=" << format_sums(c.sums) << "\tkind=" << to_string(c.kind) << "\n";
            }
        }
    } else {
        render_report(out, report, list);
        if (trace && (x == 7 || x == 13) && cofactor == (x == 7 ? 13 : 7)) {
            out << "\n";
            render_trace(out, case_trace(x));
        }
    }
    return report.verified() ? kOk : kRejected;
}

std::string composition_kind(const CompositionProfile& p, long long x) {
    if (p.visible_gcd == x) return p.single_class ? "single_class survivor" : "survivor";
    const std::string extra = "extra factor " + std::to_string(p.visible_gcd / x);
    return p.single_class ? "single_class, " + extra : extra;
}

int cmd_analyze(long long x, std::size_t limit, bool all, Format format, std::ostream& out) {
    require_search_modulus(x);
    const std::size_t m = search_order(x);
    if (prune_mode(x) == PruneMode::residues) {
        out << "x = " << x << ", order " << m
            << ": too many compositions to list; pruned search uses residue reachability instead\n";
        return kOk;
    }
    auto profiles = feasible_compositions(x);
    std::stable_sort(profiles.begin(), profiles.end(), [](const auto& a, const auto& b) {
        // unrealizable ones (min_length 0) go last
        return std::tuple(a.min_length == 0, a.min_length, a.sums) < std::tuple(b.min_length == 0, b.min_length, b.sums);
    });

    std::size_t survivors = 0, single = 0;
    std::map<long long, std::size_t> excluded;  // extra factor -> count
    std::size_t best_length = 0;
    for (const auto& p : profiles) {
        if (p.single_class) ++single;
        if (p.visible_gcd == x) {
            ++survivors;
            if (p.min_length && (!best_length || p.min_length < best_length)) best_length = p.min_length;
        } else {
            ++excluded[p.visible_gcd / x];
        }
    }

    if (format == Format::lines) {
        out << "analyze\tx=" << x << "\torder=" << m << "\tcompositions=" << composition_count(static_cast<int>(x), m)
            << "\tfeasible=" << profiles.size() << "\tsingle_class=" << single << "\tsurvivors=" << survivors
            << "\tmin_length=" << best_length << "\n";
    } else {
        out << "x = " << x << ", order " << m << "\n"
            << "  compositions            " << composition_count(static_cast<int>(x), m) << "\n"
            << "  feasible for x          " << profiles.size() << "\n"
            << "  single class            " << single << "\n"
            << "  visible gcd exactly x   " << survivors << "\n";
        for (const auto& [factor, count] : excluded) {
            out << "  excluded, extra factor " << factor << "  " << count << "\n";
        }
        out << "  shortest length (first and last digit 1): "
            << (best_length ? std::to_string(best_length) : std::string("none")) << "\n\n";
    }

    std::size_t shown = 0;
    for (const auto& p : profiles) {
        if (!all && p.visible_gcd != x) continue;
        if (!all && shown >= limit) break;
        ++shown;
        if (format == Format::lines) {
            out << "composition\tsums=" << format_sums(p.sums) << "\tmin_length=" << p.min_length
                << "\tvisible_gcd=" << p.visible_gcd << "\tsingle_class=" << (p.single_class ? 1 : 0) << "\n";
        } else {
            out << "  " << format_sums(p.sums) << "  min length " << (p.min_length ? std::to_string(p.min_length) : "-")
                << "  visible gcd " << p.visible_gcd << "  " << composition_kind(p, x) << "\n";
        }
    }
    return kOk;
}

int cmd_cycle(const std::vector<long long>& moduli, Format format, std::ostream& out) {
    for (long long x : moduli) {
        const auto& c = remainder_cycle(x);
        out << (format == Format::lines ? "cycle\tx=" : "") << x << (format == Format::lines ? "\torder=" : ": order ")
            << c.order() << (format == Format::lines ? "\tremainders=" : ": ");
        for (std::size_t i = 0; i < c.order(); ++i) {
            out << (i ? (format == Format::lines ? "," : " ") : "") << c.remainders[i];
        }
        out << "\n";
    }
    return kOk;
}

int cmd_search(std::optional<long long> n, std::optional<long long> x, const SearchFlags& flags, Format format,
               std::ostream& out, std::ostream& err) {
    const long long modulus = resolve_x(n, x);
    const auto cfg = to_config(flags, err);
    const auto outcome = find_smallest(modulus, cfg);
    if (format == Format::lines) {
        emit_outcome_line(out, modulus, outcome);
    } else {
        out << "mode       " << to_string(cfg.mode);
        if (cfg.mode == SearchMode::single_class) out << " (class " << cfg.class_index.value_or(0) << ")";
        out << "\n";
        render_outcome(out, outcome);
    }
    return exit_for(outcome.status);
}

int cmd_crosscheck(const std::string& bfile, const SearchFlags& flags, const std::string& cache_flag, Format format,
                   std::ostream& out, std::ostream& err) {
    std::ifstream in(bfile);
    if (!in) throw std::domain_error("cannot read b-file " + bfile);
    std::stringstream text;
    text << in.rdbuf();

    auto cfg = to_config(flags, err);
    const auto path = cache_path(cache_flag);
    std::optional<TermCache> cache;
    if (path) cache = TermCache::load(*path);

    const auto report = crosscheck_bfile(text.str(), [&](long long n) -> std::optional<BigInt> {
        const auto e = term(n, cfg, cache ? &*cache : nullptr);
        return e.encoded;
    });
    if (cache) cache->save(*path);

    if (format == Format::lines) {
        for (const auto& m : report.matches) out << "crosscheck\tn=" << m.n << "\tresult=match\tvalue=" << m.value << "\n";
        for (const auto& [m, mine] : report.mismatches) {
            out << "crosscheck\tn=" << m.n << "\tresult=mismatch\tvalue=" << m.value << "\tlocal=" << mine << "\n";
        }
        for (const auto& s : report.skipped) out << "crosscheck\tn=" << s.n << "\tresult=skipped\n";
        for (const auto& e : report.errors) out << "crosscheck\tline=" << e.line << "\tresult=error\n";
    } else {
        render_bfile_report(out, report);
    }
    return report.agrees() ? kOk : kRejected;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Digit-reversal gcd sequence tool: smallest {0,1} numbers b with digit sum x and gcd(b, rev b) = x"};
    app.name("revgcd");
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "lines"}));

    // term
    std::optional<long long> term_n, term_x;
    SearchFlags term_flags;
    std::string term_cache;
    auto* term_cmd = app.add_subcommand("term", "Compute a sequence term (index n, or modulus via --x)");
    term_cmd->add_option("n", term_n, "Sequence index (1-based)");
    term_cmd->add_option("--x", term_x, "Modulus x instead of an index");
    term_cmd->add_option("--cache", term_cache, std::string("Term cache file (default: $") + kCacheEnv + ")");
    add_search_flags(term_cmd, term_flags);

    // verify
    std::string verify_digits;
    long long verify_x = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Check one candidate digit string against x");
    verify_cmd->add_option("digits", verify_digits, "Candidate, e.g. 1011")->required();
    verify_cmd->add_option("x", verify_x, "Target gcd and digit sum")->required();

    // prove
    long long prove_x = 0, prove_cofactor = 0;
    bool prove_list = false, prove_no_trace = false;
    auto* prove_cmd = app.add_subcommand("prove", "Machine-check the long-solution theorem for x against a cofactor");
    prove_cmd->add_option("x", prove_x)->required();
    prove_cmd->add_option("cofactor", prove_cofactor)->required();
    prove_cmd->add_flag("--list", prove_list, "List every feasible composition");
    prove_cmd->add_flag("--no-trace", prove_no_trace, "Skip the case trace");

    // analyze
    long long analyze_x = 0;
    std::size_t analyze_limit = 20;
    bool analyze_all = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Feasible class-sum compositions for x");
    analyze_cmd->add_option("x", analyze_x)->required();
    analyze_cmd->add_option("--limit", analyze_limit, "Rows shown when not using --all");
    analyze_cmd->add_flag("--all", analyze_all, "Show every feasible composition, excluded ones included");

    // cycle
    std::vector<long long> cycle_moduli;
    auto* cycle_cmd = app.add_subcommand("cycle", "Print remainder cycles of powers of ten");
    cycle_cmd->add_option("x", cycle_moduli)->required();

    // search
    std::optional<long long> search_n, search_x;
    SearchFlags search_flags;
    auto* search_cmd = app.add_subcommand("search", "Run one search strategy for the smallest solution");
    search_cmd->add_option("--n", search_n, "Sequence index");
    search_cmd->add_option("--x", search_x, "Modulus x");
    add_search_flags(search_cmd, search_flags);

    // crosscheck
    std::string bfile, cross_cache;
    SearchFlags cross_flags;
    auto* cross_cmd = app.add_subcommand("crosscheck", "Compare an OEIS b-file with locally computed terms");
    cross_cmd->add_option("--bfile", bfile, "b-file path")->required();
    cross_cmd->add_option("--cache", cross_cache, std::string("Term cache file (default: $") + kCacheEnv + ")");
    add_search_flags(cross_cmd, cross_flags);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    const Format format = format_name == "lines" ? Format::lines : Format::text;
    try {
        if (*term_cmd) return cmd_term(term_n, term_x, term_flags, term_cache, format, out, err);
        if (*verify_cmd) return cmd_verify(verify_digits, verify_x, format, out);
        if (*prove_cmd) return cmd_prove(prove_x, prove_cofactor, prove_list, !prove_no_trace, format, out);
        if (*analyze_cmd) return cmd_analyze(analyze_x, analyze_limit, analyze_all, format, out);
        if (*cycle_cmd) return cmd_cycle(cycle_moduli, format, out);
        if (*search_cmd) return cmd_search(search_n, search_x, search_flags, format, out, err);
        if (*cross_cmd) return cmd_crosscheck(bfile, cross_flags, cross_cache, format, out, err);
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace revgcd::cli
