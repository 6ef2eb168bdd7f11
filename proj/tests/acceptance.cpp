// One line per acceptance criterion; the exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "revgcd/cli.hpp"
#include "revgcd/proofkit.hpp"
#include "revgcd/residue.hpp"
#include "revgcd/search.hpp"
#include "revgcd/sequence.hpp"

using namespace revgcd;
using Clock = std::chrono::steady_clock;

namespace {

struct Result {
    bool pass = false;
    std::string detail;
};

struct CliRun {
    int code;
    std::string out;
};

CliRun cli_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

const std::string kThirtyNine = "1000111000111000111001111101111101111101111101111101111";
const std::string kSevenLong = "1000000000001000001000001000001000001000001";

Result ac1() {
    const auto t = Clock::now();
    const auto r = cli_run({"--format", "lines", "term", "--x", "3"});
    const double s = seconds_since(t);
    const bool ok = r.code == 0 && contains(r.out, "digits=1011\t") && contains(r.out, "base2=11\t") && s < 1.0;
    return {ok, "term --x 3 -> " + r.out.substr(0, r.out.size() - 1)};
}

Result ac2() {
    const bool a = remainder_cycle(7).remainders == std::vector<int>{1, 3, 2, 6, 4, 5};
    const bool b = remainder_cycle(13).remainders == std::vector<int>{1, 10, 9, 12, 3, 4};
    const bool c = remainder_cycle(39).remainders == std::vector<int>{1, 10, 22, 25, 16, 4};
    const auto r = cli_run({"cycle", "7", "13", "39"});
    const bool text = contains(r.out, "7: order 6: 1 3 2 6 4 5") && contains(r.out, "13: order 6: 1 10 9 12 3 4") &&
                      contains(r.out, "39: order 6: 1 10 22 25 16 4");
    return {a && b && c && text && r.code == 0, "cycles of 7, 13, 39 exact"};
}

Result ac3() {
    const auto t = Clock::now();
    const auto seven = cli_run({"--format", "lines", "prove", "7", "13", "--no-trace"});
    const double s7 = seconds_since(t);
    const auto t2 = Clock::now();
    const auto thirteen = cli_run({"--format", "lines", "prove", "13", "7", "--no-trace"});
    const double s13 = seconds_since(t2);

    const auto r7 = verify_long_solution_theorem(7, 13);
    const auto r13 = verify_long_solution_theorem(13, 7);
    const bool ok = seven.code == 0 && thirteen.code == 0 && contains(seven.out, "examined=792\t") &&
                    contains(seven.out, "counterexamples=0\t") && contains(thirteen.out, "examined=8568\t") &&
                    contains(thirteen.out, "counterexamples=0\t") && r7.verified() && r13.verified() && s7 < 1.0 &&
                    s13 < 1.0;
    char buf[200];
    std::snprintf(buf, sizeof buf, "7: %llu examined, %llu feasible, 0 counterexamples; 13: %llu examined, %llu feasible",
                  static_cast<unsigned long long>(r7.examined), static_cast<unsigned long long>(r7.feasible),
                  static_cast<unsigned long long>(r13.examined), static_cast<unsigned long long>(r13.feasible));
    return {ok, buf};
}

Result ac4() {
    const auto t = Clock::now();
    const auto analyze = cli_run({"--format", "lines", "analyze", "39", "--all"});
    const auto search = cli_run({"--format", "lines", "search", "--x", "39"});
    const double s = seconds_since(t);

    const auto verdict = verify_solution(DigitString::parse(kThirtyNine), 39);
    const bool gcd_ok = std::holds_alternative<SolutionRecord>(verdict) && std::get<SolutionRecord>(verdict).gcd == 39;
    const bool sums_ok = class_sums(DigitString::parse(kThirtyNine), 6).sums == std::vector<int>{10, 9, 9, 6, 0, 5};
    const bool ok = analyze.code == 0 && contains(analyze.out, "sums=(10,9,9,6,0,5)\t") && search.code == 0 &&
                    contains(search.out, "digits=" + kThirtyNine + "\t") &&
                    contains(search.out, "base2=20016007615544303") && gcd_ok && sums_ok && s < 60.0;
    return {ok, "class sums (10,9,9,6,0,5), 55 digits, base2 20016007615544303, gcd 39"};
}

Result ac5() {
    const auto t = Clock::now();
    const auto found = cli_run({"--format", "lines", "search", "--x", "7", "--mode", "single_class", "--class", "0"});
    const auto capped =
        cli_run({"search", "--x", "7", "--mode", "single_class", "--class", "0", "--max-digits", "42"});
    const double s = seconds_since(t);

    SearchConfig cfg;
    cfg.mode = SearchMode::single_class;
    const auto o = single_class_smallest(7, 0, cfg);
    const bool positions = o.solution && o.solution->one_positions == std::vector<std::size_t>{0, 6, 12, 18, 24, 30, 42};
    const auto verdict = verify_solution(DigitString::parse(kSevenLong), 7);
    const bool gcd_ok = std::holds_alternative<SolutionRecord>(verdict) && std::get<SolutionRecord>(verdict).gcd == 7;
    const bool ok = found.code == 0 && contains(found.out, "digits=" + kSevenLong + "\t") && positions && gcd_ok &&
                    capped.code == 3 && s < 10.0;
    return {ok, "43 digits, ones at 0 6 12 18 24 30 42, gcd 7; exhausted at 42 digits"};
}

Result ac6() {
    const auto t = Clock::now();
    std::mt19937_64 rng(20260501);
    std::uniform_int_distribution<std::size_t> len(1, 120);
    std::bernoulli_distribution bit(0.5);
    const std::vector<long long> moduli{7, 11, 13, 39};
    const int trials = 12000;
    std::size_t mismatches = 0, comparisons = 0;
    for (int i = 0; i < trials; ++i) {
        std::string s = "1";
        const auto n = len(rng);
        while (s.size() < n) s.push_back(bit(rng) ? '1' : '0');
        const auto d = DigitString::parse(s);
        const BigInt value = base10_value(d);
        const BigInt rev = base10_value(reverse(d));
        for (long long x : moduli) {
            const int direct = static_cast<int>(value % x);
            const int direct_rev = static_cast<int>(rev % x);
            const std::size_t pad = canonical_pad(d.size(), multiplicative_order(x));
            mismatches += forward_residue(d, x) != direct;
            mismatches += reverse_residue(d, x, pad) != direct_rev;
            mismatches += block_sum_divisible(d, x) != (direct == 0);
            comparisons += 3;
        }
    }
    const double s = seconds_since(t);
    return {mismatches == 0 && s < 30.0, std::to_string(trials) + " strings, " + std::to_string(comparisons) +
                                             " comparisons, " + std::to_string(mismatches) + " mismatches"};
}

Result ac7() {
    const std::vector<long long> xs{1, 3, 9, 11, 17, 19, 21, 23, 27, 29, 31, 33};
    std::size_t agreed = 0, timed_out = 0, disagreed = 0;
    std::string timeouts;
    for (long long x : xs) {
        SearchConfig brute_cfg;
        brute_cfg.mode = SearchMode::brute;
        brute_cfg.max_digits = 80;
        brute_cfg.time_budget = std::chrono::minutes(2);
        const auto brute = brute_force_smallest(x, brute_cfg);
        if (brute.status != SearchStatus::found) {
            ++timed_out;
            timeouts += " " + std::to_string(x);
            continue;
        }
        SearchConfig pruned_cfg;
        const auto pruned = pruned_smallest(x, pruned_cfg);
        if (pruned.solution && pruned.solution->digits == brute.solution->digits) {
            ++agreed;
        } else {
            ++disagreed;
        }
    }
    std::string detail = std::to_string(agreed) + "/" + std::to_string(xs.size()) + " agree";
    if (timed_out) detail += ", brute force over budget for" + timeouts;
    return {disagreed == 0 && agreed > 0, detail};
}

Result ac8() {
    // Single-class search for 13 across every class up to 80 digits.
    SearchConfig cfg;
    cfg.mode = SearchMode::single_class;
    cfg.max_digits = 80;
    std::string report;
    bool all_verified = true;
    std::size_t best = 0;
    for (std::size_t j = 0; j < 6; ++j) {
        const auto o = single_class_smallest(13, j, cfg);
        report += " class " + std::to_string(j) + ": ";
        if (o.solution) {
            all_verified = all_verified && std::holds_alternative<SolutionRecord>(verify_solution(o.solution->digits, 13));
            report += std::to_string(o.solution->length()) + " digits";
            if (!best || o.solution->length() < best) best = o.solution->length();
        } else {
            report += to_string(o.status);
        }
        report += ";";
    }

    // The only 73-digit class-0 string with 13 ones fills every slot 0, 6, ..., 72.
    std::string all_slots(73, '0');
    for (std::size_t p = 0; p <= 72; p += 6) all_slots[72 - p] = '1';
    const auto candidate = DigitString::parse(all_slots);
    const auto verdict73 = verify_solution(candidate, 13);
    const bool palindrome_obstruction = is_palindrome(candidate) && std::holds_alternative<Rejection>(verdict73);

    SearchConfig pruned_cfg;
    const auto pruned = pruned_smallest(13, pruned_cfg);
    const bool pruned_ok = pruned.solution &&
                           std::holds_alternative<SolutionRecord>(verify_solution(pruned.solution->digits, 13));
    all_verified = all_verified && pruned_ok;

    std::string detail = "x=13:" + report + " smallest overall " +
                         (pruned.solution ? std::to_string(pruned.solution->length()) : std::string("none")) +
                         " digits (base2 " + (pruned.solution ? base2_value(pruned.solution->digits).str() : "-") + ")";
    if (best != 73) {
        detail += "; DISCREPANCY with the published 73-digit figure";
        if (palindrome_obstruction) detail += ": the only 73-digit class-0 candidate is a palindrome (gcd = itself)";
    }
    return {all_verified && best > 0, detail};
}

Result ac9() {
    const std::string path = std::string(REVGCD_FIXTURES) + "/b348480.txt";
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto report = crosscheck_bfile(buf.str(), [](long long n) -> std::optional<BigInt> {
        SearchConfig cfg;
        return term(n, cfg).encoded;
    });
    bool has2 = false, has16 = false;
    for (const auto& m : report.matches) {
        has2 = has2 || m.n == 2;
        has16 = has16 || m.n == 16;
    }
    const auto r = cli_run({"crosscheck", "--bfile", path});
    return {report.agrees() && has2 && has16 && r.code == 0,
            std::to_string(report.matches.size()) + " entries match, " + std::to_string(report.mismatches.size()) +
                " mismatches"};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
        {"AC1 term --x 3", ac1},
        {"AC2 remainder cycles", ac2},
        {"AC3 prove 7 13 / 13 7", ac3},
        {"AC4 analyze + search 39", ac4},
        {"AC5 single-class search 7", ac5},
        {"AC6 residue oracle equivalence", ac6},
        {"AC7 brute vs pruned", ac7},
        {"AC8 x=13 investigation", ac8},
        {"AC9 b-file crosscheck", ac9},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        const auto t = Clock::now();
        Result r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        failures += !r.pass;
        std::printf("[%s] %-32s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", name, seconds_since(t), r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures;
}
