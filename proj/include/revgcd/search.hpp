#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "revgcd/constraints.hpp"
#include "revgcd/digits.hpp"

namespace revgcd {

enum class SearchMode { brute, pruned, single_class };

const char* to_string(SearchMode mode);

// Throws std::invalid_argument for anything but "brute", "pruned" or
// "single_class".
SearchMode parse_search_mode(const std::string& text);

struct SearchConfig {
    std::size_t max_digits = 80;
    SearchMode mode = SearchMode::pruned;
    std::optional<std::size_t> class_index;
    unsigned workers = 1;
    // Wall-clock budget; searches that run out report timed_out.
    std::optional<std::chrono::milliseconds> time_budget;
    // Heartbeat with the number of candidates examined so far.
    std::function<void(std::uint64_t)> progress;
};

struct SolutionRecord {
    long long x = 0;
    DigitString digits = DigitString::parse("1");
    std::size_t zeros = 0;
    std::size_t ones = 0;
    std::vector<std::size_t> one_positions;  // counted from the right, ascending
    BigInt gcd;
    unsigned digit_sum = 0;

    std::size_t length() const noexcept { return digits.size(); }
    // More zeros than ones.
    bool long_solution() const noexcept { return zeros > ones; }
};

enum class RejectReason { digit_sum_mismatch, gcd_mismatch };

struct Rejection {
    RejectReason reason;
    unsigned digit_sum = 0;
    BigInt gcd;
    bool palindrome = false;

    std::string describe(long long x) const;
};

using Verdict = std::variant<SolutionRecord, Rejection>;

// Accepts d iff its digit sum is x and gcd(d, rev d) is exactly x. Throws
// std::invalid_argument if d has a digit above 1.
Verdict verify_solution(const DigitString& d, long long x);

enum class SearchStatus { found, exhausted, timed_out };

const char* to_string(SearchStatus status);

struct SearchOutcome {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<SolutionRecord> solution;
    std::size_t max_digits = 0;
    std::uint64_t candidates = 0;
    std::string note;
};

// Throws std::domain_error unless x >= 1 and gcd(x, 10) == 1.
void require_search_modulus(long long x);

// Order of 10 modulo x, with order 1 for x == 1.
std::size_t search_order(long long x);

// Every {0,1} string by length, then value. Divisibility of both b and rev(b)
// is screened with machine-word residues, survivors get an exact gcd.
SearchOutcome brute_force_smallest(long long x, const SearchConfig& cfg);

// Same answer as brute_force_smallest, but the candidate tree is cut by the
// class-sum system (see prune_mode below) and the last digit is pinned to 1.
SearchOutcome pruned_smallest(long long x, const SearchConfig& cfg);

// Strings whose ones all sit at positions == class_index (mod order). The
// last digit is pinned to 1, so only class 0 can succeed.
SearchOutcome single_class_smallest(long long x, std::size_t class_index, const SearchConfig& cfg);

// Dispatches on cfg.mode.
SearchOutcome find_smallest(long long x, const SearchConfig& cfg);

// ---------------------------------------------------------------------------
// Class-sum analysis shared by pruned search and the analyze command.

// How pruned_smallest cuts the tree for a given x.
//  - compositions: all compositions of x into order(x) classes are enumerated
//    once; survivors must pass the x-system and have visible gcd exactly x.
//  - residues: the order is too large to enumerate compositions; a table of
//    reachable (ones, b mod x, rev(b) mod x) states over the undecided
//    positions cuts the tree instead.
enum class PruneMode { compositions, residues };

PruneMode prune_mode(long long x);

// The common divisor of b and rev(b) that the class sums alone determine:
// gcd(b mod N, rev(b) mod N, N) with N = 10^order - 1. Any b realizing P with
// gcd(b, rev b) == x has visible_gcd(P) == x. Requires order <= 18.
long long visible_gcd(const ClassSumVector& p);

struct CompositionProfile {
    ClassSumVector sums;
    CompositionCheck check;
    long long visible_gcd = 0;
    // Shortest length with first and last digit 1 that fits the class sums.
    std::size_t min_length = 0;
    bool single_class = false;
};

// Shortest length L whose class capacities hold P with position 0 and
// position L-1 both carrying a one. 0 if P_0 == 0.
std::size_t minimal_length(const ClassSumVector& p);

// Profiles of every composition of x that passes the x-system, in
// lexicographic order. Throws std::domain_error when prune_mode(x) is
// residues.
std::vector<CompositionProfile> feasible_compositions(long long x);

void render_record(std::ostream& out, const SolutionRecord& record);
void render_outcome(std::ostream& out, const SearchOutcome& outcome);

} // namespace revgcd
