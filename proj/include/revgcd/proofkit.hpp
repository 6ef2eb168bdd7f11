#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "revgcd/constraints.hpp"

namespace revgcd {

// ---------------------------------------------------------------------------
// Parity lemma

// Raised when parity_check is called with x + y != p + q.
class ParityPreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Given x + y == p + q, reports whether x + p - y - q is even (it always is).
bool parity_check(long long x, long long y, long long p, long long q);

// ---------------------------------------------------------------------------
// Linear congruences a*r + b*s == 0 (mod x)

// Solution set of a*r + b*s == 0 (mod x) with a invertible mod x, written as
// r = x*n + c*s. c is the representative of -b/a nearest to zero.
struct CongruenceFamily {
    long long a = 0;
    long long b = 0;
    long long modulus = 0;
    long long c = 0;

    bool contains(long long r, long long s) const;

    // The n with r = x*n + c*s. Requires contains(r, s).
    long long parameter(long long r, long long s) const;

    long long r_for(long long n, long long s) const { return modulus * n + c * s; }
};

// Throws std::domain_error if gcd(a, x) != 1 or x < 2.
CongruenceFamily solve_congruence(long long a, long long b, long long x);

// ---------------------------------------------------------------------------
// Compositions

// Every vector of `parts` nonnegative integers summing to `total`, in
// increasing lexicographic order.
class Compositions {
public:
    Compositions(int total, std::size_t parts);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = ClassSumVector;
        using difference_type = std::ptrdiff_t;
        using pointer = const ClassSumVector*;
        using reference = const ClassSumVector&;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

    private:
        friend class Compositions;
        explicit iterator(ClassSumVector first) : current_(std::move(first)), done_(false) {}

        ClassSumVector current_;
        bool done_ = true;
    };

    iterator begin() const;
    iterator end() const { return {}; }

private:
    int total_;
    std::size_t parts_;
};

inline Compositions enumerate_compositions(int total, std::size_t parts) { return {total, parts}; }

// C(total + parts - 1, parts - 1).
std::uint64_t composition_count(int total, std::size_t parts);

// ---------------------------------------------------------------------------
// Long-solution theorem

enum class CompositionClass { single_class, cofactor_divisible, counterexample };

const char* to_string(CompositionClass c);

struct ClassifiedComposition {
    ClassSumVector sums;
    CompositionClass kind;
};

struct TheoremReport {
    int modulus = 0;
    int cofactor = 0;
    std::uint64_t examined = 0;
    std::uint64_t feasible = 0;
    std::uint64_t single_class = 0;
    std::uint64_t cofactor_divisible = 0;
    std::uint64_t counterexample_count = 0;
    std::vector<ClassifiedComposition> feasible_list;
    std::vector<ClassSumVector> counterexamples;

    bool verified() const noexcept { return counterexample_count == 0; }
};

// Enumerates all compositions of x into 6 classes. Each one that satisfies the
// x-system is classified as single-class (one nonzero class sum), as
// divisible under the cofactor's system too (so gcd(b, rev b) would be a
// multiple of x*cofactor), or as a counterexample.
//
// Throws std::domain_error unless both moduli have order 6 and differ.
TheoremReport verify_long_solution_theorem(long long x, long long cofactor);

// ---------------------------------------------------------------------------
// Case trace

struct TraceBranch {
    std::string parameter;   // "n1", "n2", ...
    long long value = 0;
    std::vector<std::pair<int, int>> pairs;  // realized (R,S) or (U,V) values
    std::vector<ClassSumVector> compositions;  // feasible compositions on this branch
    std::string conclusion;
};

struct TraceStage {
    std::string equation;          // e.g. "6R + 1S == 0 (mod 7)"
    CongruenceFamily family;
    std::vector<long long> box_range;     // parameter values allowed by the box bounds
    std::vector<long long> allowed;       // after the parity restriction, if any
    std::string restriction;
    std::vector<TraceBranch> branches;
};

struct CaseTrace {
    int modulus = 0;
    int cofactor = 0;
    std::vector<TraceStage> stages;
};

// Replays the two-stage case split for x in {7, 13}: solve the plus form on
// (R, S) inside 0 <= R, S <= x, then on the R == S branch solve the minus
// form on (U, V) inside -x <= U, V <= x with U even. Each branch lists the
// feasible compositions that land on it. Throws std::domain_error otherwise.
CaseTrace case_trace(long long x);

void render_report(std::ostream& out, const TheoremReport& report, bool list_feasible);
void render_trace(std::ostream& out, const CaseTrace& trace);

std::string format_sums(const ClassSumVector& p);

} // namespace revgcd
