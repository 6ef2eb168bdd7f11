#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "revgcd/constraints.hpp"
#include "revgcd/proofkit.hpp"

using namespace revgcd;

namespace {

ClassSumVector P(std::vector<int> v) { return ClassSumVector{std::move(v)}; }

ClassSumVector mirrored(const ClassSumVector& p) {
    return ClassSumVector{std::vector<int>(p.sums.rbegin(), p.sums.rend())};
}

ClassSumVector rotated(const ClassSumVector& p, std::size_t k) {
    ClassSumVector out{std::vector<int>(p.order())};
    for (std::size_t j = 0; j < p.order(); ++j) out.sums[(j + k) % p.order()] = p.sums[j];
    return out;
}

} // namespace

TEST_CASE("build_system coefficient tables") {
    auto s7 = build_system(7);
    CHECK(s7.forward == std::vector<int>{1, 3, 2, 6, 4, 5});
    CHECK(s7.reverse == std::vector<int>{5, 4, 6, 2, 3, 1});
    CHECK(s7.target_digit_sum == 7);

    auto s13 = build_system(13);
    CHECK(s13.forward == std::vector<int>{1, 10, 9, 12, 3, 4});
    CHECK(s13.reverse == std::vector<int>{4, 3, 12, 9, 10, 1});

    auto s39 = build_system(39);
    CHECK(s39.forward == std::vector<int>{1, 10, 22, 25, 16, 4});
    CHECK(s39.reverse == std::vector<int>{4, 16, 25, 22, 10, 1});

    CHECK_THROWS_AS(build_system(4), std::domain_error);
}

TEST_CASE("check_composition") {
    const auto s7 = build_system(7);
    CHECK(check_composition(s7, P({7, 0, 0, 0, 0, 0})).all());

    // 10 + 90 + 198 + 150 + 0 + 20 = 468 = 12 * 39; 40 + 144 + 225 + 132 + 0 + 5 = 546 = 14 * 39.
    CHECK(check_composition(build_system(39), P({10, 9, 9, 6, 0, 5})).all());

    const auto c = check_composition(s7, P({6, 1, 0, 0, 0, 0}));
    CHECK(c.sum_ok);
    CHECK_FALSE(c.forward_ok);

    CHECK_THROWS_AS(check_composition(s7, P({7, 0, 0})), std::invalid_argument);
}

TEST_CASE("derived_quantities") {
    auto q = derived_quantities(P({7, 0, 0, 0, 0, 0}));
    CHECK(q.R == 7);
    CHECK(q.S == 0);
    CHECK(q.U == 7);
    CHECK(q.V == 0);
    CHECK(plus_holds(q, 7));
    CHECK(minus_holds(q, 7));

    q = derived_quantities(P({0, 0, 7, 0, 0, 0}));
    CHECK(q.R == 0);
    CHECK(q.S == 7);
    CHECK(q.U == 7);
    CHECK(q.V == 0);

    q = derived_quantities(P({0, 0, 0, 0, 7, 0}));
    CHECK(q.U == 0);
    CHECK(q.V == -7);

    CHECK_THROWS_AS(derived_quantities(P({1, 2})), std::invalid_argument);
}

TEST_CASE("folded forms match the sum and difference equations") {
    const auto f7 = folded_forms(7);
    CHECK(f7.plus_r == 6);
    CHECK(f7.plus_s == 1);
    CHECK(f7.minus_u == 4);
    CHECK(f7.minus_v == 1);

    const auto f13 = folded_forms(13);
    CHECK(f13.plus_r == 5);
    CHECK(f13.plus_s == 8);
    CHECK(f13.minus_u == 3);
    CHECK(f13.minus_v == 6);

    CHECK_THROWS_AS(folded_forms(39), std::domain_error);
    CHECK_THROWS_AS(folded_forms(11), std::domain_error);
}

TEST_CASE("plus and minus forms are equivalent to the two residue rows") {
    for (long long x : {7LL, 13LL}) {
        const auto sys = build_system(x);
        std::size_t checked = 0;
        for (const auto& p : enumerate_compositions(static_cast<int>(x), 6)) {
            const auto q = derived_quantities(p);
            CHECK((plus_holds(q, x) && minus_holds(q, x)) == check_composition(sys, p).divisible());
            ++checked;
        }
        CHECK(checked == (x == 7 ? 792u : 8568u));
    }
}

TEST_CASE("mirroring swaps the forward and reverse rows") {
    for (long long x : {7LL, 13LL, 39LL}) {
        const auto sys = build_system(x);
        for (const auto& p : enumerate_compositions(x == 39 ? 12 : static_cast<int>(x), 6)) {
            const auto a = check_composition(sys, p);
            const auto b = check_composition(sys, mirrored(p));
            CHECK(a.forward_ok == b.reverse_ok);
            CHECK(a.reverse_ok == b.forward_ok);
        }
    }
}

TEST_CASE("rotating classes (other lengths mod 6) keeps divisibility") {
    // Appending k zeros rotates the class sums by k; x | b iff x | 10^k b.
    for (long long x : {7LL, 13LL}) {
        const auto sys = build_system(x);
        for (const auto& p : enumerate_compositions(static_cast<int>(x), 6)) {
            const bool base = check_composition(sys, p).divisible();
            for (std::size_t k = 1; k < 6; ++k) {
                CHECK(check_composition(sys, rotated(p, k)).divisible() == base);
            }
        }
    }
}

TEST_CASE("class-sum checks agree with big-integer divisibility") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> len(1, 100);
    std::bernoulli_distribution bit(0.5);
    for (int trial = 0; trial < 2000; ++trial) {
        std::string s = "1";
        const auto n = len(rng);
        while (s.size() < n) s.push_back(bit(rng) ? '1' : '0');
        const auto d = DigitString::parse(s);
        for (long long x : {7LL, 11LL, 13LL, 39LL}) {
            const auto sys = build_system(x);
            const auto c = check_composition(sys, class_sums(d, sys.order()));
            CHECK(c.forward_ok == (base10_value(d) % x == 0));
            CHECK(c.reverse_ok == (base10_value(reverse(d)) % x == 0));
        }
    }
}
