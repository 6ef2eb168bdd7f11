#include "doctest.h"

#include <random>
#include <stdexcept>

#include "revgcd/digits.hpp"

using revgcd::BigInt;
using revgcd::DigitString;

namespace {

const char* const kSevenLong = "1000000000001000001000001000001000001000001";
const char* const kThirtyNine = "1000111000111000111001111101111101111101111101111101111";

DigitString ds(const char* s) { return DigitString::parse(s); }

// Naive fold, independent of the library's string conversion.
BigInt fold_base10(const std::string& s) {
    BigInt acc = 0;
    for (char c : s) acc = acc * 10 + (c - '0');
    return acc;
}

std::string random_digits(std::mt19937_64& rng, std::size_t length, int max_digit) {
    std::uniform_int_distribution<int> digit(0, max_digit);
    std::uniform_int_distribution<int> lead(1, max_digit);
    std::string s(1, static_cast<char>('0' + lead(rng)));
    while (s.size() < length) s.push_back(static_cast<char>('0' + digit(rng)));
    return s;
}

} // namespace

TEST_CASE("parse rejects malformed digit strings") {
    CHECK_THROWS_AS(DigitString::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(DigitString::parse("0110"), std::invalid_argument);
    CHECK_THROWS_AS(DigitString::parse("10a1"), std::invalid_argument);
    CHECK_THROWS_AS(DigitString::parse("-1"), std::invalid_argument);
    CHECK(ds("1011").str() == "1011");
}

TEST_CASE("positions count from the right") {
    const auto d = ds("1000");
    CHECK(d.at(0) == 0);
    CHECK(d.at(3) == 1);
    CHECK(d.size() == 4);
    CHECK(ds("101100") == ds("1011").padded(2));
}

TEST_CASE("reverse") {
    CHECK(reverse(ds("123")) == ds("321"));
    CHECK(reverse(ds("1011")) == ds("1101"));
    CHECK(reverse(ds("7")) == ds("7"));
    CHECK(reverse(ds("1100")) == ds("11"));
}

TEST_CASE("digit_sum") {
    CHECK(digit_sum(ds("1011")) == 3);
    CHECK(digit_sum(ds(kSevenLong)) == 7);
    CHECK(digit_sum(ds(kThirtyNine)) == 39);
}

TEST_CASE("base10_value") {
    CHECK(base10_value(ds("1011")) == 1011);
    CHECK(base10_value(ds("10")) == 10);

    std::mt19937_64 rng(73);
    const auto s = random_digits(rng, 73, 9);
    const auto value = base10_value(DigitString::parse(s));
    CHECK(DigitString::from_value(value).str() == s);
    CHECK(base10_value(DigitString::from_value(value)) == value);
}

TEST_CASE("base2_value") {
    CHECK(base2_value(ds("1011")) == 11);
    CHECK(base2_value(ds(kThirtyNine)) == BigInt("20016007615544303"));
    CHECK(base2_value(ds("1")) == 1);
    CHECK_THROWS_AS(base2_value(ds("1021")), std::invalid_argument);
    CHECK(DigitString::from_base2(BigInt("20016007615544303")) == ds(kThirtyNine));
}

TEST_CASE("gcd_with_reversal") {
    CHECK(gcd_with_reversal(ds("1011")) == 3);
    CHECK(gcd_with_reversal(ds("10101")) == 10101);
    CHECK(gcd_with_reversal(ds(kSevenLong)) == 7);
    CHECK(gcd_with_reversal(ds(kThirtyNine)) == 39);
}

TEST_CASE("is_palindrome") {
    CHECK(is_palindrome(ds("10101")));
    CHECK_FALSE(is_palindrome(ds("1011")));
    CHECK(is_palindrome(ds("7")));
    CHECK(is_palindrome(ds("1001")));
}

TEST_CASE("properties over random strings") {
    std::mt19937_64 rng(20240501);
    std::uniform_int_distribution<std::size_t> len(1, 120);
    for (int trial = 0; trial < 2000; ++trial) {
        const int max_digit = trial % 2 ? 9 : 1;
        auto s = random_digits(rng, len(rng), max_digit);
        const auto d = DigitString::parse(s);

        CHECK(base10_value(d) == fold_base10(s));
        CHECK(digit_sum(d) == digit_sum(reverse(d)));
        if (d.at(0) != 0) {
            CHECK(reverse(reverse(d)) == d);
        }
        if (d.binary_like()) {
            CHECK(DigitString::from_base2(base2_value(d)) == d);
        }

        // Mirror the string into a palindrome and check gcd(n, n) = n.
        std::string mirrored = s + std::string(s.rbegin() + (trial % 3 == 0 ? 1 : 0), s.rend());
        const auto p = DigitString::parse(mirrored);
        REQUIRE(is_palindrome(p));
        CHECK(gcd_with_reversal(p) == base10_value(p));
    }
}
