#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace revgcd {

using BigInt = boost::multiprecision::cpp_int;

// A decimal digit run, stored most-significant digit first.
//
// Positional accessors index from the right: position 0 is the least
// significant digit, position size()-1 the leading one. The leading digit is
// always nonzero, so every DigitString denotes a positive integer. Trailing
// zeros are allowed (a padded candidate `101100` is a valid value).
class DigitString {
public:
    // Parses an ASCII digit run such as "1011". Throws std::invalid_argument
    // on empty input, non-digit characters or a leading zero.
    static DigitString parse(std::string_view text);

    // Canonical decimal digits of a positive integer.
    static DigitString from_value(const BigInt& value);

    // Binary numeral of a positive integer, read back as a decimal digit run
    // (the inverse of base2_value).
    static DigitString from_base2(const BigInt& value);

    std::size_t size() const noexcept { return text_.size(); }

    // Digit at `position`, counted from the right end.
    int at(std::size_t position) const { return text_[text_.size() - 1 - position] - '0'; }

    // Most-significant-first view, the canonical text format.
    const std::string& str() const noexcept { return text_; }

    // All digits in {0, 1}.
    bool binary_like() const noexcept;

    // This value times 10^count, i.e. `count` zeros appended on the right.
    DigitString padded(std::size_t count) const;

    friend bool operator==(const DigitString&, const DigitString&) = default;

private:
    explicit DigitString(std::string text) : text_(std::move(text)) {}

    std::string text_;
};

// Digits in reverse order with resulting leading zeros dropped: 1100 -> 11.
DigitString reverse(const DigitString& d);

unsigned digit_sum(const DigitString& d);

BigInt base10_value(const DigitString& d);

// Reads a {0,1} digit run as a binary numeral. Throws std::invalid_argument
// if any digit exceeds 1.
BigInt base2_value(const DigitString& d);

// gcd(d, reverse(d)) computed exactly.
BigInt gcd_with_reversal(const DigitString& d);

bool is_palindrome(const DigitString& d);

} // namespace revgcd
