#include "revgcd/digits.hpp"

#include <algorithm>
#include <stdexcept>

namespace revgcd {

DigitString DigitString::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("digit string is empty");
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("not a digit string: '" + std::string(text) + "'");
        }
    }
    if (text.front() == '0') {
        throw std::invalid_argument("digit string has a leading zero: '" + std::string(text) + "'");
    }
    return DigitString(std::string(text));
}

DigitString DigitString::from_value(const BigInt& value) {
    if (value <= 0) {
        throw std::invalid_argument("digit strings denote positive integers");
    }
    return DigitString(value.str());
}

DigitString DigitString::from_base2(const BigInt& value) {
    if (value <= 0) {
        throw std::invalid_argument("digit strings denote positive integers");
    }
    std::string bits;
    for (BigInt v = value; v != 0; v >>= 1) {
        bits.push_back(static_cast<char>('0' + static_cast<int>(v & 1)));
    }
    std::reverse(bits.begin(), bits.end());
    return DigitString(std::move(bits));
}

bool DigitString::binary_like() const noexcept {
    return std::all_of(text_.begin(), text_.end(), [](char c) { return c == '0' || c == '1'; });
}

DigitString DigitString::padded(std::size_t count) const {
    return DigitString(text_ + std::string(count, '0'));
}

DigitString reverse(const DigitString& d) {
    std::string flipped(d.str().rbegin(), d.str().rend());
    // The original leading digit is nonzero, so at least one digit survives.
    flipped.erase(0, flipped.find_first_not_of('0'));
    return DigitString::parse(flipped);
}

unsigned digit_sum(const DigitString& d) {
    unsigned total = 0;
    for (char c : d.str()) {
        total += static_cast<unsigned>(c - '0');
    }
    return total;
}

BigInt base10_value(const DigitString& d) {
    return BigInt(d.str().c_str());
}

BigInt base2_value(const DigitString& d) {
    BigInt value = 0;
    for (char c : d.str()) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("base-2 reading needs a {0,1} digit string, got '" + d.str() + "'");
        }
        value <<= 1;
        value |= (c - '0');
    }
    return value;
}

BigInt gcd_with_reversal(const DigitString& d) {
    return boost::multiprecision::gcd(base10_value(d), base10_value(reverse(d)));
}

bool is_palindrome(const DigitString& d) {
    const auto& s = d.str();
    return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

} // namespace revgcd
