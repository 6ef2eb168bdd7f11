#pragma once

#include <cstddef>
#include <vector>

#include "revgcd/digits.hpp"

namespace revgcd {

// Powers of ten modulo x over one full period: remainders[i] = 10^i mod x.
struct RemainderCycle {
    int modulus = 0;
    std::vector<int> remainders;

    std::size_t order() const noexcept { return remainders.size(); }

    // 10^exponent mod x, for any exponent.
    int at(std::size_t exponent) const { return remainders[exponent % remainders.size()]; }
};

// Per-residue-class digit sums: sums[j] adds the digits at positions i with
// i mod order == j, positions counted from the right.
struct ClassSumVector {
    std::vector<int> sums;

    std::size_t order() const noexcept { return sums.size(); }
    int total() const noexcept;

    friend bool operator==(const ClassSumVector&, const ClassSumVector&) = default;
    friend auto operator<=>(const ClassSumVector&, const ClassSumVector&) = default;
};

// Throws std::domain_error unless x >= 3 and gcd(x, 10) == 1.
void require_order_modulus(long long x);

// Smallest m >= 1 with 10^m == 1 (mod x).
std::size_t multiplicative_order(long long x);

// Cached, immutable cycle for x. The reference stays valid for the life of the
// process; concurrent callers are safe.
const RemainderCycle& remainder_cycle(long long x);

ClassSumVector class_sums(const DigitString& d, std::size_t order);

// Zeros to append so the length becomes a multiple of `order`.
std::size_t canonical_pad(std::size_t length, std::size_t order);

// d mod x evaluated through the remainder cycle.
int forward_residue(const DigitString& d, long long x);

// Residue of the reversal of d * 10^pad. The padded string has length
// s + pad and d's digit at position i sits at position i + pad, which the
// reversal moves to position (s + pad - 1) - (i + pad). The trailing zeros
// become leading zeros of the reversal, so the result does not depend on pad;
// with the canonical pad the class sums of the padded string meet the
// reversed cycle term by term.
int reverse_residue(const DigitString& d, long long x, std::size_t pad);

// Block rule: split d into length-m blocks from the right, add them, repeat
// until at most m digits remain, then test divisibility by x.
bool block_sum_divisible(const DigitString& d, long long x);

} // namespace revgcd
