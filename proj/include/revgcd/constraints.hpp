#pragma once

#include <cstddef>
#include <vector>

#include "revgcd/residue.hpp"

namespace revgcd {

// Necessary conditions on the class sums of any number b with digit sum x
// and x | b, x | rev(b):
//
//     sum_j P_j           == x
//     sum_j forward[j] P_j == 0 (mod x)
//     sum_j reverse[j] P_j == 0 (mod x)
//
// forward is the remainder cycle and reverse is the same cycle read
// backwards. Class sums are taken with positions counted from the right of
// the unpadded number; the reverse row then evaluates rev(b) * 10^k for some
// k, which is divisible by x exactly when rev(b) is.
struct ClassSumSystem {
    int modulus = 0;
    std::vector<int> forward;
    std::vector<int> reverse;
    int target_digit_sum = 0;

    std::size_t order() const noexcept { return forward.size(); }
};

struct CompositionCheck {
    bool sum_ok = false;
    bool forward_ok = false;
    bool reverse_ok = false;

    bool divisible() const noexcept { return forward_ok && reverse_ok; }
    bool all() const noexcept { return sum_ok && forward_ok && reverse_ok; }
};

ClassSumSystem build_system(long long x);

// Throws std::invalid_argument if P does not have one entry per class.
CompositionCheck check_composition(const ClassSumSystem& sys, const ClassSumVector& p);

// Sum and difference forms for order-6 moduli, with A..F = P_0..P_5:
// R = A + F, S = C + D, U = A + C - D - F, V = B - E.
struct DerivedQuantities {
    int R = 0;
    int S = 0;
    int U = 0;
    int V = 0;
};

// Throws std::invalid_argument unless P has exactly 6 classes.
DerivedQuantities derived_quantities(const ClassSumVector& p);

// Coefficients of the folded forms
//     plus:  plus_r * R + plus_s * S == 0 (mod x)   (forward + reverse)
//     minus: minus_u * U + minus_v * V == 0 (mod x) (reverse - forward)
// Only defined when the order is 6 and the sum/difference rows collapse onto
// R, S, U, V (true for 7 and 13; false for 39).
struct FoldedForms {
    int modulus = 0;
    int plus_r = 0;
    int plus_s = 0;
    int minus_u = 0;
    int minus_v = 0;
};

// Throws std::domain_error when x does not fold into R, S, U, V.
FoldedForms folded_forms(long long x);

bool plus_holds(const DerivedQuantities& q, long long x);
bool minus_holds(const DerivedQuantities& q, long long x);

} // namespace revgcd
