#include "revgcd/constraints.hpp"

#include <stdexcept>
#include <string>

namespace revgcd {

namespace {

long long mod_floor(long long a, long long x) {
    const long long r = a % x;
    return r < 0 ? r + x : r;
}

} // namespace

ClassSumSystem build_system(long long x) {
    const auto& cycle = remainder_cycle(x);
    const std::size_t m = cycle.order();
    ClassSumSystem sys;
    sys.modulus = static_cast<int>(x);
    sys.target_digit_sum = static_cast<int>(x);
    sys.forward = cycle.remainders;
    sys.reverse.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        sys.reverse[j] = cycle.remainders[m - 1 - j];
    }
    return sys;
}

CompositionCheck check_composition(const ClassSumSystem& sys, const ClassSumVector& p) {
    if (p.order() != sys.order()) {
        throw std::invalid_argument("composition has " + std::to_string(p.order()) + " classes, system expects " +
                                    std::to_string(sys.order()));
    }
    long long fwd = 0;
    long long rev = 0;
    for (std::size_t j = 0; j < p.order(); ++j) {
        fwd += static_cast<long long>(sys.forward[j]) * p.sums[j];
        rev += static_cast<long long>(sys.reverse[j]) * p.sums[j];
    }
    return CompositionCheck{
        .sum_ok = p.total() == sys.target_digit_sum,
        .forward_ok = fwd % sys.modulus == 0,
        .reverse_ok = rev % sys.modulus == 0,
    };
}

DerivedQuantities derived_quantities(const ClassSumVector& p) {
    if (p.order() != 6) {
        throw std::invalid_argument("derived quantities need 6 classes, got " + std::to_string(p.order()));
    }
    const auto& s = p.sums;
    return DerivedQuantities{
        .R = s[0] + s[5],
        .S = s[2] + s[3],
        .U = s[0] + s[2] - s[3] - s[5],
        .V = s[1] - s[4],
    };
}

FoldedForms folded_forms(long long x) {
    const auto sys = build_system(x);
    if (sys.order() != 6) {
        throw std::domain_error("folded forms need order 6; order of 10 mod " + std::to_string(x) + " is " +
                                std::to_string(sys.order()));
    }
    std::vector<long long> plus(6), minus(6);
    for (std::size_t j = 0; j < 6; ++j) {
        plus[j] = mod_floor(sys.forward[j] + sys.reverse[j], x);
        minus[j] = mod_floor(sys.reverse[j] - sys.forward[j], x);
    }
    // plus must read a*(A+F) + b*(C+D); minus must read u*(A+C-D-F) + v*(B-E).
    const bool plus_shape = plus[1] == 0 && plus[4] == 0 && plus[0] == plus[5] && plus[2] == plus[3];
    const bool minus_shape = minus[0] == minus[2] && mod_floor(minus[0] + minus[3], x) == 0 &&
                             mod_floor(minus[0] + minus[5], x) == 0 && mod_floor(minus[1] + minus[4], x) == 0;
    if (!plus_shape || !minus_shape) {
        throw std::domain_error("the residue system of " + std::to_string(x) + " does not fold into R, S, U, V");
    }
    return FoldedForms{
        .modulus = static_cast<int>(x),
        .plus_r = static_cast<int>(plus[0]),
        .plus_s = static_cast<int>(plus[2]),
        .minus_u = static_cast<int>(minus[0]),
        .minus_v = static_cast<int>(minus[1]),
    };
}

bool plus_holds(const DerivedQuantities& q, long long x) {
    const auto f = folded_forms(x);
    return mod_floor(static_cast<long long>(f.plus_r) * q.R + static_cast<long long>(f.plus_s) * q.S, x) == 0;
}

bool minus_holds(const DerivedQuantities& q, long long x) {
    const auto f = folded_forms(x);
    return mod_floor(static_cast<long long>(f.minus_u) * q.U + static_cast<long long>(f.minus_v) * q.V, x) == 0;
}

} // namespace revgcd
