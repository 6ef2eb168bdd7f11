#include "revgcd/residue.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace revgcd {

int ClassSumVector::total() const noexcept {
    return std::accumulate(sums.begin(), sums.end(), 0);
}

void require_order_modulus(long long x) {
    if (x < 3) {
        throw std::domain_error("modulus must be at least 3, got " + std::to_string(x));
    }
    if (std::gcd(x, 10LL) != 1) {
        throw std::domain_error("modulus must be coprime to 10, got " + std::to_string(x));
    }
}

namespace {

RemainderCycle build_cycle(long long x) {
    require_order_modulus(x);
    RemainderCycle cycle;
    cycle.modulus = static_cast<int>(x);
    long long r = 1;
    do {
        cycle.remainders.push_back(static_cast<int>(r));
        r = (r * 10) % x;
    } while (r != 1);
    return cycle;
}

} // namespace

const RemainderCycle& remainder_cycle(long long x) {
    static std::mutex mutex;
    static std::map<long long, std::unique_ptr<const RemainderCycle>> cache;

    std::lock_guard lock(mutex);
    auto it = cache.find(x);
    if (it == cache.end()) {
        it = cache.emplace(x, std::make_unique<const RemainderCycle>(build_cycle(x))).first;
    }
    return *it->second;
}

std::size_t multiplicative_order(long long x) {
    return remainder_cycle(x).order();
}

ClassSumVector class_sums(const DigitString& d, std::size_t order) {
    if (order == 0) {
        throw std::invalid_argument("class order must be positive");
    }
    ClassSumVector v{std::vector<int>(order, 0)};
    for (std::size_t i = 0; i < d.size(); ++i) {
        v.sums[i % order] += d.at(i);
    }
    return v;
}

std::size_t canonical_pad(std::size_t length, std::size_t order) {
    return (order - length % order) % order;
}

int forward_residue(const DigitString& d, long long x) {
    const auto& cycle = remainder_cycle(x);
    long long acc = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        acc += static_cast<long long>(d.at(i)) * cycle.at(i);
    }
    return static_cast<int>(acc % x);
}

int reverse_residue(const DigitString& d, long long x, std::size_t pad) {
    const auto& cycle = remainder_cycle(x);
    const std::size_t padded_length = d.size() + pad;
    long long acc = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        acc += static_cast<long long>(d.at(i)) * cycle.at(padded_length - 1 - (i + pad));
    }
    return static_cast<int>(acc % x);
}

namespace {

// cpp_int reads a leading 0 as octal, and blocks often start with zeros.
BigInt decimal_block(const std::string& digits, std::size_t begin, std::size_t end) {
    BigInt acc = 0;
    for (std::size_t i = begin; i < end; ++i) acc = acc * 10 + (digits[i] - '0');
    return acc;
}

} // namespace

bool block_sum_divisible(const DigitString& d, long long x) {
    const std::size_t m = multiplicative_order(x);
    std::string digits = d.str();
    while (digits.size() > m) {
        BigInt sum = 0;
        for (std::size_t end = digits.size(); end > 0; end -= std::min(end, m)) {
            const std::size_t begin = end > m ? end - m : 0;
            sum += decimal_block(digits, begin, end);
        }
        digits = sum.str();
    }
    return decimal_block(digits, 0, digits.size()) % x == 0;
}

} // namespace revgcd
