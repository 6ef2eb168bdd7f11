#include "revgcd/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "revgcd/proofkit.hpp"
#include "revgcd/residue.hpp"

namespace revgcd {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kCompositionLimit = 3'000'000;
constexpr std::size_t kMaxVisibleOrder = 18;

// Shared stop/budget/heartbeat plumbing for one search call.
class Budget {
public:
    explicit Budget(const SearchConfig& cfg) : cfg_(cfg), start_(Clock::now()) {}

    // Counts one candidate. Returns false once the time budget is spent.
    bool tick() {
        const auto n = candidates_.fetch_add(1, std::memory_order_relaxed) + 1;
        if ((n & 0xffff) == 0) {
            if (cfg_.time_budget && Clock::now() - start_ > *cfg_.time_budget) {
                expired_.store(true, std::memory_order_relaxed);
            }
            if (cfg_.progress && (n & 0x3fffff) == 0) {
                std::lock_guard lock(progress_mutex_);
                cfg_.progress(n);
            }
        }
        return !expired();
    }

    bool expired() const { return expired_.load(std::memory_order_relaxed); }
    std::uint64_t candidates() const { return candidates_.load(); }

private:
    const SearchConfig& cfg_;
    Clock::time_point start_;
    std::atomic<std::uint64_t> candidates_{0};
    std::atomic<bool> expired_{false};
    std::mutex progress_mutex_;
};

std::vector<std::size_t> one_positions(const DigitString& d) {
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d.at(i) == 1) positions.push_back(i);
    }
    return positions;
}

bool accepted(const std::string& candidate, long long x) {
    return std::holds_alternative<SolutionRecord>(verify_solution(DigitString::parse(candidate), x));
}

SearchOutcome found(long long x, const std::string& digits, const SearchConfig& cfg, const Budget& budget) {
    auto verdict = verify_solution(DigitString::parse(digits), x);
    SearchOutcome out;
    out.status = SearchStatus::found;
    out.solution = std::get<SolutionRecord>(std::move(verdict));
    out.max_digits = cfg.max_digits;
    out.candidates = budget.candidates();
    return out;
}

SearchOutcome not_found(const SearchConfig& cfg, const Budget& budget, std::string note = {}) {
    SearchOutcome out;
    out.status = budget.expired() ? SearchStatus::timed_out : SearchStatus::exhausted;
    out.max_digits = cfg.max_digits;
    out.candidates = budget.candidates();
    out.note = std::move(note);
    return out;
}

// Powers of ten and prefix sums of powers of ten modulo x.
struct PowerTable {
    std::vector<long long> pow;     // pow[i] = 10^i mod x
    std::vector<long long> prefix;  // prefix[t] = sum_{i<t} 10^i mod x

    PowerTable(long long x, std::size_t n) : pow(n + 1), prefix(n + 2) {
        long long p = 1 % x;
        prefix[0] = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            pow[i] = p;
            prefix[i + 1] = (prefix[i] + p) % x;
            p = p * 10 % x;
        }
    }
};

// ---------------------------------------------------------------------------
// Brute force

struct BruteTask {
    std::string prefix;  // string indices 0..depth-1, most significant first
    int ones_left = 0;
    long long fwd = 0;
    long long rev = 0;
};

class BruteLength {
public:
    BruteLength(long long x, std::size_t length, Budget& budget)
        : x_(x), length_(length), powers_(x, length), budget_(budget) {}

    // String index k holds position length-1-k; in rev(b) it is position k.
    long long fwd_weight(std::size_t k) const { return powers_.pow[length_ - 1 - k]; }
    long long rev_weight(std::size_t k) const { return powers_.pow[k]; }

    std::vector<BruteTask> split(std::size_t depth) const {
        std::vector<BruteTask> tasks;
        BruteTask root;
        root.prefix = "1";
        root.ones_left = static_cast<int>(x_) - 1;
        root.fwd = fwd_weight(0);
        root.rev = rev_weight(0);
        expand(root, depth, tasks);
        return tasks;
    }

    // Lexicographically first accepted completion of the task, if any.
    // `abort` is polled between candidates.
    template <typename Abort>
    std::optional<std::string> run(const BruteTask& task, Abort&& abort) {
        buffer_ = task.prefix;
        buffer_.resize(length_, '0');
        result_.reset();
        walk(task.prefix.size(), task.ones_left, task.fwd, task.rev, abort);
        return result_;
    }

private:
    void expand(const BruteTask& t, std::size_t depth, std::vector<BruteTask>& out) const {
        const std::size_t k = t.prefix.size();
        const std::size_t free = length_ - k;
        if (k >= depth || k == length_ || t.ones_left == 0 || static_cast<std::size_t>(t.ones_left) == free) {
            out.push_back(t);
            return;
        }
        if (static_cast<std::size_t>(t.ones_left) < free) {
            BruteTask zero = t;
            zero.prefix.push_back('0');
            expand(zero, depth, out);
        }
        BruteTask one = t;
        one.prefix.push_back('1');
        one.ones_left -= 1;
        one.fwd = (one.fwd + fwd_weight(k)) % x_;
        one.rev = (one.rev + rev_weight(k)) % x_;
        expand(one, depth, out);
    }

    template <typename Abort>
    bool walk(std::size_t k, int ones_left, long long fwd, long long rev, Abort& abort) {
        const std::size_t free = length_ - k;
        if (ones_left == 0 || static_cast<std::size_t>(ones_left) == free) {
            if (ones_left != 0) {
                // Remaining string indices k..L-1 all ones: positions 0..free-1.
                fwd = (fwd + powers_.prefix[free]) % x_;
                rev = (rev + powers_.prefix[length_] - powers_.prefix[k] + x_) % x_;
                std::fill(buffer_.begin() + static_cast<std::ptrdiff_t>(k), buffer_.end(), '1');
            }
            bool done = false;
            if (!budget_.tick() || abort()) {
                done = true;
            } else if (fwd == 0 && rev == 0 && accepted(buffer_, x_)) {
                result_ = buffer_;
                done = true;
            }
            if (ones_left != 0) {
                std::fill(buffer_.begin() + static_cast<std::ptrdiff_t>(k), buffer_.end(), '0');
            }
            return done;
        }
        if (walk(k + 1, ones_left, fwd, rev, abort)) return true;
        buffer_[k] = '1';
        const bool done =
            walk(k + 1, ones_left - 1, (fwd + fwd_weight(k)) % x_, (rev + rev_weight(k)) % x_, abort);
        buffer_[k] = '0';
        return done;
    }

    long long x_;
    std::size_t length_;
    PowerTable powers_;
    Budget& budget_;
    std::string buffer_;
    std::optional<std::string> result_;
};

std::optional<std::string> brute_length_parallel(long long x, std::size_t length, unsigned workers,
                                                 Budget& budget) {
    if (length == 1) {
        return (budget.tick() && accepted("1", x)) ? std::optional<std::string>("1") : std::nullopt;
    }
    const std::size_t depth = std::min<std::size_t>(length, workers > 1 ? 14 : 1);
    const auto tasks = BruteLength(x, length, budget).split(depth);

    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{none};
    std::vector<std::optional<std::string>> results(tasks.size());

    auto worker = [&] {
        BruteLength runner(x, length, budget);
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= tasks.size() || t > best.load() || budget.expired()) return;
            auto hit = runner.run(tasks[t], [&] { return t > best.load(std::memory_order_relaxed); });
            if (hit) {
                results[t] = std::move(hit);
                std::size_t cur = best.load();
                while (t < cur && !best.compare_exchange_weak(cur, t)) {
                }
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    }
    if (best.load() == none || budget.expired()) {
        // A timed-out run cannot vouch that earlier tasks were finished.
        return std::nullopt;
    }
    return results[best.load()];
}

// ---------------------------------------------------------------------------
// Class-sum machinery

struct RawSystem {
    long long x;
    std::size_t order;
    std::vector<long long> forward;
    std::vector<long long> reverse;
};

RawSystem raw_system(long long x) {
    RawSystem s{x, search_order(x), {}, {}};
    if (x == 1) {
        s.forward = {0};
        s.reverse = {0};
        return s;
    }
    const auto sys = build_system(x);
    s.forward.assign(sys.forward.begin(), sys.forward.end());
    s.reverse.assign(sys.reverse.begin(), sys.reverse.end());
    return s;
}

bool passes_system(const RawSystem& s, const ClassSumVector& p) {
    long long f = 0, r = 0;
    for (std::size_t j = 0; j < s.order; ++j) {
        f += s.forward[j] * p.sums[j];
        r += s.reverse[j] * p.sums[j];
    }
    return p.total() == s.x && f % s.x == 0 && r % s.x == 0;
}

// Free positions (excluding 0 and the top) in [1, p] belonging to class j.
std::size_t free_in_class(std::size_t p, std::size_t j, std::size_t m) {
    if (j == 0) return p / m;
    return p >= j ? (p - j) / m + 1 : 0;
}

class CompositionPruner {
public:
    CompositionPruner(long long x, std::size_t length, const std::vector<ClassSumVector>& survivors)
        : m_(search_order(x)), length_(length) {
        anchors_.assign(m_, 0);
        anchors_[0] += 1;
        anchors_[(length - 1) % m_] += 1;
        const std::size_t top_free = length >= 2 ? length - 2 : 0;
        for (const auto& p : survivors) {
            if (fits(p.sums, anchors_, top_free)) fitting_.push_back(p.sums);
        }
    }

    bool any() const { return !fitting_.empty(); }
    const std::vector<int>& anchors() const { return anchors_; }

    // Some surviving composition lies between cur and cur + free capacity of
    // positions [1, p].
    bool feasible(const std::vector<int>& cur, std::size_t p) const {
        return std::any_of(fitting_.begin(), fitting_.end(),
                           [&](const std::vector<int>& sums) { return fits(sums, cur, p); });
    }

private:
    bool fits(const std::vector<int>& sums, const std::vector<int>& cur, std::size_t p) const {
        for (std::size_t j = 0; j < m_; ++j) {
            if (sums[j] < cur[j]) return false;
            if (static_cast<std::size_t>(sums[j] - cur[j]) > free_in_class(p, j, m_)) return false;
        }
        return true;
    }

    std::size_t m_;
    std::size_t length_;
    std::vector<int> anchors_;
    std::vector<std::vector<int>> fitting_;
};

class ResiduePruner {
public:
    ResiduePruner(long long x, std::size_t length) : x_(x), length_(length), powers_(x, length) {
        ones_ = static_cast<std::size_t>(x >= 2 ? x - 2 : 0);
        const std::size_t free = length >= 2 ? length - 2 : 0;
        layer_size_ = (ones_ + 1) * static_cast<std::size_t>(x * x);
        reach_.assign((free + 1) * layer_size_, false);
        reach_[index(0, 0, 0, 0)] = true;
        for (std::size_t p = 1; p <= free; ++p) {
            const long long f = fwd_weight(p), g = rev_weight(p);
            for (std::size_t k = 0; k <= ones_; ++k) {
                for (long long a = 0; a < x; ++a) {
                    for (long long b = 0; b < x; ++b) {
                        if (!reach_[index(p - 1, k, a, b)]) continue;
                        reach_[index(p, k, a, b)] = true;
                        if (k < ones_) reach_[index(p, k + 1, (a + f) % x, (b + g) % x)] = true;
                    }
                }
            }
        }
    }

    long long fwd_weight(std::size_t position) const { return powers_.pow[position]; }
    long long rev_weight(std::size_t position) const { return powers_.pow[length_ - 1 - position]; }

    // Positions [1, p] can take `ones` ones and bring both residues to zero.
    bool feasible(std::size_t p, std::size_t ones, long long fwd, long long rev) const {
        if (ones > ones_) return false;
        return reach_[index(p, ones, (x_ - fwd) % x_, (x_ - rev) % x_)];
    }

private:
    std::size_t index(std::size_t p, std::size_t k, long long a, long long b) const {
        return p * layer_size_ + (k * static_cast<std::size_t>(x_) + static_cast<std::size_t>(a)) *
                                     static_cast<std::size_t>(x_) +
               static_cast<std::size_t>(b);
    }

    long long x_;
    std::size_t length_;
    PowerTable powers_;
    std::size_t ones_ = 0;
    std::size_t layer_size_ = 0;
    std::vector<bool> reach_;
};

// Lexicographic DFS over positions length-2 .. 1 with the anchors set.
class PrunedWalk {
public:
    PrunedWalk(long long x, std::size_t length, Budget& budget) : x_(x), length_(length), budget_(budget) {
        buffer_.assign(length, '0');
        buffer_.front() = '1';
        buffer_.back() = '1';
    }

    std::optional<std::string> run(const CompositionPruner& pruner) {
        auto cur = pruner.anchors();
        const std::size_t m = search_order(x_);
        auto feasible = [&](std::size_t p, std::size_t) { return pruner.feasible(cur, p); };
        auto place = [&](std::size_t p, int delta) { cur[p % m] += delta; };
        if (!pruner.feasible(cur, length_ - 2)) return std::nullopt;
        walk(length_ - 2, feasible, place);
        return result_;
    }

    std::optional<std::string> run(const ResiduePruner& pruner) {
        long long fwd = (pruner.fwd_weight(0) + pruner.fwd_weight(length_ - 1)) % x_;
        long long rev = (pruner.rev_weight(0) + pruner.rev_weight(length_ - 1)) % x_;
        std::size_t ones = static_cast<std::size_t>(x_ - 2);
        auto feasible = [&](std::size_t p, std::size_t) { return pruner.feasible(p, ones, fwd, rev); };
        auto place = [&](std::size_t p, int delta) {
            const long long sign = delta > 0 ? 1 : x_ - 1;
            fwd = (fwd + sign * pruner.fwd_weight(p)) % x_;
            rev = (rev + sign * pruner.rev_weight(p)) % x_;
            if (delta > 0) {
                --ones;
            } else {
                ++ones;
            }
        };
        if (!feasible(length_ - 2, 0)) return std::nullopt;
        walk(length_ - 2, feasible, place);
        return result_;
    }

private:
    // Decides position p (then p-1, ..., 1). feasible(q, _) asks whether the
    // current state can be completed using positions [1, q].
    template <typename Feasible, typename Place>
    bool walk(std::size_t p, Feasible& feasible, Place& place) {
        if (p == 0) {
            if (!budget_.tick()) return true;
            if (accepted(buffer_, x_)) {
                result_ = buffer_;
                return true;
            }
            return false;
        }
        if (budget_.expired()) return true;
        char& digit = buffer_[length_ - 1 - p];
        if (feasible(p - 1, 0) && walk(p - 1, feasible, place)) return true;
        place(p, +1);
        digit = '1';
        bool done = false;
        if (feasible(p - 1, 0)) done = walk(p - 1, feasible, place);
        digit = '0';
        place(p, -1);
        return done;
    }

    long long x_;
    std::size_t length_;
    Budget& budget_;
    std::string buffer_;
    std::optional<std::string> result_;
};

std::vector<ClassSumVector> surviving_compositions(long long x) {
    const auto sys = raw_system(x);
    std::vector<ClassSumVector> out;
    for (const auto& p : enumerate_compositions(static_cast<int>(x), sys.order)) {
        if (passes_system(sys, p) && visible_gcd(p) == x) out.push_back(p);
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------

const char* to_string(SearchMode mode) {
    switch (mode) {
    case SearchMode::brute: return "brute";
    case SearchMode::pruned: return "pruned";
    case SearchMode::single_class: return "single_class";
    }
    return "?";
}

SearchMode parse_search_mode(const std::string& text) {
    if (text == "brute") return SearchMode::brute;
    if (text == "pruned") return SearchMode::pruned;
    if (text == "single_class") return SearchMode::single_class;
    throw std::invalid_argument("unknown search mode '" + text + "'");
}

const char* to_string(SearchStatus status) {
    switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::timed_out: return "timed_out";
    }
    return "?";
}

std::string Rejection::describe(long long x) const {
    std::string text;
    if (reason == RejectReason::digit_sum_mismatch) {
        text = "digit sum " + std::to_string(digit_sum) + " != " + std::to_string(x);
    } else {
        text = "gcd " + gcd.str() + " != " + std::to_string(x);
    }
    if (palindrome) text += " (palindrome)";
    return text;
}

Verdict verify_solution(const DigitString& d, long long x) {
    if (!d.binary_like()) {
        throw std::invalid_argument("candidate '" + d.str() + "' has a digit above 1");
    }
    const unsigned sum = digit_sum(d);
    const BigInt g = gcd_with_reversal(d);
    if (static_cast<long long>(sum) != x) {
        return Rejection{RejectReason::digit_sum_mismatch, sum, g, is_palindrome(d)};
    }
    if (g != x) {
        return Rejection{RejectReason::gcd_mismatch, sum, g, is_palindrome(d)};
    }
    SolutionRecord rec;
    rec.x = x;
    rec.digits = d;
    rec.one_positions = one_positions(d);
    rec.ones = rec.one_positions.size();
    rec.zeros = d.size() - rec.ones;
    rec.gcd = g;
    rec.digit_sum = sum;
    return rec;
}

void require_search_modulus(long long x) {
    if (x < 1 || std::gcd(x, 10LL) != 1) {
        throw std::domain_error("x must be a positive integer coprime to 10, got " + std::to_string(x));
    }
}

std::size_t search_order(long long x) {
    require_search_modulus(x);
    return x == 1 ? 1 : multiplicative_order(x);
}

SearchOutcome brute_force_smallest(long long x, const SearchConfig& cfg) {
    require_search_modulus(x);
    Budget budget(cfg);
    const unsigned workers = std::max(1u, cfg.workers);
    for (std::size_t length = static_cast<std::size_t>(x); length <= cfg.max_digits; ++length) {
        if (auto hit = brute_length_parallel(x, length, workers, budget)) {
            return found(x, *hit, cfg, budget);
        }
        if (budget.expired()) break;
    }
    return not_found(cfg, budget);
}

PruneMode prune_mode(long long x) {
    const std::size_t m = search_order(x);
    if (m <= kMaxVisibleOrder && composition_count(static_cast<int>(x), m) <= kCompositionLimit) {
        return PruneMode::compositions;
    }
    return PruneMode::residues;
}

SearchOutcome pruned_smallest(long long x, const SearchConfig& cfg) {
    require_search_modulus(x);
    Budget budget(cfg);
    if (x == 1) {
        budget.tick();
        return cfg.max_digits >= 1 ? found(x, "1", cfg, budget) : not_found(cfg, budget);
    }
    const auto mode = prune_mode(x);
    std::vector<ClassSumVector> survivors;
    if (mode == PruneMode::compositions) {
        survivors = surviving_compositions(x);
    }
    for (std::size_t length = static_cast<std::size_t>(x); length <= cfg.max_digits; ++length) {
        PrunedWalk walk(x, length, budget);
        std::optional<std::string> hit;
        if (mode == PruneMode::compositions) {
            CompositionPruner pruner(x, length, survivors);
            if (!pruner.any()) continue;
            hit = walk.run(pruner);
        } else {
            hit = walk.run(ResiduePruner(x, length));
        }
        if (hit && !budget.expired()) return found(x, *hit, cfg, budget);
        if (budget.expired()) break;
    }
    return not_found(cfg, budget);
}

SearchOutcome single_class_smallest(long long x, std::size_t class_index, const SearchConfig& cfg) {
    const std::size_t m = search_order(x);
    if (class_index >= m) {
        throw std::invalid_argument("class " + std::to_string(class_index) + " out of range for order " +
                                    std::to_string(m));
    }
    Budget budget(cfg);
    if (class_index != 0) {
        return not_found(cfg, budget,
                         "class " + std::to_string(class_index) +
                             " excludes position 0, and a smallest solution always ends in 1");
    }
    const auto ones = static_cast<std::size_t>(x);
    for (std::size_t length = 1; length <= cfg.max_digits; length += m) {
        const std::size_t slots = (length - 1) / m + 1;  // positions 0, m, ..., length-1
        if (slots < ones) continue;
        std::string buffer(length, '0');
        buffer.front() = '1';
        buffer.back() = '1';
        if (length == 1) {
            if (budget.tick() && accepted(buffer, x)) return found(x, buffer, cfg, budget);
            continue;
        }
        // Inner slots 1..slots-2 (slot t is position t*m), highest first,
        // zero before one.
        std::optional<std::string> hit;
        auto walk = [&](auto&& self, std::size_t slot, std::size_t left) -> bool {
            const std::size_t free = slot;  // slots 1..slot still open
            if (left == 0 || left == free) {
                for (std::size_t t = 1; t <= slot && left; ++t) buffer[length - 1 - t * m] = '1';
                bool done = !budget.tick();
                if (!done && !is_palindrome(DigitString::parse(buffer)) && accepted(buffer, x)) {
                    hit = buffer;
                    done = true;
                }
                for (std::size_t t = 1; t <= slot && left; ++t) buffer[length - 1 - t * m] = '0';
                return done;
            }
            if (self(self, slot - 1, left)) return true;
            buffer[length - 1 - slot * m] = '1';
            const bool done = self(self, slot - 1, left - 1);
            buffer[length - 1 - slot * m] = '0';
            return done;
        };
        const std::size_t inner = ones >= 2 ? ones - 2 : 0;
        if (ones == 1) {
            // Only a single digit can carry one one at both ends.
            continue;
        }
        walk(walk, slots - 2, inner);
        if (hit && !budget.expired()) return found(x, *hit, cfg, budget);
        if (budget.expired()) break;
    }
    return not_found(cfg, budget);
}

SearchOutcome find_smallest(long long x, const SearchConfig& cfg) {
    switch (cfg.mode) {
    case SearchMode::brute: return brute_force_smallest(x, cfg);
    case SearchMode::pruned: return pruned_smallest(x, cfg);
    case SearchMode::single_class: return single_class_smallest(x, cfg.class_index.value_or(0), cfg);
    }
    throw std::logic_error("unhandled search mode");
}

// ---------------------------------------------------------------------------

long long visible_gcd(const ClassSumVector& p) {
    const std::size_t m = p.order();
    if (m == 0 || m > kMaxVisibleOrder) {
        throw std::domain_error("visible gcd needs an order between 1 and 18");
    }
    unsigned long long n = 1;
    for (std::size_t i = 0; i < m; ++i) n *= 10;
    n -= 1;
    unsigned __int128 fwd = 0, rev = 0;
    unsigned long long power = 1;
    std::vector<unsigned long long> powers(m);
    for (std::size_t j = 0; j < m; ++j) {
        powers[j] = power;
        power *= 10;
    }
    for (std::size_t j = 0; j < m; ++j) {
        fwd += static_cast<unsigned __int128>(p.sums[j]) * powers[j];
        rev += static_cast<unsigned __int128>(p.sums[j]) * powers[m - 1 - j];
    }
    const auto f = static_cast<unsigned long long>(fwd % n);
    const auto r = static_cast<unsigned long long>(rev % n);
    return static_cast<long long>(std::gcd(std::gcd(f, r), n));
}

std::size_t minimal_length(const ClassSumVector& p) {
    const std::size_t m = p.order();
    if (m == 0 || p.sums[0] == 0) return 0;
    const auto total = static_cast<std::size_t>(p.total());
    for (std::size_t length = std::max<std::size_t>(total, 1);; ++length) {
        if (length > 1 && p.sums[(length - 1) % m] == 0) continue;
        if (length == 1 && total != 1) continue;
        bool fits = true;
        for (std::size_t j = 0; j < m && fits; ++j) {
            const std::size_t capacity = length > j ? (length - 1 - j) / m + 1 : 0;
            fits = static_cast<std::size_t>(p.sums[j]) <= capacity;
        }
        if (fits) return length;
    }
}

std::vector<CompositionProfile> feasible_compositions(long long x) {
    if (prune_mode(x) != PruneMode::compositions) {
        throw std::domain_error("too many class-sum compositions to list for x = " + std::to_string(x));
    }
    const auto sys = raw_system(x);
    std::vector<CompositionProfile> out;
    for (const auto& p : enumerate_compositions(static_cast<int>(x), sys.order)) {
        if (!passes_system(sys, p)) continue;
        CompositionProfile prof;
        prof.sums = p;
        prof.check = {true, true, true};
        prof.visible_gcd = visible_gcd(p);
        prof.min_length = minimal_length(p);
        prof.single_class = std::count_if(p.sums.begin(), p.sums.end(), [](int v) { return v != 0; }) == 1;
        out.push_back(std::move(prof));
    }
    return out;
}

void render_record(std::ostream& out, const SolutionRecord& r) {
    out << "x          " << r.x << "\n"
        << "digits     " << r.digits.str() << "\n"
        << "base2      " << base2_value(r.digits) << "\n"
        << "length     " << r.length() << " (" << r.ones << " ones, " << r.zeros << " zeros)\n"
        << "long       " << (r.long_solution() ? "yes" : "no") << "\n"
        << "gcd        " << r.gcd << "\n"
        << "digit sum  " << r.digit_sum << "\n"
        << "ones at   ";
    for (auto p : r.one_positions) out << " " << p;
    out << "\n";
}

void render_outcome(std::ostream& out, const SearchOutcome& o) {
    out << "status     " << to_string(o.status) << "\n";
    if (o.solution) {
        render_record(out, *o.solution);
    } else {
        out << "max digits " << o.max_digits << "\n";
    }
    out << "candidates " << o.candidates << "\n";
    if (!o.note.empty()) out << "note       " << o.note << "\n";
}

} // namespace revgcd
