#include "revgcd/proofkit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace revgcd {

namespace {

long long mod_floor(long long a, long long x) {
    const long long r = a % x;
    return r < 0 ? r + x : r;
}

long long mod_inverse(long long a, long long x) {
    // Extended Euclid on (a mod x, x).
    long long old_r = mod_floor(a, x), r = x;
    long long old_s = 1, s = 0;
    while (r != 0) {
        const long long q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    return mod_floor(old_s, x);
}

char class_letter(std::size_t j) { return static_cast<char>('A' + j); }

std::size_t nonzero_classes(const ClassSumVector& p) {
    return static_cast<std::size_t>(std::count_if(p.sums.begin(), p.sums.end(), [](int v) { return v != 0; }));
}

std::string single_class_names(const std::vector<ClassSumVector>& comps) {
    std::set<std::size_t> classes;
    for (const auto& p : comps) {
        for (std::size_t j = 0; j < p.order(); ++j) {
            if (p.sums[j] != 0) classes.insert(j);
        }
    }
    std::string names;
    for (std::size_t j : classes) {
        if (!names.empty()) names += " or ";
        names += class_letter(j);
    }
    return names;
}

} // namespace

bool parity_check(long long x, long long y, long long p, long long q) {
    if (x + y != p + q) {
        throw ParityPreconditionError("parity lemma needs x + y == p + q");
    }
    return mod_floor(x + p - y - q, 2) == 0;
}

bool CongruenceFamily::contains(long long r, long long s) const {
    return mod_floor(r - c * s, modulus) == 0;
}

long long CongruenceFamily::parameter(long long r, long long s) const {
    return (r - c * s) / modulus;
}

CongruenceFamily solve_congruence(long long a, long long b, long long x) {
    if (x < 2) {
        throw std::domain_error("congruence modulus must be at least 2");
    }
    if (std::gcd(mod_floor(a, x), x) != 1) {
        throw std::domain_error("coefficient " + std::to_string(a) + " is not invertible mod " + std::to_string(x));
    }
    long long c = mod_floor(-b * mod_inverse(a, x), x);
    if (2 * c > x) {
        c -= x;
    }
    return CongruenceFamily{.a = a, .b = b, .modulus = x, .c = c};
}

// ---------------------------------------------------------------------------

Compositions::Compositions(int total, std::size_t parts) : total_(total), parts_(parts) {
    if (total < 0) throw std::invalid_argument("composition total must be nonnegative");
    if (parts == 0) throw std::invalid_argument("composition needs at least one part");
}

Compositions::iterator Compositions::begin() const {
    ClassSumVector first{std::vector<int>(parts_, 0)};
    first.sums.back() = total_;
    return iterator(std::move(first));
}

Compositions::iterator& Compositions::iterator::operator++() {
    // Next vector in lexicographic order: find the rightmost position k (not
    // the last) that can grow, i.e. has a positive suffix after it; bump it and
    // dump the rest of the suffix into the last slot.
    auto& v = current_.sums;
    const std::size_t n = v.size();
    int suffix = v[n - 1];
    for (std::size_t k = n - 1; k-- > 0;) {
        if (suffix > 0) {
            v[k] += 1;
            std::fill(v.begin() + static_cast<std::ptrdiff_t>(k) + 1, v.end(), 0);
            v[n - 1] = suffix - 1;
            return *this;
        }
        suffix += v[k];
    }
    done_ = true;
    return *this;
}

std::uint64_t composition_count(int total, std::size_t parts) {
    // C(total + parts - 1, parts - 1), built incrementally to stay exact.
    const std::uint64_t k = parts - 1;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (static_cast<std::uint64_t>(total) + i) / i;
    }
    return result;
}

// ---------------------------------------------------------------------------

const char* to_string(CompositionClass c) {
    switch (c) {
    case CompositionClass::single_class: return "single_class";
    case CompositionClass::cofactor_divisible: return "cofactor_divisible";
    case CompositionClass::counterexample: return "counterexample";
    }
    return "?";
}

TheoremReport verify_long_solution_theorem(long long x, long long cofactor) {
    require_order_modulus(x);
    require_order_modulus(cofactor);
    if (x == cofactor) {
        throw std::domain_error("modulus and cofactor must differ");
    }
    if (multiplicative_order(x) != 6 || multiplicative_order(cofactor) != 6) {
        throw std::domain_error("long-solution check needs both moduli to have order 6 (orders: " +
                                std::to_string(multiplicative_order(x)) + ", " +
                                std::to_string(multiplicative_order(cofactor)) + ")");
    }
    const auto sys = build_system(x);
    const auto co_sys = build_system(cofactor);

    TheoremReport report;
    report.modulus = static_cast<int>(x);
    report.cofactor = static_cast<int>(cofactor);
    for (const auto& p : enumerate_compositions(static_cast<int>(x), 6)) {
        ++report.examined;
        if (!check_composition(sys, p).all()) {
            continue;
        }
        ++report.feasible;
        CompositionClass kind;
        if (nonzero_classes(p) == 1) {
            kind = CompositionClass::single_class;
            ++report.single_class;
        } else if (check_composition(co_sys, p).divisible()) {
            kind = CompositionClass::cofactor_divisible;
            ++report.cofactor_divisible;
        } else {
            kind = CompositionClass::counterexample;
            ++report.counterexample_count;
            report.counterexamples.push_back(p);
        }
        report.feasible_list.push_back({p, kind});
    }
    return report;
}

// ---------------------------------------------------------------------------

CaseTrace case_trace(long long x) {
    if (x != 7 && x != 13) {
        throw std::domain_error("case trace is available for 7 and 13 only");
    }
    const long long cofactor = x == 7 ? 13 : 7;
    const auto forms = folded_forms(x);
    const auto co_forms = folded_forms(cofactor);
    const auto sys = build_system(x);
    const std::string first_param = x == 7 ? "n1" : "n3";
    const std::string second_param = x == 7 ? "n2" : "n4";

    std::vector<ClassSumVector> feasible;
    for (const auto& p : enumerate_compositions(static_cast<int>(x), 6)) {
        if (check_composition(sys, p).all()) feasible.push_back(p);
    }

    CaseTrace trace;
    trace.modulus = static_cast<int>(x);
    trace.cofactor = static_cast<int>(cofactor);

    // Stage 1: plus form on (R, S), 0 <= R, S <= x.
    TraceStage plus;
    plus.family = solve_congruence(forms.plus_r, forms.plus_s, x);
    plus.equation = std::to_string(forms.plus_r) + "R + " + std::to_string(forms.plus_s) + "S == 0 (mod " +
                    std::to_string(x) + ")";
    std::set<long long> plus_range;
    std::map<long long, std::set<std::pair<int, int>>> plus_pairs;
    for (int r = 0; r <= x; ++r) {
        for (int s = 0; s <= x; ++s) {
            if (!plus.family.contains(r, s)) continue;
            const long long n = plus.family.parameter(r, s);
            plus_range.insert(n);
            if (r + s <= x) plus_pairs[n].insert({r, s});
        }
    }
    plus.box_range.assign(plus_range.begin(), plus_range.end());
    plus.allowed = plus.box_range;

    std::vector<ClassSumVector> balanced;  // R == S branch, carried into stage 2
    for (long long n : plus.allowed) {
        TraceBranch branch;
        branch.parameter = first_param;
        branch.value = n;
        const auto& pairs = plus_pairs[n];
        branch.pairs.assign(pairs.begin(), pairs.end());
        for (const auto& p : feasible) {
            const auto q = derived_quantities(p);
            if (plus.family.parameter(q.R, q.S) == n) branch.compositions.push_back(p);
        }
        const bool all_single = std::all_of(branch.compositions.begin(), branch.compositions.end(),
                                            [](const ClassSumVector& p) { return nonzero_classes(p) == 1; });
        if (n == 0) {
            balanced = branch.compositions;
            bool u_even = true;
            bool co_plus = true;
            for (const auto& p : branch.compositions) {
                const auto q = derived_quantities(p);
                const auto& s = p.sums;
                u_even = u_even && parity_check(s[0], s[5], s[2], s[3]);
                co_plus = co_plus && plus_holds(q, cofactor);
            }
            std::ostringstream text;
            text << "R == S; U even on every composition: " << (u_even ? "yes" : "NO") << "; "
                 << co_forms.plus_r << "R + " << co_forms.plus_s << "S == 0 (mod " << cofactor
                 << ") on every composition: " << (co_plus ? "yes" : "NO");
            branch.conclusion = text.str();
        } else if (all_single) {
            branch.conclusion = "all ones in one class: " + single_class_names(branch.compositions);
        } else {
            branch.conclusion = "mixed compositions remain";
        }
        plus.branches.push_back(std::move(branch));
    }
    trace.stages.push_back(std::move(plus));

    // Stage 2: minus form on (U, V), -x <= U, V <= x, U even.
    TraceStage minus;
    minus.family = solve_congruence(forms.minus_u, forms.minus_v, x);
    minus.equation = std::to_string(forms.minus_u) + "U + " + std::to_string(forms.minus_v) + "V == 0 (mod " +
                     std::to_string(x) + ")";
    minus.restriction = "U even (parity lemma on A + F == C + D) forces an even parameter";
    std::set<long long> minus_range, minus_allowed;
    for (long long u = -x; u <= x; ++u) {
        for (long long v = -x; v <= x; ++v) {
            if (!minus.family.contains(u, v)) continue;
            const long long n = minus.family.parameter(u, v);
            minus_range.insert(n);
            if (mod_floor(u, 2) == 0) minus_allowed.insert(n);
        }
    }
    minus.box_range.assign(minus_range.begin(), minus_range.end());
    minus.allowed.assign(minus_allowed.begin(), minus_allowed.end());

    for (long long n : minus.allowed) {
        TraceBranch branch;
        branch.parameter = second_param;
        branch.value = n;
        std::set<std::pair<int, int>> realized;
        for (const auto& p : balanced) {
            const auto q = derived_quantities(p);
            if (minus.family.parameter(q.U, q.V) == n) {
                branch.compositions.push_back(p);
                realized.insert({q.U, q.V});
            }
        }
        branch.pairs.assign(realized.begin(), realized.end());
        const bool all_single = std::all_of(branch.compositions.begin(), branch.compositions.end(),
                                            [](const ClassSumVector& p) { return nonzero_classes(p) == 1; });
        if (n == 0) {
            bool co_minus = true;
            for (const auto& p : branch.compositions) co_minus = co_minus && minus_holds(derived_quantities(p), cofactor);
            std::ostringstream text;
            text << "U == " << minus.family.c << "V; " << co_forms.minus_u << "U + " << co_forms.minus_v
                 << "V == 0 (mod " << cofactor << ") on every composition: " << (co_minus ? "yes" : "NO")
                 << "; with the stage-1 plus form, b and rev(b) are divisible by " << cofactor;
            branch.conclusion = text.str();
        } else if (branch.compositions.empty()) {
            branch.conclusion = "no feasible composition";
        } else if (all_single) {
            branch.conclusion = "all ones in one class: " + single_class_names(branch.compositions);
        } else {
            branch.conclusion = "mixed compositions remain";
        }
        minus.branches.push_back(std::move(branch));
    }
    trace.stages.push_back(std::move(minus));
    return trace;
}

// ---------------------------------------------------------------------------

std::string format_sums(const ClassSumVector& p) {
    std::string out = "(";
    for (std::size_t j = 0; j < p.order(); ++j) {
        if (j) out += ",";
        out += std::to_string(p.sums[j]);
    }
    return out + ")";
}

void render_report(std::ostream& out, const TheoremReport& report, bool list_feasible) {
    out << "long-solution check for x = " << report.modulus << " (cofactor " << report.cofactor << ")\n"
        << "  compositions examined   " << report.examined << "\n"
        << "  feasible for x          " << report.feasible << "\n"
        << "  single class            " << report.single_class << "\n"
        << "  cofactor divisible      " << report.cofactor_divisible << "\n"
        << "  counterexamples         " << report.counterexample_count << "\n"
        << "  result                  " << (report.verified() ? "verified" : "REFUTED") << "\n";
    for (const auto& p : report.counterexamples) {
        out << "  counterexample " << format_sums(p) << "\n";
    }
    if (list_feasible) {
        for (const auto& c : report.feasible_list) {
            out << "  " << format_sums(c.sums) << "  " << to_string(c.kind) << "\n";
        }
    }
}

void render_trace(std::ostream& out, const CaseTrace& trace) {
    out << "case trace for x = " << trace.modulus << "\n";
    for (const auto& stage : trace.stages) {
        out << "  " << stage.equation << "  =>  r = " << stage.family.modulus << "n + (" << stage.family.c
            << ")s\n";
        out << "    parameter range in box:";
        for (auto n : stage.box_range) out << " " << n;
        out << "\n";
        if (!stage.restriction.empty()) {
            out << "    " << stage.restriction << ":";
            for (auto n : stage.allowed) out << " " << n;
            out << "\n";
        }
        for (const auto& b : stage.branches) {
            out << "    " << b.parameter << " = " << b.value << ": ";
            if (b.pairs.size() <= 3) {
                for (const auto& [r, s] : b.pairs) out << "(" << r << "," << s << ") ";
            } else {
                out << b.pairs.size() << " pairs ";
            }
            out << "-> " << b.conclusion << "\n";
        }
    }
}

} // namespace revgcd
