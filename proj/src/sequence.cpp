#include "revgcd/sequence.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace revgcd {

namespace {

constexpr std::array<long long, 4> kEndings{1, 3, 7, 9};

std::vector<std::string_view> split_fields(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto end = line.find(sep, start);
        out.push_back(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
        if (end == std::string_view::npos) return out;
        start = end + 1;
    }
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::optional<long long> parse_integer(std::string_view s) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

bool all_digits(std::string_view s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        f(++line_no, text.substr(start, end - start));
        start = end + 1;
    }
}

} // namespace

long long coprime_index(long long n) {
    if (n < 1) throw std::domain_error("sequence index starts at 1");
    return 10 * ((n - 1) / 4) + kEndings[static_cast<std::size_t>((n - 1) % 4)];
}

long long index_of(long long x) {
    if (x < 1 || std::gcd(x, 10LL) != 1) {
        throw std::domain_error(std::to_string(x) + " is not a positive integer coprime to 10");
    }
    const long long ending = x % 10;
    long long slot = 0;
    while (kEndings[static_cast<std::size_t>(slot)] != ending) ++slot;
    return 4 * (x / 10) + slot + 1;
}

const char* to_string(TermStatus status) {
    switch (status) {
    case TermStatus::verified: return "verified";
    case TermStatus::cached_unverified: return "cached-unverified";
    case TermStatus::unknown: return "unknown";
    }
    return "?";
}

std::optional<TermStatus> parse_term_status(std::string_view text) {
    if (text == "verified") return TermStatus::verified;
    if (text == "cached-unverified") return TermStatus::cached_unverified;
    if (text == "unknown") return TermStatus::unknown;
    return std::nullopt;
}

// ---------------------------------------------------------------------------

TermCache TermCache::parse(std::string_view text) {
    TermCache cache;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) return;
        auto fail = [&](const std::string& why) {
            throw std::runtime_error("term cache line " + std::to_string(line_no) + ": " + why);
        };
        const auto fields = split_fields(line, '\t');
        if (fields.size() != 5) fail("expected 5 tab-separated fields");
        const auto n = parse_integer(fields[0]);
        const auto x = parse_integer(fields[1]);
        const auto status = parse_term_status(fields[4]);
        if (!n || !x || !status) fail("bad index, modulus or status");
        if (*n < 1 || coprime_index(*n) != *x) fail("modulus does not match index");

        TermEntry e;
        e.n = *n;
        e.x = *x;
        e.status = *status;
        if (*status == TermStatus::unknown) {
            if (fields[2] != "-" || fields[3] != "-") fail("unknown term with a value");
        } else {
            if (!all_digits(fields[2]) || !all_digits(fields[3])) fail("bad digit string or value");
            try {
                e.digits = DigitString::parse(fields[2]);
                e.encoded = base2_value(*e.digits);
            } catch (const std::invalid_argument& ex) {
                fail(ex.what());
            }
            if (e.encoded->str() != fields[3]) fail("base-2 value does not match the digit string");
        }
        cache.entries_[e.n] = std::move(e);
    });
    return cache;
}

TermCache TermCache::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return {};
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string TermCache::serialize() const {
    std::string out;
    for (const auto& [n, e] : entries_) {
        out += std::to_string(e.n) + '\t' + std::to_string(e.x) + '\t';
        if (e.digits && e.encoded) {
            out += e.digits->str() + '\t' + e.encoded->str() + '\t';
        } else {
            out += "-\t-\t";
        }
        out += to_string(e.status);
        out += '\n';
    }
    return out;
}

void TermCache::save(const std::filesystem::path& path) const {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write term cache " + path.string());
    out << serialize();
}

const TermEntry* TermCache::find(long long n) const {
    const auto it = entries_.find(n);
    return it == entries_.end() ? nullptr : &it->second;
}

void TermCache::store(const TermEntry& entry) {
    entries_[entry.n] = entry;
}

// ---------------------------------------------------------------------------

TermEntry term(long long n, const SearchConfig& cfg, TermCache* cache) {
    TermEntry e;
    e.n = n;
    e.x = coprime_index(n);

    if (cache) {
        if (const auto* hit = cache->find(n); hit && hit->digits) {
            if (std::holds_alternative<SolutionRecord>(verify_solution(*hit->digits, e.x))) {
                e.digits = hit->digits;
                e.encoded = base2_value(*e.digits);
                e.status = TermStatus::verified;
                return e;
            }
            // A cached string that fails verification is discarded and recomputed.
        }
    }

    const auto outcome = find_smallest(e.x, cfg);
    if (outcome.solution) {
        // Re-checked independently of the search path.
        const auto verdict = verify_solution(outcome.solution->digits, e.x);
        if (std::holds_alternative<SolutionRecord>(verdict)) {
            e.digits = outcome.solution->digits;
            e.encoded = base2_value(*e.digits);
            e.status = TermStatus::verified;
        }
    }
    if (e.status == TermStatus::unknown) {
        e.searched_up_to = cfg.max_digits;
    }
    if (cache) {
        TermEntry stored = e;
        stored.searched_up_to = 0;  // not part of the cache format
        cache->store(stored);
    }
    return e;
}

// ---------------------------------------------------------------------------

BFileReport crosscheck_bfile(std::string_view text, const std::function<std::optional<BigInt>(long long)>& local) {
    BFileReport report;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        const auto fields = split_whitespace(line);
        if (fields.empty() || fields.front().front() == '#') return;
        if (fields.size() != 2 || !all_digits(fields[0]) || !all_digits(fields[1])) {
            report.errors.push_back({line_no, "expected \"n a(n)\", got '" + std::string(line) + "'"});
            return;
        }
        const auto n = parse_integer(fields[0]);
        if (!n || *n < 1) {
            report.errors.push_back({line_no, "bad index '" + std::string(fields[0]) + "'"});
            return;
        }
        // strip leading zeros first, cpp_int would read them as octal
        auto digits = fields[1].substr(std::min(fields[1].find_first_not_of('0'), fields[1].size() - 1));
        BFileLine entry{line_no, *n, BigInt(std::string(digits).c_str())};
        const auto mine = local(*n);
        if (!mine) {
            report.skipped.push_back(std::move(entry));
        } else if (*mine == entry.value) {
            report.matches.push_back(std::move(entry));
        } else {
            report.mismatches.emplace_back(std::move(entry), *mine);
        }
    });
    return report;
}

void render_term(std::ostream& out, const TermEntry& e) {
    out << "n          " << e.n << "\n"
        << "x          " << e.x << "\n"
        << "digits     " << (e.digits ? e.digits->str() : std::string("-")) << "\n"
        << "base2      " << (e.encoded ? e.encoded->str() : std::string("-")) << "\n"
        << "status     " << to_string(e.status) << "\n";
    if (e.status == TermStatus::unknown && e.searched_up_to) {
        out << "searched   up to " << e.searched_up_to << " digits\n";
    }
}

void render_bfile_report(std::ostream& out, const BFileReport& r) {
    for (const auto& m : r.matches) out << "match     n=" << m.n << " " << m.value << "\n";
    for (const auto& [m, mine] : r.mismatches) {
        out << "MISMATCH  n=" << m.n << " b-file " << m.value << " local " << mine << " (line " << m.line << ")\n";
    }
    for (const auto& s : r.skipped) out << "skipped   n=" << s.n << " (no local value)\n";
    for (const auto& e : r.errors) out << "error     line " << e.line << ": " << e.message << "\n";
    out << r.matches.size() << " match, " << r.mismatches.size() << " mismatch, " << r.skipped.size()
        << " skipped, " << r.errors.size() << " errors\n";
}

} // namespace revgcd
