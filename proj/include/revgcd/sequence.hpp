#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revgcd/digits.hpp"
#include "revgcd/search.hpp"

namespace revgcd {

// The n-th positive integer ending in 1, 3, 7 or 9 (n >= 1).
long long coprime_index(long long n);

// Inverse of coprime_index. Throws std::domain_error if gcd(x, 10) != 1.
long long index_of(long long x);

enum class TermStatus { verified, cached_unverified, unknown };

const char* to_string(TermStatus status);
std::optional<TermStatus> parse_term_status(std::string_view text);

struct TermEntry {
    long long n = 0;
    long long x = 0;
    std::optional<DigitString> digits;
    std::optional<BigInt> encoded;  // base-2 reading of digits
    TermStatus status = TermStatus::unknown;
    std::size_t searched_up_to = 0;  // digit cap of the search that came up empty

    friend bool operator==(const TermEntry&, const TermEntry&) = default;
};

// Plain-text term cache, one record per line:
//     n <TAB> x <TAB> digits <TAB> base2value <TAB> status
// Unknown terms carry "-" in the digits and value columns. Records keep the
// status they were saved with; term() re-verifies any cached digit string
// before trusting it.
class TermCache {
public:
    TermCache() = default;

    // Throws std::runtime_error with the line number on a malformed record.
    static TermCache parse(std::string_view text);
    static TermCache load(const std::filesystem::path& path);  // missing file -> empty cache

    std::string serialize() const;
    void save(const std::filesystem::path& path) const;

    const TermEntry* find(long long n) const;
    void store(const TermEntry& entry);
    const std::map<long long, TermEntry>& entries() const noexcept { return entries_; }

private:
    std::map<long long, TermEntry> entries_;
};

// Smallest solution for x = coprime_index(n). A cached digit string is
// re-verified instead of searched for; a fresh result is written back into
// the cache when one is given.
TermEntry term(long long n, const SearchConfig& cfg, TermCache* cache = nullptr);

struct BFileLine {
    std::size_t line = 0;
    long long n = 0;
    BigInt value;
};

struct BFileError {
    std::size_t line = 0;
    std::string message;
};

struct BFileReport {
    std::vector<BFileLine> matches;
    std::vector<std::pair<BFileLine, BigInt>> mismatches;  // with the local value
    std::vector<BFileLine> skipped;                         // no local value
    std::vector<BFileError> errors;

    bool agrees() const noexcept { return mismatches.empty() && errors.empty() && !matches.empty(); }
};

// Parses OEIS b-file text ("n a(n)" per line, '#' comments, blank lines
// ignored) and compares every entry with local(n), when local has a value.
BFileReport crosscheck_bfile(std::string_view text, const std::function<std::optional<BigInt>(long long)>& local);

void render_term(std::ostream& out, const TermEntry& entry);
void render_bfile_report(std::ostream& out, const BFileReport& report);

} // namespace revgcd
