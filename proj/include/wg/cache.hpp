#pragma once

#include "wg/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wg {

/// One cached value. Line format (tab separated):
/// FAMILY  k  class-key  d=5[,dm=1]  p/q
struct CacheRecord {
    Family family = Family::U;
    int k = 0;
    IntegerPartition key;
    long d = 0;
    long dminus = 0;
    ExactRational value;

    std::string to_line() const;
    /// Throws CacheCorruption naming the line number.
    static CacheRecord parse_line(std::string_view line, std::size_t lineno);
    /// Everything except the value.
    std::string identity() const;
};

class CacheCorruption : public std::runtime_error {
public:
    CacheCorruption(const std::string& what, std::size_t line) : std::runtime_error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Records of every level of the table (level = weight of the class key).
std::vector<CacheRecord> records_of(const WgTable& t);

/// Reads all records. A missing file is an empty cache. Throws CacheCorruption on parse
/// failures and on duplicate keys with different values.
std::vector<CacheRecord> cache_load(const std::string& path);

/// Appends records whose keys are not already present; returns how many were written.
std::size_t cache_store(const std::string& path, const std::vector<CacheRecord>& records);

/// Looks up one value in a loaded cache.
std::optional<ExactRational> cache_find(const std::vector<CacheRecord>& records, Family family,
                                        const IntegerPartition& key, long d, long dminus);

struct CacheVerifyReport {
    std::size_t records = 0;
    std::size_t checked = 0;
    /// Line number of the first mismatching record.
    std::optional<std::size_t> bad_line;
    std::string detail;
    bool ok() const { return !bad_line; }
};

/// Loads the cache (parse and conflict checks cover every line) and recomputes a random
/// fraction of the records, at least one when the cache is nonempty.
CacheVerifyReport cache_verify(const std::string& path, double fraction = 0.05, std::uint64_t seed = 0);

} // namespace wg
