#include "wg/cache.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <random>

namespace wg {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

template <class Int>
bool parse_int(std::string_view s, Int& v) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return !s.empty() && ec == std::errc() && p == s.data() + s.size();
}

// Canonical element at which to recompute a record.
GraphNode representative(Family family, const IntegerPartition& mu) {
    if (labels_are_permutations(family)) return class_representative(mu);
    return coset_representative(mu);
}

} // namespace

std::string CacheRecord::identity() const {
    std::string s = std::string(tag(family)) + '\t' + std::to_string(k) + '\t' + key.key() + "\td=" +
                    std::to_string(d);
    if (family == Family::AIII) s += ",dm=" + std::to_string(dminus);
    return s;
}

std::string CacheRecord::to_line() const { return identity() + '\t' + to_string(value); }

CacheRecord CacheRecord::parse_line(std::string_view line, std::size_t lineno) {
    auto fail = [&](const std::string& why) -> CacheCorruption {
        return CacheCorruption("cache line " + std::to_string(lineno) + ": " + why, lineno);
    };
    const auto f = split(line, '\t');
    if (f.size() != 5) throw fail("expected 5 tab-separated fields, got " + std::to_string(f.size()));
    CacheRecord r;
    try {
        r.family = parse_family(f[0]);
        if (f[0] != tag(r.family)) throw DomainError("non-canonical family tag");
        r.key = IntegerPartition::parse(f[2]);
        if (r.key.key() != f[2]) throw DomainError("non-canonical class key");
        r.value = parse_rational(f[4]);
    } catch (const std::exception& e) {
        throw fail(e.what());
    }
    if (!parse_int(f[1], r.k) || r.k < 0 || r.k != r.key.weight()) throw fail("bad level '" + std::string(f[1]) + "'");
    const auto dims = split(f[3], ',');
    if (dims.empty() || dims[0].substr(0, 2) != "d=" || !parse_int(dims[0].substr(2), r.d)) {
        throw fail("bad dimension field '" + std::string(f[3]) + "'");
    }
    if (r.family == Family::AIII) {
        if (dims.size() != 2 || dims[1].substr(0, 3) != "dm=" || !parse_int(dims[1].substr(3), r.dminus)) {
            throw fail("A III record needs 'd=..,dm=..'");
        }
    } else if (dims.size() != 1) {
        throw fail("unexpected dimension arguments '" + std::string(f[3]) + "'");
    }
    if (r.to_line() != line) throw fail("record is not in canonical form");
    return r;
}

std::vector<CacheRecord> records_of(const WgTable& t) {
    std::vector<CacheRecord> out;
    for (const auto& lvl : t.levels) {
        for (const auto& [mu, v] : lvl) {
            out.push_back({t.family, mu.weight(), mu, t.d, t.family == Family::AIII ? t.dminus : 0, v});
        }
    }
    return out;
}

std::vector<CacheRecord> cache_load(const std::string& path) {
    std::vector<CacheRecord> out;
    std::ifstream in(path);
    if (!in) return out;
    std::map<std::string, std::pair<ExactRational, std::size_t>> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        CacheRecord r = CacheRecord::parse_line(line, lineno);
        auto [it, fresh] = seen.try_emplace(r.identity(), r.value, lineno);
        if (!fresh && it->second.first != r.value) {
            throw CacheCorruption("cache line " + std::to_string(lineno) + ": value conflicts with line " +
                                      std::to_string(it->second.second),
                                  lineno);
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::size_t cache_store(const std::string& path, const std::vector<CacheRecord>& records) {
    const auto existing = cache_load(path);
    std::map<std::string, ExactRational> have;
    for (const auto& r : existing) have.emplace(r.identity(), r.value);
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file '" + path + "' for appending");
    std::size_t written = 0;
    for (const auto& r : records) {
        auto [it, fresh] = have.try_emplace(r.identity(), r.value);
        if (!fresh) {
            if (it->second != r.value) {
                throw CacheCorruption("cache already holds a different value for " + r.identity(), 0);
            }
            continue;
        }
        out << r.to_line() << '\n';
        ++written;
    }
    if (!out) throw std::runtime_error("write to cache file '" + path + "' failed");
    return written;
}

std::optional<ExactRational> cache_find(const std::vector<CacheRecord>& records, Family family,
                                        const IntegerPartition& key, long d, long dminus) {
    if (family != Family::AIII) dminus = 0;
    for (const auto& r : records) {
        if (r.family == family && r.key == key && r.d == d && r.dminus == dminus) return r.value;
    }
    return std::nullopt;
}

CacheVerifyReport cache_verify(const std::string& path, double fraction, std::uint64_t seed) {
    CacheVerifyReport rep;
    const auto records = cache_load(path);
    rep.records = records.size();
    if (records.empty()) return rep;
    std::size_t want = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(records.size())));
    want = std::clamp<std::size_t>(want, 1, records.size());
    std::vector<std::size_t> idx(records.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(want);
    std::sort(idx.begin(), idx.end());
    // Line numbers: records are stored in file order, blank lines excluded.
    std::vector<std::size_t> line_of;
    {
        std::ifstream in(path);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty()) line_of.push_back(lineno);
        }
    }
    for (std::size_t i : idx) {
        const CacheRecord& r = records[i];
        ExactRational expect;
        try {
            expect = wg_value(r.family, representative(r.family, r.key), r.d, r.dminus, SolveOptions{true});
        } catch (const std::exception& e) {
            rep.bad_line = line_of[i];
            rep.detail = "cache line " + std::to_string(line_of[i]) + ": recomputation failed: " + e.what();
            return rep;
        }
        ++rep.checked;
        if (expect != r.value) {
            rep.bad_line = line_of[i];
            rep.detail = "cache line " + std::to_string(line_of[i]) + ": stored " + to_string(r.value) +
                         " but recomputed " + to_string(expect);
            return rep;
        }
    }
    return rep;
}

} // namespace wg
