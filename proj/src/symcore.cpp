#include "wg/symcore.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace wg {

namespace {

std::size_t hash_ints(const std::vector<int>& v) {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool is_empty_token(std::string_view s) {
    s = trim(s);
    return s.empty() || s == kEmptySymbol || s == "()" || s == "e0";
}

std::vector<int> parse_int_list(std::string_view text, char sep, std::string_view what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(sep, pos);
        if (next == std::string_view::npos) next = text.size();
        std::string_view tok = trim(text.substr(pos, next - pos));
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw DomainError("malformed " + std::string(what) + " '" + std::string(text) +
                              "': bad entry '" + std::string(tok) + "'");
        }
        out.push_back(value);
        pos = next + 1;
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------- partitions

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw DomainError("integer partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string IntegerPartition::key() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(parts_[i]);
    }
    return out;
}

IntegerPartition IntegerPartition::parse(std::string_view text) {
    text = trim(text);
    if (text == "0" || text.empty()) return IntegerPartition{};
    auto parts = parse_int_list(text, '+', "partition");
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
        throw DomainError("partition '" + std::string(text) + "' is not weakly decreasing");
    }
    return IntegerPartition(std::move(parts));
}

std::vector<IntegerPartition> partitions_of(int n) {
    std::vector<IntegerPartition> out;
    if (n < 0) return out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Reverse lexicographic generation: start at (n), repeatedly split the last part > 1.
    std::vector<int> a{n};
    while (true) {
        out.emplace_back(a);
        int rem = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++rem;
        }
        if (a.empty()) break;
        int x = --a.back();
        ++rem;
        while (rem > x) {
            a.push_back(x);
            rem -= x;
        }
        if (rem > 0) a.push_back(rem);
    }
    return out;
}

// -------------------------------------------------------------- permutations

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int k = level();
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    for (int x : images_) {
        if (x < 1 || x > k || seen[static_cast<std::size_t>(x)]) {
            throw DomainError("not a permutation of 1.." + std::to_string(k));
        }
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int k) {
    std::vector<int> v(static_cast<std::size_t>(k));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(int i, int j, int k) {
    if (i < 1 || j < 1 || i > k || j > k || i == j) {
        throw DomainError("invalid transposition (" + std::to_string(i) + "," +
                          std::to_string(j) + ") in S_" + std::to_string(k));
    }
    auto t = identity(k);
    std::swap(t.images_[static_cast<std::size_t>(i - 1)], t.images_[static_cast<std::size_t>(j - 1)]);
    return t;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return inv;
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (other.level() != level()) throw DomainError("composing permutations of different levels");
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        out.images_[i] = (*this)(other.images_[i]);
    }
    return out;
}

Permutation Permutation::left_transpose(int i, int j) const {
    Permutation out = *this;
    for (int& x : out.images_) {
        if (x == i) {
            x = j;
        } else if (x == j) {
            x = i;
        }
    }
    return out;
}

Permutation Permutation::right_transpose(int i, int j) const {
    Permutation out = *this;
    std::swap(out.images_[static_cast<std::size_t>(i - 1)], out.images_[static_cast<std::size_t>(j - 1)]);
    return out;
}

std::string Permutation::to_string() const {
    if (images_.empty()) return std::string(kEmptySymbol);
    std::string out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(images_[i]);
    }
    return out;
}

Permutation Permutation::parse(std::string_view text) {
    if (is_empty_token(text)) return Permutation{};
    std::string_view t = trim(text);
    if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
    try {
        return Permutation(parse_int_list(t, ',', "permutation"));
    } catch (const DomainError& e) {
        throw DomainError("malformed permutation '" + std::string(text) + "': " + e.what());
    }
}

std::vector<Permutation> permutations_of(int k) {
    std::vector<Permutation> out;
    std::vector<int> v(static_cast<std::size_t>(k));
    std::iota(v.begin(), v.end(), 1);
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

IntegerPartition cycle_type(const Permutation& sigma) {
    const int k = sigma.level();
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    std::vector<int> parts;
    for (int start = 1; start <= k; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        int len = 0;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = sigma(x)) {
            seen[static_cast<std::size_t>(x)] = true;
            ++len;
        }
        parts.push_back(len);
    }
    return IntegerPartition(std::move(parts));
}

int length_stat(const Permutation& sigma) {
    return sigma.level() - cycle_type(sigma).length();
}

Permutation restrict_down(const Permutation& sigma) {
    const int k = sigma.level();
    if (k == 0 || sigma(k) != k) {
        throw DomainError("restrict_down: " + sigma.to_string() + " does not fix its top letter");
    }
    std::vector<int> v(sigma.images().begin(), sigma.images().end() - 1);
    return Permutation(std::move(v));
}

bool top_in_two_cycle(const Permutation& sigma) {
    const int k = sigma.level();
    if (k < 2) return false;
    const int r = sigma(k);
    return r != k && sigma(r) == k;
}

Permutation flat(const Permutation& sigma) {
    if (!top_in_two_cycle(sigma)) {
        throw DomainError("flat: the top letter of " + sigma.to_string() + " is not in a 2-cycle");
    }
    const int k = sigma.level();
    const int r = sigma(k);
    auto relabel = [r](int x) { return x < r ? x : x - 1; };
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(k - 2));
    for (int x = 1; x < k; ++x) {
        if (x == r) continue;
        v.push_back(relabel(sigma(x)));
    }
    return Permutation(std::move(v));
}

Permutation class_representative(const IntegerPartition& mu) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(mu.weight()));
    int offset = 0;
    for (int part : mu.parts()) {
        for (int j = 1; j <= part; ++j) {
            v.push_back(offset + (j == part ? 1 : j + 1));
        }
        offset += part;
    }
    return Permutation(std::move(v));
}

// ----------------------------------------------------------- pair partitions

PairPartition::PairPartition(std::vector<std::pair<int, int>> blocks) : blocks_(std::move(blocks)) {
    const int n = 2 * level();
    partner_.assign(static_cast<std::size_t>(n), 0);
    for (auto& [a, b] : blocks_) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > n || a == b || partner_[static_cast<std::size_t>(a - 1)] != 0 ||
            partner_[static_cast<std::size_t>(b - 1)] != 0) {
            throw DomainError("blocks do not form a pair partition of 1.." + std::to_string(n));
        }
        partner_[static_cast<std::size_t>(a - 1)] = b;
        partner_[static_cast<std::size_t>(b - 1)] = a;
    }
    std::sort(blocks_.begin(), blocks_.end());
}

PairPartition PairPartition::trivial(int k) {
    std::vector<std::pair<int, int>> b;
    for (int j = 1; j <= k; ++j) b.emplace_back(2 * j - 1, 2 * j);
    return PairPartition(std::move(b));
}

bool PairPartition::contains_block(int a, int b) const {
    const int n = 2 * level();
    if (a < 1 || a > n || b < 1 || b > n) return false;
    return partner(a) == b;
}

std::string PairPartition::to_string() const {
    if (blocks_.empty()) return std::string(kEmptySymbol);
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += '|';
        out += std::to_string(blocks_[i].first) + ',' + std::to_string(blocks_[i].second);
    }
    return out;
}

PairPartition PairPartition::parse(std::string_view text) {
    if (is_empty_token(text)) return PairPartition{};
    std::vector<std::pair<int, int>> blocks;
    std::string_view t = trim(text);
    std::size_t pos = 0;
    try {
        while (pos <= t.size()) {
            std::size_t next = t.find('|', pos);
            if (next == std::string_view::npos) next = t.size();
            auto pair = parse_int_list(t.substr(pos, next - pos), ',', "pair");
            if (pair.size() != 2) throw DomainError("each block needs exactly two entries");
            blocks.emplace_back(pair[0], pair[1]);
            pos = next + 1;
        }
        return PairPartition(std::move(blocks));
    } catch (const DomainError& e) {
        throw DomainError("malformed pairing '" + std::string(text) + "': " + e.what());
    }
}

std::vector<PairPartition> pair_partitions_of(int k) {
    std::vector<PairPartition> out;
    const int n = 2 * k;
    std::vector<int> partner(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> blocks;
    std::function<void()> rec = [&]() {
        int first = 1;
        while (first <= n && partner[static_cast<std::size_t>(first)] != 0) ++first;
        if (first > n) {
            out.emplace_back(blocks);
            return;
        }
        for (int second = first + 1; second <= n; ++second) {
            if (partner[static_cast<std::size_t>(second)] != 0) continue;
            partner[static_cast<std::size_t>(first)] = second;
            partner[static_cast<std::size_t>(second)] = first;
            blocks.emplace_back(first, second);
            rec();
            blocks.pop_back();
            partner[static_cast<std::size_t>(first)] = 0;
            partner[static_cast<std::size_t>(second)] = 0;
        }
    };
    rec();
    return out;
}

PairPartition act(const Permutation& zeta, const PairPartition& m) {
    if (zeta.level() != 2 * m.level()) {
        throw DomainError("act: permutation level " + std::to_string(zeta.level()) +
                          " does not match pairing of " + std::to_string(2 * m.level()) + " points");
    }
    std::vector<std::pair<int, int>> b;
    b.reserve(m.blocks().size());
    for (auto [x, y] : m.blocks()) b.emplace_back(zeta(x), zeta(y));
    return PairPartition(std::move(b));
}

IntegerPartition relative_coset_type(const PairPartition& m, const PairPartition& n) {
    if (m.level() != n.level()) throw DomainError("coset type of pairings with different levels");
    const int pts = 2 * m.level();
    std::vector<bool> seen(static_cast<std::size_t>(pts) + 1, false);
    std::vector<int> parts;
    for (int start = 1; start <= pts; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        // Alternate m-edges and n-edges until the cycle closes.
        int len = 0;
        int x = start;
        bool use_m = true;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            ++len;
            x = use_m ? m.partner(x) : n.partner(x);
            use_m = !use_m;
        }
        parts.push_back(len / 2);
    }
    return IntegerPartition(std::move(parts));
}

IntegerPartition coset_type(const PairPartition& m) {
    return relative_coset_type(m, PairPartition::trivial(m.level()));
}

int length_stat(const PairPartition& m) {
    return m.level() - coset_type(m).length();
}

PairPartition pairing_down(const PairPartition& m) {
    const int k = m.level();
    if (k == 0 || !m.contains_block(2 * k - 1, 2 * k)) {
        throw DomainError("pairing_down: " + m.to_string() + " has no top block {2k-1,2k}");
    }
    std::vector<std::pair<int, int>> b(m.blocks().begin(), m.blocks().end());
    std::erase(b, std::pair<int, int>{2 * k - 1, 2 * k});
    return PairPartition(std::move(b));
}

PairPartition coset_representative(const IntegerPartition& mu) {
    std::vector<std::pair<int, int>> b;
    int o = 0;
    for (int part : mu.parts()) {
        if (part == 1) {
            b.emplace_back(o + 1, o + 2);
        } else {
            b.emplace_back(o + 1, o + 2 * part);
            for (int j = 2; j < 2 * part; j += 2) b.emplace_back(o + j, o + j + 1);
        }
        o += 2 * part;
    }
    return PairPartition(std::move(b));
}

std::vector<int> strong_admissible_sequence(const PairPartition& m) {
    const int n = 2 * m.level();
    std::vector<int> seq(static_cast<std::size_t>(n), 0);
    int label = 0;
    for (int r = 1; r <= n; ++r) {
        if (seq[static_cast<std::size_t>(r - 1)] != 0) continue;
        ++label;
        seq[static_cast<std::size_t>(r - 1)] = label;
        seq[static_cast<std::size_t>(m.partner(r) - 1)] = label;
    }
    return seq;
}

Permutation pairing_permutation(const PairPartition& m) {
    std::vector<int> v;
    v.reserve(2 * m.blocks().size());
    for (auto [a, b] : m.blocks()) {
        v.push_back(a);
        v.push_back(b);
    }
    return Permutation(std::move(v));
}

} // namespace wg

std::size_t std::hash<wg::Permutation>::operator()(const wg::Permutation& p) const noexcept {
    return wg::hash_ints(p.images());
}
std::size_t std::hash<wg::PairPartition>::operator()(const wg::PairPartition& m) const noexcept {
    return wg::hash_ints(m.partner_array());
}
std::size_t std::hash<wg::IntegerPartition>::operator()(const wg::IntegerPartition& mu) const noexcept {
    return wg::hash_ints(mu.parts());
}
