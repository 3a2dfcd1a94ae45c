#include "wg/moments.hpp"

#include <charconv>
#include <sstream>

namespace wg {

namespace {

void check_range(const IndexSeq& seq, long d, const char* name) {
    for (int x : seq) {
        if (x < 1 || x > d) {
            throw DomainError(std::string("index ") + std::to_string(x) + " in " + name +
                              " is outside 1.." + std::to_string(d));
        }
    }
}

void check_same_length(const IndexSeq& a, const IndexSeq& b, const char* what) {
    if (a.size() != b.size()) throw DomainError(std::string("length mismatch: ") + what);
}

} // namespace

bool delta_sigma(const Permutation& sigma, const IndexSeq& i, const IndexSeq& iprime) {
    const int k = sigma.level();
    if (static_cast<int>(i.size()) != k || static_cast<int>(iprime.size()) != k) {
        throw DomainError("delta_sigma: sequences must have the permutation's length");
    }
    for (int r = 1; r <= k; ++r) {
        if (i[static_cast<std::size_t>(sigma(r) - 1)] != iprime[static_cast<std::size_t>(r - 1)]) return false;
    }
    return true;
}

bool delta_admissible(const PairPartition& m, const IndexSeq& i) {
    if (static_cast<int>(i.size()) != 2 * m.level()) {
        throw DomainError("admissibility: sequence length must be 2k");
    }
    for (const auto& [a, b] : m.blocks()) {
        if (i[static_cast<std::size_t>(a - 1)] != i[static_cast<std::size_t>(b - 1)]) return false;
    }
    return true;
}

bool strongly_admissible(const PairPartition& m, const IndexSeq& i) {
    if (!delta_admissible(m, i)) return false;
    const int n = static_cast<int>(i.size());
    for (int r = 1; r <= n; ++r) {
        for (int s = r + 1; s <= n; ++s) {
            if (i[static_cast<std::size_t>(r - 1)] == i[static_cast<std::size_t>(s - 1)] && m.partner(r) != s) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Permutation> matching_permutations(const IndexSeq& i, const IndexSeq& iprime) {
    check_same_length(i, iprime, "i and i'");
    const int k = static_cast<int>(i.size());
    std::vector<Permutation> out;
    std::vector<int> images(static_cast<std::size_t>(k));
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    auto rec = [&](auto&& self, int r) -> void {
        if (r == k) {
            out.emplace_back(images);
            return;
        }
        for (int p = 0; p < k; ++p) {
            if (used[static_cast<std::size_t>(p)] || i[static_cast<std::size_t>(p)] != iprime[static_cast<std::size_t>(r)]) continue;
            used[static_cast<std::size_t>(p)] = true;
            images[static_cast<std::size_t>(r)] = p + 1;
            self(self, r + 1);
            used[static_cast<std::size_t>(p)] = false;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<PairPartition> admissible_pairings(const IndexSeq& i) {
    const int n = static_cast<int>(i.size());
    std::vector<PairPartition> out;
    if (n % 2) return out;
    std::vector<int> partner(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self) -> void {
        int r = 0;
        while (r < n && partner[static_cast<std::size_t>(r)]) ++r;
        if (r == n) {
            std::vector<std::pair<int, int>> blocks;
            for (int a = 0; a < n; ++a) {
                if (partner[static_cast<std::size_t>(a)] > a + 1) blocks.emplace_back(a + 1, partner[static_cast<std::size_t>(a)]);
            }
            out.emplace_back(std::move(blocks));
            return;
        }
        for (int s = r + 1; s < n; ++s) {
            if (partner[static_cast<std::size_t>(s)] || i[static_cast<std::size_t>(s)] != i[static_cast<std::size_t>(r)]) continue;
            partner[static_cast<std::size_t>(r)] = s + 1;
            partner[static_cast<std::size_t>(s)] = r + 1;
            self(self);
            partner[static_cast<std::size_t>(r)] = 0;
            partner[static_cast<std::size_t>(s)] = 0;
        }
    };
    rec(rec);
    return out;
}

ExactRational moment_unitary(const IndexSeq& i, const IndexSeq& j, const IndexSeq& iprime,
                             const IndexSeq& jprime, long d, SolveOptions opts) {
    check_same_length(i, j, "rows and cols");
    check_same_length(iprime, jprime, "conjugated rows and cols");
    check_range(i, d, "rows");
    check_range(j, d, "cols");
    check_range(iprime, d, "conjugated rows");
    check_range(jprime, d, "conjugated cols");
    if (i.size() != iprime.size()) return 0;
    const int k = static_cast<int>(i.size());
    const auto sigmas = matching_permutations(i, iprime);
    if (sigmas.empty()) return 0;
    const auto taus = matching_permutations(j, jprime);
    if (taus.empty()) return 0;
    const auto t = table(Family::U, k, d, 0, opts);
    ExactRational total = 0;
    for (const auto& tau : taus) {
        const Permutation tinv = tau.inverse();
        for (const auto& sigma : sigmas) total += t->at(cycle_type(sigma * tinv));
    }
    return total;
}

ExactRational moment_orthogonal(const IndexSeq& i, const IndexSeq& j, long d, SolveOptions opts) {
    check_same_length(i, j, "rows and cols");
    check_range(i, d, "rows");
    check_range(j, d, "cols");
    if (i.size() % 2) return 0;
    const int k = static_cast<int>(i.size()) / 2;
    const auto ms = admissible_pairings(i);
    if (ms.empty()) return 0;
    const auto ns = admissible_pairings(j);
    if (ns.empty()) return 0;
    const auto t = table(Family::O, k, d, 0, opts);
    ExactRational total = 0;
    for (const auto& m : ms) {
        const Permutation sinv = pairing_permutation(m).inverse();
        for (const auto& n : ns) total += t->at(coset_type(act(sinv, n)));
    }
    return total;
}

ExactRational moment_coe(const IndexSeq& i, const IndexSeq& j, long d, SolveOptions opts) {
    check_range(i, d, "rows");
    check_range(j, d, "conjugated rows");
    if (i.size() % 2 || j.size() % 2) throw DomainError("COE index sequences must have even length");
    if (i.size() != j.size()) return 0;
    const int k = static_cast<int>(i.size()) / 2;
    const auto sigmas = matching_permutations(i, j);
    if (sigmas.empty()) return 0;
    const auto t = table(Family::COE, k, d, 0, opts);
    const PairPartition e = PairPartition::trivial(k);
    ExactRational total = 0;
    for (const auto& sigma : sigmas) total += t->at(coset_type(act(sigma, e)));
    return total;
}

ExactRational moment_aiii(const IndexSeq& i, const IndexSeq& j, long d, long dminus, SolveOptions opts) {
    check_same_length(i, j, "rows and cols");
    check_range(i, d, "rows");
    check_range(j, d, "cols");
    const int k = static_cast<int>(i.size());
    const auto sigmas = matching_permutations(i, j);
    if (sigmas.empty()) return 0;
    const auto t = table(Family::AIII, k, d, dminus, opts);
    ExactRational total = 0;
    for (const auto& sigma : sigmas) total += t->at(cycle_type(sigma));
    return total;
}

IndexSeq parse_indices(std::string_view text) {
    IndexSeq out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size() || v < 1) {
            throw DomainError("bad index list '" + std::string(text) + "'");
        }
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

std::string format_indices(const IndexSeq& seq) {
    std::string out;
    for (std::size_t r = 0; r < seq.size(); ++r) {
        if (r) out += ',';
        out += std::to_string(seq[r]);
    }
    return out;
}

MomentSpec MomentSpec::parse(Family family, std::string_view text, long d, long dminus) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t semi = text.find(';', pos);
        parts.push_back(text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos));
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }
    MomentSpec s;
    s.family = family;
    s.d = d;
    s.dminus = dminus;
    switch (family) {
    case Family::U:
        if (parts.size() != 2 && parts.size() != 4) {
            throw DomainError("unitary moment needs 'rows;cols' or 'rows;cols;crows;ccols'");
        }
        s.rows = parse_indices(parts[0]);
        s.cols = parse_indices(parts[1]);
        if (parts.size() == 4) {
            s.crows = parse_indices(parts[2]);
            s.ccols = parse_indices(parts[3]);
        } else {
            s.crows = s.rows;
            s.ccols = s.cols;
        }
        break;
    case Family::O:
    case Family::AIII:
        if (parts.size() != 2) throw DomainError("moment needs 'rows;cols'");
        s.rows = parse_indices(parts[0]);
        s.cols = parse_indices(parts[1]);
        break;
    case Family::COE:
        if (parts.size() != 2) throw DomainError("COE moment needs 'rows;crows'");
        s.rows = parse_indices(parts[0]);
        s.crows = parse_indices(parts[1]);
        break;
    case Family::SP:
        throw DomainError("symplectic moments are not available (Wg^Sp is only known up to sign)");
    }
    return s;
}

std::string MomentSpec::to_string() const {
    std::ostringstream os;
    os << tag(family) << '(' << d;
    if (family == Family::AIII) os << ",dm=" << dminus;
    os << ") ";
    switch (family) {
    case Family::U:
        os << format_indices(rows) << ';' << format_indices(cols) << ';' << format_indices(crows) << ';'
           << format_indices(ccols);
        break;
    case Family::COE: os << format_indices(rows) << ';' << format_indices(crows); break;
    default: os << format_indices(rows) << ';' << format_indices(cols); break;
    }
    return os.str();
}

bool MomentSpec::vanishes_by_symmetry() const {
    switch (family) {
    case Family::U: return rows.size() != crows.size();
    case Family::O: return rows.size() % 2 != 0;
    case Family::COE: return rows.size() != crows.size();
    default: return false;
    }
}

ExactRational exact_moment(const MomentSpec& s, SolveOptions opts) {
    switch (s.family) {
    case Family::U: return moment_unitary(s.rows, s.cols, s.crows, s.ccols, s.d, opts);
    case Family::O: return moment_orthogonal(s.rows, s.cols, s.d, opts);
    case Family::COE: return moment_coe(s.rows, s.crows, s.d, opts);
    case Family::AIII: return moment_aiii(s.rows, s.cols, s.d, s.dminus, opts);
    case Family::SP: break;
    }
    throw DomainError("symplectic moments are not available (Wg^Sp is only known up to sign)");
}

ExactRational unitary_sum_rule(const Permutation& sigma, long d) {
    const int k = sigma.level();
    if (k < 1) throw DomainError("sum rule needs k >= 1");
    IndexSeq rows(static_cast<std::size_t>(k)), cols(static_cast<std::size_t>(k));
    IndexSeq crows(static_cast<std::size_t>(k)), ccols(static_cast<std::size_t>(k));
    for (int r = 1; r <= k; ++r) {
        rows[static_cast<std::size_t>(r - 1)] = r;
        cols[static_cast<std::size_t>(r - 1)] = r;
        crows[static_cast<std::size_t>(r - 1)] = sigma(r);
        ccols[static_cast<std::size_t>(r - 1)] = r;
    }
    ExactRational total = 0;
    for (int c = 1; c <= d; ++c) {
        cols.back() = c;
        ccols.back() = c;
        total += moment_unitary(rows, cols, crows, ccols, d);
    }
    return total;
}

} // namespace wg
