#include "wg/bounds.hpp"

#include <algorithm>

namespace wg {

BigInt catalan(int n) {
    if (n < 0) throw DomainError("catalan: negative index");
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), 2UL * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    return c / (n + 1);
}

BigInt catalan_product(const IntegerPartition& mu) {
    BigInt p = 1;
    for (int part : mu.parts()) p *= catalan(part - 1);
    return p;
}

BigInt moebius(const Permutation& sigma) {
    BigInt c = catalan_product(cycle_type(sigma));
    return length_stat(sigma) % 2 ? BigInt(-c) : c;
}

BigInt shortest_count(GraphKind kind, const GraphNode& node) {
    if (kind == GraphKind::AIII) throw DomainError("shortest_count: unitary or orthogonal graphs only");
    return catalan_product(node.class_key());
}

void BoundReport::add(BoundInstance inst) {
    lower_ok = lower_ok && inst.lower_ok;
    upper_ok = upper_ok && inst.upper_ok;
    const std::size_t idx = instances.size();
    if (inst.lower_ratio &&
        (!tightest_lower || *inst.lower_ratio < *instances[*tightest_lower].lower_ratio)) {
        tightest_lower = idx;
    }
    if (inst.upper_ratio_sq &&
        (!tightest_upper || *inst.upper_ratio_sq > *instances[*tightest_upper].upper_ratio_sq)) {
        tightest_upper = idx;
    }
    instances.push_back(std::move(inst));
}

namespace {

BigInt ipow_z(long base, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::labs(base)), e);
    return (base < 0 && (e % 2)) ? BigInt(-r) : r;
}

BigInt k7(int k) { return ipow_z(k, 7); }

// value >= lower; stores value/lower when lower > 0.
void set_lower(BoundInstance& inst, const ExactRational& value, const ExactRational& lower) {
    inst.lower_ok = lower <= value;
    if (lower > 0) inst.lower_ratio = ExactRational(value / lower);
}

// lhs_sq <= rhs_sq, with ratio lhs_sq / rhs_sq.
void set_upper_sq(BoundInstance& inst, const ExactRational& lhs_sq, const ExactRational& rhs_sq) {
    inst.upper_ok = lhs_sq <= rhs_sq;
    inst.upper_ratio_sq = rhs_sq > 0 ? ExactRational(lhs_sq / rhs_sq) : ExactRational(lhs_sq == 0 ? 0 : 1);
    if (rhs_sq == 0 && lhs_sq == 0) inst.upper_ratio_sq = ExactRational(0);
}

long least_d_with_power_above(unsigned power, const BigInt& bound) {
    long d = 1;
    while (ipow_z(d, power) <= bound) ++d;
    return d;
}

} // namespace

long unitary_ratio_threshold(int k) { return least_d_with_power_above(4, 36 * k7(k)); }
long sp_ratio_threshold(int k) { return least_d_with_power_above(2, 36 * k7(k)); }
long orthogonal_ratio_threshold(int k) { return least_d_with_power_above(2, 144 * k7(k)); }

BoundReport certify_unitary_bounds(int k, int gmax) {
    if (k < 1) throw DomainError("certify_unitary_bounds: k >= 1");
    BoundReport rep;
    rep.family = "U";
    rep.statement = "(k-1)^g #P(s,|s|) <= #P(s,|s|+2g) <= (6k^{7/2})^g #P(s,|s|)";
    rep.k = k;
    rep.gmax = gmax;
    for (const auto& mu : partitions_of(k)) {
        const Permutation s = class_representative(mu);
        const int len = length_stat(s);
        const BigInt a = count_paths(GraphKind::Unitary, s, len);
        for (int g = 0; g <= gmax; ++g) {
            const BigInt c = count_paths(GraphKind::Unitary, s, len + 2 * g);
            BoundInstance inst;
            inst.class_key = mu.key();
            inst.g = g;
            inst.value = c;
            set_lower(inst, c, ipow_z(k - 1, static_cast<unsigned long>(g)) * a);
            set_upper_sq(inst, BigInt(c * c),
                         ipow_z(36, static_cast<unsigned long>(g)) * ipow_z(k, 7UL * g) * a * a);
            rep.add(std::move(inst));
        }
    }
    return rep;
}

BoundReport certify_wg_ratio_unitary(int k, long d) {
    if (k < 1) throw DomainError("certify_wg_ratio_unitary: k >= 1");
    if (d < k) throw DomainError("certify_wg_ratio_unitary: needs d >= k");
    BoundReport rep;
    rep.family = "U";
    rep.statement = "d^2/(d^2-k+1) <= (-1)^{|s|} d^{k+|s|} Wg/#P(s,|s|) <= 1/(1-6k^{7/2}/d^2)";
    rep.k = k;
    const bool upper_applies = ipow_z(d, 4) > 36 * k7(k);
    const auto t = table(Family::U, k, d);
    for (const auto& mu : partitions_of(k)) {
        const Permutation s = class_representative(mu);
        const int len = length_stat(s);
        const BigInt a = count_paths(GraphKind::Unitary, s, len);
        ExactRational r = t->at(mu) * ipow_z(d, static_cast<unsigned long>(k + len)) / a;
        if (len % 2) r = -r;
        BoundInstance inst;
        inst.class_key = mu.key();
        inst.d = d;
        inst.value = r;
        set_lower(inst, r, ratio(BigInt(d * d), BigInt(d * d - k + 1)));
        if (upper_applies) {
            // r <= 1/(1 - 6k^{7/2}/d^2)  <=>  (r - 1) d^2 <= 6 k^{7/2} r.
            const ExactRational excess = (r - 1) * (d * d);
            if (excess <= 0) {
                inst.upper_ratio_sq = ExactRational(0);
            } else {
                set_upper_sq(inst, ExactRational(excess * excess), ExactRational(36 * k7(k) * r * r));
            }
        }
        rep.add(std::move(inst));
    }
    return rep;
}

BoundReport certify_orthogonal_bounds(int k, int gmax) {
    if (k < 1) throw DomainError("certify_orthogonal_bounds: k >= 1");
    BoundReport rep;
    rep.family = "O";
    rep.statement = "(2k-2)^g #P(m,|m|) <= #P(m,|m|+2g); #P(m,|m|+g) <= (12k^{7/2})^g #P(m,|m|)";
    rep.k = k;
    rep.gmax = gmax;
    for (const auto& mu : partitions_of(k)) {
        const PairPartition m = coset_representative(mu);
        const int len = length_stat(m);
        const BigInt a = count_paths(GraphKind::Orthogonal, m, len);
        for (int g = 0; g <= gmax; ++g) {
            const BigInt even = count_paths(GraphKind::Orthogonal, m, len + 2 * g);
            const BigInt plus = count_paths(GraphKind::Orthogonal, m, len + g);
            BoundInstance inst;
            inst.class_key = mu.key();
            inst.g = g;
            inst.value = plus;
            set_lower(inst, even, ipow_z(2 * k - 2, static_cast<unsigned long>(g)) * a);
            set_upper_sq(inst, BigInt(plus * plus),
                         ipow_z(144, static_cast<unsigned long>(g)) * ipow_z(k, 7UL * g) * a * a);
            rep.add(std::move(inst));
        }
    }
    return rep;
}

BoundReport certify_sp_ratio(int k, long d) {
    if (k < 1) throw DomainError("certify_sp_ratio: k >= 1");
    if (!(ipow_z(d, 2) > 36 * k7(k))) {
        throw DomainError("certify_sp_ratio: needs d > 6k^{7/2} (d >= " +
                          std::to_string(sp_ratio_threshold(k)) + ")");
    }
    BoundReport rep;
    rep.family = "SP";
    rep.statement = "#P/(1-(k-1)/(2d^2)) <= (2d)^{|m|+k}|Wg^Sp(m,d)| <= #P/(1-6k^{7/2}/d)";
    rep.k = k;
    const auto t = table(Family::SP, k, d);
    for (const auto& mu : partitions_of(k)) {
        const PairPartition m = coset_representative(mu);
        const int len = length_stat(m);
        const BigInt a = count_paths(GraphKind::Orthogonal, m, len);
        const ExactRational x = t->at(mu) * ipow_z(2 * d, static_cast<unsigned long>(len + k));
        BoundInstance inst;
        inst.class_key = mu.key();
        inst.d = d;
        inst.value = x;
        set_lower(inst, x, ratio(BigInt(a * 2 * d * d), BigInt(2 * d * d - k + 1)));
        // x <= a/(1 - 6k^{7/2}/d)  <=>  d (x - a) <= 6 k^{7/2} x.
        const ExactRational excess = (x - a) * d;
        if (excess <= 0) {
            inst.upper_ratio_sq = ExactRational(0);
        } else {
            set_upper_sq(inst, ExactRational(excess * excess), ExactRational(36 * k7(k) * x * x));
        }
        rep.add(std::move(inst));
    }
    return rep;
}

BoundReport certify_orthogonal_ratio(int k, long d) {
    if (k < 1) throw DomainError("certify_orthogonal_ratio: k >= 1");
    const BigInt c2 = 144 * k7(k);
    if (!(ipow_z(d, 2) > c2)) {
        throw DomainError("certify_orthogonal_ratio: needs d > 12k^{7/2} (d >= " +
                          std::to_string(orthogonal_ratio_threshold(k)) + ")");
    }
    BoundReport rep;
    rep.family = "O";
    rep.statement = "#P(1-24k^{7/2}/d)/(1-144k^7/d^2) <= (-1)^{|m|} d^{|m|+k} Wg^O <= #P/(1-144k^7/d^2)";
    rep.k = k;
    const auto t = table(Family::O, k, d);
    const ExactRational shrink = 1 - ratio(c2, BigInt(d * d));
    for (const auto& mu : partitions_of(k)) {
        const PairPartition m = coset_representative(mu);
        const int len = length_stat(m);
        const BigInt a = count_paths(GraphKind::Orthogonal, m, len);
        ExactRational y = t->at(mu) * ipow_z(d, static_cast<unsigned long>(len + k));
        if (len % 2) y = -y;
        BoundInstance inst;
        inst.class_key = mu.key();
        inst.d = d;
        inst.value = y;
        // Upper: y * shrink <= a.
        const ExactRational z = y * shrink;
        inst.upper_ok = z <= a;
        inst.upper_ratio_sq = ExactRational((z / a) * (z / a));
        // Lower: a (1 - 24k^{7/2}/d) <= z  <=>  d (a - z) <= 24 k^{7/2} a.
        const ExactRational gap = (a - z) * d;
        if (gap <= 0) {
            inst.lower_ok = true;
            inst.lower_ratio = std::nullopt;
        } else {
            const ExactRational lhs = gap * gap;
            const ExactRational rhs = 576 * k7(k) * a * a;
            inst.lower_ok = lhs <= rhs;
            inst.lower_ratio = ExactRational(rhs / lhs);
        }
        rep.add(std::move(inst));
    }
    return rep;
}

BoundReport certify_neighborhood(int k) {
    if (k < 1) throw DomainError("certify_neighborhood: k >= 1");
    BoundReport rep;
    rep.family = "U";
    rep.statement = "#P(ts,|ts|) <= 6k^{3/2} #P(s,|s|)";
    rep.k = k;
    const BigInt c = 36 * ipow_z(k, 3);
    std::map<IntegerPartition, BigInt> shortest;
    auto count_of = [&](const Permutation& s) -> const BigInt& {
        const IntegerPartition mu = cycle_type(s);
        auto it = shortest.find(mu);
        if (it == shortest.end()) it = shortest.emplace(mu, count_paths(GraphKind::Unitary, s, length_stat(s))).first;
        return it->second;
    };
    // Track the worst instance per (class of s, class of ts) to keep the report compact.
    std::map<std::pair<IntegerPartition, IntegerPartition>, BoundInstance> worst;
    for (const auto& s : permutations_of(k)) {
        const BigInt& a = count_of(s);
        for (int i = 1; i <= k; ++i) {
            for (int j = i + 1; j <= k; ++j) {
                const Permutation ts = s.left_transpose(i, j);
                const BigInt& b = count_of(ts);
                BoundInstance inst;
                inst.class_key = cycle_type(s).key() + " -> " + cycle_type(ts).key();
                inst.value = ratio(b, a);
                set_upper_sq(inst, BigInt(b * b), c * a * a);
                auto key = std::make_pair(cycle_type(s), cycle_type(ts));
                auto it = worst.find(key);
                if (it == worst.end()) {
                    worst.emplace(key, std::move(inst));
                } else if (!inst.upper_ok || *inst.upper_ratio_sq > *it->second.upper_ratio_sq) {
                    it->second = std::move(inst);
                }
            }
        }
    }
    for (auto& [key, inst] : worst) rep.add(std::move(inst));
    return rep;
}

BoundReport certify_injection(int k, int extra) {
    if (k < 1) throw DomainError("certify_injection: k >= 1");
    BoundReport rep;
    rep.family = "U";
    rep.statement = "(k-1) #P(s,l) <= #P(s,l+2)";
    rep.k = k;
    rep.gmax = extra;
    for (const auto& mu : partitions_of(k)) {
        const Permutation s = class_representative(mu);
        const int len = length_stat(s);
        for (int l = len; l <= len + extra; ++l) {
            const BigInt lo = count_paths(GraphKind::Unitary, s, l);
            const BigInt hi = count_paths(GraphKind::Unitary, s, l + 2);
            BoundInstance inst;
            inst.class_key = mu.key();
            inst.g = l - len;
            inst.value = hi;
            set_lower(inst, hi, BigInt((k - 1) * lo));
            rep.add(std::move(inst));
        }
    }
    return rep;
}

std::vector<std::vector<int>> dyck_paths(const std::vector<int>& I) {
    std::vector<int> checkpoints;
    int total = 0;
    for (int part : I) {
        if (part < 0) throw DomainError("dyck_paths: negative part");
        total += part;
        checkpoints.push_back(total);
    }
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    auto rec = [&](auto&& self, int step, int height, std::size_t next_cp) -> void {
        while (next_cp < checkpoints.size() && checkpoints[next_cp] == step) {
            if (height != 0) return;
            ++next_cp;
        }
        if (step == total) {
            out.push_back(path);
            return;
        }
        if (height > total - step) return;
        for (int dir : {+1, -1}) {
            if (height + dir < 0) continue;
            path.push_back(dir);
            self(self, step + 1, height + dir, next_cp);
            path.pop_back();
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

int dyck_area(const std::vector<int>& path) {
    int h = 0, area = 0;
    for (int step : path) {
        h += step;
        area += h;
    }
    return area;
}

BigInt dyck_area_sum(const IntegerPartition& mu) {
    std::vector<int> I;
    for (int part : mu.parts()) I.push_back(part - 1);
    BigInt sum = 0;
    for (const auto& p : dyck_paths(I)) sum += dyck_area(p);
    return sum;
}

BigInt dyck_area_sum_doubled(const IntegerPartition& mu) {
    std::vector<int> I;
    for (int part : mu.parts()) I.push_back(2 * (part - 1));
    BigInt sum = 0;
    for (const auto& p : dyck_paths(I)) sum += dyck_area(p);
    return sum;
}

DyckComparison compare_dyck_area(const IntegerPartition& mu) {
    const PairPartition m = coset_representative(mu);
    return {mu, dyck_area_sum(mu), count_paths(GraphKind::Orthogonal, m, length_stat(m) + 1),
            dyck_area_sum_doubled(mu)};
}

} // namespace wg
