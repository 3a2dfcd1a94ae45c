#include "wg/graphs.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace wg {

std::string_view to_string(GraphKind kind) {
    switch (kind) {
    case GraphKind::Unitary: return "U";
    case GraphKind::Orthogonal: return "O";
    case GraphKind::AIII: return "AIII";
    }
    return "?";
}

GraphKind parse_graph_kind(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "u" || s == "unitary") return GraphKind::Unitary;
    if (s == "o" || s == "orthogonal") return GraphKind::Orthogonal;
    if (s == "aiii" || s == "a3") return GraphKind::AIII;
    throw DomainError("unknown graph family '" + std::string(text) + "'");
}

// ------------------------------------------------------------------ GraphNode

int GraphNode::level() const {
    return std::visit([](const auto& e) { return e.level(); }, element);
}

const Permutation& GraphNode::permutation() const {
    if (const auto* p = std::get_if<Permutation>(&element)) return *p;
    throw DomainError("expected a permutation vertex, got pairing " + to_string());
}

const PairPartition& GraphNode::pairing() const {
    if (const auto* m = std::get_if<PairPartition>(&element)) return *m;
    throw DomainError("expected a pair-partition vertex, got permutation " + to_string());
}

std::string GraphNode::to_string() const {
    return std::visit([](const auto& e) { return e.to_string(); }, element);
}

int GraphNode::length() const {
    return std::visit([](const auto& e) { return length_stat(e); }, element);
}

IntegerPartition GraphNode::class_key() const {
    if (holds_permutation()) return cycle_type(permutation());
    return coset_type(pairing());
}

namespace {

void check_kind(GraphKind kind, const GraphNode& node) {
    if (kind == GraphKind::Orthogonal) {
        (void)node.pairing();
    } else {
        (void)node.permutation();
    }
}

} // namespace

std::vector<EdgeStep> solid_neighbors(GraphKind kind, const GraphNode& node) {
    check_kind(kind, node);
    std::vector<EdgeStep> out;
    const int k = node.level();
    if (kind == GraphKind::Orthogonal) {
        const auto& m = node.pairing();
        for (int i = 1; i < 2 * k - 1; ++i) {
            out.push_back({EdgeKind::Solid, i,
                           act(Permutation::transposition(i, 2 * k - 1, 2 * k), m)});
        }
    } else {
        const auto& sigma = node.permutation();
        for (int i = 1; i < k; ++i) {
            out.push_back({EdgeKind::Solid, i, sigma.left_transpose(i, k)});
        }
    }
    return out;
}

std::optional<GraphNode> dashed_target(GraphKind kind, const GraphNode& node) {
    check_kind(kind, node);
    const int k = node.level();
    if (k == 0) return std::nullopt;
    if (kind == GraphKind::Orthogonal) {
        const auto& m = node.pairing();
        if (!m.contains_block(2 * k - 1, 2 * k)) return std::nullopt;
        return GraphNode(pairing_down(m));
    }
    const auto& sigma = node.permutation();
    if (sigma(k) != k) return std::nullopt;
    return GraphNode(restrict_down(sigma));
}

std::optional<GraphNode> squiggled_target(GraphKind kind, const GraphNode& node) {
    if (kind != GraphKind::AIII) {
        throw DomainError("squiggled edges exist only in the A III graph");
    }
    const auto& sigma = node.permutation();
    if (!top_in_two_cycle(sigma)) return std::nullopt;
    return GraphNode(flat(sigma));
}

std::vector<std::pair<int, int>> duplicate_solid_targets(const PairPartition& m) {
    std::vector<std::pair<int, int>> dups;
    const auto steps = solid_neighbors(GraphKind::Orthogonal, GraphNode(m));
    for (std::size_t a = 0; a < steps.size(); ++a) {
        if (steps[a].target.pairing() == m) continue;
        for (std::size_t b = a + 1; b < steps.size(); ++b) {
            if (steps[a].target == steps[b].target) dups.emplace_back(steps[a].index, steps[b].index);
        }
    }
    return dups;
}

// ------------------------------------------------------------- path counting

namespace {

struct CountKey {
    int kind;
    std::vector<int> code;
    int a;
    int b;
    bool operator==(const CountKey&) const = default;
};

struct CountKeyHash {
    std::size_t operator()(const CountKey& key) const noexcept {
        std::size_t h = static_cast<std::size_t>(key.kind) * 0x9e3779b97f4a7c15ULL;
        for (int x : key.code) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
        h = (h ^ static_cast<std::size_t>(key.a + 7919)) * 1099511628211ULL;
        h = (h ^ static_cast<std::size_t>(key.b + 104729)) * 1099511628211ULL;
        return h;
    }
};

} // namespace

struct PathCountTable::Impl {
    mutable std::shared_mutex mutex;
    std::unordered_map<CountKey, BigInt, CountKeyHash> memo;

    std::optional<BigInt> find(const CountKey& key) const {
        std::shared_lock lock(mutex);
        auto it = memo.find(key);
        if (it == memo.end()) return std::nullopt;
        return it->second;
    }

    void insert(CountKey key, const BigInt& value) {
        std::unique_lock lock(mutex);
        memo.try_emplace(std::move(key), value);
    }

    // Unitary: #P(sigma, l) = sum_i #P((i,k)sigma, l-1) + [sigma(k)=k] #P(sigma_down, l).
    BigInt unitary(const Permutation& sigma, int l) {
        if (l < 0) return 0;
        const int k = sigma.level();
        if (k == 0) return l == 0 ? 1 : 0;
        CountKey key{0, sigma.images(), l, 0};
        if (auto hit = find(key)) return *hit;
        BigInt total = 0;
        if (l > 0) {
            for (int i = 1; i < k; ++i) total += unitary(sigma.left_transpose(i, k), l - 1);
        }
        if (sigma(k) == k) total += unitary(restrict_down(sigma), l);
        insert(std::move(key), total);
        return total;
    }

    BigInt orthogonal(const PairPartition& m, int l) {
        if (l < 0) return 0;
        const int k = m.level();
        if (k == 0) return l == 0 ? 1 : 0;
        CountKey key{1, m.partner_array(), l, 0};
        if (auto hit = find(key)) return *hit;
        BigInt total = 0;
        if (l > 0) {
            for (int i = 1; i < 2 * k - 1; ++i) {
                total += orthogonal(act(Permutation::transposition(i, 2 * k - 1, 2 * k), m), l - 1);
            }
        }
        if (m.contains_block(2 * k - 1, 2 * k)) total += orthogonal(pairing_down(m), l);
        insert(std::move(key), total);
        return total;
    }

    BigInt aiii(const Permutation& sigma, int l) {
        if (l < 0) return 0;
        const int k = sigma.level();
        if (k == 0) return l == 0 ? 1 : 0;
        CountKey key{2, sigma.images(), l, -1};
        if (auto hit = find(key)) return *hit;
        BigInt total = 0;
        if (l > 0) {
            for (int i = 1; i < k; ++i) total += aiii(sigma.left_transpose(i, k), l - 1);
        }
        if (sigma(k) == k) total += aiii(restrict_down(sigma), l);
        if (top_in_two_cycle(sigma)) total += aiii(flat(sigma), l);
        insert(std::move(key), total);
        return total;
    }

    BigInt aiii_refined(const Permutation& sigma, int solid, int dashed) {
        if (solid < 0 || dashed < 0) return 0;
        const int k = sigma.level();
        if (k == 0) return (solid == 0 && dashed == 0) ? 1 : 0;
        if (dashed > k) return 0;
        CountKey key{3, sigma.images(), solid, dashed};
        if (auto hit = find(key)) return *hit;
        BigInt total = 0;
        if (solid > 0) {
            for (int i = 1; i < k; ++i) {
                total += aiii_refined(sigma.left_transpose(i, k), solid - 1, dashed);
            }
        }
        if (sigma(k) == k) total += aiii_refined(restrict_down(sigma), solid, dashed - 1);
        if (top_in_two_cycle(sigma)) total += aiii_refined(flat(sigma), solid, dashed);
        insert(std::move(key), total);
        return total;
    }
};

PathCountTable::PathCountTable() : impl_(std::make_unique<Impl>()) {}
PathCountTable::~PathCountTable() = default;

BigInt PathCountTable::count(GraphKind kind, const GraphNode& node, int l) {
    check_kind(kind, node);
    switch (kind) {
    case GraphKind::Unitary: return impl_->unitary(node.permutation(), l);
    case GraphKind::Orthogonal: return impl_->orthogonal(node.pairing(), l);
    case GraphKind::AIII: return impl_->aiii(node.permutation(), l);
    }
    return 0;
}

BigInt PathCountTable::count_refined(const Permutation& sigma, int solid, int dashed) {
    return impl_->aiii_refined(sigma, solid, dashed);
}

std::size_t PathCountTable::size() const {
    std::shared_lock lock(impl_->mutex);
    return impl_->memo.size();
}

void PathCountTable::clear() {
    std::unique_lock lock(impl_->mutex);
    impl_->memo.clear();
}

PathCountTable& shared_path_counts() {
    static PathCountTable table;
    return table;
}

BigInt count_paths(GraphKind kind, const GraphNode& node, int l) {
    return shared_path_counts().count(kind, node, l);
}

std::map<std::pair<int, int>, BigInt> refined_counts(const Permutation& sigma, int max_solid) {
    std::map<std::pair<int, int>, BigInt> out;
    const int k = sigma.level();
    for (int l0 = 0; l0 <= max_solid; ++l0) {
        for (int l1 = k % 2; l1 <= k; l1 += 2) {
            BigInt c = shared_path_counts().count_refined(sigma, l0, l1);
            if (c != 0) out.emplace(std::make_pair(l0, l1), std::move(c));
        }
    }
    return out;
}

// ---------------------------------------------------------------- enumeration

int Path::solid_count() const {
    return static_cast<int>(std::count_if(steps.begin(), steps.end(),
                                          [](const EdgeStep& s) { return s.kind == EdgeKind::Solid; }));
}
int Path::dashed_count() const {
    return static_cast<int>(std::count_if(steps.begin(), steps.end(),
                                          [](const EdgeStep& s) { return s.kind == EdgeKind::Dashed; }));
}
int Path::squiggled_count() const {
    return static_cast<int>(std::count_if(
        steps.begin(), steps.end(), [](const EdgeStep& s) { return s.kind == EdgeKind::Squiggled; }));
}

std::vector<GraphNode> Path::vertices() const {
    std::vector<GraphNode> v{start};
    for (const auto& s : steps) v.push_back(s.target);
    return v;
}

PathEnumeration enumerate_paths(GraphKind kind, const GraphNode& node, int l,
                                std::optional<std::size_t> limit) {
    check_kind(kind, node);
    PathEnumeration result;
    Path current{node, {}};
    auto& counts = shared_path_counts();

    std::function<bool(const GraphNode&, int)> dfs = [&](const GraphNode& at, int remaining) -> bool {
        if (at.is_empty()) {
            if (remaining != 0) return true;
            if (limit && result.paths.size() >= *limit) {
                result.truncated = true;
                return false;
            }
            result.paths.push_back(current);
            return true;
        }
        auto descend = [&](EdgeStep step, int rem) -> bool {
            if (counts.count(kind, step.target, rem) == 0) return true;
            GraphNode next = step.target;
            current.steps.push_back(std::move(step));
            const bool go_on = dfs(next, rem);
            current.steps.pop_back();
            return go_on;
        };
        if (remaining > 0) {
            for (auto& step : solid_neighbors(kind, at)) {
                if (!descend(std::move(step), remaining - 1)) return false;
            }
        }
        if (auto down = dashed_target(kind, at)) {
            if (!descend({EdgeKind::Dashed, 0, *down}, remaining)) return false;
        }
        if (kind == GraphKind::AIII) {
            if (auto sq = squiggled_target(kind, at)) {
                if (!descend({EdgeKind::Squiggled, 0, *sq}, remaining)) return false;
            }
        }
        return true;
    };
    if (counts.count(kind, node, l) != 0) dfs(node, l);
    return result;
}

namespace {

// Second entry of the transposition realizing a solid step at level k.
int solid_pivot(GraphKind kind, int level) {
    return kind == GraphKind::Orthogonal ? 2 * level - 1 : level;
}

} // namespace

std::string format_path(GraphKind kind, const Path& path) {
    std::string out = path.start.to_string();
    int level = path.start.level();
    for (const auto& step : path.steps) {
        switch (step.kind) {
        case EdgeKind::Solid:
            out += " -(" + std::to_string(step.index) + "," +
                   std::to_string(solid_pivot(kind, level)) + ")-> ";
            break;
        case EdgeKind::Dashed: out += " => "; break;
        case EdgeKind::Squiggled: out += " ~> "; break;
        }
        out += step.target.to_string();
        level = step.target.level();
    }
    return out;
}

// ----------------------------------------------------- monotone factorizations

std::string MonotoneFactorization::to_string() const {
    if (transpositions.empty()) return "()";
    std::string out;
    for (const auto& t : transpositions) {
        out += "(" + std::to_string(t.s) + "," + std::to_string(t.t) + ")";
    }
    return out;
}

namespace {

void check_factorization_kind(GraphKind kind) {
    if (kind == GraphKind::AIII) {
        throw DomainError("monotone factorizations are defined for the unitary and orthogonal graphs only");
    }
}

// tau_1 ... tau_l as a permutation of {1..n}.
Permutation product(const std::vector<Transposition>& taus, int n) {
    Permutation p = Permutation::identity(n);
    for (const auto& t : taus) p = p * Permutation::transposition(t.s, t.t, n);
    return p;
}

bool product_matches(GraphKind kind, const MonotoneFactorization& f) {
    const int k = f.target.level();
    if (kind == GraphKind::Unitary) return product(f.transpositions, k) == f.target.permutation();
    return act(product(f.transpositions, 2 * k), PairPartition::trivial(k)) == f.target.pairing();
}

} // namespace

MonotoneFactorization path_to_factorization(GraphKind kind, const Path& path) {
    check_factorization_kind(kind);
    MonotoneFactorization f;
    f.target = path.start;
    int level = path.start.level();
    for (const auto& step : path.steps) {
        if (step.kind == EdgeKind::Solid) {
            f.transpositions.push_back({step.index, solid_pivot(kind, level)});
        } else if (step.kind == EdgeKind::Squiggled) {
            throw DomainError("path contains a squiggled edge");
        }
        level = step.target.level();
    }
    if (level != 0) throw DomainError("path does not end at the empty element");
    if (!product_matches(kind, f)) throw DomainError("path does not factor its start vertex");
    return f;
}

Path factorization_to_path(const MonotoneFactorization& f, GraphKind kind) {
    check_factorization_kind(kind);
    check_kind(kind, f.target);
    const int k = f.target.level();
    int prev_level = k;
    for (const auto& t : f.transpositions) {
        if (t.s < 1 || t.s >= t.t) throw DomainError("transposition (s,t) needs 1 <= s < t");
        int level = t.t;
        if (kind == GraphKind::Orthogonal) {
            if (t.t % 2 == 0) throw DomainError("orthogonal factorization entries must be (s, 2t-1)");
            level = (t.t + 1) / 2;
        }
        if (level > prev_level) throw DomainError("factorization " + f.to_string() + " is not monotone");
        prev_level = level;
    }
    if (!product_matches(kind, f)) {
        throw DomainError("product of " + f.to_string() + " is not " + f.target.to_string());
    }

    Path path{f.target, {}};
    GraphNode at = f.target;
    auto go_down = [&](int to_level) {
        while (at.level() > to_level) {
            auto down = dashed_target(kind, at);
            if (!down) throw DomainError("factorization leaves no dashed edge at " + at.to_string());
            path.steps.push_back({EdgeKind::Dashed, 0, *down});
            at = *down;
        }
    };
    for (const auto& t : f.transpositions) {
        const int level = kind == GraphKind::Orthogonal ? (t.t + 1) / 2 : t.t;
        go_down(level);
        auto steps = solid_neighbors(kind, at);
        auto& step = steps.at(static_cast<std::size_t>(t.s - 1));
        at = step.target;
        path.steps.push_back(std::move(step));
    }
    go_down(0);
    return path;
}

} // namespace wg
