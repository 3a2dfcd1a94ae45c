#include "wg/exact.hpp"

#include "wg/linsolve.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <tuple>

namespace wg {

std::string_view tag(Family f) {
    switch (f) {
    case Family::U: return "U";
    case Family::O: return "O";
    case Family::COE: return "COE";
    case Family::SP: return "SP";
    case Family::AIII: return "AIII";
    }
    return "?";
}

Family parse_family(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    if (s == "U" || s == "UNITARY") return Family::U;
    if (s == "O" || s == "ORTHOGONAL") return Family::O;
    if (s == "COE") return Family::COE;
    if (s == "SP" || s == "SYMPLECTIC") return Family::SP;
    if (s == "AIII" || s == "A3") return Family::AIII;
    throw DomainError("unknown family '" + std::string(text) + "' (expected u|o|coe|sp|aiii)");
}

bool labels_are_permutations(Family f) { return f == Family::U || f == Family::AIII; }

SingularLevel::SingularLevel(Family family, int level, long d, const std::string& detail)
    : std::runtime_error(std::string(tag(family)) + " system singular at level " +
                         std::to_string(level) + ", d=" + std::to_string(d) + ": " + detail),
      family_(family), level_(level) {}

const ExactRational& WgTable::at(const IntegerPartition& mu) const {
    const int j = mu.weight();
    if (j < 0 || j >= static_cast<int>(levels.size())) {
        throw DomainError("class " + mu.key() + " is above the solved level " + std::to_string(k));
    }
    auto it = levels[static_cast<std::size_t>(j)].find(mu);
    if (it == levels[static_cast<std::size_t>(j)].end()) throw DomainError("unknown class " + mu.key());
    return it->second;
}

namespace {

using ClassValues = std::map<IntegerPartition, ExactRational>;

struct Equation {
    std::map<IntegerPartition, ExactRational> coeffs;
    ExactRational rhs;
};

// Solves one level on class unknowns. Rows come from the representatives first; if those
// leave the system rank deficient, rows for every member of the level are appended.
template <class Elem>
ClassValues solve_level(Family family, int level, long d, const std::vector<IntegerPartition>& classes,
                        const std::vector<Elem>& reps, const std::function<std::vector<Elem>()>& members,
                        const std::function<Equation(const Elem&)>& equation) {
    std::map<IntegerPartition, std::size_t> index;
    for (std::size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i], i);
    LinearSystem sys(classes.size());
    auto add = [&](const Elem& x) {
        Equation eq = equation(x);
        std::vector<ExactRational> row(classes.size());
        for (auto& [mu, c] : eq.coeffs) row[index.at(mu)] += c;
        sys.add_row(std::move(row), std::move(eq.rhs));
    };
    for (const auto& r : reps) add(r);
    std::vector<ExactRational> sol;
    try {
        sol = sys.solve();
    } catch (const SingularSystem& reduced) {
        if (reduced.inconsistent()) throw SingularLevel(family, level, d, reduced.what());
        for (const auto& x : members()) add(x);
        try {
            sol = sys.solve();
        } catch (const SingularSystem& full) {
            throw SingularLevel(family, level, d, full.what());
        }
    }
    ClassValues out;
    for (std::size_t i = 0; i < classes.size(); ++i) out.emplace(classes[i], std::move(sol[i]));
    return out;
}

// Unitary-type levels: diag * W(s) + sum_{i<j} W((i,j)s) = rhs(s).
WgTable solve_permutation_family(Family family, int k, long d, long dminus) {
    WgTable t{family, k, d, dminus, {}};
    t.levels.push_back({{IntegerPartition{}, ExactRational(1)}});
    for (int j = 1; j <= k; ++j) {
        const auto classes = partitions_of(j);
        std::vector<Permutation> reps;
        for (const auto& mu : classes) reps.push_back(class_representative(mu));
        const auto& below = t.levels;
        std::function<Equation(const Permutation&)> eq = [&](const Permutation& s) {
            Equation e;
            e.coeffs[cycle_type(s)] += d;
            for (int i = 1; i < j; ++i) e.coeffs[cycle_type(s.left_transpose(i, j))] += 1;
            if (s(j) == j) {
                const ExactRational& down = below[static_cast<std::size_t>(j - 1)].at(cycle_type(restrict_down(s)));
                e.rhs += family == Family::AIII ? down * dminus : down;
            }
            if (family == Family::AIII && top_in_two_cycle(s)) {
                e.rhs += below[static_cast<std::size_t>(j - 2)].at(cycle_type(flat(s)));
            }
            return e;
        };
        std::function<std::vector<Permutation>()> members = [j] { return permutations_of(j); };
        t.levels.push_back(solve_level<Permutation>(family, j, d, classes, reps, members, eq));
    }
    return t;
}

// Orthogonal-type levels: diag * W(m) + sum_{i<2j-1} W((i,2j-1).m) = [top block] W(m_down).
WgTable solve_pairing_family(Family family, int k, long diag) {
    WgTable t{family, k, diag, 0, {}};
    t.levels.push_back({{IntegerPartition{}, ExactRational(1)}});
    for (int j = 1; j <= k; ++j) {
        const auto classes = partitions_of(j);
        std::vector<PairPartition> reps;
        for (const auto& mu : classes) reps.push_back(coset_representative(mu));
        const auto& below = t.levels;
        std::function<Equation(const PairPartition&)> eq = [&](const PairPartition& m) {
            Equation e;
            e.coeffs[coset_type(m)] += diag;
            for (int i = 1; i < 2 * j - 1; ++i) {
                e.coeffs[coset_type(act(Permutation::transposition(i, 2 * j - 1, 2 * j), m))] += 1;
            }
            if (m.contains_block(2 * j - 1, 2 * j)) {
                e.rhs = below[static_cast<std::size_t>(j - 1)].at(coset_type(pairing_down(m)));
            }
            return e;
        };
        std::function<std::vector<PairPartition>()> members = [j] { return pair_partitions_of(j); };
        t.levels.push_back(solve_level<PairPartition>(family, j, diag, classes, reps, members, eq));
    }
    return t;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw DomainError(message);
}

} // namespace

WgTable solve_unitary_table(int k, long d, SolveOptions opts) {
    require(k >= 0, "level k must be nonnegative");
    require(opts.force || d >= k, "dimension d=" + std::to_string(d) + " is below k=" +
                                      std::to_string(k) + " (use force to override)");
    return solve_permutation_family(Family::U, k, d, 0);
}

WgTable solve_orthogonal_table(int k, long d, SolveOptions) {
    require(k >= 0, "level k must be nonnegative");
    return solve_pairing_family(Family::O, k, d);
}

WgTable solve_aiii_table(int k, long d, long dminus, SolveOptions opts) {
    require(k >= 0, "level k must be nonnegative");
    require(opts.force || d >= k, "dimension d=" + std::to_string(d) + " is below k=" +
                                      std::to_string(k) + " (use force to override)");
    return solve_permutation_family(Family::AIII, k, d, dminus);
}

WgTable solve_coe_table(int k, long d, SolveOptions opts) {
    require(k >= 0, "level k must be nonnegative");
    require(opts.force || d >= 2 * k, "COE needs d >= 2k (d=" + std::to_string(d) +
                                          ", k=" + std::to_string(k) + ")");
    WgTable t;
    try {
        t = solve_pairing_family(Family::O, k, d + 1);
    } catch (const SingularLevel& e) {
        throw SingularLevel(Family::COE, e.level(), d, e.what());
    }
    t.family = Family::COE;
    t.d = d;
    return t;
}

WgTable solve_symplectic_abs_table(int k, long d, SolveOptions opts) {
    require(k >= 0, "level k must be nonnegative");
    require(opts.force || d >= k, "dimension d=" + std::to_string(d) + " is below k=" +
                                      std::to_string(k) + " (use force to override)");
    WgTable t;
    try {
        t = solve_pairing_family(Family::O, k, -2 * d);
    } catch (const SingularLevel& e) {
        throw SingularLevel(Family::SP, e.level(), d, e.what());
    }
    t.family = Family::SP;
    t.d = d;
    for (auto& lvl : t.levels) {
        for (auto& [mu, v] : lvl) v = abs(v);
    }
    return t;
}

std::shared_ptr<const WgTable> table(Family family, int k, long d, long dminus, SolveOptions opts) {
    using Key = std::tuple<int, int, long, long, bool>;
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<const WgTable>> cache;
    if (family != Family::AIII) dminus = 0;
    const Key key{static_cast<int>(family), k, d, dminus, opts.force};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    std::shared_ptr<const WgTable> built;
    switch (family) {
    case Family::U: built = std::make_shared<WgTable>(solve_unitary_table(k, d, opts)); break;
    case Family::O: built = std::make_shared<WgTable>(solve_orthogonal_table(k, d, opts)); break;
    case Family::COE: built = std::make_shared<WgTable>(solve_coe_table(k, d, opts)); break;
    case Family::SP: built = std::make_shared<WgTable>(solve_symplectic_abs_table(k, d, opts)); break;
    case Family::AIII: built = std::make_shared<WgTable>(solve_aiii_table(k, d, dminus, opts)); break;
    }
    std::lock_guard lock(mutex);
    return cache.try_emplace(key, std::move(built)).first->second;
}

ExactRational wg_unitary(const Permutation& sigma, long d, SolveOptions opts) {
    return table(Family::U, sigma.level(), d, 0, opts)->at(cycle_type(sigma));
}

ExactRational wg_orthogonal(const PairPartition& m, long d, SolveOptions opts) {
    return table(Family::O, m.level(), d, 0, opts)->at(coset_type(m));
}

ExactRational wg_orthogonal(const PairPartition& m, const PairPartition& n, long d, SolveOptions opts) {
    if (m.level() != n.level()) throw DomainError("Wg^O(m, n): pairings of different levels");
    const Permutation sigma_m = pairing_permutation(m);
    return wg_orthogonal(act(sigma_m.inverse(), n), d, opts);
}

ExactRational wg_coe(const PairPartition& m, long d, SolveOptions opts) {
    return table(Family::COE, m.level(), d, 0, opts)->at(coset_type(m));
}

std::map<PairPartition, ExactRational> solve_coe_direct_full(int k, long d) {
    require(k >= 0, "level k must be nonnegative");
    std::map<PairPartition, ExactRational> prev{{PairPartition{}, ExactRational(1)}};
    for (int j = 1; j <= k; ++j) {
        const auto all = pair_partitions_of(j);
        std::map<PairPartition, std::size_t> index;
        for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
        LinearSystem sys(all.size());
        for (const auto& m : all) {
            std::vector<ExactRational> row(all.size());
            row[index.at(m)] += d + 1;
            for (int i = 1; i < 2 * j - 1; ++i) {
                row[index.at(act(Permutation::transposition(i, 2 * j - 1, 2 * j), m))] += 1;
            }
            ExactRational rhs = 0;
            if (m.contains_block(2 * j - 1, 2 * j)) rhs = prev.at(pairing_down(m));
            sys.add_row(std::move(row), rhs);
        }
        std::vector<ExactRational> sol;
        try {
            sol = sys.solve();
        } catch (const SingularSystem& e) {
            throw SingularLevel(Family::COE, j, d, e.what());
        }
        std::map<PairPartition, ExactRational> cur;
        for (std::size_t i = 0; i < all.size(); ++i) cur.emplace(all[i], std::move(sol[i]));
        prev = std::move(cur);
    }
    return prev;
}

ExactRational wg_coe_direct(const PairPartition& m, long d) {
    static std::mutex mutex;
    static std::map<std::pair<int, long>, std::map<PairPartition, ExactRational>> cache;
    const std::pair<int, long> key{m.level(), d};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second.at(m);
    }
    auto full = solve_coe_direct_full(m.level(), d);
    ExactRational v = full.at(m);
    std::lock_guard lock(mutex);
    cache.try_emplace(key, std::move(full));
    return v;
}

ExactRational wg_symplectic_abs(const PairPartition& m, long d, SolveOptions opts) {
    return table(Family::SP, m.level(), d, 0, opts)->at(coset_type(m));
}

ExactRational wg_aiii(const Permutation& sigma, long d, long dminus, SolveOptions opts) {
    return table(Family::AIII, sigma.level(), d, dminus, opts)->at(cycle_type(sigma));
}

ExactRational wg_value(Family family, const GraphNode& element, long d, long dminus, SolveOptions opts) {
    switch (family) {
    case Family::U: return wg_unitary(element.permutation(), d, opts);
    case Family::O: return wg_orthogonal(element.pairing(), d, opts);
    case Family::COE: return wg_coe(element.pairing(), d, opts);
    case Family::SP: return wg_symplectic_abs(element.pairing(), d, opts);
    case Family::AIII: return wg_aiii(element.permutation(), d, dminus, opts);
    }
    return 0;
}

// ------------------------------------------------------------------- series

ExactRational SeriesTruncation::coefficient_of(int n, long dminus) const {
    if (n > max_exponent) throw DomainError("coefficient beyond the truncation order");
    const int k = element.level();
    if (family == Family::AIII) {
        ExactRational total = 0;
        for (const auto& [key, count] : aiii_terms) {
            const auto [l0, l1] = key;
            if (l0 + l1 + (k - l1) / 2 != n) continue;
            ExactRational term = pow(ExactRational(dminus), static_cast<unsigned long>(l1)) * count;
            total += (l0 % 2) ? -term : term;
        }
        return total;
    }
    const int lead = -leading_exponent;
    if (n < lead) return 0;
    const int len = element.length();
    if (family == Family::U) {
        if ((n - lead) % 2) return 0;
        const ExactRational c(coefficients[static_cast<std::size_t>((n - lead) / 2)]);
        return len % 2 ? ExactRational(-c) : c;
    }
    const int g = n - lead;
    const ExactRational c(coefficients[static_cast<std::size_t>(g)]);
    if (family == Family::SP) return c / pow(ExactRational(2), static_cast<unsigned long>(n));
    return (len + g) % 2 ? ExactRational(-c) : c;
}

SeriesTruncation series(Family family, const GraphNode& element, int order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    SeriesTruncation s;
    s.family = family;
    s.element = element;
    s.order = order;
    const int k = element.level();
    switch (family) {
    case Family::U: {
        const int len = length_stat(element.permutation());
        s.leading_exponent = -(len + k);
        for (int g = 0; g <= order; ++g) s.coefficients.push_back(count_paths(GraphKind::Unitary, element, len + 2 * g));
        s.max_exponent = len + k + 2 * order;
        break;
    }
    case Family::O:
    case Family::SP: {
        const int len = length_stat(element.pairing());
        s.leading_exponent = -(len + k);
        for (int g = 0; g <= order; ++g) s.coefficients.push_back(count_paths(GraphKind::Orthogonal, element, len + g));
        s.max_exponent = len + k + order;
        break;
    }
    case Family::AIII: {
        const int len = length_stat(element.permutation());
        s.max_exponent = k + len + 2 * order;
        int lowest = s.max_exponent + 1;
        for (auto& [key, count] : refined_counts(element.permutation(), s.max_exponent)) {
            const int total = key.first + key.second + (k - key.second) / 2;
            if (total > s.max_exponent) continue;
            lowest = std::min(lowest, total);
            s.aiii_terms.emplace(key, count);
        }
        s.leading_exponent = -lowest;
        break;
    }
    case Family::COE:
        throw DomainError("series expansions are provided for u, o, sp and aiii");
    }
    return s;
}

RationalFunctionRep reconstruct_rational(Family family, const GraphNode& element, long dminus) {
    const int k = element.level();
    Evaluator eval;
    if (family == Family::SP) {
        const PairPartition m = element.pairing();
        eval = [m, k](long d) -> std::optional<ExactRational> {
            try {
                ExactRational v = table(Family::O, k, -2 * d)->at(coset_type(m));
                return k % 2 ? ExactRational(-v) : v;
            } catch (const SingularLevel&) {
                return std::nullopt;
            }
        };
    } else {
        eval = [family, element, dminus](long d) -> std::optional<ExactRational> {
            try {
                return wg_value(family, element, d, dminus);
            } catch (const SingularLevel&) {
                return std::nullopt;
            }
        };
    }
    return reconstruct(eval, 2L * k + 1);
}

} // namespace wg
