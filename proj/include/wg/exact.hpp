#pragma once

#include "wg/graphs.hpp"
#include "wg/ratfun.hpp"
#include "wg/rational.hpp"
#include "wg/symcore.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wg {

/// Weingarten families with exact backends.
enum class Family { U, O, COE, SP, AIII };

/// Cache tag: "U", "O", "COE", "SP", "AIII".
std::string_view tag(Family f);
/// Accepts tags and CLI spellings ("u", "o", "coe", "sp", "aiii").
Family parse_family(std::string_view text);
/// Permutation-labelled (U, AIII) versus pairing-labelled (O, COE, SP).
bool labels_are_permutations(Family f);

/// A level system had no unique solution at the requested dimension.
class SingularLevel : public std::runtime_error {
public:
    SingularLevel(Family family, int level, long d, const std::string& detail);
    Family family() const noexcept { return family_; }
    int level() const noexcept { return level_; }

private:
    Family family_;
    int level_;
};

/// Exact Weingarten values for every class of levels 0..k at fixed dimension argument(s).
struct WgTable {
    Family family = Family::U;
    int k = 0;
    long d = 0;
    long dminus = 0;
    /// levels[j] maps each cycle-type / coset-type of weight j to its value.
    std::vector<std::map<IntegerPartition, ExactRational>> levels;

    /// Value for a class key; its weight selects the level.
    const ExactRational& at(const IntegerPartition& mu) const;
};

struct SolveOptions {
    /// Permit dimensions below the guaranteed range (systems are still checked exactly).
    bool force = false;
};

// Level-by-level solvers. Each level is solved on one representative per class; when that
// reduced system is rank deficient, equations of every class member are added.

WgTable solve_unitary_table(int k, long d, SolveOptions opts = {});
/// Negative d is allowed (used by the symplectic relation) as long as levels stay nonsingular.
WgTable solve_orthogonal_table(int k, long d, SolveOptions opts = {});
WgTable solve_aiii_table(int k, long d, long dminus, SolveOptions opts = {});
/// COE values through the shift Wg^COE(m, d) = Wg^O(m, d + 1).
WgTable solve_coe_table(int k, long d, SolveOptions opts = {});
/// |Wg^Sp(m, d)| = |Wg^O(m, -2d)|.
WgTable solve_symplectic_abs_table(int k, long d, SolveOptions opts = {});

/// Cached table for (family, k, d, dminus).
std::shared_ptr<const WgTable> table(Family family, int k, long d, long dminus = 0,
                                     SolveOptions opts = {});

ExactRational wg_unitary(const Permutation& sigma, long d, SolveOptions opts = {});
ExactRational wg_orthogonal(const PairPartition& m, long d, SolveOptions opts = {});
/// Wg^O(m, n, d) = Wg^O(sigma_m^{-1} . n, d).
ExactRational wg_orthogonal(const PairPartition& m, const PairPartition& n, long d,
                            SolveOptions opts = {});
ExactRational wg_coe(const PairPartition& m, long d, SolveOptions opts = {});
/// Solves the COE relation (d+1) W(m) = -sum_i W((i,2k-1).m) + [top block] W(m_down)
/// over all pair partitions, without class reduction.
ExactRational wg_coe_direct(const PairPartition& m, long d);
/// Full (unreduced) COE solution for every pairing of level k.
std::map<PairPartition, ExactRational> solve_coe_direct_full(int k, long d);
ExactRational wg_symplectic_abs(const PairPartition& m, long d, SolveOptions opts = {});
ExactRational wg_aiii(const Permutation& sigma, long d, long dminus, SolveOptions opts = {});

/// Value of any family on an element. The element type must match the family.
ExactRational wg_value(Family family, const GraphNode& element, long d, long dminus = 0,
                       SolveOptions opts = {});

/// Truncated 1/d expansion built from path counts.
struct SeriesTruncation {
    Family family = Family::U;
    GraphNode element;
    int order = 0;
    /// The value behaves like d^{leading_exponent} times a constant.
    int leading_exponent = 0;
    /// U: #P(s, |s|+2g); O and SP: #P(m, |m|+g); g = 0..order.
    std::vector<BigInt> coefficients;
    /// A III: (solid, dashed) -> number of paths, for paths of total length <= max_exponent.
    std::map<std::pair<int, int>, BigInt> aiii_terms;
    /// Largest power of 1/d covered by the truncation.
    int max_exponent = 0;

    /// Predicted coefficient of d^{-n} in the value, n <= max_exponent.
    ExactRational coefficient_of(int n, long dminus = 0) const;
};

/// Supported families: U, O, SP, AIII.
SeriesTruncation series(Family family, const GraphNode& element, int order);

/// Rational function of d reproducing the family's values (A III: at fixed dminus;
/// SP: the function (-1)^k Wg^O(m, -2d), which equals |Wg^Sp(m, d)| for large d).
/// Sampling starts at d = 2k + 1.
RationalFunctionRep reconstruct_rational(Family family, const GraphNode& element, long dminus = 0);

} // namespace wg
