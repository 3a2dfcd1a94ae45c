#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wg {

/// Raised for malformed elements and violated preconditions on them.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Weakly decreasing sequence of positive integers.
class IntegerPartition {
public:
    IntegerPartition() = default;
    /// Parts are sorted into weakly decreasing order; zero or negative parts are rejected.
    explicit IntegerPartition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// "3+1+1"; the empty partition prints as "0".
    std::string key() const;
    static IntegerPartition parse(std::string_view text);

    auto operator<=>(const IntegerPartition& other) const { return parts_ <=> other.parts_; }
    bool operator==(const IntegerPartition& other) const { return parts_ == other.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of n, largest first part first (reverse lexicographic).
std::vector<IntegerPartition> partitions_of(int n);

/// Permutation of {1..k} in one-line notation. Level 0 is the empty permutation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int k);
    /// The transposition (i, j) in S_k.
    static Permutation transposition(int i, int j, int k);

    int level() const noexcept { return static_cast<int>(images_.size()); }
    /// sigma(x) for 1 <= x <= level.
    int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
    const std::vector<int>& images() const noexcept { return images_; }
    bool is_identity() const noexcept;

    Permutation inverse() const;
    /// (this * other)(x) = this(other(x)).
    Permutation operator*(const Permutation& other) const;
    /// (i, j) * this, i.e. swap the values i and j in the one-line notation.
    Permutation left_transpose(int i, int j) const;
    /// this * (i, j), i.e. swap positions i and j.
    Permutation right_transpose(int i, int j) const;

    /// "4,1,5,3,2"; the empty permutation prints as the empty-set sign.
    std::string to_string() const;
    static Permutation parse(std::string_view text);

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Pair partition of {1..2k}. Blocks are stored as (a, b) with a < b, sorted by a.
class PairPartition {
public:
    PairPartition() = default;
    /// Accepts blocks in any order and orientation; validates that they cover {1..2k}.
    explicit PairPartition(std::vector<std::pair<int, int>> blocks);

    /// e_k = {1,2}{3,4}...{2k-1,2k}.
    static PairPartition trivial(int k);

    int level() const noexcept { return static_cast<int>(blocks_.size()); }
    const std::vector<std::pair<int, int>>& blocks() const noexcept { return blocks_; }
    /// Partner of x in its block.
    int partner(int x) const { return partner_[static_cast<std::size_t>(x - 1)]; }
    bool contains_block(int a, int b) const;

    /// "1,3|2,4"; the empty pairing prints as the empty-set sign.
    std::string to_string() const;
    static PairPartition parse(std::string_view text);

    /// Partner array (partner of 1, partner of 2, ...). Unique per partition.
    const std::vector<int>& partner_array() const noexcept { return partner_; }

    auto operator<=>(const PairPartition& other) const { return blocks_ <=> other.blocks_; }
    bool operator==(const PairPartition& other) const { return blocks_ == other.blocks_; }

private:
    std::vector<std::pair<int, int>> blocks_;
    std::vector<int> partner_;
};

/// All (2k-1)!! pair partitions of {1..2k}, in lexicographic block order.
std::vector<PairPartition> pair_partitions_of(int k);
/// All k! permutations in lexicographic one-line order.
std::vector<Permutation> permutations_of(int k);

// Permutation statistics and structural operations.

IntegerPartition cycle_type(const Permutation& sigma);
/// |sigma| = k - number of cycles.
int length_stat(const Permutation& sigma);
/// sigma restricted to {1..k-1}; requires sigma(k) = k.
Permutation restrict_down(const Permutation& sigma);
/// True when the letter k sits in a 2-cycle of sigma.
bool top_in_two_cycle(const Permutation& sigma);
/// Remove the 2-cycle (r, k) containing k and relabel the rest order-preservingly.
Permutation flat(const Permutation& sigma);
/// Consecutive cycles (1 2 .. mu_1)(mu_1+1 ..) in the order of mu's parts.
Permutation class_representative(const IntegerPartition& mu);

// Pair partition operations.

/// zeta . m, with zeta in S_{2k}.
PairPartition act(const Permutation& zeta, const PairPartition& m);
/// Half the cycle lengths of the multigraph m union e_k, weakly decreasing.
IntegerPartition coset_type(const PairPartition& m);
/// Coset type of the pair (m, n): cycles of the multigraph m union n.
IntegerPartition relative_coset_type(const PairPartition& m, const PairPartition& n);
/// |m| = k - length of the coset type.
int length_stat(const PairPartition& m);
/// m with the block {2k-1, 2k} removed; requires that block.
PairPartition pairing_down(const PairPartition& m);
/// A pairing of the given coset type: on each run of 2*mu_j points o+1..o+2mu_j it uses
/// {o+1, o+2mu_j}, {o+2, o+3}, ..., {o+2mu_j-2, o+2mu_j-1}.
PairPartition coset_representative(const IntegerPartition& mu);
/// Lexicographically least sequence with i_r = i_s exactly when {r, s} is a block.
std::vector<int> strong_admissible_sequence(const PairPartition& m);
/// sigma_m with sigma_m(2j-1), sigma_m(2j) the j-th canonical block, so sigma_m . e_k = m.
Permutation pairing_permutation(const PairPartition& m);

inline constexpr std::string_view kEmptySymbol = "\xE2\x88\x85";  // U+2205

} // namespace wg

template <>
struct std::hash<wg::Permutation> {
    std::size_t operator()(const wg::Permutation& p) const noexcept;
};
template <>
struct std::hash<wg::PairPartition> {
    std::size_t operator()(const wg::PairPartition& m) const noexcept;
};
template <>
struct std::hash<wg::IntegerPartition> {
    std::size_t operator()(const wg::IntegerPartition& mu) const noexcept;
};
