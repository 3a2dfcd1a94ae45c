#pragma once

#include "wg/exact.hpp"
#include "wg/graphs.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wg {

BigInt catalan(int n);
/// prod_i Cat(mu_i - 1).
BigInt catalan_product(const IntegerPartition& mu);
/// (-1)^{|sigma|} prod_i Cat(mu_i - 1), mu the cycle-type.
BigInt moebius(const Permutation& sigma);
/// Number of shortest paths from the closed form. Must equal count_paths(kind, node, |node|).
BigInt shortest_count(GraphKind kind, const GraphNode& node);

/// One checked instance: lower <= value and value <= upper.
/// Bounds involving k^{7/2} are compared after squaring, so ratios against them are stored squared.
struct BoundInstance {
    std::string class_key;
    int g = 0;
    /// Dimension, or 0 for purely combinatorial statements.
    long d = 0;
    ExactRational value;
    /// value / lower bound (>= 1 when the lower bound holds); empty when the bound is 0.
    std::optional<ExactRational> lower_ratio;
    /// (value / upper bound)^2, or the analogous squared slack (<= 1 when the upper bound holds);
    /// empty when the upper statement does not apply.
    std::optional<ExactRational> upper_ratio_sq;
    bool lower_ok = true;
    bool upper_ok = true;
};

struct BoundReport {
    std::string family;
    std::string statement;
    int k = 0;
    int gmin = 0;
    int gmax = 0;
    std::vector<BoundInstance> instances;
    bool lower_ok = true;
    bool upper_ok = true;
    /// Indices into instances of the smallest lower ratio and the largest squared upper ratio.
    std::optional<std::size_t> tightest_lower;
    std::optional<std::size_t> tightest_upper;

    bool passed() const { return lower_ok && upper_ok; }
    void add(BoundInstance inst);
};

/// (k-1)^g #P(s,|s|) <= #P(s,|s|+2g) <= (6k^{7/2})^g #P(s,|s|) for every cycle-type, g <= gmax.
BoundReport certify_unitary_bounds(int k, int gmax);
/// d^2/(d^2-k+1) <= (-1)^{|s|} d^{k+|s|} Wg^U(s,d) / #P(s,|s|) for d >= k, and the upper
/// bound 1/(1 - 6k^{7/2}/d^2) when d^4 > 36k^7.
BoundReport certify_wg_ratio_unitary(int k, long d);
/// (2k-2)^g #P(m,|m|) <= #P(m,|m|+2g) and #P(m,|m|+g) <= (12k^{7/2})^g #P(m,|m|).
BoundReport certify_orthogonal_bounds(int k, int gmax);
/// #P/(1-(k-1)/(2d^2)) <= (2d)^{|m|+k}|Wg^Sp(m,d)| <= #P/(1-6k^{7/2}/d); needs d^2 > 36k^7.
BoundReport certify_sp_ratio(int k, long d);
/// #P (1-24k^{7/2}/d)/(1-144k^7/d^2) <= (-1)^{|m|} d^{|m|+k} Wg^O(m,d) <= #P/(1-144k^7/d^2);
/// needs d^2 > 144k^7.
BoundReport certify_orthogonal_ratio(int k, long d);

/// Smallest d with d^4 > 36k^7, d^2 > 36k^7, d^2 > 144k^7 respectively.
long unitary_ratio_threshold(int k);
long sp_ratio_threshold(int k);
long orthogonal_ratio_threshold(int k);

/// #P(t s, |t s|)^2 <= 36 k^3 #P(s, |s|)^2 over all s in S_k and all transpositions t.
BoundReport certify_neighborhood(int k);
/// (k-1) #P(s, l) <= #P(s, l+2) for every cycle-type and |s| <= l <= |s| + extra.
BoundReport certify_injection(int k, int extra);

/// Dyck paths with steps +-1, never below zero, back at height zero after i_1, i_1+i_2, ...
/// steps. The length is the number of steps, |I| = i_1 + ... + i_r.
std::vector<std::vector<int>> dyck_paths(const std::vector<int>& I);
/// Sum of heights after each step; (+1,-1,+1,-1) has area 2.
int dyck_area(const std::vector<int>& path);
/// Sum of areas over D_I with I = (mu_1 - 1, ..., mu_l - 1).
BigInt dyck_area_sum(const IntegerPartition& mu);
/// Area sum over D_I with I = (2(mu_1 - 1), ..., 2(mu_l - 1)).
BigInt dyck_area_sum_doubled(const IntegerPartition& mu);

struct DyckComparison {
    IntegerPartition mu;
    BigInt area_sum;
    /// #P(m, |m| + 1) by direct counting on a pairing of coset-type mu.
    BigInt direct;
    /// Informational: the same sum with each part read as 2(mu_i - 1) steps.
    BigInt doubled_length_sum;
    bool agrees() const { return area_sum == direct; }
};

DyckComparison compare_dyck_area(const IntegerPartition& mu);

} // namespace wg
