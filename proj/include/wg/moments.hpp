#pragma once

#include "wg/exact.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace wg {

using IndexSeq = std::vector<int>;

/// delta_sigma(i, i') = 1 iff i_{sigma(r)} = i'_r for all r.
bool delta_sigma(const Permutation& sigma, const IndexSeq& i, const IndexSeq& iprime);
/// Delta_m(i) = 1 iff i_r = i_s for every block {r, s} of m.
bool delta_admissible(const PairPartition& m, const IndexSeq& i);
/// i_r = i_s exactly when {r, s} is a block of m.
bool strongly_admissible(const PairPartition& m, const IndexSeq& i);

/// Every sigma with delta_sigma(i, i') = 1, built position by position.
std::vector<Permutation> matching_permutations(const IndexSeq& i, const IndexSeq& iprime);
/// Every pair partition m with Delta_m(i) = 1.
std::vector<PairPartition> admissible_pairings(const IndexSeq& i);

/// Integral of u_{i1 j1}...u_{ik jk} conj(u_{i'1 j'1}...u_{i'l j'l}) over U(d).
/// Unequal numbers of plain and conjugated factors give exactly 0.
ExactRational moment_unitary(const IndexSeq& i, const IndexSeq& j, const IndexSeq& iprime,
                             const IndexSeq& jprime, long d, SolveOptions opts = {});
/// Integral of o_{i1 j1}...o_{in jn} over O(d). Odd n gives exactly 0.
ExactRational moment_orthogonal(const IndexSeq& i, const IndexSeq& j, long d, SolveOptions opts = {});
/// Integral of s_{i1 i2}...s_{i(2k-1) i(2k)} conj(s_{j1 j2}...s_{j(2k-1) j(2k)}) over COE(d).
ExactRational moment_coe(const IndexSeq& i, const IndexSeq& j, long d, SolveOptions opts = {});
/// Integral of s_{i1 j1}...s_{ik jk} over the A III space with d = a + b, dminus = a - b.
ExactRational moment_aiii(const IndexSeq& i, const IndexSeq& j, long d, long dminus,
                          SolveOptions opts = {});

/// A monomial integral for one family.
/// U: rows/cols index the plain factors, crows/ccols the conjugated ones.
/// O, AIII: rows/cols. COE: rows = plain index pairs, crows = conjugated index pairs.
struct MomentSpec {
    Family family = Family::U;
    IndexSeq rows;
    IndexSeq cols;
    IndexSeq crows;
    IndexSeq ccols;
    long d = 1;
    long dminus = 0;

    /// "rows;cols[;crows;ccols]" for U, "rows;cols" for O and AIII, "rows;crows" for COE.
    /// The two-part unitary form is the squared modulus: crows = rows, ccols = cols.
    static MomentSpec parse(Family family, std::string_view text, long d, long dminus = 0);
    std::string to_string() const;
    /// True when the integrand is identically killed by a phase or sign symmetry.
    bool vanishes_by_symmetry() const;
};

ExactRational exact_moment(const MomentSpec& spec, SolveOptions opts = {});

/// Comma-separated positive integers.
IndexSeq parse_indices(std::string_view text);
std::string format_indices(const IndexSeq& seq);

/// Left side of the unitarity sum rule for sigma in S_k:
/// sum_{c=1}^d of the integral of u_11...u_{k-1,k-1} u_{k,c} conj(u_{s(1),1}...u_{s(k-1),k-1} u_{s(k),c}).
/// By unitarity it equals [sigma(k) = k] Wg^U(sigma_down, d).
ExactRational unitary_sum_rule(const Permutation& sigma, long d);

} // namespace wg
