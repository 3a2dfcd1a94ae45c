#pragma once

#include "wg/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wg {

/// The system has no unique solution (rank deficient) or is inconsistent.
class SingularSystem : public std::runtime_error {
public:
    SingularSystem(const std::string& what, std::size_t rank, bool inconsistent)
        : std::runtime_error(what), rank_(rank), inconsistent_(inconsistent) {}
    std::size_t rank() const noexcept { return rank_; }
    bool inconsistent() const noexcept { return inconsistent_; }

private:
    std::size_t rank_;
    bool inconsistent_;
};

/// Exact linear system A x = b over the rationals. Rows may outnumber unknowns;
/// extra rows must be consistent with the unique solution.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t unknowns) : n_(unknowns) {}

    std::size_t unknowns() const noexcept { return n_; }
    std::size_t rows() const noexcept { return rows_.size(); }

    /// Adds a row; coefficients are indexed by unknown.
    void add_row(std::vector<ExactRational> coeffs, ExactRational rhs);

    /// Gauss-Jordan elimination with exact zero-pivot detection.
    /// Throws SingularSystem when the rank is below the number of unknowns or
    /// when a redundant row contradicts the others.
    std::vector<ExactRational> solve() const;

    /// Rank of the coefficient matrix.
    std::size_t rank() const;

private:
    std::size_t n_;
    std::vector<std::vector<ExactRational>> rows_;
};

} // namespace wg
