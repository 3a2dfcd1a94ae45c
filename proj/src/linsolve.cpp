#include "wg/linsolve.hpp"

#include <string>
#include <utility>

namespace wg {

void LinearSystem::add_row(std::vector<ExactRational> coeffs, ExactRational rhs) {
    if (coeffs.size() != n_) throw std::invalid_argument("row width does not match unknown count");
    coeffs.push_back(std::move(rhs));
    rows_.push_back(std::move(coeffs));
}

namespace {

// Reduces the augmented matrix in place; returns the pivot column of each pivot row.
std::vector<std::size_t> eliminate(std::vector<std::vector<ExactRational>>& m, std::size_t n) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m.size(); ++col) {
        std::size_t pick = row;
        while (pick < m.size() && m[pick][col] == 0) ++pick;
        if (pick == m.size()) continue;
        std::swap(m[row], m[pick]);
        const ExactRational inv = 1 / m[row][col];
        for (std::size_t c = col; c <= n; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const ExactRational f = m[r][col];
            for (std::size_t c = col; c <= n; ++c) {
                if (m[row][c] != 0) m[r][c] -= f * m[row][c];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t LinearSystem::rank() const {
    auto m = rows_;
    return eliminate(m, n_).size();
}

std::vector<ExactRational> LinearSystem::solve() const {
    auto m = rows_;
    const auto pivots = eliminate(m, n_);
    const std::size_t rank = pivots.size();
    for (std::size_t r = rank; r < m.size(); ++r) {
        if (m[r][n_] != 0) {
            throw SingularSystem("inconsistent linear system (rank " + std::to_string(rank) + ")",
                                 rank, true);
        }
    }
    if (rank < n_) {
        throw SingularSystem("singular linear system: rank " + std::to_string(rank) + " < " +
                                 std::to_string(n_) + " unknowns",
                             rank, false);
    }
    std::vector<ExactRational> x(n_);
    for (std::size_t r = 0; r < rank; ++r) x[pivots[r]] = m[r][n_];
    return x;
}

} // namespace wg
