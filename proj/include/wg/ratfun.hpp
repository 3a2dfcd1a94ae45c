#pragma once

#include "wg/rational.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wg {

/// Dense polynomial, coefficients from the constant term up. Trailing zeros are trimmed.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<ExactRational> coeffs);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<ExactRational>& coeffs() const noexcept { return coeffs_; }
    ExactRational coeff(int i) const;
    ExactRational operator()(const ExactRational& x) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// "d^3-d", "1", "2*d+1/2".
    std::string to_string(const std::string& var = "d") const;

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<ExactRational> coeffs_;
};

class DegreeCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// numerator / denominator in lowest terms with a monic denominator.
struct RationalFunctionRep {
    Polynomial numerator;
    Polynomial denominator;
    /// Points the fit was checked on beyond the ones used to determine it.
    int validation_points = 0;
    /// Every (x, value) pair the reconstruction saw.
    std::vector<std::pair<long, ExactRational>> samples;

    ExactRational operator()(const ExactRational& x) const;
    std::string to_string(const std::string& var = "d") const;

    /// Coefficients of x^{-n}, n = 0..max_n, of the expansion at infinity.
    /// Requires deg numerator <= deg denominator.
    std::vector<ExactRational> expansion_at_infinity(int max_n) const;
};

/// Evaluation oracle: returns nullopt where the function is undefined (pole or singular solve).
using Evaluator = std::function<std::optional<ExactRational>(long)>;

/// Adaptive rational interpolation. Tries total degrees 0, 1, 2, ... and, within a total,
/// denominator degrees 0..total; each hypothesis is fitted on the first p+q+1 sample
/// points (x = start, start+1, ...) and must reproduce at least `holdout` further samples.
RationalFunctionRep reconstruct(const Evaluator& eval, long start, int holdout = 3,
                                int max_total_degree = 64);

} // namespace wg
