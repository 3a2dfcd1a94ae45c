#pragma once

#include "wg/moments.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>

namespace wg::mc {

using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using Rng = std::mt19937_64;

/// Haar unitary from the QR factorization of a complex Gaussian matrix, with R's diagonal
/// rotated to the positive reals.
CMatrix haar_unitary(int d, Rng& rng);
/// Haar orthogonal, same construction over the reals.
RMatrix haar_orthogonal(int d, Rng& rng);
/// u u^T with u Haar unitary.
CMatrix sample_coe(int d, Rng& rng);
/// g diag(1^a, (-1)^b) g^* with g Haar unitary.
CMatrix sample_aiii(int a, int b, Rng& rng);

struct EnsembleSpec {
    Family family = Family::U;
    int d = 1;
    int a = 0;
    int b = 0;

    /// Signature from d and dminus = a - b (A III only).
    static EnsembleSpec from(const MomentSpec& spec);
};

/// Largest entry of the defining-constraint residual of a sample:
/// U: |UU* - I|; O: |OO^T - I|; COE: unitarity and |S - S^T|; A III: unitarity, |S - S*| and |tr S - (a-b)|.
double constraint_violation(const EnsembleSpec& e, const CMatrix& m);

/// Value of the spec's monomial on one sample.
std::complex<double> evaluate_monomial(const MomentSpec& spec, const CMatrix& m);

/// One sample, drawn from the substream (seed, index).
CMatrix draw(const EnsembleSpec& e, std::uint64_t seed, std::uint64_t index);

struct MomentEstimate {
    std::complex<double> mean;
    double se_re = 0;
    double se_im = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double max_constraint_violation = 0;
};

/// Mean over n independent samples; bit-reproducible for fixed (spec, n, seed) regardless of threads.
MomentEstimate estimate_moment(const MomentSpec& spec, std::uint64_t n, std::uint64_t seed, int threads = 0);

/// Several monomials over one shared set of samples. All specs must describe the same ensemble.
std::vector<MomentEstimate> estimate_moments(const std::vector<MomentSpec>& specs, std::uint64_t n,
                                             std::uint64_t seed, int threads = 0);

struct ZReport {
    MomentSpec spec;
    ExactRational exact;
    MomentEstimate estimate;
    double z_re = 0;
    double z_im = 0;
    double threshold = 5.0;
    bool passed() const { return z_re <= threshold && z_im <= threshold; }
};

/// |empirical - exact| / se per component. A zero standard error counts as z = 0 when the
/// difference is below 1e-9, and as infinity otherwise.
ZReport compare_with_exact(const MomentSpec& spec, std::uint64_t n, std::uint64_t seed, int threads = 0,
                           double threshold = 5.0);
/// Batch comparison over shared samples.
std::vector<ZReport> compare_with_exact(const std::vector<MomentSpec>& specs, std::uint64_t n,
                                        std::uint64_t seed, int threads = 0, double threshold = 5.0);

} // namespace wg::mc
