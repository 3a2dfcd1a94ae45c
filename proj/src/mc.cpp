#include "wg/mc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

namespace wg::mc {

namespace {

CMatrix complex_gaussian(int d, Rng& rng) {
    std::normal_distribution<double> n(0.0, std::sqrt(0.5));
    CMatrix z(d, d);
    for (int c = 0; c < d; ++c) {
        for (int r = 0; r < d; ++r) {
            const double re = n(rng);
            const double im = n(rng);
            z(r, c) = {re, im};
        }
    }
    return z;
}

template <class Matrix>
Matrix phase_fixed_q(const Matrix& z) {
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    const Matrix& r = qr.matrixQR();
    for (Eigen::Index j = 0; j < z.cols(); ++j) {
        const auto diag = r(j, j);
        const double mag = std::abs(diag);
        if (mag > 0) q.col(j) *= diag / mag;
    }
    return q;
}

// Pairwise summation for a fixed, thread-independent reduction order.
template <class T>
T pairwise_sum(const T* v, std::size_t n) {
    if (n <= 8) {
        T s{};
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

double entry_max(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

} // namespace

CMatrix haar_unitary(int d, Rng& rng) {
    if (d < 1) throw DomainError("haar_unitary: d >= 1");
    return phase_fixed_q<CMatrix>(complex_gaussian(d, rng));
}

RMatrix haar_orthogonal(int d, Rng& rng) {
    if (d < 1) throw DomainError("haar_orthogonal: d >= 1");
    std::normal_distribution<double> n(0.0, 1.0);
    RMatrix z(d, d);
    for (int c = 0; c < d; ++c) {
        for (int r = 0; r < d; ++r) z(r, c) = n(rng);
    }
    return phase_fixed_q<RMatrix>(z);
}

CMatrix sample_coe(int d, Rng& rng) {
    const CMatrix u = haar_unitary(d, rng);
    return u * u.transpose();
}

CMatrix sample_aiii(int a, int b, Rng& rng) {
    if (a < 0 || b < 0 || a + b < 1) throw DomainError("sample_aiii: need a, b >= 0 and a + b >= 1");
    const CMatrix g = haar_unitary(a + b, rng);
    Eigen::VectorXcd signs(a + b);
    for (int r = 0; r < a + b; ++r) signs(r) = r < a ? 1.0 : -1.0;
    return g * signs.asDiagonal() * g.adjoint();
}

EnsembleSpec EnsembleSpec::from(const MomentSpec& spec) {
    EnsembleSpec e;
    e.family = spec.family;
    if (spec.d < 1 || spec.d > std::numeric_limits<int>::max()) throw DomainError("ensemble dimension must be >= 1");
    e.d = static_cast<int>(spec.d);
    switch (spec.family) {
    case Family::SP:
        throw DomainError("no Monte Carlo oracle for the symplectic family (no exact target: Wg^Sp is known only up to sign)");
    case Family::AIII:
        if (std::labs(spec.dminus) > spec.d || (spec.d - spec.dminus) % 2 != 0) {
            throw DomainError("A III signature needs |dminus| <= d and d - dminus even (got d=" +
                              std::to_string(spec.d) + ", dminus=" + std::to_string(spec.dminus) + ")");
        }
        e.a = static_cast<int>((spec.d + spec.dminus) / 2);
        e.b = static_cast<int>((spec.d - spec.dminus) / 2);
        break;
    default:
        break;
    }
    return e;
}

double constraint_violation(const EnsembleSpec& e, const CMatrix& m) {
    const auto id = CMatrix::Identity(m.rows(), m.cols());
    double v = entry_max(m * m.adjoint() - id);
    switch (e.family) {
    case Family::O: v = std::max(v, m.imag().cwiseAbs().maxCoeff()); break;
    case Family::COE: v = std::max(v, entry_max(m - m.transpose())); break;
    case Family::AIII:
        v = std::max(v, entry_max(m - m.adjoint()));
        v = std::max(v, std::abs(m.trace() - std::complex<double>(e.a - e.b, 0)));
        break;
    default: break;
    }
    return v;
}

std::complex<double> evaluate_monomial(const MomentSpec& s, const CMatrix& m) {
    std::complex<double> p = 1.0;
    auto at = [&](int r, int c) { return m(r - 1, c - 1); };
    switch (s.family) {
    case Family::U:
        for (std::size_t r = 0; r < s.rows.size(); ++r) p *= at(s.rows[r], s.cols[r]);
        for (std::size_t r = 0; r < s.crows.size(); ++r) p *= std::conj(at(s.crows[r], s.ccols[r]));
        break;
    case Family::O:
    case Family::AIII:
        for (std::size_t r = 0; r < s.rows.size(); ++r) p *= at(s.rows[r], s.cols[r]);
        break;
    case Family::COE:
        for (std::size_t r = 0; r + 1 < s.rows.size(); r += 2) p *= at(s.rows[r], s.rows[r + 1]);
        for (std::size_t r = 0; r + 1 < s.crows.size(); r += 2) p *= std::conj(at(s.crows[r], s.crows[r + 1]));
        break;
    case Family::SP:
        throw DomainError("no Monte Carlo oracle for the symplectic family");
    }
    return p;
}

CMatrix draw(const EnsembleSpec& e, std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    Rng rng(seq);
    switch (e.family) {
    case Family::U: return haar_unitary(e.d, rng);
    case Family::O: return haar_orthogonal(e.d, rng).cast<std::complex<double>>();
    case Family::COE: return sample_coe(e.d, rng);
    case Family::AIII: return sample_aiii(e.a, e.b, rng);
    case Family::SP: break;
    }
    throw DomainError("no Monte Carlo oracle for the symplectic family");
}

std::vector<MomentEstimate> estimate_moments(const std::vector<MomentSpec>& specs, std::uint64_t n,
                                             std::uint64_t seed, int threads) {
    if (n < 1000) throw DomainError("estimate_moment: at least 1000 samples required");
    if (specs.empty()) return {};
    const EnsembleSpec e = EnsembleSpec::from(specs.front());
    for (const auto& spec : specs) {
        const EnsembleSpec other = EnsembleSpec::from(spec);
        if (other.family != e.family || other.d != e.d || other.a != e.a || other.b != e.b) {
            throw DomainError("estimate_moments: all monomials must share one ensemble");
        }
        for (const IndexSeq* seq : {&spec.rows, &spec.cols, &spec.crows, &spec.ccols}) {
            for (int x : *seq) {
                if (x < 1 || x > e.d) {
                    throw DomainError("index " + std::to_string(x) + " outside 1.." + std::to_string(e.d));
                }
            }
        }
    }
    const std::size_t m = specs.size();
    // values[s * n + idx]: sample idx of monomial s.
    std::vector<std::complex<double>> values(m * n);
    unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n));
    std::vector<double> worst(workers, 0.0);
    auto work = [&](unsigned w) {
        const std::uint64_t lo = n * w / workers;
        const std::uint64_t hi = n * (w + 1) / workers;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            const CMatrix mat = draw(e, seed, idx);
            worst[w] = std::max(worst[w], constraint_violation(e, mat));
            for (std::size_t s = 0; s < m; ++s) values[s * n + idx] = evaluate_monomial(specs[s], mat);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    const double violation = *std::max_element(worst.begin(), worst.end());
    std::vector<MomentEstimate> out;
    std::vector<double> dre(n), dim(n);
    for (std::size_t s = 0; s < m; ++s) {
        const std::complex<double>* v = values.data() + s * n;
        MomentEstimate est;
        est.samples = n;
        est.seed = seed;
        est.max_constraint_violation = violation;
        est.mean = pairwise_sum(v, n) / static_cast<double>(n);
        for (std::uint64_t i = 0; i < n; ++i) {
            const std::complex<double> dv = v[i] - est.mean;
            dre[i] = dv.real() * dv.real();
            dim[i] = dv.imag() * dv.imag();
        }
        const double denom = static_cast<double>(n - 1) * static_cast<double>(n);
        est.se_re = std::sqrt(pairwise_sum(dre.data(), n) / denom);
        est.se_im = std::sqrt(pairwise_sum(dim.data(), n) / denom);
        out.push_back(est);
    }
    return out;
}

MomentEstimate estimate_moment(const MomentSpec& spec, std::uint64_t n, std::uint64_t seed, int threads) {
    return estimate_moments({spec}, n, seed, threads).front();
}

namespace {

double z_score(double diff, double se) {
    if (se > 0) return std::abs(diff) / se;
    return std::abs(diff) <= 1e-9 ? 0.0 : std::numeric_limits<double>::infinity();
}

} // namespace

std::vector<ZReport> compare_with_exact(const std::vector<MomentSpec>& specs, std::uint64_t n,
                                        std::uint64_t seed, int threads, double threshold) {
    std::vector<ExactRational> exact;
    for (const auto& s : specs) exact.push_back(exact_moment(s));
    const auto est = estimate_moments(specs, n, seed, threads);
    std::vector<ZReport> out;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        ZReport r;
        r.spec = specs[i];
        r.threshold = threshold;
        r.exact = exact[i];
        r.estimate = est[i];
        r.z_re = z_score(r.estimate.mean.real() - r.exact.get_d(), r.estimate.se_re);
        r.z_im = z_score(r.estimate.mean.imag(), r.estimate.se_im);
        out.push_back(std::move(r));
    }
    return out;
}

ZReport compare_with_exact(const MomentSpec& spec, std::uint64_t n, std::uint64_t seed, int threads,
                           double threshold) {
    return compare_with_exact(std::vector<MomentSpec>{spec}, n, seed, threads, threshold).front();
}

} // namespace wg::mc
