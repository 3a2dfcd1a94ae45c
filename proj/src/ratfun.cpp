#include "wg/ratfun.hpp"

#include "wg/linsolve.hpp"

#include <algorithm>

namespace wg {

Polynomial::Polynomial(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactRational Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

ExactRational Polynomial::operator()(const ExactRational& x) const {
    ExactRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const ExactRational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        ExactRational mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        const bool unit = mag == 1;
        if (i == 0 || !unit) {
            out += mag.get_str();
            if (i > 0) out += "*";
        }
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

ExactRational RationalFunctionRep::operator()(const ExactRational& x) const {
    return numerator(x) / denominator(x);
}

std::string RationalFunctionRep::to_string(const std::string& var) const {
    // Printed with coprime integer coefficients and a positive leading denominator coefficient.
    BigInt l = 1, g = 0;
    for (const auto* p : {&numerator, &denominator}) {
        for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    for (const auto* p : {&numerator, &denominator}) {
        for (const auto& c : p->coeffs()) {
            const BigInt v = c.get_num() * (l / c.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
    }
    ExactRational scale = ExactRational(l) / ExactRational(g == 0 ? BigInt(1) : g);
    if (denominator.coeff(denominator.degree()) < 0) scale = -scale;
    auto scaled = [&](const Polynomial& p) {
        std::vector<ExactRational> c(p.coeffs());
        for (auto& x : c) x *= scale;
        return Polynomial(std::move(c));
    };
    auto terms = [](const Polynomial& p) {
        return std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const ExactRational& c) { return c != 0; });
    };
    const Polynomial n = scaled(numerator);
    const Polynomial d = scaled(denominator);
    std::string num = n.to_string(var);
    if (d.degree() == 0 && d.coeff(0) == 1) return num;
    if (terms(n) > 1) num = "(" + num + ")";
    std::string den = d.to_string(var);
    if (terms(d) > 1 || d.coeff(d.degree()) != 1) den = "(" + den + ")";
    return num + "/" + den;
}

std::vector<ExactRational> RationalFunctionRep::expansion_at_infinity(int max_n) const {
    const int p = numerator.degree();
    const int q = denominator.degree();
    std::vector<ExactRational> out(static_cast<std::size_t>(max_n) + 1, ExactRational(0));
    if (p < 0) return out;
    if (p > q) throw std::domain_error("expansion at infinity needs deg numerator <= deg denominator");
    // With x = 1/d: N/D = x^(q-p) * Nrev(x) / Drev(x), Drev(0) = leading coefficient of D.
    const int shift = q - p;
    const int terms = max_n - shift + 1;
    if (terms <= 0) return out;
    auto nrev = [&](int j) { return numerator.coeff(p - j); };
    auto drev = [&](int j) { return denominator.coeff(q - j); };
    std::vector<ExactRational> s(static_cast<std::size_t>(terms));
    const ExactRational lead = drev(0);
    for (int j = 0; j < terms; ++j) {
        ExactRational acc = nrev(j);
        for (int i = 1; i <= j && i <= q; ++i) acc -= drev(i) * s[static_cast<std::size_t>(j - i)];
        s[static_cast<std::size_t>(j)] = acc / lead;
    }
    for (int j = 0; j < terms; ++j) out[static_cast<std::size_t>(j + shift)] = s[static_cast<std::size_t>(j)];
    return out;
}

namespace {

std::optional<RationalFunctionRep> fit(const std::vector<std::pair<long, ExactRational>>& pts, int p,
                                       int q) {
    const std::size_t unknowns = static_cast<std::size_t>(p + 1 + q);
    LinearSystem sys(unknowns);
    for (std::size_t r = 0; r < unknowns; ++r) {
        const ExactRational x(pts[r].first);
        const ExactRational& y = pts[r].second;
        std::vector<ExactRational> row(unknowns);
        ExactRational xp = 1;
        for (int j = 0; j <= p; ++j, xp *= x) row[static_cast<std::size_t>(j)] = xp;
        xp = 1;
        for (int j = 0; j < q; ++j, xp *= x) row[static_cast<std::size_t>(p + 1 + j)] = -y * xp;
        sys.add_row(std::move(row), y * xp);
    }
    std::vector<ExactRational> sol;
    try {
        sol = sys.solve();
    } catch (const SingularSystem&) {
        return std::nullopt;
    }
    std::vector<ExactRational> num(sol.begin(), sol.begin() + p + 1);
    std::vector<ExactRational> den(sol.begin() + p + 1, sol.end());
    den.push_back(1);
    RationalFunctionRep rep{Polynomial(std::move(num)), Polynomial(std::move(den)), 0, {}};
    for (const auto& [x, y] : pts) {
        const ExactRational dx = rep.denominator(ExactRational(x));
        if (dx == 0 || rep.numerator(ExactRational(x)) / dx != y) return std::nullopt;
    }
    return rep;
}

} // namespace

RationalFunctionRep reconstruct(const Evaluator& eval, long start, int holdout, int max_total_degree) {
    std::vector<std::pair<long, ExactRational>> pts;
    long next = start;
    int misses = 0;
    auto ensure = [&](std::size_t n) {
        while (pts.size() < n) {
            if (auto v = eval(next)) {
                pts.emplace_back(next, *v);
                misses = 0;
            } else if (++misses > 64) {
                throw DegreeCapExceeded("too many undefined evaluation points after x = " +
                                        std::to_string(next));
            }
            ++next;
        }
    };
    for (int total = 0; total <= max_total_degree; ++total) {
        ensure(static_cast<std::size_t>(total + 1 + holdout));
        for (int q = 0; q <= total; ++q) {
            if (auto rep = fit(pts, total - q, q)) {
                rep->validation_points = static_cast<int>(pts.size()) - (total + 1);
                rep->samples = pts;
                return *rep;
            }
        }
    }
    throw DegreeCapExceeded("no rational function of total degree <= " +
                            std::to_string(max_total_degree) + " fits the evaluations");
}

} // namespace wg
