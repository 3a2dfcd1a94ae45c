#include "doctest.h"

#include "wg/linsolve.hpp"
#include "wg/ratfun.hpp"
#include "wg/rational.hpp"

using namespace wg;

TEST_CASE("rational text round trip") {
    CHECK(to_string(ratio(6, -8)) == "-3/4");
    CHECK(to_string(ExactRational(5)) == "5");
    CHECK(parse_rational("-1/120") == ratio(-1, 120));
    CHECK(parse_rational("0") == 0);
    CHECK_THROWS(parse_rational("2/4"));
    CHECK_THROWS(parse_rational("3/1"));
    CHECK_THROWS(parse_rational("1/-2"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_rational(""));
    CHECK_THROWS(ratio(1, 0));
    for (int p = -12; p <= 12; ++p) {
        for (int q = 1; q <= 9; ++q) {
            const auto r = ratio(p, q);
            CHECK(parse_rational(to_string(r)) == r);
        }
    }
}

TEST_CASE("powers and signs") {
    CHECK(ipow(ExactRational(2), -3) == ratio(1, 8));
    CHECK(ipow(ExactRational(-3), 3) == -27);
    CHECK(ipow(ExactRational(7), 0) == 1);
    CHECK(pow(BigInt(10), 30) == BigInt("1000000000000000000000000000000"));
    CHECK(sign(ratio(-1, 3)) == -1);
    CHECK(sign(ExactRational(0)) == 0);
}

TEST_CASE("exact linear solves") {
    LinearSystem sys(2);
    sys.add_row({2, 1}, 5);
    sys.add_row({1, -1}, 1);
    sys.add_row({3, 0}, 6);
    const auto x = sys.solve();
    CHECK(x[0] == 2);
    CHECK(x[1] == 1);

    LinearSystem rank_deficient(2);
    rank_deficient.add_row({1, 2}, 3);
    rank_deficient.add_row({2, 4}, 6);
    CHECK(rank_deficient.rank() == 1);
    try {
        (void)rank_deficient.solve();
        FAIL("expected a singular system");
    } catch (const SingularSystem& e) {
        CHECK(e.rank() == 1);
        CHECK_FALSE(e.inconsistent());
    }

    LinearSystem contradictory(1);
    contradictory.add_row({1}, 1);
    contradictory.add_row({2}, 3);
    try {
        (void)contradictory.solve();
        FAIL("expected an inconsistent system");
    } catch (const SingularSystem& e) {
        CHECK(e.inconsistent());
    }
}

TEST_CASE("polynomials") {
    const Polynomial p({0, -1, 0, 1});
    CHECK(p.degree() == 3);
    CHECK(p.to_string() == "d^3-d");
    CHECK(p(ExactRational(3)) == 24);
    CHECK(Polynomial({0, 0}).is_zero());
    CHECK(Polynomial({ratio(1, 2), 2}).to_string() == "2*d+1/2");
}

TEST_CASE("rational reconstruction") {
    // (d+1)/(d^3+d^2-2d)
    const Evaluator f = [](long x) -> std::optional<ExactRational> {
        const ExactRational d(x);
        const ExactRational den = d * d * d + d * d - 2 * d;
        if (den == 0) return std::nullopt;
        return (d + 1) / den;
    };
    const auto r = reconstruct(f, 5);
    CHECK(r.numerator == Polynomial({1, 1}));
    CHECK(r.denominator == Polynomial({0, -2, 1, 1}));
    CHECK(r.validation_points >= 3);
    for (long x = 3; x <= 30; ++x) CHECK(r(ExactRational(x)) == *f(x));

    const auto series = r.expansion_at_infinity(4);
    // (d+1)/(d(d+2)(d-1)) = d^-2 - 0 d^-3 + 3 d^-4 ... : 1/d^2 (1 + 1/d)(1 - 1/d + 3/d^2 ...)
    CHECK(series[0] == 0);
    CHECK(series[1] == 0);
    CHECK(series[2] == 1);
    CHECK(series[3] == 0);
    CHECK(series[4] == 2);

    const Evaluator poles = [](long x) -> std::optional<ExactRational> {
        if (x == 7) return std::nullopt;
        return ExactRational(1) / ExactRational(x - 7);
    };
    const auto q = reconstruct(poles, 3);
    CHECK(q(ExactRational(20)) == ratio(1, 13));

    const Evaluator never = [](long x) -> std::optional<ExactRational> { return ExactRational(x) / (x * x + 1) + ExactRational(1) / (x * x * x * x * x + 2); };
    CHECK_THROWS_AS(reconstruct(never, 1, 3, 2), DegreeCapExceeded);
}
