#include "wg/rational.hpp"

#include "wg/symcore.hpp"

namespace wg {

std::string to_string(const ExactRational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

ExactRational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&](const char* why) {
        return DomainError("malformed rational '" + s + "': " + why);
    };
    if (s.empty()) throw bad("empty");
    for (char c : s) {
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9'))) throw bad("unexpected character");
    }
    ExactRational q;
    if (q.set_str(s, 10) != 0) throw bad("not a fraction");
    if (q.get_den() == 0) throw bad("zero denominator");
    ExactRational canon = q;
    canon.canonicalize();
    if (canon.get_str() != s) throw bad("not in lowest terms");
    return canon;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

ExactRational pow(const ExactRational& base, unsigned long exponent) {
    ExactRational out(pow(BigInt(base.get_num()), exponent), pow(BigInt(base.get_den()), exponent));
    out.canonicalize();
    return out;
}

ExactRational ipow(const ExactRational& base, long exponent) {
    if (exponent >= 0) return pow(base, static_cast<unsigned long>(exponent));
    return 1 / pow(base, static_cast<unsigned long>(-exponent));
}

int sign(const ExactRational& q) { return sgn(q); }

ExactRational ratio(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("ratio: zero denominator");
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace wg
