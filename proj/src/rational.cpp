#include "extactic/rational.hpp"

#include "extactic/error.hpp"

namespace extactic {

Rational rat_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    bool invert = exp < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    r.canonicalize();
    if (invert) {
        if (sgn(r) == 0) throw InputError("rat_pow: zero raised to a negative power");
        r = 1 / r;
    }
    return r;
}

Rational rat_from_string(const std::string& text) {
    try {
        Rational q(text);
        q.canonicalize();
        if (sgn(q.get_den()) == 0) throw InputError("rational with zero denominator: " + text);
        return q;
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational literal: " + text);
    }
}

std::string rat_to_string(const Rational& q) { return q.get_str(); }

Rational rat_gcd(const Rational& a, const Rational& b) {
    Int num, den;
    mpz_gcd(num.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    Rational g(num, den);
    g.canonicalize();
    return g;
}

} // namespace extactic
