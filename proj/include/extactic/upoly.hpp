#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extactic/rational.hpp"

namespace extactic {

// Dense univariate polynomial over Q.  c[i] is the coefficient of x^i; the
// vector carries no trailing zeros.  This is the hot layer under resultant
// interpolation, number-field arithmetic, and root isolation.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly constant(const Rational& v);
    static UPoly x(); // the monomial x

    const std::vector<Rational>& coeffs() const { return c_; }
    long deg() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& lc() const;
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    void set_coeff(std::size_t i, const Rational& v);

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator*(const Rational& s) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly derivative() const;
    Rational eval(const Rational& x) const;
    UPoly monic() const;
    UPoly shift_up(std::size_t k) const; // * x^k

    std::string to_string(const std::string& var = "t") const;

private:
    std::vector<Rational> c_;
    void trim();
};

// Field division: returns (quotient, remainder).
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly upoly_mod(const UPoly& a, const UPoly& b);
// Exact quotient; nullopt if the remainder is nonzero.
std::optional<UPoly> try_exact_div(const UPoly& a, const UPoly& b);

// gcd via integer subresultant PRS; result is primitive with positive lc
// (or monic over Q after .monic()).  gcd(0,0) = 0.
UPoly upoly_gcd(const UPoly& a, const UPoly& b);

// Resultant of a and b.  Integer subresultant PRS on the primitive parts
// with exact scale bookkeeping.
Rational upoly_resultant(const UPoly& a, const UPoly& b);

UPoly upoly_squarefree_part(const UPoly& a);
// Yun decomposition: list of (factor, multiplicity), factors monic.
std::vector<std::pair<UPoly, int>> upoly_squarefree_decomposition(const UPoly& a);

// All rational roots, found exactly (complete).  Input need not be square-free.
std::vector<Rational> upoly_rational_roots(const UPoly& a);

// Real root isolation of a square-free polynomial: disjoint open intervals
// (lo, hi) each containing exactly one real root, or exact rational roots
// (lo == hi).
struct RealRootInterval {
    Rational lo, hi;
    bool exact() const { return lo == hi; }
};
std::vector<RealRootInterval> upoly_isolate_real_roots(const UPoly& a);

} // namespace extactic
