#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extactic/error.hpp"
#include "extactic/rational.hpp"
#include "extactic/varset.hpp"

namespace extactic {

using Expvec = std::vector<std::uint32_t>;

// Graded-lex descending: higher total degree first, ties broken by the first
// differing exponent (larger wins).  begin() of the term map is the leading
// term, which is what content normalization and printing key off.
struct GrlexGreater {
    bool operator()(const Expvec& a, const Expvec& b) const {
        std::uint64_t da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da > db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

// Sparse multivariate polynomial with exact rational coefficients.  The
// universal value type: no stored zero coefficients, exponent vectors have
// length equal to the variable count of the shared context.
class MultiPoly {
public:
    using TermMap = std::map<Expvec, Rational, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(VarsPtr vars) : vars_(std::move(vars)) {}

    static MultiPoly zero(VarsPtr vars) { return MultiPoly(std::move(vars)); }
    static MultiPoly constant(VarsPtr vars, const Rational& c);
    static MultiPoly variable(VarsPtr vars, std::size_t index, std::uint32_t power = 1);
    static MultiPoly variable(VarsPtr vars, const std::string& name, std::uint32_t power = 1);
    static MultiPoly monomial(VarsPtr vars, Expvec exps, const Rational& c);

    const VarsPtr& vars() const { return vars_; }
    std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // requires is_constant()

    // Total degree; -1 for the zero polynomial.
    long degree() const;
    long degree_in(std::size_t var) const;
    bool is_homogeneous() const;

    Rational coeff(const Expvec& exps) const;
    const Rational& leading_coeff() const; // requires !is_zero()
    const Expvec& leading_exps() const;    // requires !is_zero()

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { lhs += rhs; return lhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { lhs -= rhs; return lhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);

    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator*(MultiPoly p, const Rational& c) { p *= c; return p; }
    friend MultiPoly operator*(const Rational& c, MultiPoly p) { p *= c; return p; }

    bool operator==(const MultiPoly& rhs) const;
    bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

    MultiPoly pow(std::uint32_t e) const;
    MultiPoly derivative(std::size_t var) const;

    // Coefficients of powers of `var`, as polynomials in the same context
    // with that exponent zeroed.  Index = power of var.
    std::vector<MultiPoly> coeffs_in(std::size_t var) const;
    MultiPoly coeff_of(std::size_t var, std::uint32_t power) const;
    // Leading coefficient as polynomial in the remaining variables.
    MultiPoly leading_coeff_in(std::size_t var) const;

    // Substitute `var` by `value` (same context).  Horner over coeffs_in.
    MultiPoly subst(std::size_t var, const MultiPoly& value) const;
    // Simultaneous substitution of every variable; values share a target
    // context which becomes the context of the result.
    MultiPoly subst_all(const std::vector<MultiPoly>& values) const;
    Rational eval(const std::vector<Rational>& point) const;

    // Rational content: gcd of coefficients carrying the sign of the leading
    // coefficient; zero polynomial has content 0.
    Rational content() const;
    // content-stripped, leading coefficient positive
    MultiPoly primitive_part() const;

    // Re-express over a context that contains (at least) all used variables,
    // matching by name.
    MultiPoly with_vars(const VarsPtr& target) const;

    std::string to_string() const;

    void add_term(const Expvec& exps, const Rational& c); // accumulate, drops zeros

private:
    VarsPtr vars_;
    TermMap terms_;

    void check_same_context(const MultiPoly& other) const;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

} // namespace extactic
