#pragma once

#include <memory>
#include <vector>

#include "extactic/upoly.hpp"

namespace extactic {

// Thrown when an arithmetic step discovers a zero divisor: carries a proper
// monic factor of the modulus.  Callers split the computation over the factor
// and its cofactor (dynamic evaluation).
struct D5Split {
    UPoly factor;
};

// Q[z]/(M) with M monic and square-free but not necessarily irreducible.
// Elements are UPoly of degree < deg M.
class NumberField {
public:
    explicit NumberField(const UPoly& modulus, bool check_squarefree = true);

    const UPoly& modulus() const { return m_; }
    long degree() const { return m_.deg(); }

    UPoly reduce(const UPoly& a) const;
    bool is_zero(const UPoly& a) const { return reduce(a).is_zero(); }
    UPoly add(const UPoly& a, const UPoly& b) const { return reduce(a + b); }
    UPoly sub(const UPoly& a, const UPoly& b) const { return reduce(a - b); }
    UPoly mul(const UPoly& a, const UPoly& b) const { return reduce(a * b); }
    UPoly pow(UPoly a, unsigned long e) const;

    // Inverse modulo M; throws D5Split on a zero divisor, InvariantViolation
    // on zero.
    UPoly invert(const UPoly& a) const;
    UPoly divide(const UPoly& a, const UPoly& b) const { return mul(a, invert(b)); }

private:
    UPoly m_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Univariate polynomials over a number field, used during back-substitution.
class KUPoly {
public:
    KUPoly() = default;
    explicit KUPoly(std::vector<UPoly> coeffs, const NumberField& k);

    const std::vector<UPoly>& coeffs() const { return c_; }
    long deg() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const UPoly& lc() const { return c_.back(); }

    static KUPoly from_scalar(const UPoly& a, const NumberField& k);

    KUPoly add(const KUPoly& o, const NumberField& k) const;
    KUPoly sub(const KUPoly& o, const NumberField& k) const;
    KUPoly mul(const KUPoly& o, const NumberField& k) const;
    KUPoly scale(const UPoly& s, const NumberField& k) const;
    KUPoly monic(const NumberField& k) const;           // may throw D5Split
    KUPoly mod_monic(const KUPoly& divisor, const NumberField& k) const;
    UPoly eval(const UPoly& point, const NumberField& k) const;

private:
    std::vector<UPoly> c_;
    void trim();
};

// gcd over K by the monic Euclidean algorithm; zero-divisor leading
// coefficients surface as D5Split.
KUPoly kupoly_gcd(KUPoly a, KUPoly b, const NumberField& k);

} // namespace extactic
