#pragma once

#include <string>
#include <vector>

#include "extactic/numberfield.hpp"
#include "extactic/rational.hpp"
#include "extactic/upoly.hpp"

namespace extactic {

// Exact complex rational point.
struct QComplex {
    Rational re, im;
    QComplex() : re(0), im(0) {}
    QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    QComplex operator+(const QComplex& o) const { return {re + o.re, im + o.im}; }
    QComplex operator-(const QComplex& o) const { return {re - o.re, im - o.im}; }
    QComplex operator*(const QComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Rational norm2() const { return re * re + im * im; }
};

QComplex upoly_eval_c(const UPoly& p, const QComplex& z);

// Isolating disk around one root of a square-free polynomial: the center is
// an exact rational complex point; radius2_bound is an exact upper bound on
// the squared distance to the unique root inside.
struct RootBox {
    QComplex center;
    Rational radius2;
    std::string to_string() const;
};

// Certified isolation of all complex roots: deg(p) pairwise disjoint disks,
// each containing exactly one root.  target_radius2 controls refinement.
std::vector<RootBox> isolate_complex_roots(const UPoly& p,
                                           const Rational& target_radius2 = Rational(1, Int("1000000000000000000000000000000000000000000000000000000000000")));

// A single algebraic number: square-free minimal polynomial (possibly
// reducible; square-free is the stored invariant) plus an isolating box.
struct AlgNumber {
    UPoly min_poly;
    RootBox box;
};

// Decides whether the value v(theta, phi) vanishes at specific roots
// theta0 of M1 and phi0 of M2, given certified boxes.  Exact: either the
// boxes (refined against p) exclude zero, or a resultant-based nonzero lower
// bound certifies vanishing.
bool alg_pair_value_is_zero(const UPoly& m1, const RootBox& b1, const UPoly& m2,
                            const RootBox& b2, const std::vector<std::vector<Rational>>& value_poly);

} // namespace extactic
