#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "extactic/multipoly.hpp"
#include "extactic/polymatrix.hpp"

namespace extactic {

// Shared contexts for the planar chart.
VarsPtr chart_vars();     // {x, y}
VarsPtr slope_vars();     // {x, y, m}

// Foliation in the affine chart: the vector field v = A dx + B dy with a
// declared projective degree r (validated separately by web_degree).
class AffineFoliation {
public:
    AffineFoliation(MultiPoly a, MultiPoly b, int declared_degree);

    const MultiPoly& A() const { return a_; }
    const MultiPoly& B() const { return b_; }
    int declared_degree() const { return r_; }

private:
    MultiPoly a_, b_;
    int r_;
};

// d-web given by its slope polynomial P(x,y,m): the branch directions at
// (x,y) are dx + m dy for the roots m of P.  Rejected when non-reduced
// (P not square-free in m over Q(x,y)), unsaturated, or with an identically
// vanishing leading coefficient in m (vertical branch at generic points).
class AffineWeb {
public:
    AffineWeb(int d, MultiPoly slope, int declared_degree);

    int d() const { return d_; }
    const MultiPoly& slope() const { return p_; }
    int declared_degree() const { return r_; }

    static AffineWeb from_foliation(const AffineFoliation& v);

private:
    int d_;
    MultiPoly p_;
    int r_;
};

struct ExtacticResult {
    MultiPoly affine_part;        // content-stripped, positive leading coefficient
    long infinity_multiplicity = 0;
    long total_degree = 0;
    long formula_degree = 0;
    bool vanishes_identically = false;
};

// Exact divisor degree of E_n for a d-web of degree r; the closed form is an
// integer and the division by 8 is asserted.  A negative value means the
// extactic cannot be a divisor for these parameters.
long degree_formula(long n, long d, long r);

// dimension k of the linear system of plane curves of degree <= n
inline long linear_system_dim(long n) { return n * (n + 3) / 2; }

// v(f) = A f_x + B f_y
MultiPoly lie_derivative(const AffineFoliation& v, const MultiPoly& f);

// Rows s_j, v(s_j), ..., v^k(s_j) over the monomials of degree <= n; the raw
// Wronskian matrix, exposed so the scaling covariance of its determinant is
// testable directly.
PolyMatrix foliation_wronskian(const AffineFoliation& v, int n);

ExtacticResult extactic_foliation(const AffineFoliation& v, int n);

// Reduced discriminant Res_m(P, P_m)/lc_m(P), content-stripped.  Identically
// zero input signals a non-reduced web and is rejected at construction.
MultiPoly web_discriminant(const AffineWeb& w);

// Degree as tangency count with a generic rational line, certified by
// agreement between two seeded choices.
int web_degree(const AffineWeb& w, std::uint64_t seed = 1);
int web_degree(const AffineFoliation& v, std::uint64_t seed = 1);

// sigma_W(v) normed down to a rational function num/den in (x, y); the
// extactic divisor is Delta^{k(k-1)/2} * num/den after content stripping.
struct WebSigma {
    MultiPoly num, den; // both in chart_vars()
    bool vanishes = false;
};
WebSigma web_sigma_norm(const AffineWeb& w, int n);

ExtacticResult extactic_web(const AffineWeb& w, int n);

bool invariant_curve_test(const AffineFoliation& v, const MultiPoly& f);
bool invariant_curve_test(const AffineWeb& w, const MultiPoly& f);

struct InvariantCurve {
    MultiPoly curve;
    int multiplicity;
};
// Candidates of degree <= n dividing the affine part of E_n (rational lines
// and rational graph branches y - q(x), x - q(y)), filtered by the exact
// invariance test, each with its multiplicity in E_n.
std::vector<InvariantCurve> invariant_curves_from_extactic(const AffineFoliation& v, int n);
std::vector<InvariantCurve> invariant_curves_from_extactic(const AffineWeb& w, int n);

// Projective linear substitution utility for cross-chart checks: applies
// x -> (a11 x + a12 y + a13)/(a31 x + a32 y + a33), y -> ... to a curve and
// clears denominators.
MultiPoly chart_change(const MultiPoly& curve, const std::vector<std::vector<Rational>>& proj3x3);

} // namespace extactic
