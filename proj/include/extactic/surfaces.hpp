#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extactic/algnum.hpp"
#include "extactic/multipoly.hpp"
#include "extactic/numberfield.hpp"

namespace extactic {

VarsPtr proj_vars(); // {x0, x1, x2, x3}

// Homogeneous surface F = 0 in P^3.
class ProjSurface {
public:
    explicit ProjSurface(MultiPoly f);
    const MultiPoly& F() const { return f_; }
    int degree() const { return d_; }

private:
    MultiPoly f_;
    int d_;
};

// A conjugate family of lines: the spanning rows have entries in
// Q[theta]/(modulus); every root of the modulus yields one line.  Rational
// lines are the degree-1 case.  Spanning matrices are kept row-reduced
// against the family's pivot columns, and the Pluecker vector (p01, p02,
// p03, p12, p13, p23) satisfies the quadric relation exactly.
struct LineFamily {
    FieldPtr field; // modulus degree >= 1
    std::array<std::array<UPoly, 4>, 2> span;
    std::array<UPoly, 6> pluecker;
    long count() const { return field->degree(); }
    bool is_rational() const { return field->degree() == 1; }
    std::array<Rational, 8> rational_span() const; // requires is_rational()
};

LineFamily make_rational_line(const std::array<Rational, 4>& p, const std::array<Rational, 4>& q);

struct LinesResult {
    bool infinite_family = false;
    std::string infinite_reason;
    std::vector<LineFamily> families;
    std::vector<std::vector<Rational>> rotation; // echoed seeded coordinate change
    std::uint64_t seed = 0;
    long total_count() const {
        long n = 0;
        for (const auto& f : families) n += f.count();
        return n;
    }
};

// Exact enumeration over the six sliced charts of the Grassmannian after a
// seeded generic coordinate change; every family is verified symbolically
// (substitution reduces to zero modulo the minimal polynomial).
LinesResult lines_on_surface(const ProjSurface& s, std::uint64_t seed = 1);

// exact containment test (modulo minimal polynomials for algebraic entries)
bool line_on_surface_check(const ProjSurface& s, const LineFamily& line);

// restriction of a homogeneous polynomial to the family's line: binary-form
// coefficients in K, reduced; all zero iff the polynomial vanishes on every
// line of the family
std::vector<UPoly> restrict_to_family(const MultiPoly& g, const LineFamily& line);
bool vanishes_on_family(const MultiPoly& g, const LineFamily& line);

// second fundamental form data at a rational point: the tangency linear form
// t . grad F and the quadratic form t^T  Hess F  t in the direction variables
struct AsymptoticForm {
    MultiPoly linear;    // over vars (t0..t3)
    MultiPoly quadratic; // over vars (t0..t3)
};
AsymptoticForm asymptotic_form_at(const ProjSurface& s, const std::array<Rational, 4>& point);
// symbolic version over vars (x0..x3, t0..t3)
AsymptoticForm asymptotic_form(const ProjSurface& s);

// Computations in the hypersurface ring Q[x]/(F) with F monic in one
// variable after a seeded shear; results are mapped back to the original
// coordinates.  All outputs are homogeneous representatives.
struct RingReport {
    MultiPoly value;              // representative in the original coordinates
    long achieved_degree = -1;    // degree of the representative
    long target_degree = -1;
    bool reached_target = false;
    std::vector<std::string> removed_factors; // extraneous factors divided out
};

// discriminant of the asymptotic binary quadratic form on the tangent
// pencil, reduced mod F and cleaned of the parametrization's extraneous
// factors; identically zero exactly for cones / tangential surfaces
MultiPoly discriminant_II(const ProjSurface& s, std::uint64_t seed = 1);

// det Hess(F), for the cross-check discriminant_II == c * det Hess mod F
MultiPoly hessian_determinant(const ProjSurface& s);

// Returns the rational constant c with a == c * b mod F (exactly), when one
// exists; nullopt otherwise.
std::optional<Rational> proportional_mod_f(const ProjSurface& s, const MultiPoly& a,
                                           const MultiPoly& b, std::uint64_t seed = 1);

// flecnodal section: eliminates the tangent direction from the
// contact-order->=4 conditions and removes the extraneous factors until the
// degree lands on 11d - 24
RingReport flecnodal(const ProjSurface& s, std::uint64_t seed = 1);

// d(11d-24) plus the accounting triple (13d-26, d-1, 11d-24)
struct SalmonBound {
    long bound;
    long section_degree;     // 13d - 26
    long ramification_degree; // d - 1
    long reduced_degree;      // 13d - 26 - 2(d-1) = 11d - 24
};
SalmonBound salmon_bound(int d);

// randomized elimination probe for smoothness: solves the partial-derivative
// system chart by chart; certificate is probabilistic in the sense that a
// degenerate cascade falls back to reseeded retries
enum class SmoothnessProbe { Smooth, Singular, Inconclusive };
SmoothnessProbe smoothness_probe(const ProjSurface& s, std::uint64_t seed = 1);

} // namespace extactic
