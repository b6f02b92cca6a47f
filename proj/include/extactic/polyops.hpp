#pragma once

#include <optional>
#include <vector>

#include "extactic/multipoly.hpp"
#include "extactic/upoly.hpp"

namespace extactic {

// Exact quotient P/Q; nullopt when Q does not divide P.
std::optional<MultiPoly> try_exact_div(const MultiPoly& p, const MultiPoly& q);
// Throws InvariantViolation when the division leaves a remainder: a failed
// exact division here always signals a broken upstream invariant.
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q);
bool divides(const MultiPoly& q, const MultiPoly& p);

// Polynomial content with respect to one variable: gcd of the coefficient
// polynomials.  primitive_in strips it.
MultiPoly content_in(const MultiPoly& p, std::size_t var);
MultiPoly primitive_in(const MultiPoly& p, std::size_t var);

// gcd over Q[x1..xn], normalized (rational content 1, positive leading
// coefficient in graded-lex).  gcd(0,0) = 0.
MultiPoly gcd(const MultiPoly& p, const MultiPoly& q);

MultiPoly squarefree_part(const MultiPoly& p);
// multiplicity-sorted square-free decomposition: p = c * prod f_i^{m_i}
std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(const MultiPoly& p);

// Sylvester resultant eliminating `var`.  Res(P, c) = c^{deg P} for constant
// c; an error if both inputs are zero.  Univariate inputs run on the integer
// subresultant PRS; multivariate inputs go through exact
// evaluation/interpolation on the remaining variables.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var);

// Pseudo-remainder lc_v(B)^(deg_v A - deg_v B + 1) * A mod B.
MultiPoly prem(const MultiPoly& a, const MultiPoly& b, std::size_t var);

// Conversions for polynomials that only use `var`.
UPoly to_upoly(const MultiPoly& p, std::size_t var);
MultiPoly from_upoly(const UPoly& u, const VarsPtr& vars, std::size_t var);

} // namespace extactic
