#pragma once

#include <memory>
#include <vector>

#include "extactic/multipoly.hpp"
#include "extactic/numberfield.hpp"

namespace extactic {

// One conjugate family of solutions of a zero-dimensional system: theta runs
// over the roots of `field`'s modulus and every coordinate is a polynomial
// expression in theta.
struct ZeroDimBranch {
    FieldPtr field;
    std::vector<UPoly> coords; // one per solve variable, reduced mod the modulus
};

struct ZeroDimResult {
    bool positive_dimensional = false; // cascade or fibers degenerated
    bool separation_failure = false;   // first coordinate failed to separate
    std::vector<ZeroDimBranch> branches;
    long solution_count() const {
        long n = 0;
        for (const auto& b : branches) n += b.field->degree();
        return n;
    }
};

// Solves a polynomial system expected to be zero-dimensional over the listed
// variables (all other variables of the context must be absent).  Cascade of
// pairwise resultants eliminating vars back-to-front, then D5
// back-substitution over Q[theta]/(M) with theta = vars[0]; every branch is
// verified against the full input system and spurious cascade roots are cut
// out of the modulus exactly.
//
// Requires the first variable to separate solutions (distinct solutions take
// distinct vars[0]-values); callers arrange that by a generic coordinate
// change and retry on separation_failure.
ZeroDimResult solve_zero_dim(const std::vector<MultiPoly>& eqs,
                             const std::vector<std::size_t>& vars);

} // namespace extactic
