#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "extactic/multipoly.hpp"
#include "extactic/polyops.hpp"

namespace extactic {

enum class DetAlgorithm { FractionFree, Cofactor };

struct DetOptions {
    DetAlgorithm algorithm = DetAlgorithm::FractionFree;
    std::size_t size_cap = 8;
};

// Rectangular grid of polynomials sharing one variable context.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, const VarsPtr& vars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const VarsPtr& vars() const { return vars_; }

    MultiPoly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const MultiPoly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    VarsPtr vars_;
    std::vector<MultiPoly> entries_;
};

// Exact determinant.  Default is fraction-free (Bareiss) elimination whose
// exact divisions must leave zero remainder; cofactor expansion is the
// configuration switch for sparse rows.  Errors on non-square input or when
// the size cap is exceeded.
MultiPoly det(const PolyMatrix& m, const DetOptions& options = {});

// Minor-tracking cofactor determinant over any commutative coefficient ring;
// Ring provides zero(), add(a,b), mul(a,b), neg(a), is_zero(a).
template <class Ring, class Elem>
Elem det_subsets(const Ring& ring, const std::vector<std::vector<Elem>>& m) {
    std::size_t n = m.size();
    if (n == 0) return ring.zero();
    // DP over column subsets: minors of the first k rows
    std::unordered_map<std::uint64_t, Elem> cur;
    cur.emplace(0, ring.one());
    for (std::size_t r = 0; r < n; ++r) {
        std::unordered_map<std::uint64_t, Elem> next;
        for (const auto& [mask, minor] : cur) {
            if (ring.is_zero(minor)) continue;
            int parity = 0;
            for (std::size_t c = 0; c < n; ++c) {
                std::uint64_t bit = std::uint64_t(1) << c;
                if (mask & bit) {
                    ++parity;
                    continue;
                }
                if (ring.is_zero(m[r][c])) continue;
                Elem term = ring.mul(minor, m[r][c]);
                if ((parity + r) & 1) term = ring.neg(term); // Laplace sign along row r
                auto [it, inserted] = next.try_emplace(mask | bit, term);
                if (!inserted) it->second = ring.add(it->second, term);
            }
        }
        cur = std::move(next);
    }
    std::uint64_t full = n >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    auto it = cur.find(full);
    return it == cur.end() ? ring.zero() : it->second;
}

struct MultiPolyRing {
    VarsPtr vars;
    MultiPoly zero() const { return MultiPoly::zero(vars); }
    MultiPoly one() const { return MultiPoly::constant(vars, Rational(1)); }
    MultiPoly add(const MultiPoly& a, const MultiPoly& b) const { return a + b; }
    MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return a * b; }
    MultiPoly neg(const MultiPoly& a) const { return -a; }
    bool is_zero(const MultiPoly& a) const { return a.is_zero(); }
};

} // namespace extactic
