#include "extactic/zerodim.hpp"

#include <algorithm>
#include <map>

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "extactic/error.hpp"
#include "extactic/polyops.hpp"

namespace extactic {

namespace {

// highest position in `vars` used by p, or -1 when p uses none
long level_of(const MultiPoly& p, const std::vector<std::size_t>& vars) {
    long lvl = -1;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (p.degree_in(vars[i]) > 0) lvl = static_cast<long>(i);
    return lvl;
}

MultiPoly strip(const MultiPoly& p) { return p.is_zero() ? p : squarefree_part(p); }

// Evaluate p at the branch's known coordinates (vars[0..upto-1]) viewing it
// as a univariate polynomial in vars[upto]; coefficients land in K.
KUPoly eval_partial(const MultiPoly& p, const std::vector<std::size_t>& vars, std::size_t upto,
                    const std::vector<UPoly>& coords, const NumberField& k) {
    long dv = std::max<long>(p.degree_in(vars[upto]), 0);
    std::vector<UPoly> out(static_cast<std::size_t>(dv) + 1);
    UPoly theta = UPoly::x();
    for (const auto& [e, c] : p.terms()) {
        UPoly term = UPoly::constant(c);
        for (std::size_t i = 0; i < upto; ++i) {
            std::uint32_t pw = e[vars[i]];
            if (pw) term = k.mul(term, k.pow(coords[i], pw));
        }
        std::uint32_t slot = e[vars[upto]];
        out[slot] = k.add(out[slot], term);
    }
    return KUPoly(std::move(out), k);
}

UPoly eval_full(const MultiPoly& p, const std::vector<std::size_t>& vars,
                const std::vector<UPoly>& coords, const NumberField& k) {
    UPoly acc;
    for (const auto& [e, c] : p.terms()) {
        UPoly term = UPoly::constant(c);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            std::uint32_t pw = e[vars[i]];
            if (pw) term = k.mul(term, k.pow(coords[i], pw));
        }
        acc = k.add(acc, term);
    }
    return acc;
}

struct Pending {
    FieldPtr field;
    std::vector<UPoly> coords; // filled up to coords.size()
};

} // namespace

ZeroDimResult solve_zero_dim(const std::vector<MultiPoly>& eqs,
                             const std::vector<std::size_t>& vars) {
    ZeroDimResult result;
    if (vars.empty()) throw InputError("solve_zero_dim: no variables");
    std::size_t nv = vars.size();

    // sanity: inputs only involve the solve variables
    for (const auto& e : eqs)
        for (std::size_t i = 0; i < e.nvars(); ++i)
            if (e.degree_in(i) > 0 && std::find(vars.begin(), vars.end(), i) == vars.end())
                throw InputError("solve_zero_dim: equation uses a non-solve variable");

    // levels[j]: equations whose highest solve variable is vars[j]
    std::vector<std::vector<MultiPoly>> levels(nv);
    bool contradiction = false;
    auto place = [&](const MultiPoly& p) {
        if (p.is_zero()) return;
        if (p.is_constant()) {
            contradiction = true; // nonzero constant: empty variety
            return;
        }
        MultiPoly s = strip(p).primitive_part();
        long lvl = level_of(s, vars);
        if (lvl < 0) return;
        for (const auto& q : levels[static_cast<std::size_t>(lvl)])
            if (q == s) return;
        levels[static_cast<std::size_t>(lvl)].push_back(s);
    };
    for (const auto& e : eqs) place(e);
    if (contradiction) return result;

    // cascade: eliminate vars[j] for j = nv-1 .. 1 by pairwise resultants
    for (std::size_t j = nv; j-- > 1;) {
        auto& S = levels[j];
        if (S.empty()) continue;
        // pivot: minimal degree in vars[j]
        std::size_t piv = 0;
        for (std::size_t i = 1; i < S.size(); ++i)
            if (S[i].degree_in(vars[j]) < S[piv].degree_in(vars[j])) piv = i;
        for (std::size_t i = 0; i < S.size(); ++i) {
            if (i == piv) continue;
            auto tt0 = std::chrono::steady_clock::now();
            MultiPoly r = resultant(S[piv], S[i], vars[j]);
            if (std::getenv("EXTACTIC_TRACE")) {
                auto tt1 = std::chrono::steady_clock::now();
                std::cerr << "[zd] lvl " << j << " res deg(" << S[piv].degree() << ","
                          << S[i].degree() << ") -> " << r.degree() << " terms "
                          << r.term_count() << " in "
                          << std::chrono::duration_cast<std::chrono::milliseconds>(tt1 - tt0)
                                     .count() /
                                 1000.0
                          << "s" << std::endl;
            }
            if (r.is_zero()) {
                // common factor in the eliminated variable: the pair carries a
                // component; treat as degenerate for this solver
                result.positive_dimensional = true;
                return result;
            }
            place(r);
        }
        if (contradiction) return result;
    }

    // univariate stage in vars[0]
    if (levels[0].empty()) {
        result.positive_dimensional = true;
        return result;
    }
    if (std::getenv("EXTACTIC_TRACE")) {
        std::cerr << "[zd] univariate stage: " << levels[0].size() << " polys, degs";
        for (const auto& p : levels[0]) std::cerr << " " << p.degree();
        std::cerr << std::endl;
    }
    UPoly R;
    for (const auto& p : levels[0]) {
        UPoly u = to_upoly(p, vars[0]);
        R = R.is_zero() ? u : upoly_gcd(R, u);
        if (R.deg() == 0) return result; // coprime univariate constraints: no solutions
    }
    R = upoly_squarefree_part(R).monic();

    // back-substitution with dynamic evaluation
    std::vector<Pending> stack;
    {
        Pending p0;
        p0.field = std::make_shared<NumberField>(R, false);
        p0.coords.push_back(UPoly::x()); // theta itself
        stack.push_back(std::move(p0));
    }
    std::vector<Pending> full; // all coordinates assigned
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        if (cur.coords.size() == nv) {
            full.push_back(std::move(cur));
            continue;
        }
        std::size_t j = cur.coords.size();
        const NumberField& k = *cur.field;
        try {
            KUPoly g;
            bool any_eq = false;
            for (const auto& p : levels[j]) {
                any_eq = true;
                KUPoly pe = eval_partial(p, vars, j, cur.coords, k);
                g = g.is_zero() ? pe : kupoly_gcd(g, pe, k);
                if (!g.is_zero() && g.deg() == 0) break;
            }
            if (!any_eq || g.is_zero()) {
                // the fiber over this branch is unconstrained
                result.positive_dimensional = true;
                return result;
            }
            if (g.deg() == 0) continue; // no solution above these theta: spurious
            g = g.monic(k);
            if (g.deg() == 1) {
                UPoly value = k.sub(UPoly(), g.coeffs()[0]); // -g0 for monic g
                cur.coords.push_back(value);
                stack.push_back(std::move(cur));
                continue;
            }
            // several fiber points over a single theta: vars[0] does not separate
            result.separation_failure = true;
            return result;
        } catch (const D5Split& split) {
            UPoly m = cur.field->modulus();
            auto q = try_exact_div(m, split.factor);
            if (!q || split.factor.deg() == 0 || q->deg() == 0) {
                // degenerate split: retry the branch with each part anyway
                if (!q) throw InvariantViolation("solve_zero_dim: bad D5 split");
            }
            for (const UPoly& part : {split.factor, *q}) {
                if (part.deg() == 0) continue;
                Pending sub;
                sub.field = std::make_shared<NumberField>(part, false);
                sub.coords = cur.coords;
                for (auto& c : sub.coords) c = sub.field->reduce(c);
                stack.push_back(std::move(sub));
            }
        }
    }

    // exact verification against the full system; spurious cascade roots are
    // cut out of each modulus by gcd refinement
    for (auto& b : full) {
        FieldPtr field = b.field;
        std::vector<UPoly> coords = b.coords;
        bool dead = false;
        for (const auto& e : eqs) {
            if (dead) break;
            const NumberField& k = *field;
            UPoly v = eval_full(e, vars, coords, k);
            if (v.is_zero()) continue;
            UPoly g = upoly_gcd(field->modulus(), v).monic();
            if (g.deg() == 0) {
                dead = true;
                break;
            }
            field = std::make_shared<NumberField>(g, false);
            for (auto& c : coords) c = field->reduce(c);
        }
        if (dead) continue;
        result.branches.push_back({field, std::move(coords)});
    }
    return result;
}

} // namespace extactic
