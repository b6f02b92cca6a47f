#include "extactic/polyops.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>

#include "extactic/error.hpp"

namespace extactic {

namespace {

bool exp_divides(const Expvec& a, const Expvec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<std::size_t> active_vars(const MultiPoly& p, const MultiPoly& q) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.nvars(); ++i)
        if (p.degree_in(i) > 0 || q.degree_in(i) > 0) out.push_back(i);
    return out;
}

} // namespace

std::optional<MultiPoly> try_exact_div(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) return std::nullopt;
    MultiPoly r = p;
    MultiPoly quot(p.vars());
    const Expvec& lq = q.leading_exps();
    const Rational& cq = q.leading_coeff();
    while (!r.is_zero()) {
        const Expvec& lr = r.leading_exps();
        if (!exp_divides(lq, lr)) return std::nullopt;
        Expvec e(lr.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = lr[i] - lq[i];
        Rational c = r.leading_coeff() / cq;
        MultiPoly t = MultiPoly::monomial(p.vars(), e, c);
        quot += t;
        r -= t * q;
    }
    return quot;
}

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q) {
    auto r = try_exact_div(p, q);
    if (!r) throw InvariantViolation("exact_div: nonzero remainder");
    return *r;
}

bool divides(const MultiPoly& q, const MultiPoly& p) { return try_exact_div(p, q).has_value(); }

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
    MultiPoly g(p.vars());
    for (const auto& c : p.coeffs_in(var)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

MultiPoly primitive_in(const MultiPoly& p, std::size_t var) {
    if (p.is_zero()) return p;
    return exact_div(p, content_in(p, var));
}

MultiPoly prem(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
    long db = b.degree_in(var);
    if (db < 0) throw InputError("prem: divisor free of the variable");
    MultiPoly lb = b.leading_coeff_in(var);
    MultiPoly r = a;
    long e = a.degree_in(var) - db + 1;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        long dr = r.degree_in(var);
        MultiPoly lr = r.leading_coeff_in(var);
        MultiPoly shift = MultiPoly::variable(a.vars(), var, static_cast<std::uint32_t>(dr - db));
        r = r * lb - lr * shift * b;
        --e;
    }
    while (e-- > 0) r = r * lb;
    return r;
}

UPoly to_upoly(const MultiPoly& p, std::size_t var) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max<long>(p.degree_in(var), 0)) + 1,
                            Rational(0));
    for (const auto& [e, v] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0) throw InvariantViolation("to_upoly: polynomial is not univariate");
        c[e[var]] = v;
    }
    return UPoly(std::move(c));
}

MultiPoly from_upoly(const UPoly& u, const VarsPtr& vars, std::size_t var) {
    MultiPoly p(vars);
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
        if (sgn(u.coeffs()[i]) == 0) continue;
        Expvec e(vars->size(), 0);
        e[var] = static_cast<std::uint32_t>(i);
        p.add_term(e, u.coeffs()[i]);
    }
    return p;
}

namespace {

// subresultant-flavoured PRS gcd in one main variable; contents handled
// recursively through the multivariate gcd.
MultiPoly gcd_prs(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
    MultiPoly cp = content_in(p, var);
    MultiPoly cq = content_in(q, var);
    MultiPoly c = gcd(cp, cq);
    MultiPoly a = exact_div(p, cp);
    MultiPoly b = exact_div(q, cq);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (true) {
        MultiPoly r = prem(a, b, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) return c.primitive_part();
        a = std::move(b);
        b = primitive_in(r, var); // primitive PRS keeps the chain small enough at desk scale
    }
    return (c * primitive_in(b, var)).primitive_part();
}

// Dense evaluation/interpolation gcd (Brown): recurse by specializing one
// variable at rational nodes, normalize the images against
// gamma = gcd(lc(P), lc(Q)) so they interpolate to gamma/lc(G) * G, and
// certify the candidate by trial division.  Falls back to the PRS on bad
// luck.
MultiPoly gcd_brown(const MultiPoly& p, const MultiPoly& q, std::size_t mainv, std::size_t evalv) {
    MultiPoly cp = content_in(p, mainv);
    MultiPoly cq = content_in(q, mainv);
    MultiPoly cont = gcd(cp, cq);
    MultiPoly a = exact_div(p, cp);
    MultiPoly b = exact_div(q, cq);
    MultiPoly la = a.leading_coeff_in(mainv);
    MultiPoly lb = b.leading_coeff_in(mainv);
    MultiPoly gamma = gcd(la, lb);
    long bound = std::min(a.degree_in(evalv), b.degree_in(evalv)) +
                 std::max<long>(gamma.degree_in(evalv), 0) + 1;
    long da = a.degree_in(mainv), db = b.degree_in(mainv);

    std::vector<Rational> nodes;
    std::vector<MultiPoly> values;
    long mindeg = std::min(da, db) + 1;
    long t = 0;
    int misses = 0;
    while (static_cast<long>(nodes.size()) < bound + 1 && misses < 8 * bound + 64) {
        Rational node(t);
        t = t <= 0 ? -t + 1 : -t;
        MultiPoly cnode = MultiPoly::constant(p.vars(), node);
        MultiPoly as = a.subst(evalv, cnode);
        MultiPoly bs = b.subst(evalv, cnode);
        if (as.degree_in(mainv) != da || bs.degree_in(mainv) != db) {
            ++misses;
            continue; // leading coefficient dropped: skip the node
        }
        MultiPoly gs = gcd(as, bs);
        long dg = gs.degree_in(mainv);
        if (dg == 0) return cont.primitive_part(); // coprime images: gcd is the content
        if (dg > mindeg) {
            ++misses;
            continue; // unlucky node
        }
        if (dg < mindeg) {
            nodes.clear();
            values.clear();
            mindeg = dg;
        }
        MultiPoly gammas = gamma.subst(evalv, cnode);
        auto scale = try_exact_div(gammas, gs.leading_coeff_in(mainv));
        if (!scale) {
            ++misses;
            continue;
        }
        nodes.push_back(node);
        values.push_back(gs * (*scale));
        if (static_cast<long>(nodes.size()) == bound + 1) {
            // Newton interpolation in evalv
            std::size_t n = nodes.size();
            std::vector<MultiPoly> dd = values;
            for (std::size_t level = 1; level < n; ++level)
                for (std::size_t i = n - 1; i >= level; --i) {
                    dd[i] = (dd[i] - dd[i - 1]) * (1 / (nodes[i] - nodes[i - level]));
                    if (i == level) break;
                }
            MultiPoly acc(p.vars());
            MultiPoly xv = MultiPoly::variable(p.vars(), evalv);
            for (std::size_t i = n; i-- > 0;)
                acc = acc * (xv - MultiPoly::constant(p.vars(), nodes[i])) + dd[i];
            // the interpolant is (gamma/lc_G) * G: strip its polynomial
            // content in the main variable to uncover G itself
            MultiPoly cand = acc.is_zero() ? acc : primitive_in(acc, mainv).primitive_part();
            if (!cand.is_zero() && divides(cand, a) && divides(cand, b))
                return (cont * cand).primitive_part();
            if (std::getenv("EXTACTIC_TRACE"))
                std::cerr << "[gcd] candidate deg " << cand.degree() << " failed (bound " << bound
                          << ", mindeg " << mindeg << ")" << std::endl;
            // interpolated candidate failed: treat the latest node as unlucky
            nodes.pop_back();
            values.pop_back();
            ++misses;
        }
    }
    if (std::getenv("EXTACTIC_TRACE"))
        std::cerr << "[gcd] brown fallback to PRS: degs " << p.degree() << " " << q.degree()
                  << " bound " << bound << " misses " << misses << std::endl;
    return gcd_prs(p, q, mainv);
}

} // namespace

MultiPoly gcd(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero()) return q.primitive_part();
    if (q.is_zero()) return p.primitive_part();
    auto act = active_vars(p, q);
    if (act.empty()) return MultiPoly::constant(p.vars(), Rational(1));
    // main variable: smallest combined degree keeps the PRS short
    std::size_t best = act[0];
    long bestscore = -1;
    for (auto v : act) {
        long dp = std::max<long>(p.degree_in(v), 0);
        long dq = std::max<long>(q.degree_in(v), 0);
        if (dp == 0 || dq == 0) {
            // variable missing in one operand: gcd cannot involve it; treat
            // via content of the other operand
            continue;
        }
        long score = dp + dq;
        if (bestscore < 0 || score < bestscore) {
            bestscore = score;
            best = v;
        }
    }
    if (bestscore < 0) {
        // no variable occurs in both: gcd divides both contents chains
        std::size_t v = act[0];
        if (p.degree_in(v) > 0) return gcd(content_in(p, v), q);
        return gcd(p, content_in(q, v));
    }
    if (act.size() == 1) {
        // univariate fast path
        UPoly g = upoly_gcd(to_upoly(p, best), to_upoly(q, best));
        return from_upoly(g, p.vars(), best).primitive_part();
    }
    // evaluation variable for the interpolation gcd: smallest combined degree
    std::size_t ev = p.nvars();
    for (auto v : act) {
        if (v == best) continue;
        long score = std::max<long>(p.degree_in(v), 0) + std::max<long>(q.degree_in(v), 0);
        if (ev == p.nvars() ||
            score < std::max<long>(p.degree_in(ev), 0) + std::max<long>(q.degree_in(ev), 0))
            ev = v;
    }
    if (ev == p.nvars()) return gcd_prs(p, q, best);
    return gcd_brown(p, q, best, ev);
}

MultiPoly squarefree_part(const MultiPoly& p) {
    if (p.is_zero()) return p;
    if (p.is_constant()) return MultiPoly::constant(p.vars(), Rational(1));
    MultiPoly g = p;
    for (std::size_t v = 0; v < p.nvars(); ++v) {
        if (p.degree_in(v) <= 0) continue;
        g = gcd(g, p.derivative(v));
        if (g.is_constant()) break;
    }
    if (g.is_constant()) return p.primitive_part();
    return exact_div(p, g).primitive_part();
}

std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(const MultiPoly& p) {
    std::vector<std::pair<MultiPoly, int>> out;
    if (p.is_zero() || p.is_constant()) return out;
    std::size_t var = 0;
    while (p.degree_in(var) <= 0) ++var;
    MultiPoly cont = content_in(p, var);
    MultiPoly f = exact_div(p, cont).primitive_part();
    // Yun in `var`
    MultiPoly fp = f.derivative(var);
    MultiPoly g = gcd(f, fp);
    if (g.is_constant()) {
        out.emplace_back(f, 1);
    } else {
        MultiPoly w = exact_div(f, g);
        MultiPoly y = exact_div(fp, g);
        MultiPoly z = y - w.derivative(var);
        int i = 1;
        while (!z.is_zero()) {
            MultiPoly gi = gcd(w, z);
            if (!gi.is_constant()) out.emplace_back(gi.primitive_part(), i);
            w = exact_div(w, gi);
            y = exact_div(z, gi);
            z = y - w.derivative(var);
            ++i;
        }
        if (!w.is_constant()) out.emplace_back(w.primitive_part(), i);
    }
    for (const auto& [f2, m2] : squarefree_decomposition(cont)) out.emplace_back(f2, m2);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

namespace {

// Degree bound of Res_var(P,Q) in variable w (Sylvester row count times the
// per-row coefficient degree).
long res_degree_bound(const MultiPoly& p, const MultiPoly& q, std::size_t var, std::size_t w) {
    long dvp = std::max<long>(p.degree_in(var), 0);
    long dvq = std::max<long>(q.degree_in(var), 0);
    long dwp = std::max<long>(p.degree_in(w), 0);
    long dwq = std::max<long>(q.degree_in(w), 0);
    return dvq * dwp + dvp * dwq;
}

MultiPoly resultant_rec(const MultiPoly& p, const MultiPoly& q, std::size_t var);

// Newton interpolation with exact rational nodes; `values` may hold
// polynomials in the remaining variables.
MultiPoly interpolate(const std::vector<Rational>& nodes, const std::vector<MultiPoly>& values,
                      const VarsPtr& vars, std::size_t w) {
    std::size_t n = nodes.size();
    std::vector<MultiPoly> dd = values; // divided differences, in place
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            MultiPoly num = dd[i] - dd[i - 1];
            Rational den = nodes[i] - nodes[i - level];
            dd[i] = num * (1 / den);
            if (i == level) break;
        }
    MultiPoly acc(vars);
    MultiPoly xw = MultiPoly::variable(vars, w);
    for (std::size_t i = n; i-- > 0;) {
        MultiPoly node = MultiPoly::constant(vars, nodes[i]);
        acc = acc * (xw - node) + dd[i];
    }
    return acc;
}

MultiPoly resultant_interp(const MultiPoly& p, const MultiPoly& q, std::size_t var,
                           std::size_t w) {
    long bound = res_degree_bound(p, q, var, w);
    MultiPoly lp = p.leading_coeff_in(var);
    MultiPoly lq = q.leading_coeff_in(var);
    std::vector<Rational> nodes;
    std::vector<MultiPoly> values;
    long t = 0;
    while (static_cast<long>(nodes.size()) <= bound) {
        Rational node(t);
        t = t <= 0 ? -t + 1 : -t; // 0, 1, -1, 2, -2, ...
        // specializations must keep both leading coefficients alive
        MultiPoly lps = lp.subst(w, MultiPoly::constant(p.vars(), node));
        MultiPoly lqs = lq.subst(w, MultiPoly::constant(p.vars(), node));
        if (lps.is_zero() || lqs.is_zero()) continue;
        MultiPoly ps = p.subst(w, MultiPoly::constant(p.vars(), node));
        MultiPoly qs = q.subst(w, MultiPoly::constant(p.vars(), node));
        nodes.push_back(node);
        values.push_back(resultant_rec(ps, qs, var));
    }
    return interpolate(nodes, values, p.vars(), w);
}

MultiPoly resultant_rec(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
    long dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp <= 0 && dq <= 0) throw InputError("resultant: neither input uses the variable");
    if (dp <= 0) {
        if (p.is_zero()) return p;
        return p.pow(static_cast<std::uint32_t>(dq));
    }
    if (dq <= 0) {
        if (q.is_zero()) return q;
        return q.pow(static_cast<std::uint32_t>(dp));
    }
    // pick the interpolation variable: any other active one
    std::size_t w = p.nvars();
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        if (i == var) continue;
        if (p.degree_in(i) > 0 || q.degree_in(i) > 0) {
            if (w == p.nvars() || res_degree_bound(p, q, var, i) <
                                      res_degree_bound(p, q, var, w))
                w = i;
        }
    }
    if (w == p.nvars()) {
        Rational r = upoly_resultant(to_upoly(p, var), to_upoly(q, var));
        return MultiPoly::constant(p.vars(), r);
    }
    return resultant_interp(p, q, var, w);
}

} // namespace

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
    if (p.is_zero() && q.is_zero()) throw InputError("resultant of two zero polynomials");
    if (p.is_zero() || q.is_zero()) return MultiPoly::zero(p.vars());
    return resultant_rec(p, q, var);
}

} // namespace extactic
