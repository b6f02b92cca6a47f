#include "extactic/webs.hpp"

#include <algorithm>

#include "extactic/error.hpp"
#include "extactic/parse.hpp"
#include "extactic/polyops.hpp"
#include "extactic/truncseries.hpp"
#include "extactic/upoly.hpp"

namespace extactic {

VarsPtr chart_vars() {
    static VarsPtr v = VarSet::make({"x", "y"});
    return v;
}

VarsPtr slope_vars() {
    static VarsPtr v = VarSet::make({"x", "y", "m"});
    return v;
}

namespace {
constexpr std::size_t X = 0, Y = 1, M = 2;

MultiPoly lift(const MultiPoly& p) { return p.with_vars(slope_vars()); }

// monomials x^a y^b with a+b <= n, graded, in slope_vars context
std::vector<MultiPoly> monomial_basis(int n) {
    std::vector<MultiPoly> out;
    for (int d = 0; d <= n; ++d)
        for (int a = d; a >= 0; --a) {
            Expvec e(3, 0);
            e[X] = static_cast<std::uint32_t>(a);
            e[Y] = static_cast<std::uint32_t>(d - a);
            out.push_back(MultiPoly::monomial(slope_vars(), e, Rational(1)));
        }
    return out;
}

} // namespace

AffineFoliation::AffineFoliation(MultiPoly a, MultiPoly b, int declared_degree)
    : a_(a.with_vars(chart_vars())), b_(b.with_vars(chart_vars())), r_(declared_degree) {
    if (a_.is_zero() && b_.is_zero()) throw InputError("foliation: zero vector field");
    if (r_ < 0) throw InputError("foliation: negative degree");
    MultiPoly g = gcd(a_, b_);
    if (!g.is_constant())
        throw InputError("foliation: vector field is not saturated (gcd(A,B) = " + g.to_string() + ")");
}

AffineWeb::AffineWeb(int d, MultiPoly slope, int declared_degree)
    : d_(d), p_(slope.with_vars(slope_vars())), r_(declared_degree) {
    if (d_ < 1) throw InputError("web: d must be >= 1");
    if (r_ < 0) throw InputError("web: negative degree");
    if (p_.degree_in(M) != d_)
        throw InputError("web: slope polynomial has m-degree " + std::to_string(p_.degree_in(M)) +
                         ", expected " + std::to_string(d_));
    if (p_.leading_coeff_in(M).is_zero())
        throw InputError("web: leading coefficient in m vanishes identically; "
                         "apply a linear coordinate change");
    MultiPoly cont = content_in(p_, M);
    if (!cont.is_constant())
        throw InputError("web: slope polynomial is not saturated (content " + cont.to_string() + ")");
    if (d_ >= 2) {
        MultiPoly rho = resultant(p_, p_.derivative(M), M);
        if (rho.is_zero())
            throw InputError("web: non-reduced (slope polynomial is not square-free in m)");
    }
}

AffineWeb AffineWeb::from_foliation(const AffineFoliation& v) {
    if (v.A().is_zero())
        throw InputError("web: foliation with A = 0 has a vertical branch; "
                         "apply a linear coordinate change");
    MultiPoly p = lift(v.A()) * MultiPoly::variable(slope_vars(), M) - lift(v.B());
    return AffineWeb(1, p, v.declared_degree());
}

long degree_formula(long n, long d, long r) {
    if (n < 1 || d < 1 || r < 0) throw InputError("degree_formula: need n >= 1, d >= 1, r >= 0");
    Int N(n), D(d), R(r);
    Int bracket = (N + 1) * (N + 2) * (D * 4 + (N + 3) * (R - D)) +
                  (N + 3) * (N * N + N * 3 - 2) * (D - 1) * (D + R * 2);
    Int num = N * bracket;
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), Int(8).get_mpz_t());
    if (sgn(rem) != 0) throw InvariantViolation("degree_formula: value not divisible by 8");
    if (!q.fits_slong_p()) throw InputError("degree_formula: result out of range");
    return q.get_si();
}

MultiPoly lie_derivative(const AffineFoliation& v, const MultiPoly& f) {
    MultiPoly g = f.with_vars(chart_vars());
    return v.A() * g.derivative(X) + v.B() * g.derivative(Y);
}

PolyMatrix foliation_wronskian(const AffineFoliation& v, int n) {
    if (n < 1) throw InputError("extactic: n must be >= 1");
    auto basis = monomial_basis(n);
    std::size_t k1 = basis.size(); // k+1
    PolyMatrix mat(k1, k1, chart_vars());
    std::vector<MultiPoly> row(k1);
    for (std::size_t j = 0; j < k1; ++j) row[j] = basis[j].with_vars(chart_vars());
    for (std::size_t i = 0; i < k1; ++i) {
        for (std::size_t j = 0; j < k1; ++j) mat.at(i, j) = row[j];
        if (i + 1 < k1)
            for (std::size_t j = 0; j < k1; ++j) row[j] = lie_derivative(v, row[j]);
    }
    return mat;
}

namespace {

ExtacticResult finish_extactic(const MultiPoly& affine_raw, long formula, bool vanishes) {
    ExtacticResult res;
    res.formula_degree = formula;
    if (vanishes || affine_raw.is_zero()) {
        res.vanishes_identically = true;
        res.affine_part = MultiPoly::zero(chart_vars());
        return res;
    }
    res.affine_part = affine_raw.primitive_part();
    long adeg = res.affine_part.degree();
    res.infinity_multiplicity = formula - adeg;
    if (res.infinity_multiplicity < 0)
        throw InvariantViolation("extactic: affine degree " + std::to_string(adeg) +
                                 " exceeds the divisor degree " + std::to_string(formula) +
                                 " (declared degree r is wrong or input is not saturated)");
    res.total_degree = formula;
    return res;
}

} // namespace

ExtacticResult extactic_foliation(const AffineFoliation& v, int n) {
    PolyMatrix mat = foliation_wronskian(v, n);
    DetOptions opts;
    opts.size_cap = std::max<std::size_t>(opts.size_cap, mat.rows());
    MultiPoly dtm = det(mat, opts);
    long formula = degree_formula(n, 1, v.declared_degree());
    return finish_extactic(dtm, formula, dtm.is_zero());
}

MultiPoly web_discriminant(const AffineWeb& w) {
    if (w.d() < 2) throw InputError("web_discriminant: need d >= 2");
    MultiPoly rho = resultant(w.slope(), w.slope().derivative(M), M);
    MultiPoly lc = w.slope().leading_coeff_in(M);
    MultiPoly delta = exact_div(rho, lc);
    return delta.is_zero() ? delta.with_vars(chart_vars())
                           : delta.primitive_part().with_vars(chart_vars());
}

namespace {

MultiPoly tangency_poly_on_line(const AffineWeb* w, const AffineFoliation* v, const Rational& alpha,
                                const Rational& beta) {
    if (w) {
        MultiPoly p = w->slope();
        p = p.subst(M, MultiPoly::constant(slope_vars(), alpha));
        MultiPoly line = MultiPoly::variable(slope_vars(), X) * alpha +
                         MultiPoly::constant(slope_vars(), beta);
        return p.subst(Y, line);
    }
    MultiPoly line = MultiPoly::variable(chart_vars(), X) * alpha +
                     MultiPoly::constant(chart_vars(), beta);
    MultiPoly t = v->B() - v->A() * alpha;
    return t.subst(Y, line);
}

int web_degree_impl(const AffineWeb* w, const AffineFoliation* v, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<int> dnum(-40, 40);
    std::uniform_int_distribution<int> dden(1, 7);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rational a1(dnum(rng), dden(rng)), b1(dnum(rng), dden(rng));
        Rational a2(dnum(rng), dden(rng)), b2(dnum(rng), dden(rng));
        a1.canonicalize(); b1.canonicalize(); a2.canonicalize(); b2.canonicalize();
        if (a1 == a2) continue;
        MultiPoly t1 = tangency_poly_on_line(w, v, a1, b1);
        MultiPoly t2 = tangency_poly_on_line(w, v, a2, b2);
        if (t1.is_zero() || t2.is_zero()) continue;
        long d1 = t1.degree_in(X), d2 = t2.degree_in(X);
        if (d1 == d2) return static_cast<int>(d1);
        // the two random lines disagree: non-generic choice, resample
    }
    throw InvariantViolation("web_degree: generic lines kept disagreeing");
}

} // namespace

int web_degree(const AffineWeb& w, std::uint64_t seed) { return web_degree_impl(&w, nullptr, seed); }

int web_degree(const AffineFoliation& v, std::uint64_t seed) {
    return web_degree_impl(nullptr, &v, seed);
}

namespace {

// pseudo-reduction of N modulo P in m: returns (r, t) with lc^t * N = q*P + r
// and deg_m r < deg_m P.  Multiplies by lc only when the head coefficient is
// not exactly divisible.
std::pair<MultiPoly, int> reduce_mod_slope(MultiPoly n, const MultiPoly& p, const MultiPoly& lc) {
    int t = 0;
    long dp = p.degree_in(M);
    while (!n.is_zero() && n.degree_in(M) >= dp) {
        long dn = n.degree_in(M);
        MultiPoly head = n.coeff_of(M, static_cast<std::uint32_t>(dn));
        auto q = try_exact_div(head, lc);
        if (!q) {
            n = n * lc;
            ++t;
            head = head * lc;
            q = try_exact_div(head, lc);
        }
        MultiPoly shift = MultiPoly::variable(slope_vars(), M, static_cast<std::uint32_t>(dn - dp));
        n -= (*q) * shift * p;
    }
    return {n, t};
}

} // namespace

WebSigma web_sigma_norm(const AffineWeb& w, int n) {
    if (n < 1) throw InputError("extactic: n must be >= 1");
    const MultiPoly& P = w.slope();
    const long d = w.d();
    MultiPoly Pm = P.derivative(M);
    MultiPoly lc = P.leading_coeff_in(M);
    MultiPoly mvar = MultiPoly::variable(slope_vars(), M);
    MultiPoly Pxy = P.derivative(X) + mvar * P.derivative(Y);

    // branch derivation, entries carried as numerator over lc^a * P_m^e:
    //   DD(G) = (G_x + m G_y) P_m - (P_x + m P_y) G_m
    auto DD = [&](const MultiPoly& g) {
        return (g.derivative(X) + mvar * g.derivative(Y)) * Pm - Pxy * g.derivative(M);
    };
    MultiPoly Llc = lc.derivative(X) + mvar * lc.derivative(Y);
    MultiPoly DDPm = DD(Pm);

    auto basis = monomial_basis(n);
    std::size_t k1 = basis.size();
    long k = static_cast<long>(k1) - 1;

    std::vector<std::vector<MultiPoly>> rows;
    std::vector<MultiPoly> row = basis;
    long A = 0, E = 0; // accumulated denominator exponents over all rows
    long a = 0, e = 0; // current row exponents
    rows.push_back(row);
    for (long i = 1; i <= k; ++i) {
        std::vector<MultiPoly> next(k1);
        std::vector<int> ts(k1, 0);
        int tmax = 0;
        for (std::size_t j = 0; j < k1; ++j) {
            MultiPoly np = DD(row[j]) * lc * Pm - row[j] * Llc * Pm * Pm * Rational(a) -
                           row[j] * lc * DDPm * Rational(e);
            auto [r, t] = reduce_mod_slope(std::move(np), P, lc);
            next[j] = std::move(r);
            ts[j] = t;
            tmax = std::max(tmax, t);
        }
        for (std::size_t j = 0; j < k1; ++j)
            if (ts[j] < tmax) next[j] = next[j] * lc.pow(static_cast<std::uint32_t>(tmax - ts[j]));
        a = a + 1 + tmax;
        e = e + 2;
        A += a;
        E += e;
        rows.push_back(next);
        row = rows.back();
    }

    // determinant of the numerator matrix in the plain polynomial ring
    PolyMatrix mat(k1, k1, slope_vars());
    for (std::size_t i = 0; i < k1; ++i)
        for (std::size_t j = 0; j < k1; ++j) mat.at(i, j) = rows[i][j];
    DetOptions opts;
    opts.size_cap = std::max<std::size_t>(8, k1);
    MultiPoly detn = det(mat, opts);

    WebSigma out;
    auto vanish = [&]() {
        out.vanishes = true;
        out.num = MultiPoly::zero(chart_vars());
        out.den = MultiPoly::constant(chart_vars(), Rational(1));
        return out;
    };
    if (detn.is_zero()) return vanish();
    auto [detr, tdet] = reduce_mod_slope(std::move(detn), P, lc);
    if (detr.is_zero()) return vanish(); // determinant is a multiple of P
    long At = A + tdet;

    // norm to Q(x,y): N(g) = Res_m(P,g)/lc^{deg_m g}, N(P_m)^E = (rho/lc^{d-1})^E,
    // and sigma_W(v) = lc^{k(k+1)/2} * N(detr) / (lc^{d*At} * N(P_m)^E)
    long mw = k * (k + 1) / 2;
    MultiPoly resnum = resultant(P, detr, M);
    MultiPoly rho = resultant(P, Pm, M);
    long exponent = mw + (d - 1) * E - d * At - detr.degree_in(M);

    MultiPoly num = resnum;
    MultiPoly den = rho.pow(static_cast<std::uint32_t>(E));
    if (exponent >= 0) num = num * lc.pow(static_cast<std::uint32_t>(exponent));
    else den = den * lc.pow(static_cast<std::uint32_t>(-exponent));

    MultiPoly g = gcd(num, den);
    if (!g.is_constant()) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    out.num = num.with_vars(chart_vars());
    out.den = den.with_vars(chart_vars());
    return out;
}

ExtacticResult extactic_web(const AffineWeb& w, int n) {
    WebSigma sigma = web_sigma_norm(w, n);
    long formula = degree_formula(n, w.d(), w.declared_degree());
    if (sigma.vanishes) return finish_extactic(MultiPoly::zero(chart_vars()), formula, true);

    long k = linear_system_dim(n);
    MultiPoly delta_pow = MultiPoly::constant(chart_vars(), Rational(1));
    if (w.d() >= 2) {
        MultiPoly delta = web_discriminant(w);
        delta_pow = delta.pow(static_cast<std::uint32_t>(k * (k - 1) / 2));
    }
    // the pole-order lemma made computational: Delta^{k(k-1)/2} * N(sigma)
    // must have polynomial normal form
    MultiPoly total = sigma.num * delta_pow;
    auto affine = try_exact_div(total, sigma.den);
    if (!affine)
        throw InvariantViolation(
            "extactic_web: polynomiality failed; Delta^{k(k-1)/2} * N(sigma) is not a polynomial");
    return finish_extactic(*affine, formula, false);
}

bool invariant_curve_test(const AffineFoliation& v, const MultiPoly& f) {
    MultiPoly g = f.with_vars(chart_vars());
    if (g.is_constant()) throw InputError("invariant_curve_test: constant curve");
    g = g.primitive_part();
    return divides(g, lie_derivative(v, g));
}

bool invariant_curve_test(const AffineWeb& w, const MultiPoly& f) {
    MultiPoly g = f.with_vars(slope_vars());
    if (g.is_constant()) throw InputError("invariant_curve_test: constant curve");
    g = g.primitive_part();
    MultiPoly s = g.derivative(X) + MultiPoly::variable(slope_vars(), M) * g.derivative(Y);
    if (s.is_zero()) return false;
    if (s.degree_in(M) < 1) {
        // curve with vertical tangent everywhere (f free of y): invariant
        // exactly when the vertical branch lives on it
        return divides(g, w.slope().leading_coeff_in(M));
    }
    MultiPoly res = resultant(w.slope(), s, M);
    return divides(g, res);
}

namespace {

// rational linear factors of q, complete over Q
std::vector<MultiPoly> rational_linear_factors(const MultiPoly& q) {
    std::vector<MultiPoly> out;
    VarsPtr v2 = chart_vars();
    MultiPoly qq = q.with_vars(v2);
    // vertical lines x - c: common rational roots of all y-coefficients
    {
        MultiPoly g(v2);
        for (const auto& c : qq.coeffs_in(Y)) g = gcd(g, c);
        if (g.degree_in(X) >= 1)
            for (const auto& root : upoly_rational_roots(to_upoly(g, X)))
                out.push_back(MultiPoly::variable(v2, X) - MultiPoly::constant(v2, root));
    }
    // lines y = alpha x + beta: all x-coefficients of q(x, alpha x + beta) vanish
    VarsPtr xab = VarSet::make({"x", "al", "be"});
    VarsPtr ab = VarSet::make({"al", "be"});
    std::vector<MultiPoly> conds;
    {
        MultiPoly line = MultiPoly::variable(xab, std::size_t(1)) * MultiPoly::variable(xab, std::size_t(0)) +
                         MultiPoly::variable(xab, std::size_t(2));
        MultiPoly acc(xab);
        for (const auto& [e, c] : qq.terms()) {
            MultiPoly t = MultiPoly::constant(xab, c);
            if (e[X]) t = t * MultiPoly::variable(xab, std::size_t(0), e[X]);
            if (e[Y]) t = t * line.pow(e[Y]);
            acc += t;
        }
        for (const auto& cf : acc.coeffs_in(0))
            if (!cf.is_zero()) conds.push_back(cf.with_vars(ab));
    }
    std::vector<Rational> alphas;
    if (conds.size() >= 2) {
        MultiPoly pivot(ab);
        for (const auto& c : conds)
            if (c.degree_in(1) > 0 && (pivot.is_zero() || c.degree_in(1) < pivot.degree_in(1)))
                pivot = c;
        MultiPoly acc_gcd(ab);
        if (pivot.is_zero()) {
            for (const auto& c : conds) acc_gcd = gcd(acc_gcd, c);
        } else {
            for (const auto& c : conds) {
                if (c == pivot) continue;
                MultiPoly r = c.degree_in(1) > 0 ? resultant(pivot, c, 1) : c;
                acc_gcd = gcd(acc_gcd, r);
            }
        }
        if (!acc_gcd.is_zero() && acc_gcd.degree_in(0) >= 1)
            for (const auto& r : upoly_rational_roots(to_upoly(acc_gcd, 0))) alphas.push_back(r);
    }
    for (const auto& alpha : alphas) {
        MultiPoly g(ab);
        for (const auto& c : conds) g = gcd(g, c.subst(0, MultiPoly::constant(ab, alpha)));
        if (g.is_zero() || g.degree_in(1) < 1) continue;
        for (const auto& beta : upoly_rational_roots(to_upoly(g, 1)))
            out.push_back(MultiPoly::variable(v2, Y) - MultiPoly::variable(v2, X) * alpha -
                          MultiPoly::constant(v2, beta));
    }
    std::vector<MultiPoly> verified;
    for (auto& f : out)
        if (divides(f, qq)) verified.push_back(f.primitive_part());
    return verified;
}

// rational graph factors yv - q(xv) with 2 <= deg q <= n, by exact power
// series lifting at a rational base point where the fiber stays square-free
std::vector<MultiPoly> rational_graph_factors(const MultiPoly& q, int n, bool graph_over_x) {
    std::vector<MultiPoly> out;
    VarsPtr v2 = chart_vars();
    std::size_t xv = graph_over_x ? X : Y;
    std::size_t yv = graph_over_x ? Y : X;
    MultiPoly qq = q.with_vars(v2);
    if (qq.degree_in(yv) < 1) return out;
    MultiPoly qy = qq.derivative(yv);
    for (int base = 0; base < 60; ++base) {
        Rational x0(base % 2 == 0 ? base / 2 : -(base / 2 + 1));
        MultiPoly spec = qq.subst(xv, MultiPoly::constant(v2, x0));
        if (spec.degree_in(yv) != qq.degree_in(yv)) continue;
        UPoly u = to_upoly(spec, yv);
        if (upoly_gcd(u, u.derivative()).deg() > 0) continue;
        std::size_t ord = static_cast<std::size_t>(n);
        for (const auto& y0 : upoly_rational_roots(u)) {
            std::vector<Rational> point = graph_over_x ? std::vector<Rational>{x0, y0}
                                                       : std::vector<Rational>{y0, x0};
            Rational denom = qy.eval(point);
            if (sgn(denom) == 0) continue; // not a simple fiber point
            std::vector<Rational> ys{y0};
            for (std::size_t step = 1; step <= ord; ++step) {
                TruncSeries s(step, {Rational(0), Rational(1)});
                TruncSeries xs = TruncSeries::constant(step, x0) + s;
                TruncSeries yser = TruncSeries::constant(step, Rational(0));
                for (std::size_t i = 0; i < ys.size(); ++i)
                    yser = yser + s.pow(static_cast<unsigned>(i)) * TruncSeries::constant(step, ys[i]);
                TruncSeries acc = TruncSeries::constant(step, Rational(0));
                for (const auto& [e, c] : qq.terms()) {
                    TruncSeries t = TruncSeries::constant(step, c);
                    if (e[xv]) t = t * xs.pow(e[xv]);
                    if (e[yv]) t = t * yser.pow(e[yv]);
                    acc = acc + t;
                }
                ys.push_back(-acc.coeff(step) / denom);
            }
            MultiPoly xm = MultiPoly::variable(v2, xv) - MultiPoly::constant(v2, x0);
            MultiPoly qpoly(v2);
            for (std::size_t i = 0; i < ys.size(); ++i)
                qpoly += xm.pow(static_cast<std::uint32_t>(i)) * MultiPoly::constant(v2, ys[i]);
            MultiPoly cand = MultiPoly::variable(v2, yv) - qpoly;
            if (cand.degree() >= 2 && divides(cand, qq)) out.push_back(cand.primitive_part());
        }
        return out; // a single good base point already sees every rational graph factor
    }
    return out;
}

template <class WebLike>
std::vector<InvariantCurve> invariant_curves_impl(const WebLike& w, const ExtacticResult& ext,
                                                  int n) {
    if (ext.vanishes_identically)
        throw InputError("invariant_curves_from_extactic: the extactic divisor vanishes "
                         "identically (every leaf lies in a curve of degree <= n)");
    std::vector<InvariantCurve> out;
    const MultiPoly E = ext.affine_part.with_vars(chart_vars());
    if (E.is_constant()) return out;
    std::vector<MultiPoly> candidates;
    auto push_unique = [&](const MultiPoly& f) {
        for (const auto& g : candidates)
            if (g == f) return;
        candidates.push_back(f);
    };
    MultiPoly sqf = squarefree_part(E);
    for (const auto& f : rational_linear_factors(sqf)) push_unique(f);
    if (n >= 2) {
        for (const auto& f : rational_graph_factors(sqf, n, true)) push_unique(f);
        for (const auto& f : rational_graph_factors(sqf, n, false)) push_unique(f);
    }
    for (const auto& f : candidates) {
        if (f.degree() > n) continue;
        if (!invariant_curve_test(w, f)) continue;
        int mult = 0;
        MultiPoly rest = E;
        while (true) {
            auto quo = try_exact_div(rest, f);
            if (!quo) break;
            rest = *quo;
            ++mult;
        }
        if (mult > 0) out.push_back({f, mult});
    }
    std::sort(out.begin(), out.end(), [](const InvariantCurve& a, const InvariantCurve& b) {
        return a.curve.to_string() < b.curve.to_string();
    });
    return out;
}

} // namespace

std::vector<InvariantCurve> invariant_curves_from_extactic(const AffineFoliation& v, int n) {
    return invariant_curves_impl(v, extactic_foliation(v, n), n);
}

std::vector<InvariantCurve> invariant_curves_from_extactic(const AffineWeb& w, int n) {
    return invariant_curves_impl(w, extactic_web(w, n), n);
}

MultiPoly chart_change(const MultiPoly& curve, const std::vector<std::vector<Rational>>& g) {
    if (g.size() != 3 || g[0].size() != 3 || g[1].size() != 3 || g[2].size() != 3)
        throw InputError("chart_change: need a 3x3 matrix");
    MultiPoly c = curve.with_vars(chart_vars());
    long deg = std::max<long>(c.degree(), 0);
    VarsPtr v2 = chart_vars();
    MultiPoly xs = MultiPoly::variable(v2, X), ys = MultiPoly::variable(v2, Y),
              one = MultiPoly::constant(v2, Rational(1));
    MultiPoly xn = xs * g[0][0] + ys * g[0][1] + one * g[0][2];
    MultiPoly yn = xs * g[1][0] + ys * g[1][1] + one * g[1][2];
    MultiPoly wn = xs * g[2][0] + ys * g[2][1] + one * g[2][2];
    MultiPoly acc(v2);
    for (const auto& [e, coef] : c.terms()) {
        MultiPoly t = MultiPoly::constant(v2, coef);
        if (e[X]) t = t * xn.pow(e[X]);
        if (e[Y]) t = t * yn.pow(e[Y]);
        std::uint32_t rest = static_cast<std::uint32_t>(deg) - e[X] - e[Y];
        if (rest) t = t * wn.pow(rest);
        acc += t;
    }
    return acc.is_zero() ? acc : acc.primitive_part();
}

} // namespace extactic
