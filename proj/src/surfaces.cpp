#include "extactic/surfaces.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "extactic/error.hpp"
#include "extactic/polymatrix.hpp"
#include "extactic/polyops.hpp"
#include "extactic/zerodim.hpp"

namespace extactic {

VarsPtr proj_vars() {
    static VarsPtr v = VarSet::make({"x0", "x1", "x2", "x3"});
    return v;
}

ProjSurface::ProjSurface(MultiPoly f) : f_(f.with_vars(proj_vars())) {
    if (f_.is_zero()) throw InputError("surface: zero polynomial");
    if (!f_.is_homogeneous()) throw InputError("surface: polynomial is not homogeneous");
    f_ = f_.primitive_part();
    d_ = static_cast<int>(f_.degree());
    if (d_ < 1) throw InputError("surface: degree must be positive");
}

std::array<Rational, 8> LineFamily::rational_span() const {
    if (!is_rational()) throw InvariantViolation("rational_span on an algebraic line");
    // modulus z - r: entries are constants after reduction
    std::array<Rational, 8> out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 4; ++c) {
            const UPoly& e = span[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            out[static_cast<std::size_t>(r * 4 + c)] = e.is_zero() ? Rational(0) : e.coeff(0);
        }
    return out;
}

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

std::array<UPoly, 6> pluecker_of(const std::array<std::array<UPoly, 4>, 2>& rows,
                                 const NumberField& k) {
    std::array<UPoly, 6> p;
    for (int idx = 0; idx < 6; ++idx) {
        int i = kPairs[idx][0], j = kPairs[idx][1];
        p[static_cast<std::size_t>(idx)] =
            k.sub(k.mul(rows[0][static_cast<std::size_t>(i)], rows[1][static_cast<std::size_t>(j)]),
                  k.mul(rows[0][static_cast<std::size_t>(j)], rows[1][static_cast<std::size_t>(i)]));
    }
    return p;
}

void check_pluecker_relation(const std::array<UPoly, 6>& p, const NumberField& k) {
    UPoly rel = k.sub(k.mul(p[0], p[5]), k.mul(p[1], p[4]));
    rel = k.add(rel, k.mul(p[2], p[3]));
    if (!rel.is_zero())
        throw InvariantViolation("line family violates the Pluecker quadric relation");
}

// row-reduce a 2x4 matrix over K, splitting the family on zero divisors
void canonicalize_rows(FieldPtr field, std::array<std::array<UPoly, 4>, 2> rows,
                       std::vector<LineFamily>& out) {
    const NumberField& k = *field;
    try {
        std::array<std::array<UPoly, 4>, 2> m = rows;
        for (auto& r : m)
            for (auto& e : r) e = k.reduce(e);
        int prow = 0;
        int pivots[2] = {-1, -1};
        for (int col = 0; col < 4 && prow < 2; ++col) {
            int found = -1;
            for (int r = prow; r < 2; ++r) {
                if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                    found = r;
                    break;
                }
            }
            if (found < 0) continue;
            std::swap(m[static_cast<std::size_t>(prow)], m[static_cast<std::size_t>(found)]);
            UPoly inv = k.invert(m[static_cast<std::size_t>(prow)][static_cast<std::size_t>(col)]);
            for (auto& e : m[static_cast<std::size_t>(prow)]) e = k.mul(e, inv);
            for (int r = 0; r < 2; ++r) {
                if (r == prow) continue;
                UPoly f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
                if (f.is_zero()) continue;
                for (int c = 0; c < 4; ++c)
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = k.sub(
                        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
                        k.mul(f, m[static_cast<std::size_t>(prow)][static_cast<std::size_t>(c)]));
            }
            pivots[prow] = col;
            ++prow;
        }
        if (prow < 2) throw InvariantViolation("line family has rank < 2");
        LineFamily fam;
        fam.field = field;
        fam.span = m;
        fam.pluecker = pluecker_of(m, k);
        check_pluecker_relation(fam.pluecker, k);
        out.push_back(std::move(fam));
    } catch (const D5Split& split) {
        UPoly m1 = split.factor;
        UPoly m2 = *try_exact_div(field->modulus(), split.factor);
        for (const UPoly& part : {m1, m2}) {
            if (part.deg() == 0) continue;
            auto sub = std::make_shared<NumberField>(part, false);
            canonicalize_rows(sub, rows, out);
        }
    }
}

// ---- seeded projective coordinate changes (integer shears) ----

struct Rotation {
    std::vector<std::vector<Rational>> g, ginv; // 4x4, exact inverse
};

std::vector<std::vector<Rational>> identity4() {
    std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4, Rational(0)));
    for (int i = 0; i < 4; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

std::vector<std::vector<Rational>> matmul(const std::vector<std::vector<Rational>>& a,
                                          const std::vector<std::vector<Rational>>& b) {
    std::vector<std::vector<Rational>> c(4, std::vector<Rational>(4, Rational(0)));
    for (int i = 0; i < 4; ++i)
        for (int l = 0; l < 4; ++l)
            for (int j = 0; j < 4; ++j)
                c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] *
                    b[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
    return c;
}

Rotation random_rotation(std::mt19937_64& rng, int strength) {
    Rotation rot;
    rot.g = identity4();
    rot.ginv = identity4();
    std::uniform_int_distribution<int> didx(0, 3);
    std::uniform_int_distribution<int> dc(-2 - strength, 2 + strength);
    int shears = 5 + 2 * strength;
    for (int s = 0; s < shears; ++s) {
        int i = didx(rng), j = didx(rng);
        if (i == j) continue;
        int c = dc(rng);
        if (c == 0) c = 1;
        // E = I + c e_ij ;  E^{-1} = I - c e_ij
        auto e = identity4();
        e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
        auto einv = identity4();
        einv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -c;
        rot.g = matmul(rot.g, e);
        rot.ginv = matmul(einv, rot.ginv);
    }
    return rot;
}

// f(G x)
MultiPoly apply_coord_change(const MultiPoly& f, const std::vector<std::vector<Rational>>& g) {
    VarsPtr v = f.vars();
    std::vector<MultiPoly> images(4, MultiPoly(v));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            images[static_cast<std::size_t>(i)] +=
                MultiPoly::variable(v, static_cast<std::size_t>(j)) *
                g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    MultiPoly acc(v);
    for (const auto& [e, c] : f.terms()) {
        MultiPoly t = MultiPoly::constant(v, c);
        for (std::size_t i = 0; i < 4; ++i)
            if (e[i]) t = t * images[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

// ---- chart slice systems ----

struct SliceSystem {
    std::vector<MultiPoly> eqs;     // over vars (l1..l4)
    VarsPtr vars;                   // {l1,l2,l3,l4}
    int axis_i, axis_j, free_c1, free_c2;
};

SliceSystem build_slice(const MultiPoly& f_rot, int slice) {
    SliceSystem sys;
    sys.vars = VarSet::make({"l1", "l2", "l3", "l4"});
    int i = kPairs[slice][0], j = kPairs[slice][1];
    int comp[2], nc = 0;
    for (int c = 0; c < 4; ++c)
        if (c != i && c != j) comp[nc++] = c;
    sys.axis_i = i;
    sys.axis_j = j;
    sys.free_c1 = comp[0];
    sys.free_c2 = comp[1];

    VarsPtr work = VarSet::make({"s", "t", "l1", "l2", "l3", "l4"});
    auto var = [&](int idx) { return MultiPoly::variable(work, static_cast<std::size_t>(idx)); };
    // rows: e_i + l1 e_c1 + l2 e_c2 ;  e_j + l3 e_c1 + l4 e_c2
    std::vector<MultiPoly> row1(4, MultiPoly(work)), row2(4, MultiPoly(work));
    row1[static_cast<std::size_t>(i)] = MultiPoly::constant(work, Rational(1));
    row1[static_cast<std::size_t>(comp[0])] = var(2);
    row1[static_cast<std::size_t>(comp[1])] = var(3);
    row2[static_cast<std::size_t>(j)] = MultiPoly::constant(work, Rational(1));
    row2[static_cast<std::size_t>(comp[0])] = var(4);
    row2[static_cast<std::size_t>(comp[1])] = var(5);

    // point on the line: s row1 + t row2
    std::vector<MultiPoly> point(4, MultiPoly(work));
    for (int c = 0; c < 4; ++c)
        point[static_cast<std::size_t>(c)] =
            var(0) * row1[static_cast<std::size_t>(c)] + var(1) * row2[static_cast<std::size_t>(c)];
    // term expansion of F(point)
    MultiPoly acc(work);
    for (const auto& [e, coef] : f_rot.terms()) {
        MultiPoly t = MultiPoly::constant(work, coef);
        for (std::size_t c = 0; c < 4; ++c)
            if (e[c]) t = t * point[c].pow(e[c]);
        acc += t;
    }
    // binary-form coefficients in (s,t) are the on-surface conditions
    long dd = f_rot.degree();
    for (long a = 0; a <= dd; ++a) {
        MultiPoly cf(work);
        for (const auto& [e, coef] : acc.terms()) {
            if (e[0] != static_cast<std::uint32_t>(a)) continue;
            Expvec r = e;
            r[0] = 0;
            r[1] = 0;
            cf.add_term(r, coef);
        }
        if (!cf.is_zero()) sys.eqs.push_back(cf.with_vars(sys.vars));
    }
    // earlier Pluecker coordinates vanish on this slice
    std::vector<MultiPoly> plk(6, MultiPoly(work));
    for (int idx = 0; idx < 6; ++idx) {
        int a = kPairs[idx][0], b = kPairs[idx][1];
        plk[static_cast<std::size_t>(idx)] = row1[static_cast<std::size_t>(a)] * row2[static_cast<std::size_t>(b)] -
                                             row1[static_cast<std::size_t>(b)] * row2[static_cast<std::size_t>(a)];
    }
    for (int idx = 0; idx < slice; ++idx)
        if (!plk[static_cast<std::size_t>(idx)].is_zero())
            sys.eqs.push_back(plk[static_cast<std::size_t>(idx)].with_vars(sys.vars));
    return sys;
}

} // namespace

LineFamily make_rational_line(const std::array<Rational, 4>& p, const std::array<Rational, 4>& q) {
    // field Q[z]/(z): rational entries
    UPoly z = UPoly::x();
    auto field = std::make_shared<NumberField>(z, false);
    std::array<std::array<UPoly, 4>, 2> rows;
    for (int c = 0; c < 4; ++c) {
        rows[0][static_cast<std::size_t>(c)] = UPoly::constant(p[static_cast<std::size_t>(c)]);
        rows[1][static_cast<std::size_t>(c)] = UPoly::constant(q[static_cast<std::size_t>(c)]);
    }
    std::vector<LineFamily> out;
    canonicalize_rows(field, rows, out);
    if (out.size() != 1) throw InvariantViolation("make_rational_line: unexpected split");
    return out[0];
}

std::vector<UPoly> restrict_to_family(const MultiPoly& g, const LineFamily& line) {
    const NumberField& k = *line.field;
    MultiPoly gg = g.with_vars(proj_vars());
    if (gg.is_zero()) return {};
    long dd = gg.degree();
    std::vector<UPoly> acc(static_cast<std::size_t>(dd) + 1);
    for (const auto& [e, coef] : gg.terms()) {
        // product over coordinates of (u_c s + v_c t)^{e_c}: binary form coeffs
        std::vector<UPoly> form{UPoly::constant(coef)};
        for (std::size_t c = 0; c < 4; ++c) {
            for (std::uint32_t rep = 0; rep < e[c]; ++rep) {
                std::vector<UPoly> next(form.size() + 1);
                for (std::size_t a = 0; a < form.size(); ++a) {
                    next[a] = k.add(next[a], k.mul(form[a], line.span[0][c]));
                    next[a + 1] = k.add(next[a + 1], k.mul(form[a], line.span[1][c]));
                }
                form = std::move(next);
            }
        }
        for (std::size_t a = 0; a < form.size(); ++a) acc[a] = k.add(acc[a], form[a]);
    }
    return acc;
}

bool vanishes_on_family(const MultiPoly& g, const LineFamily& line) {
    for (const auto& c : restrict_to_family(g, line))
        if (!c.is_zero()) return false;
    return true;
}

bool line_on_surface_check(const ProjSurface& s, const LineFamily& line) {
    return vanishes_on_family(s.F(), line);
}

LinesResult lines_on_surface(const ProjSurface& s, std::uint64_t seed) {
    LinesResult result;
    result.seed = seed;
    if (s.degree() <= 2) {
        result.infinite_family = true;
        result.infinite_reason = s.degree() == 1
                                     ? "plane: every contained line"
                                     : "quadric: ruled surface";
        return result;
    }
    std::mt19937_64 rng(seed ^ 0xabcdef1234567891ull);
    int positive_dim_attempts = 0;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Rotation rot = random_rotation(rng, attempt);
        MultiPoly frot = apply_coord_change(s.F(), rot.g).primitive_part();
        std::vector<LineFamily> families;
        bool retry = false;
        for (int slice = 0; slice < 6 && !retry; ++slice) {
            SliceSystem sys = build_slice(frot, slice);
            ZeroDimResult z = solve_zero_dim(sys.eqs, {0, 1, 2, 3});
            if (z.separation_failure) {
                retry = true;
                break;
            }
            if (z.positive_dimensional) {
                ++positive_dim_attempts;
                retry = true;
                break;
            }
            for (const auto& b : z.branches) {
                // rows in the rotated coordinates
                std::array<std::array<UPoly, 4>, 2> rows;
                rows[0][static_cast<std::size_t>(sys.axis_i)] = UPoly::constant(Rational(1));
                rows[0][static_cast<std::size_t>(sys.free_c1)] = b.coords[0];
                rows[0][static_cast<std::size_t>(sys.free_c2)] = b.coords[1];
                rows[1][static_cast<std::size_t>(sys.axis_j)] = UPoly::constant(Rational(1));
                rows[1][static_cast<std::size_t>(sys.free_c1)] = b.coords[2];
                rows[1][static_cast<std::size_t>(sys.free_c2)] = b.coords[3];
                // map back: original span rows are G * row
                std::array<std::array<UPoly, 4>, 2> orig;
                const NumberField& k = *b.field;
                for (int r = 0; r < 2; ++r)
                    for (int c = 0; c < 4; ++c) {
                        UPoly acc;
                        for (int l = 0; l < 4; ++l) {
                            const Rational& gcl =
                                rot.g[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)];
                            if (sgn(gcl) == 0) continue;
                            acc = acc + rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(l)] *
                                            gcl;
                        }
                        orig[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = k.reduce(acc);
                    }
                canonicalize_rows(b.field, orig, families);
            }
        }
        if (retry) {
            if (positive_dim_attempts >= 3) {
                result.infinite_family = true;
                result.infinite_reason = "chart systems stayed positive-dimensional";
                return result;
            }
            continue;
        }
        // final verification in the original coordinates
        for (const auto& fam : families)
            if (!line_on_surface_check(s, fam))
                throw InvariantViolation("lines_on_surface: verification failed after mapping back");
        result.families = std::move(families);
        for (auto& row : rot.g) result.rotation.push_back(row);
        return result;
    }
    throw InvariantViolation("lines_on_surface: no generic coordinate change separated the lines");
}

// ---- second fundamental form ----

namespace {

VarsPtr xt_vars() {
    static VarsPtr v = VarSet::make({"x0", "x1", "x2", "x3", "t0", "t1", "t2", "t3"});
    return v;
}

VarsPtr t_vars() {
    static VarsPtr v = VarSet::make({"t0", "t1", "t2", "t3"});
    return v;
}

} // namespace

AsymptoticForm asymptotic_form(const ProjSurface& s) {
    MultiPoly f = s.F().with_vars(xt_vars());
    AsymptoticForm out{MultiPoly(xt_vars()), MultiPoly(xt_vars())};
    for (std::size_t i = 0; i < 4; ++i) {
        MultiPoly ti = MultiPoly::variable(xt_vars(), 4 + i);
        out.linear += ti * f.derivative(i);
        for (std::size_t j = 0; j < 4; ++j) {
            MultiPoly tj = MultiPoly::variable(xt_vars(), 4 + j);
            out.quadratic += ti * tj * f.derivative(i).derivative(j);
        }
    }
    return out;
}

AsymptoticForm asymptotic_form_at(const ProjSurface& s, const std::array<Rational, 4>& point) {
    Rational fval = s.F().eval({point[0], point[1], point[2], point[3]});
    if (sgn(fval) != 0) throw InputError("asymptotic_form_at: point is not on the surface");
    bool grad_zero = true;
    AsymptoticForm sym = asymptotic_form(s);
    AsymptoticForm out{MultiPoly(t_vars()), MultiPoly(t_vars())};
    auto specialize = [&](const MultiPoly& g) {
        MultiPoly acc(t_vars());
        for (const auto& [e, c] : g.terms()) {
            Rational coef = c;
            for (std::size_t i = 0; i < 4; ++i) coef *= rat_pow(point[i], e[i]);
            if (sgn(coef) == 0) continue;
            Expvec r(4, 0);
            for (std::size_t i = 0; i < 4; ++i) r[i] = e[4 + i];
            acc.add_term(r, coef);
        }
        return acc;
    };
    out.linear = specialize(sym.linear);
    out.quadratic = specialize(sym.quadratic);
    for (std::size_t i = 0; i < 4; ++i)
        if (sgn(s.F().derivative(i).eval({point[0], point[1], point[2], point[3]})) != 0)
            grad_zero = false;
    if (grad_zero) throw InputError("asymptotic_form_at: singular point of the surface");
    return out;
}

// ---- hypersurface ring Q[x]/(F), F monic in one variable ----

namespace {

struct HyperRing {
    MultiPoly fmonic; // leading coefficient 1 in mainvar
    std::size_t mainvar;
    long d;
    VarsPtr vars;

    MultiPoly reduce(MultiPoly g) const {
        while (!g.is_zero() && g.degree_in(mainvar) >= d) {
            long dg = g.degree_in(mainvar);
            MultiPoly head = g.coeff_of(mainvar, static_cast<std::uint32_t>(dg));
            MultiPoly shift =
                MultiPoly::variable(vars, mainvar, static_cast<std::uint32_t>(dg - d));
            g -= head * shift * fmonic;
        }
        return g;
    }
    MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return reduce(a * b); }
    bool equal(const MultiPoly& a, const MultiPoly& b) const { return reduce(a - b).is_zero(); }

    // solve q * den == num (mod F) by Cramer over the free basis 1..x^{d-1}
    std::optional<MultiPoly> try_divide(const MultiPoly& num, const MultiPoly& den) const {
        MultiPoly nr = reduce(num), dr = reduce(den);
        if (dr.is_zero()) return std::nullopt;
        if (nr.is_zero()) return MultiPoly::zero(vars);
        // multiplication matrix of den
        std::vector<std::vector<MultiPoly>> m(static_cast<std::size_t>(d),
                                              std::vector<MultiPoly>(static_cast<std::size_t>(d),
                                                                     MultiPoly(vars)));
        for (long j = 0; j < d; ++j) {
            MultiPoly col = reduce(dr * MultiPoly::variable(vars, mainvar, static_cast<std::uint32_t>(j)));
            auto cs = col.coeffs_in(mainvar);
            for (long i = 0; i < d && i < static_cast<long>(cs.size()); ++i)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cs[static_cast<std::size_t>(i)];
        }
        std::vector<MultiPoly> rhs(static_cast<std::size_t>(d), MultiPoly(vars));
        {
            auto cs = nr.coeffs_in(mainvar);
            for (long i = 0; i < d && i < static_cast<long>(cs.size()); ++i)
                rhs[static_cast<std::size_t>(i)] = cs[static_cast<std::size_t>(i)];
        }
        MultiPolyRing ring{vars};
        MultiPoly dd = det_subsets(ring, m);
        if (dd.is_zero()) return std::nullopt;
        MultiPoly q(vars);
        for (long col = 0; col < d; ++col) {
            auto mi = m;
            for (long i = 0; i < d; ++i) mi[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] = rhs[static_cast<std::size_t>(i)];
            MultiPoly di = det_subsets(ring, mi);
            auto qi = try_exact_div(di, dd);
            if (!qi) return std::nullopt;
            q += (*qi) * MultiPoly::variable(vars, mainvar, static_cast<std::uint32_t>(col));
        }
        if (!equal(q * dr, nr)) return std::nullopt;
        return q;
    }
};

// Prepare a monic ring, possibly after a seeded shear; `rot` receives the
// change applied (results must be mapped back through rot.ginv).
HyperRing monic_ring(MultiPoly& f, std::mt19937_64& rng, Rotation& rot, bool& rotated) {
    rotated = false;
    rot.g = identity4();
    rot.ginv = identity4();
    long d = f.degree();
    for (int attempt = 0; attempt < 40; ++attempt) {
        MultiPoly cur = attempt == 0 ? f : apply_coord_change(f, rot.g);
        for (std::size_t v = 0; v < 4; ++v) {
            Expvec pure(4, 0);
            pure[v] = static_cast<std::uint32_t>(d);
            Rational c = cur.coeff(pure);
            if (sgn(c) != 0) {
                HyperRing ring;
                ring.vars = proj_vars();
                ring.fmonic = cur * (1 / c);
                ring.mainvar = v;
                ring.d = d;
                f = cur;
                rotated = attempt > 0;
                return ring;
            }
        }
        rot = random_rotation(rng, attempt / 4);
    }
    throw InvariantViolation("monic_ring: could not reach a monic position");
}

MultiPoly directional(const MultiPoly& f, const std::vector<MultiPoly>& dir) {
    MultiPoly acc(f.vars());
    for (std::size_t i = 0; i < 4; ++i) acc += dir[i] * f.derivative(i);
    return acc;
}

struct PencilForms {
    // binary quadric a u^2 + b uv + c v^2 and cubic e u^3 + f u^2 v + g u v^2 + h v^3
    MultiPoly qa, qb, qc;
    MultiPoly ca, cb, cc, cd;
};

// tangent pencil generators g1 = F_j1 e_p - F_p e_j1, g2 = F_j2 e_p - F_p e_j2
PencilForms pencil_forms(const HyperRing& ring, const MultiPoly& f, int p, int j1, int j2) {
    VarsPtr v = f.vars();
    std::vector<MultiPoly> grad(4, MultiPoly(v));
    for (std::size_t i = 0; i < 4; ++i) grad[i] = f.derivative(i);
    auto gen = [&](int j) {
        std::vector<MultiPoly> g(4, MultiPoly(v));
        g[static_cast<std::size_t>(p)] = grad[static_cast<std::size_t>(j)];
        g[static_cast<std::size_t>(j)] = -grad[static_cast<std::size_t>(p)];
        return g;
    };
    std::vector<MultiPoly> g1 = gen(j1), g2 = gen(j2);
    // second derivative contraction H(a,b) = sum F_ij a_i b_j
    auto hess = [&](const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
        MultiPoly acc(v);
        for (std::size_t i = 0; i < 4; ++i) {
            MultiPoly fi = grad[i];
            for (std::size_t j = 0; j < 4; ++j) acc += a[i] * b[j] * fi.derivative(j);
        }
        return ring.reduce(acc);
    };
    // third derivative contraction
    auto third = [&](const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b,
                     const std::vector<MultiPoly>& c) {
        MultiPoly acc(v);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                MultiPoly fij = grad[i].derivative(j);
                for (std::size_t l = 0; l < 4; ++l) acc += a[i] * b[j] * c[l] * fij.derivative(l);
            }
        return ring.reduce(acc);
    };
    PencilForms out;
    out.qa = hess(g1, g1);
    out.qb = ring.reduce(hess(g1, g2) * Rational(2));
    out.qc = hess(g2, g2);
    out.ca = third(g1, g1, g1);
    out.cb = ring.reduce(third(g1, g1, g2) * Rational(3));
    out.cc = ring.reduce(third(g1, g2, g2) * Rational(3));
    out.cd = third(g2, g2, g2);
    return out;
}

struct RingElemOps {
    const HyperRing* ring;
    MultiPoly zero() const { return MultiPoly::zero(ring->vars); }
    MultiPoly one() const { return MultiPoly::constant(ring->vars, Rational(1)); }
    MultiPoly add(const MultiPoly& a, const MultiPoly& b) const { return a + b; }
    MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return ring->mul(a, b); }
    MultiPoly neg(const MultiPoly& a) const { return -a; }
    bool is_zero(const MultiPoly& a) const { return a.is_zero(); }
};

// candidate extraneous factors for the cleanup loops
std::vector<std::pair<std::string, MultiPoly>> junk_candidates(const MultiPoly& f) {
    std::vector<std::pair<std::string, MultiPoly>> out;
    VarsPtr v = f.vars();
    for (std::size_t i = 0; i < 4; ++i) {
        MultiPoly fi = f.derivative(i);
        if (!fi.is_zero())
            out.emplace_back("dF/dx" + std::to_string(i), fi.primitive_part());
    }
    for (std::size_t i = 0; i < 4; ++i)
        out.emplace_back("x" + std::to_string(i), MultiPoly::variable(v, i));
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            MultiPoly s = MultiPoly::variable(v, static_cast<std::size_t>(a)) *
                              f.derivative(static_cast<std::size_t>(a)) +
                          MultiPoly::variable(v, static_cast<std::size_t>(b)) *
                              f.derivative(static_cast<std::size_t>(b));
            if (!s.is_zero())
                out.emplace_back("S" + std::to_string(a) + std::to_string(b), s.primitive_part());
        }
    return out;
}

// divide out extraneous factors until the degree reaches `target` exactly
bool cleanup_to_degree(const HyperRing& ring, MultiPoly& g, long target,
                       const std::vector<std::pair<std::string, MultiPoly>>& candidates,
                       std::vector<std::string>& removed, int depth = 0) {
    long deg = g.degree();
    if (deg == target) return true;
    if (deg < target || depth > 40) return false;
    for (const auto& [name, c] : candidates) {
        long cd = c.degree();
        if (cd == 0 || cd > deg - target) continue;
        auto q = ring.try_divide(g, c);
        if (!q || q->is_zero()) continue;
        MultiPoly qq = q->primitive_part();
        if (qq.degree() + cd != deg) continue; // inhomogeneous quotient: reject
        removed.push_back(name);
        MultiPoly saved = g;
        g = qq;
        if (cleanup_to_degree(ring, g, target, candidates, removed, depth + 1)) return true;
        g = saved;
        removed.pop_back();
    }
    return false;
}

} // namespace

MultiPoly hessian_determinant(const ProjSurface& s) {
    PolyMatrix h(4, 4, proj_vars());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) h.at(i, j) = s.F().derivative(i).derivative(j);
    return det(h);
}

MultiPoly discriminant_II(const ProjSurface& s, std::uint64_t seed) {
    if (s.degree() < 2) throw InputError("discriminant_II: need degree >= 2");
    std::mt19937_64 rng(seed ^ 0x5555aaaa5555aaaaull);
    MultiPoly f = s.F();
    Rotation rot;
    bool rotated = false;
    HyperRing ring = monic_ring(f, rng, rot, rotated);
    long target = 4 * (s.degree() - 2);

    std::vector<MultiPoly> cleaned;
    auto candidates = junk_candidates(f);
    int patterns[4][3] = {{0, 1, 2}, {1, 0, 3}, {2, 3, 0}, {3, 2, 1}};
    for (auto& pat : patterns) {
        if (f.derivative(static_cast<std::size_t>(pat[0])).is_zero()) continue;
        PencilForms pf = pencil_forms(ring, f, pat[0], pat[1], pat[2]);
        MultiPoly disc = ring.reduce(pf.qb * pf.qb - pf.qa * pf.qc * Rational(4));
        if (disc.is_zero()) {
            cleaned.push_back(MultiPoly::zero(proj_vars()));
            continue;
        }
        MultiPoly g = disc.primitive_part();
        std::vector<std::string> removed;
        if (cleanup_to_degree(ring, g, target, candidates, removed)) {
            cleaned.push_back(g);
            break; // one pattern that reaches the target is enough
        }
        cleaned.push_back(g);
    }
    // all patterns identically zero: the form degenerates (cone/tangential)
    bool all_zero = !cleaned.empty();
    for (const auto& c : cleaned)
        if (!c.is_zero()) all_zero = false;
    if (all_zero) return MultiPoly::zero(proj_vars());
    // prefer a cleaned representative that reached the target degree
    for (const auto& c : cleaned)
        if (!c.is_zero() && c.degree() == target) {
            MultiPoly back = rotated ? apply_coord_change(c, rot.ginv) : c;
            return back.primitive_part();
        }
    for (const auto& c : cleaned)
        if (!c.is_zero()) {
            MultiPoly back = rotated ? apply_coord_change(c, rot.ginv) : c;
            return back.primitive_part();
        }
    return MultiPoly::zero(proj_vars());
}

std::optional<Rational> proportional_mod_f(const ProjSurface& s, const MultiPoly& a,
                                           const MultiPoly& b, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x977712345678ull);
    MultiPoly f = s.F();
    Rotation rot;
    bool rotated = false;
    HyperRing ring = monic_ring(f, rng, rot, rotated);
    MultiPoly aw = rotated ? apply_coord_change(a.with_vars(proj_vars()), rot.g) : a.with_vars(proj_vars());
    MultiPoly bw = rotated ? apply_coord_change(b.with_vars(proj_vars()), rot.g) : b.with_vars(proj_vars());
    MultiPoly ra = ring.reduce(aw), rb = ring.reduce(bw);
    if (rb.is_zero()) {
        if (ra.is_zero()) return Rational(1);
        return std::nullopt;
    }
    if (ra.is_zero()) return std::nullopt; // c must be nonzero per the cross-check contract
    const auto& [eb, cb] = *rb.terms().begin();
    Rational ca = ra.coeff(eb);
    if (sgn(ca) == 0) return std::nullopt;
    Rational c = ca / cb;
    if (ring.reduce(ra - rb * c).is_zero()) return c;
    return std::nullopt;
}

RingReport flecnodal(const ProjSurface& s, std::uint64_t seed) {
    if (s.degree() < 3) throw InputError("flecnodal: need degree >= 3");
    std::mt19937_64 rng(seed ^ 0x1333377777ull);
    MultiPoly f = s.F();
    Rotation rot;
    bool rotated = false;
    HyperRing ring = monic_ring(f, rng, rot, rotated);
    long d = s.degree();
    long target = 11 * d - 24;

    RingReport best;
    best.target_degree = target;
    auto candidates = junk_candidates(f);
    int patterns[3][3] = {{0, 1, 2}, {1, 2, 3}, {2, 0, 3}};
    MultiPoly first_reached(proj_vars());
    for (auto& pat : patterns) {
        if (f.derivative(static_cast<std::size_t>(pat[0])).is_zero()) continue;
        PencilForms pf = pencil_forms(ring, f, pat[0], pat[1], pat[2]);
        // resultant of the binary quadric and binary cubic: 5x5 Sylvester over the ring
        RingElemOps ops{&ring};
        MultiPoly z = ops.zero();
        std::vector<std::vector<MultiPoly>> syl = {
            {pf.qa, pf.qb, pf.qc, z, z},
            {z, pf.qa, pf.qb, pf.qc, z},
            {z, z, pf.qa, pf.qb, pf.qc},
            {pf.ca, pf.cb, pf.cc, pf.cd, z},
            {z, pf.ca, pf.cb, pf.cc, pf.cd}};
        MultiPoly graw = det_subsets(ops, syl);
        if (graw.is_zero()) continue; // asymptotic directions always flecnodal: ruled-like
        MultiPoly g = graw.primitive_part();
        std::vector<std::string> removed;
        bool ok = cleanup_to_degree(ring, g, target, candidates, removed);
        if (ok) {
            MultiPoly back = rotated ? apply_coord_change(g, rot.ginv).primitive_part() : g;
            if (best.reached_target) {
                // cross-pattern comparison: both cleaned results must agree mod F
                auto c = proportional_mod_f(s, best.value, back, seed);
                if (!c)
                    throw InvariantViolation("flecnodal: chart results disagree modulo F");
                continue;
            }
            best.value = back;
            best.achieved_degree = back.degree();
            best.reached_target = true;
            best.removed_factors = removed;
            continue;
        }
        if (!best.reached_target && (best.achieved_degree < 0 || g.degree() < best.achieved_degree)) {
            MultiPoly back = rotated ? apply_coord_change(g, rot.ginv).primitive_part() : g;
            best.value = back;
            best.achieved_degree = back.degree();
            best.removed_factors = removed;
        }
    }
    if (best.achieved_degree < 0)
        throw InvariantViolation("flecnodal: all tangent-pencil patterns degenerated "
                                 "(is the surface ruled?)");
    return best;
}

SalmonBound salmon_bound(int d) {
    if (d < 3) throw InputError("salmon_bound: need d >= 3");
    SalmonBound b;
    b.bound = static_cast<long>(d) * (11 * d - 24);
    b.section_degree = 13 * d - 26;
    b.ramification_degree = d - 1;
    b.reduced_degree = b.section_degree - 2 * b.ramification_degree;
    return b;
}

SmoothnessProbe smoothness_probe(const ProjSurface& s, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x4444000011112222ull);
    for (int attempt = 0; attempt < 3; ++attempt) {
        Rotation rot = random_rotation(rng, attempt);
        MultiPoly f = attempt == 0 ? s.F() : apply_coord_change(s.F(), rot.g);
        bool inconclusive = false;
        bool singular = false;
        for (std::size_t chart = 0; chart < 4 && !singular; ++chart) {
            std::vector<MultiPoly> eqs;
            for (std::size_t i = 0; i < 4; ++i) {
                MultiPoly fi = f.derivative(i).subst(
                    chart, MultiPoly::constant(proj_vars(), Rational(1)));
                if (!fi.is_zero()) eqs.push_back(fi);
                if (fi.is_zero() && !f.derivative(i).is_zero())
                    eqs.push_back(MultiPoly::constant(proj_vars(), Rational(1))); // impossible eq
            }
            if (eqs.empty()) {
                singular = true; // all partials vanish on the chart
                break;
            }
            std::vector<std::size_t> vars;
            for (std::size_t i = 0; i < 4; ++i)
                if (i != chart) vars.push_back(i);
            ZeroDimResult z = solve_zero_dim(eqs, vars);
            if (z.positive_dimensional || z.separation_failure) {
                inconclusive = true;
                break;
            }
            if (!z.branches.empty()) singular = true;
        }
        if (singular) return SmoothnessProbe::Singular;
        if (!inconclusive) return SmoothnessProbe::Smooth;
    }
    return SmoothnessProbe::Inconclusive;
}

} // namespace extactic
