#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "extactic/parse.hpp"
#include "extactic/polyops.hpp"
#include "extactic/webs.hpp"

using namespace extactic;

namespace {

MultiPoly cp(const std::string& s) { return parse_poly(s, chart_vars()); }
MultiPoly sp(const std::string& s) { return parse_poly(s, slope_vars()); }

AffineFoliation fol(const std::string& a, const std::string& b, int r) {
    return AffineFoliation(cp(a), cp(b), r);
}

MultiPoly rnd_poly(std::mt19937_64& rng, const VarsPtr& vars, int maxdeg, int terms,
                   bool homogeneous = false) {
    MultiPoly p(vars);
    std::uniform_int_distribution<int> dcoef(-7, 7);
    std::uniform_int_distribution<int> dexp(0, maxdeg);
    for (int t = 0; t < terms; ++t) {
        Expvec e(vars->size(), 0);
        int a = dexp(rng);
        int b = homogeneous ? maxdeg - a : dexp(rng) % (maxdeg - a + 1);
        e[0] = static_cast<std::uint32_t>(a);
        e[1] = static_cast<std::uint32_t>(b);
        p.add_term(e, Rational(dcoef(rng)));
    }
    return p;
}

// seeded generic degree-r foliation: A = a + x g, B = b + y g with deg a, b <= r
// and g homogeneous of degree r (the radial top-part constraint)
AffineFoliation generic_foliation(std::uint64_t seed, int r) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 50; ++attempt) {
        MultiPoly a = rnd_poly(rng, chart_vars(), r, r + 3);
        MultiPoly b = rnd_poly(rng, chart_vars(), r, r + 3);
        MultiPoly g = rnd_poly(rng, chart_vars(), r, r + 2, true);
        if (g.is_zero()) continue;
        MultiPoly A = a + MultiPoly::variable(chart_vars(), std::size_t(0)) * g;
        MultiPoly B = b + MultiPoly::variable(chart_vars(), std::size_t(1)) * g;
        try {
            AffineFoliation v(A, B, r);
            if (web_degree(v) != r) continue;
            return v;
        } catch (const InputError&) {
            continue;
        }
    }
    throw std::runtime_error("generic_foliation: no luck with this seed");
}

// seeded generic d-web of degree r in the affine chart:
//   P = sum_j (y - m x)^j C_j(x,y,m),  deg_xy C_j <= r,  deg_m C_j <= d - j.
// The (y - m x)-filtration is exactly what extends across the line at
// infinity without forcing it to be invariant.
AffineWeb generic_web(std::uint64_t seed, int d, int r) {
    std::mt19937_64 rng(seed);
    VarsPtr v3 = slope_vars();
    MultiPoly x = MultiPoly::variable(v3, std::size_t(0));
    MultiPoly y = MultiPoly::variable(v3, std::size_t(1));
    MultiPoly m = MultiPoly::variable(v3, std::size_t(2));
    for (int attempt = 0; attempt < 50; ++attempt) {
        MultiPoly P(v3);
        MultiPoly ymx = y - m * x;
        for (int j = 0; j <= d; ++j) {
            MultiPoly cj(v3);
            for (int l = 0; l + j <= d; ++l)
                cj += rnd_poly(rng, v3, r, r + 3) * m.pow(static_cast<std::uint32_t>(l));
            P += ymx.pow(static_cast<std::uint32_t>(j)) * cj;
        }
        try {
            AffineWeb w(d, P, r);
            if (web_degree(w) != r) continue;
            return w;
        } catch (const InputError&) {
            continue;
        }
    }
    throw std::runtime_error("generic_web: no luck with this seed");
}

// ---- rational function arithmetic over Q(x,t) for the double-cover oracle ----
struct Frac {
    MultiPoly num, den;
    static VarsPtr vars() {
        static VarsPtr v = VarSet::make({"x", "t"});
        return v;
    }
    static Frac of(const MultiPoly& n) { return {n, MultiPoly::constant(vars(), Rational(1))}; }
    Frac reduce() const {
        if (num.is_zero()) return {num, MultiPoly::constant(vars(), Rational(1))};
        MultiPoly g = gcd(num, den);
        if (g.is_constant()) return *this;
        return {exact_div(num, g), exact_div(den, g)};
    }
    Frac operator+(const Frac& o) const { return Frac{num * o.den + o.num * den, den * o.den}.reduce(); }
    Frac operator-(const Frac& o) const { return Frac{num * o.den - o.num * den, den * o.den}.reduce(); }
    Frac operator*(const Frac& o) const { return Frac{num * o.num, den * o.den}.reduce(); }
};

} // namespace

TEST_CASE("lie derivative: frozen examples and Leibniz rule") {
    AffineFoliation dx = fol("1", "0", 0);
    CHECK(lie_derivative(dx, cp("x")) == cp("1"));

    AffineFoliation v = fol("x", "2*y", 1);
    CHECK(lie_derivative(v, cp("x*y")) == cp("3*x*y"));
    // expand and differentiate by hand: 2 (x+y)(x+2y)
    CHECK(lie_derivative(v, cp("(x+y)^2")) == cp("2*x^2 + 6*x*y + 4*y^2"));

    CHECK_THROWS_AS(lie_derivative(v, parse_poly("m", slope_vars())), InputError);

    std::mt19937_64 rng(2024);
    for (int i = 0; i < 100; ++i) {
        MultiPoly f = rnd_poly(rng, chart_vars(), 3, 4);
        MultiPoly g = rnd_poly(rng, chart_vars(), 3, 4);
        MultiPoly lhs = lie_derivative(v, f * g);
        MultiPoly rhs = f * lie_derivative(v, g) + g * lie_derivative(v, f);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("degree formula: paper evaluations") {
    CHECK(degree_formula(1, 1, 0) == 0);
    CHECK(degree_formula(1, 1, 1) == 3);
    CHECK(degree_formula(1, 1, 5) == 15); // 3r at d=1
    CHECK(degree_formula(1, 2, 2) == 12);
    CHECK(degree_formula(2, 1, 1) == 12);
    CHECK(degree_formula(2, 2, 1) == 49);
    CHECK_THROWS_AS(degree_formula(0, 1, 1), InputError);
}

TEST_CASE("extactic of a foliation: vanishing, frozen divisor, generic degree") {
    // d/dx: all leaves are lines
    CHECK(extactic_foliation(fol("1", "0", 0), 1).vanishes_identically);
    // radial field: pencil of lines
    CHECK(extactic_foliation(fol("x", "y", 0), 1).vanishes_identically);

    ExtacticResult e = extactic_foliation(fol("x", "2*y", 1), 1);
    CHECK_FALSE(e.vanishes_identically);
    CHECK(e.affine_part == cp("x*y"));
    CHECK(e.infinity_multiplicity == 1);
    CHECK(e.total_degree == 3);
    CHECK(e.formula_degree == 3);

    for (std::uint64_t seed : {11u, 22u, 33u}) {
        AffineFoliation v = generic_foliation(seed, 1);
        ExtacticResult ge = extactic_foliation(v, 1);
        CHECK(ge.total_degree == 3);
        CHECK(ge.infinity_multiplicity == 0); // generic: nothing hides at infinity
        CHECK(ge.affine_part.degree() == 3);
    }
}

TEST_CASE("scaling covariance of the Wronskian determinant") {
    AffineFoliation v = fol("x^2 - y", "1 + x*y", 0);
    int n = 1;
    long k = linear_system_dim(n);
    DetOptions opts;
    MultiPoly base = det(foliation_wronskian(v, n), opts);
    for (Rational c : {Rational(2), Rational(-3), Rational(1, 2)}) {
        AffineFoliation cv(v.A() * c, v.B() * c, 0);
        MultiPoly scaled = det(foliation_wronskian(cv, n), opts);
        CHECK(scaled == base * rat_pow(c, k * (k + 1) / 2));
    }
}

TEST_CASE("web construction guards") {
    CHECK_THROWS_AS(AffineWeb(2, sp("y*m^2 + y*m"), 1), InputError);   // unsaturated (content y)
    CHECK_THROWS_AS(AffineWeb(2, sp("m^2 + 2*m + 1"), 1), InputError); // non-reduced (m+1)^2
    CHECK_THROWS_AS(AffineWeb(2, sp("m - 1"), 1), InputError);         // wrong m-degree
    CHECK_THROWS_AS(AffineFoliation(cp("x*y"), cp("y^2"), 1), InputError); // unsaturated
}

TEST_CASE("web discriminant: paper's 2-web and the parallel case") {
    AffineWeb w2(2, sp("y*m^2 - 1"), 1);
    CHECK(web_discriminant(w2) == cp("y")); // reduced discriminant C = {y=0}

    AffineWeb par(2, sp("m^2 - 1"), 0);
    CHECK(web_discriminant(par).is_constant()); // parallel 2-web: empty divisor

    for (std::uint64_t seed : {5u, 6u}) {
        AffineWeb w = generic_web(seed, 2, 2);
        CHECK(web_discriminant(w).degree() == 6); // (d-1)(d+2r) = 6
    }
}

TEST_CASE("web degree via tangency with seeded generic lines") {
    CHECK(web_degree(fol("x", "2*y", 1)) == 1);
    CHECK(web_degree(fol("x", "y", 0)) == 0); // radial: pencil of lines
    CHECK(web_degree(AffineWeb(2, sp("y*m^2 - 1"), 1)) == 1);
    CHECK(web_degree(AffineWeb(2, sp("m^2 - 1"), 0)) == 0);
}

TEST_CASE("extactic of a web: d=1 wrap agrees with the foliation path") {
    AffineFoliation v = fol("x", "2*y", 1);
    AffineWeb w = AffineWeb::from_foliation(v);
    ExtacticResult ew = extactic_web(w, 1);
    ExtacticResult ef = extactic_foliation(v, 1);
    CHECK(ew.affine_part == ef.affine_part);
    CHECK(ew.infinity_multiplicity == ef.infinity_multiplicity);
    CHECK(ew.total_degree == ef.total_degree);
}

TEST_CASE("extactic of y m^2 - 1: nonzero, polynomial, cross-checked on the double cover") {
    AffineWeb w(2, sp("y*m^2 - 1"), 1);

    // leaves are the cuspidal cubics 9(x-c)^2 = 4y^3; no affine inflections,
    // so E_1 is a unit affinely and the full degree sits at infinity
    ExtacticResult e = extactic_web(w, 1);
    CHECK_FALSE(e.vanishes_identically);
    CHECK(e.affine_part == cp("1"));
    CHECK(e.formula_degree == 7);
    CHECK(e.infinity_multiplicity == 7);

    // independent oracle: substitute y = t^2, resolve both branches m = ±1/t
    // over Q(t), form both 3x3 Wronskians explicitly and compare the product
    // with the normed sigma from the implementation.
    WebSigma sig = web_sigma_norm(w, 1);
    VarsPtr xt = Frac::vars();
    MultiPoly x = MultiPoly::variable(xt, std::size_t(0));
    MultiPoly t = MultiPoly::variable(xt, std::size_t(1));
    auto wron = [&](int branch_sign) {
        // D(g) = g_x + (s/(2 t^2)) g_t on the cover, s = ±1
        auto D = [&](const Frac& g) {
            MultiPoly two_t2 = parse_poly("2*t^2", xt);
            Frac gx{g.num.derivative(0) * g.den - g.num * g.den.derivative(0), g.den * g.den};
            Frac gt{g.num.derivative(1) * g.den - g.num * g.den.derivative(1), g.den * g.den};
            Frac slope{MultiPoly::constant(xt, Rational(branch_sign)), two_t2};
            return (gx + slope * gt).reduce();
        };
        std::vector<Frac> row{Frac::of(MultiPoly::constant(xt, Rational(1))), Frac::of(x),
                              Frac::of(t * t)};
        std::vector<std::vector<Frac>> rows{row};
        for (int i = 1; i <= 2; ++i) {
            for (auto& g : row) g = D(g);
            rows.push_back(row);
        }
        auto det3 = [&](const std::vector<std::vector<Frac>>& M) {
            Frac acc = Frac::of(MultiPoly::zero(xt));
            int perm[6][4] = {{0, 1, 2, 1},  {0, 2, 1, -1}, {1, 0, 2, -1},
                              {1, 2, 0, 1},  {2, 0, 1, 1},  {2, 1, 0, -1}};
            for (auto& pr : perm) {
                Frac term = M[0][pr[0]] * M[1][pr[1]] * M[2][pr[2]];
                if (pr[3] < 0) term = Frac::of(MultiPoly::zero(xt)) - term;
                acc = acc + term;
            }
            return acc;
        };
        return det3(rows);
    };
    Frac oracle = (wron(1) * wron(-1)).reduce();
    // sigma_W = lc^3 * (product of branch Wronskians); lc = y = t^2 on the cover
    oracle = (oracle * Frac::of(t.pow(6))).reduce();
    auto pull_to_cover = [&](const MultiPoly& p) {
        MultiPoly acc(xt);
        for (const auto& [e, c] : p.terms()) {
            MultiPoly term = MultiPoly::constant(xt, c);
            if (e[0]) term = term * x.pow(e[0]);
            if (e[1]) term = term * t.pow(2 * e[1]); // y = t^2
            acc += term;
        }
        return acc;
    };
    MultiPoly num_sub = pull_to_cover(sig.num);
    MultiPoly den_sub = pull_to_cover(sig.den);
    MultiPoly lhs = num_sub * oracle.den;
    MultiPoly rhs = den_sub * oracle.num;
    REQUIRE_FALSE(rhs.is_zero());
    // the slope polynomial only pins sigma_W up to scale: check proportionality
    CHECK(lhs * rhs.leading_coeff() == rhs * lhs.leading_coeff());
}

TEST_CASE("generic (d=2, r=2) webs: E_1 degree matches the Theorem-1 value 12") {
    for (std::uint64_t seed : {101u, 202u}) {
        AffineWeb w = generic_web(seed, 2, 2);
        ExtacticResult e = extactic_web(w, 1);
        CHECK_FALSE(e.vanishes_identically);
        CHECK(e.total_degree == 12);
        CHECK(e.affine_part.degree() == 12);
        CHECK(e.infinity_multiplicity == 0);
    }
}

TEST_CASE("invariant curve tests: frozen cases") {
    CHECK(invariant_curve_test(fol("x", "2*y", 1), cp("y")));
    CHECK(invariant_curve_test(fol("x", "2*y", 1), cp("x")));
    CHECK_FALSE(invariant_curve_test(fol("x", "2*y", 1), cp("x + y - 1")));
    CHECK(invariant_curve_test(fol("1", "2*x", 1), cp("y - x^2"))); // v(f) = 0
    CHECK(invariant_curve_test(AffineWeb(2, sp("y*m^2 - 1"), 1), cp("9*x^2 - 4*y^3")));
    CHECK_FALSE(invariant_curve_test(AffineWeb(2, sp("y*m^2 - 1"), 1), cp("x - y")));
    CHECK_THROWS_AS(invariant_curve_test(fol("x", "2*y", 1), cp("3")), InputError);
}

TEST_CASE("invariant curves from the extactic divisor") {
    // E_1(x dx + 2y dy) = xy, plus the line at infinity via the deficit
    auto curves = invariant_curves_from_extactic(fol("x", "2*y", 1), 1);
    REQUIRE(curves.size() == 2);
    CHECK(curves[0].curve == cp("x"));
    CHECK(curves[0].multiplicity == 1);
    CHECK(curves[1].curve == cp("y"));
    CHECK(curves[1].multiplicity == 1);
    CHECK(extactic_foliation(fol("x", "2*y", 1), 1).infinity_multiplicity == 1);

    // invariant parabola: v = dx + (2x + y - x^2) dy keeps y - x^2 invariant
    // while its generic leaves stay transcendental
    AffineFoliation vp = fol("1", "2*x + y - x^2", 2);
    CHECK(invariant_curve_test(vp, cp("y - x^2")));
    auto curves2 = invariant_curves_from_extactic(vp, 2);
    bool found = false;
    for (const auto& c : curves2)
        if (c.curve == cp("y - x^2") || c.curve == cp("x^2 - y")) found = true;
    CHECK(found);

    // rotation field: E_1 = x^2 + y^2 has no rational invariant line
    auto curves3 = invariant_curves_from_extactic(fol("-y", "x", 1), 1);
    CHECK(curves3.empty());
    CHECK(extactic_foliation(fol("-y", "x", 1), 1).affine_part == cp("x^2 + y^2"));

    // when every leaf is algebraic of degree <= n the divisor is undefined
    CHECK_THROWS_AS(invariant_curves_from_extactic(fol("1", "2*x", 1), 2), InputError);
}

TEST_CASE("chart change utility maps divisors projectively") {
    std::vector<std::vector<Rational>> swap_chart = {
        {Rational(0), Rational(0), Rational(1)},
        {Rational(0), Rational(1), Rational(0)},
        {Rational(1), Rational(0), Rational(0)}};
    // the x = 0 component of xy lands on the far chart's line at infinity
    CHECK(chart_change(cp("x*y"), swap_chart) == cp("y"));
    CHECK(chart_change(cp("x - 1"), swap_chart) == cp("x - 1"));
    // a line through the origin maps to a line
    CHECK(chart_change(cp("y - 2*x"), swap_chart).degree() == 1);
    // involution: applying the swap twice restores the curve for curves
    // meeting neither special line
    MultiPoly c = cp("x + y - 3");
    CHECK(chart_change(chart_change(c, swap_chart), swap_chart) == c);
}
