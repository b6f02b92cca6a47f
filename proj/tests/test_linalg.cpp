#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "extactic/parse.hpp"
#include "extactic/polymatrix.hpp"
#include "extactic/polyops.hpp"
#include "extactic/upoly.hpp"

using namespace extactic;

namespace {

VarsPtr xy() {
    static VarsPtr v = VarSet::make({"x", "y"});
    return v;
}
VarsPtr xym() {
    static VarsPtr v = VarSet::make({"x", "y", "m"});
    return v;
}

PolyMatrix from_texts(const std::vector<std::vector<std::string>>& rows, const VarsPtr& vars) {
    PolyMatrix m(rows.size(), rows[0].size(), vars);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = parse_poly(rows[i][j], vars);
    return m;
}

MultiPoly rnd_poly(std::mt19937_64& rng, const VarsPtr& vars, int maxdeg, int terms) {
    MultiPoly p(vars);
    std::uniform_int_distribution<int> dcoef(-9, 9);
    std::uniform_int_distribution<int> dexp(0, maxdeg);
    for (int t = 0; t < terms; ++t) {
        Expvec e(vars->size(), 0);
        int budget = maxdeg;
        for (auto& x : e) {
            x = static_cast<std::uint32_t>(dexp(rng) % (budget + 1));
            budget -= static_cast<int>(x);
        }
        p.add_term(e, Rational(dcoef(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("det: identity and triangular") {
    PolyMatrix id(3, 3, xy());
    for (int i = 0; i < 3; ++i) id.at(i, i) = parse_poly("1", xy());
    CHECK(det(id) == parse_poly("1", xy()));

    auto tri = from_texts({{"1", "x", "y"}, {"0", "1", "0"}, {"0", "0", "y"}}, xy());
    CHECK(det(tri) == parse_poly("y", xy()));
}

TEST_CASE("det: extactic matrix of x dx + 2y dy") {
    auto m = from_texts({{"1", "x", "y"}, {"0", "x", "2*y"}, {"0", "x", "4*y"}}, xy());
    // cofactor expansion by hand: 1 * (x*4y - 2y*x) = 2xy
    CHECK(det(m) == parse_poly("2*x*y", xy()));
    CHECK(det(m, {DetAlgorithm::Cofactor, 8}) == parse_poly("2*x*y", xy()));
}

TEST_CASE("det: contracts") {
    PolyMatrix rect(2, 3, xy());
    CHECK_THROWS_AS(det(rect), InputError);
    PolyMatrix big(9, 9, xy());
    CHECK_THROWS_AS(det(big), InputError);
    // zero row short circuit
    auto z = from_texts({{"0", "0"}, {"x", "y"}}, xy());
    CHECK(det(z).is_zero());
}

TEST_CASE("det: dual-algorithm agreement on random 4x4, degree <= 2") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 100; ++iter) {
        PolyMatrix m(4, 4, xy());
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = rnd_poly(rng, xy(), 2, 3);
        MultiPoly a = det(m, {DetAlgorithm::FractionFree, 8});
        MultiPoly b = det(m, {DetAlgorithm::Cofactor, 8});
        REQUIRE(a == b);
    }
}

TEST_CASE("det: row swap flips sign, repeated row vanishes") {
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 25; ++iter) {
        PolyMatrix m(3, 3, xy());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = rnd_poly(rng, xy(), 2, 3);
        MultiPoly d = det(m);
        PolyMatrix swapped = m;
        for (int j = 0; j < 3; ++j) std::swap(swapped.at(0, j), swapped.at(2, j));
        CHECK(det(swapped) == -d);
        PolyMatrix rep = m;
        for (int j = 0; j < 3; ++j) rep.at(2, j) = rep.at(0, j);
        CHECK(det(rep).is_zero());
    }
}

TEST_CASE("resultant: frozen Sylvester examples") {
    std::size_t m = 2; // index of m in (x,y,m)
    MultiPoly p = parse_poly("m^2 - y", xym());
    MultiPoly q = parse_poly("x - m", xym());
    // 3x3 Sylvester determinant by hand: x^2 - y
    CHECK(resultant(p, q, m) == parse_poly("x^2 - y", xym()));

    CHECK(resultant(p, parse_poly("1", xym()), m) == parse_poly("1", xym()));

    MultiPoly r = resultant(p, parse_poly("2*m", xym()), m);
    bool pm = r == parse_poly("4*y", xym()) || r == parse_poly("-4*y", xym());
    CHECK(pm); // Sylvester by hand gives -4y; defined up to sign

    CHECK_THROWS_AS(resultant(MultiPoly::zero(xym()), MultiPoly::zero(xym()), m), InputError);
    CHECK(resultant(MultiPoly::zero(xym()), p, m).is_zero());
}

TEST_CASE("resultant: multiplicativity Res(P, Q*R) = ±Res(P,Q)*Res(P,R)") {
    std::mt19937_64 rng(999);
    std::size_t mv = 2;
    int done = 0;
    while (done < 100) {
        MultiPoly p = rnd_poly(rng, xym(), 3, 4);
        MultiPoly q = rnd_poly(rng, xym(), 2, 3);
        MultiPoly r = rnd_poly(rng, xym(), 2, 3);
        if (p.degree_in(mv) < 1 || q.degree_in(mv) < 1 || r.degree_in(mv) < 1) continue;
        MultiPoly lhs = resultant(p, q * r, mv);
        MultiPoly rhs = resultant(p, q, mv) * resultant(p, r, mv);
        bool ok = lhs == rhs || lhs == -rhs;
        REQUIRE(ok);
        ++done;
    }
}

TEST_CASE("resultant agrees with univariate subresultant on shared cases") {
    std::mt19937_64 rng(31337);
    VarsPtr tv = VarSet::make({"t"});
    for (int iter = 0; iter < 50; ++iter) {
        MultiPoly p = rnd_poly(rng, tv, 5, 4);
        MultiPoly q = rnd_poly(rng, tv, 4, 4);
        if (p.degree_in(0) < 1 || q.degree_in(0) < 1) continue;
        Rational byprs = upoly_resultant(to_upoly(p, 0), to_upoly(q, 0));
        MultiPoly byinterp = resultant(p, q, 0);
        REQUIRE(byinterp.constant_value() == byprs);
    }
}

TEST_CASE("gcd / exact_div / squarefree") {
    CHECK(gcd(parse_poly("x*y", xy()), parse_poly("y^2", xy())) == parse_poly("y", xy()));
    CHECK(exact_div(parse_poly("x^2-y^2", xy()), parse_poly("x-y", xy())) ==
          parse_poly("x+y", xy()));
    CHECK_THROWS_AS(exact_div(parse_poly("x^2-y^2", xy()), parse_poly("x-2*y", xy())),
                    InvariantViolation);
    CHECK(squarefree_part(parse_poly("x^2*y^3", xy())) == parse_poly("x*y", xy()));

    auto dec = squarefree_decomposition(parse_poly("x^2*y^3", xy()));
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == parse_poly("x", xy()));
    CHECK(dec[0].second == 2);
    CHECK(dec[1].first == parse_poly("y", xy()));
    CHECK(dec[1].second == 3);

    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 30; ++iter) {
        MultiPoly a = rnd_poly(rng, xy(), 3, 3);
        MultiPoly b = rnd_poly(rng, xy(), 3, 3);
        MultiPoly g = rnd_poly(rng, xy(), 2, 3);
        if (a.is_zero() || b.is_zero() || g.is_zero()) continue;
        MultiPoly ga = g * a, gb = g * b;
        MultiPoly h = gcd(ga, gb);
        CHECK(divides(h, ga));
        CHECK(divides(h, gb));
        CHECK(divides(g.primitive_part(), h * MultiPoly::constant(xy(), h.is_zero() ? Rational(1) : Rational(1))));
    }
}

TEST_CASE("upoly: gcd, resultant, squarefree, roots") {
    // f = (t-1)^2 (t+2) (2t-3)
    UPoly t = UPoly::x();
    UPoly one = UPoly::constant(Rational(1));
    UPoly f = (t - one) * (t - one) * (t + UPoly::constant(Rational(2))) *
              (t * Rational(2) - UPoly::constant(Rational(3)));
    auto dec = upoly_squarefree_decomposition(f);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].second == 1);
    CHECK(dec[0].first.deg() == 2);
    CHECK(dec[1].second == 2);
    CHECK(dec[1].first.deg() == 1);

    auto roots = upoly_rational_roots(f);
    REQUIRE(roots.size() == 3);
    CHECK(std::find(roots.begin(), roots.end(), Rational(1)) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), Rational(-2)) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), Rational(3, 2)) != roots.end());

    // real isolation: (t^2-2)(t^2-3) has 4 irrational real roots
    UPoly g = (t * t - UPoly::constant(Rational(2))) * (t * t - UPoly::constant(Rational(3)));
    auto ivs = upoly_isolate_real_roots(g);
    CHECK(ivs.size() == 4);
    CHECK(upoly_rational_roots(g).empty());

    // resultant of (t^2-2) and (t^2-3): product of differences = 1
    Rational r = upoly_resultant(t * t - UPoly::constant(Rational(2)),
                                 t * t - UPoly::constant(Rational(3)));
    CHECK(r == 1);
}
