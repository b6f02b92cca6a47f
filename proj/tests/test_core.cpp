#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "extactic/multipoly.hpp"
#include "extactic/parse.hpp"
#include "extactic/truncseries.hpp"

using namespace extactic;

namespace {

VarsPtr xy() {
    static VarsPtr v = VarSet::make({"x", "y"});
    return v;
}

// reference multiplication oracle: plain coefficient-by-coefficient expansion
MultiPoly mul_ref(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.vars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Expvec e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly random_poly(std::mt19937_64& rng, const VarsPtr& vars, int maxdeg, int terms) {
    MultiPoly p(vars);
    std::uniform_int_distribution<int> dcoef(-9, 9);
    std::uniform_int_distribution<int> dexp(0, maxdeg);
    for (int t = 0; t < terms; ++t) {
        Expvec e(vars->size());
        int total = 0;
        for (auto& x : e) {
            x = static_cast<std::uint32_t>(dexp(rng));
            total += static_cast<int>(x);
            if (total > maxdeg) x = 0;
        }
        p.add_term(e, Rational(dcoef(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("rational invariants") {
    Rational q(6, -8);
    q.canonicalize();
    CHECK(q.get_den() == 4);
    CHECK(q.get_num() == -3);
    CHECK(rat_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rat_pow(Rational(2), -2) == Rational(1, 4));
    CHECK(rat_gcd(Rational(4, 3), Rational(2, 9)) == Rational(2, 9));
}

TEST_CASE("parse: direct denotations") {
    MultiPoly p = parse_poly("x^2 - y", xy());
    CHECK(p.term_count() == 2);
    CHECK(p.coeff({2, 0}) == 1);
    CHECK(p.coeff({0, 1}) == -1);

    CHECK(parse_poly("0", xy()).is_zero());
    CHECK(parse_poly("0", xy()).term_count() == 0);

    CHECK(parse_poly("3/4*x", xy()).coeff({1, 0}) == Rational(3, 4));
    CHECK(parse_poly("-x*y + 2", xy()).coeff({1, 1}) == -1);
}

TEST_CASE("parse: (x+y)^3 against repeated multiplication oracle") {
    MultiPoly s = parse_poly("x + y", xy());
    MultiPoly expect = mul_ref(mul_ref(s, s), s);
    CHECK(parse_poly("(x+y)^3", xy()) == expect);
    CHECK(expect.coeff({2, 1}) == 3);
}

TEST_CASE("parse errors carry position and kind") {
    CHECK_THROWS_AS(parse_poly("x + z", xy()), InputError);
    CHECK_THROWS_AS(parse_poly("2x", xy()), InputError);
    CHECK_THROWS_AS(parse_poly("x^(2)", xy()), InputError);
    CHECK_THROWS_AS(parse_poly("x^9999999", xy()), InputError);
    CHECK_THROWS_AS(parse_poly("(x+y", xy()), InputError);
    CHECK_THROWS_AS(parse_poly("1/0", xy()), InputError);
    try {
        parse_poly("x + + $", xy());
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("print/parse round trip on random canonical forms") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 60; ++i) {
        MultiPoly p = random_poly(rng, xy(), 5, 8);
        CHECK(parse_poly(p.to_string(), xy()) == p);
    }
    CHECK(parse_poly("0", xy()).to_string() == "0");
}

TEST_CASE("graded-lex printing order") {
    MultiPoly p = parse_poly("y + x + x*y + 1", xy());
    CHECK(p.to_string() == "x*y + x + y + 1");
}

TEST_CASE("arithmetic basics") {
    MultiPoly a = parse_poly("x^2 - y^2", xy());
    MultiPoly b = parse_poly("x - y", xy());
    MultiPoly c = parse_poly("x + y", xy());
    CHECK(a == b * c);
    CHECK((a - a).is_zero());
    CHECK(a.degree() == 2);
    CHECK(b.degree_in(1) == 1);
    CHECK(parse_poly("x^2*y^3", xy()).derivative(0) == parse_poly("2*x*y^3", xy()));
    CHECK(a.subst(0, parse_poly("y", xy())) .is_zero());
    CHECK(parse_poly("x^2+y", xy()).eval({Rational(2), Rational(3)}) == 7);
}

TEST_CASE("content and primitive part") {
    MultiPoly p = parse_poly("-4*x - 8*y", xy());
    CHECK(p.content() == Rational(-4));
    CHECK(p.primitive_part() == parse_poly("x + 2*y", xy()));
    CHECK(p.primitive_part().leading_coeff() > 0);
}

TEST_CASE("with_vars embeds by name") {
    VarsPtr xym = VarSet::make({"x", "y", "m"});
    MultiPoly p = parse_poly("x^2 - y", xy());
    MultiPoly q = p.with_vars(xym);
    CHECK(q.vars()->size() == 3);
    CHECK(q.degree_in(2) == 0);
    CHECK(q.coeff({2, 0, 0}) == 1);
}

TEST_CASE("truncated series arithmetic") {
    // (1+h)^4 / ((1+2h)(1-h)) : h^2 coefficient is 5
    std::size_t n = 2;
    TruncSeries num = TruncSeries::one_plus_ah_pow(n, Rational(1), 4);
    TruncSeries den = TruncSeries(n, {Rational(1), Rational(2)}) *
                      TruncSeries(n, {Rational(1), Rational(-1)});
    TruncSeries q = num * den.inverse();
    CHECK(q.coeff(2) == 5);
    // inverse sanity: s * s^{-1} == 1
    TruncSeries s(4, {Rational(3), Rational(1), Rational(0), Rational(7), Rational(-2)});
    TruncSeries prod = s * s.inverse();
    CHECK(prod.coeff(0) == 1);
    for (std::size_t i = 1; i <= 4; ++i) CHECK(prod.coeff(i) == 0);
    CHECK(TruncSeries::geometric(3, Rational(2)).coeff(3) == 8);
}
