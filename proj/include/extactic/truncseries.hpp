#pragma once

#include <cstddef>
#include <vector>

#include "extactic/error.hpp"
#include "extactic/rational.hpp"

namespace extactic {

// Univariate truncated power series over Q for characteristic-class
// arithmetic.  All operations truncate at the shared order N.
class TruncSeries {
public:
    TruncSeries(std::size_t order, std::vector<Rational> coeffs) : n_(order), c_(std::move(coeffs)) {
        c_.resize(n_ + 1, Rational(0));
    }
    static TruncSeries constant(std::size_t order, const Rational& v) {
        return TruncSeries(order, {v});
    }
    static TruncSeries h(std::size_t order) { return TruncSeries(order, {Rational(0), Rational(1)}); }

    std::size_t order() const { return n_; }
    const Rational& coeff(std::size_t i) const { return c_[i]; }

    TruncSeries operator+(const TruncSeries& o) const {
        check(o);
        std::vector<Rational> r(n_ + 1);
        for (std::size_t i = 0; i <= n_; ++i) r[i] = c_[i] + o.c_[i];
        return TruncSeries(n_, std::move(r));
    }
    TruncSeries operator-(const TruncSeries& o) const {
        check(o);
        std::vector<Rational> r(n_ + 1);
        for (std::size_t i = 0; i <= n_; ++i) r[i] = c_[i] - o.c_[i];
        return TruncSeries(n_, std::move(r));
    }
    TruncSeries operator*(const TruncSeries& o) const {
        check(o);
        std::vector<Rational> r(n_ + 1, Rational(0));
        for (std::size_t i = 0; i <= n_; ++i) {
            if (sgn(c_[i]) == 0) continue;
            for (std::size_t j = 0; i + j <= n_; ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return TruncSeries(n_, std::move(r));
    }

    // Multiplicative inverse; requires a unit constant term.
    TruncSeries inverse() const {
        if (sgn(c_[0]) == 0) throw InputError("TruncSeries::inverse: constant term is zero");
        std::vector<Rational> r(n_ + 1, Rational(0));
        r[0] = 1 / c_[0];
        for (std::size_t k = 1; k <= n_; ++k) {
            Rational s(0);
            for (std::size_t j = 1; j <= k; ++j) s += c_[j] * r[k - j];
            r[k] = -s / c_[0];
        }
        return TruncSeries(n_, std::move(r));
    }

    TruncSeries pow(unsigned e) const {
        TruncSeries acc = constant(n_, Rational(1));
        TruncSeries base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return acc;
    }

    // (1 + a*h)^e truncated
    static TruncSeries one_plus_ah_pow(std::size_t order, const Rational& a, unsigned e) {
        TruncSeries base(order, {Rational(1), a});
        return base.pow(e);
    }
    // 1 / (1 - a*h)
    static TruncSeries geometric(std::size_t order, const Rational& a) {
        std::vector<Rational> r(order + 1);
        Rational p(1);
        for (std::size_t i = 0; i <= order; ++i) {
            r[i] = p;
            p *= a;
        }
        return TruncSeries(order, std::move(r));
    }

private:
    std::size_t n_;
    std::vector<Rational> c_;
    void check(const TruncSeries& o) const {
        if (n_ != o.n_) throw InputError("TruncSeries: order mismatch");
    }
};

} // namespace extactic
