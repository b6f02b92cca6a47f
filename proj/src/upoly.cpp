#include "extactic/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "extactic/error.hpp"

namespace extactic {

void UPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::constant(const Rational& v) {
    UPoly p;
    if (sgn(v) != 0) p.c_ = {v};
    return p;
}

UPoly UPoly::x() {
    UPoly p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
}

const Rational& UPoly::lc() const {
    if (c_.empty()) throw InvariantViolation("lc of zero polynomial");
    return c_.back();
}

void UPoly::set_coeff(std::size_t i, const Rational& v) {
    if (i >= c_.size()) {
        if (sgn(v) == 0) return;
        c_.resize(i + 1, Rational(0));
    }
    c_[i] = v;
    trim();
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    UPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (sgn(b.c_[j]) == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

UPoly UPoly::operator*(const Rational& s) const {
    if (sgn(s) == 0) return UPoly();
    UPoly r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

UPoly UPoly::derivative() const {
    UPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rational(static_cast<long>(i));
    r.trim();
    return r;
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (1 / lc());
}

UPoly UPoly::shift_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    UPoly r;
    r.c_.assign(c_.size() + k, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = deg(); i >= 0; --i) {
        Rational a = c_[static_cast<std::size_t>(i)];
        if (sgn(a) == 0) continue;
        if (first) {
            if (sgn(a) < 0) { os << "-"; a = -a; }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        if (i == 0 || a != 1) os << rat_to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw InputError("division by zero polynomial");
    UPoly r = a;
    UPoly q;
    long db = b.deg();
    if (a.deg() < db) return {q, r};
    std::vector<Rational> qc(static_cast<std::size_t>(a.deg() - db) + 1, Rational(0));
    std::vector<Rational> rc = r.coeffs();
    const auto& bc = b.coeffs();
    Rational inv_lb = 1 / b.lc();
    for (long i = a.deg(); i >= db; --i) {
        auto ii = static_cast<std::size_t>(i);
        if (ii >= rc.size() || sgn(rc[ii]) == 0) continue;
        Rational f = rc[ii] * inv_lb;
        qc[static_cast<std::size_t>(i - db)] = f;
        for (long j = 0; j <= db; ++j)
            rc[static_cast<std::size_t>(i - db + j)] -= f * bc[static_cast<std::size_t>(j)];
        rc[ii] = 0;
    }
    return {UPoly(std::move(qc)), UPoly(std::move(rc))};
}

UPoly upoly_mod(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

std::optional<UPoly> try_exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

namespace {

// Integer image of a rational polynomial: primitive integer coefficients and
// the rational scale s with  a = s * Z(a).
struct ZPoly {
    std::vector<Int> c;
    Rational scale;
    long deg() const { return static_cast<long>(c.size()) - 1; }
};

ZPoly to_zpoly(const UPoly& a) {
    ZPoly z;
    z.scale = Rational(1);
    if (a.is_zero()) return z;
    Int lcm_den(1);
    for (const auto& q : a.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> ints(a.coeffs().size());
    Int g(0);
    for (std::size_t i = 0; i < ints.size(); ++i) {
        ints[i] = a.coeffs()[i].get_num() * (lcm_den / a.coeffs()[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (sgn(ints.back()) < 0) g = -g;
    for (auto& v : ints) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    z.c = std::move(ints);
    z.scale = Rational(g, lcm_den);
    z.scale.canonicalize();
    return z;
}

UPoly from_zpoly(const std::vector<Int>& c) {
    std::vector<Rational> q(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) q[i] = Rational(c[i]);
    return UPoly(std::move(q));
}

void ztrim(std::vector<Int>& c) {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b, all in Z[x].
std::vector<Int> zprem(std::vector<Int> a, const std::vector<Int>& b) {
    long da = static_cast<long>(a.size()) - 1;
    long db = static_cast<long>(b.size()) - 1;
    const Int& lb = b.back();
    long steps = da - db + 1;
    for (long i = da; i >= db && steps > 0; --i) {
        for (auto& v : a) v *= lb;
        --steps;
        Int f = a[static_cast<std::size_t>(i)] / lb; // exact: top coeff just scaled by lb
        for (long j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
        a[static_cast<std::size_t>(i)] = 0;
        ztrim(a);
        long nd = static_cast<long>(a.size()) - 1;
        if (nd < i - 1) {
            // degree dropped by more than one: account remaining scalings
            // lazily by continuing the loop from the actual degree
            i = nd + 1;
        }
    }
    // apply any remaining scalings owed by early degree drops
    while (steps-- > 0)
        for (auto& v : a) v *= lb;
    return a;
}

Int zcontent(const std::vector<Int>& c) {
    Int g(0);
    for (const auto& v : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

Int ipow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

} // namespace

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return b.is_zero() ? UPoly() : from_zpoly(to_zpoly(b).c);
    if (b.is_zero()) return from_zpoly(to_zpoly(a).c);
    ZPoly za = to_zpoly(a), zb = to_zpoly(b);
    std::vector<Int> A = za.c, B = zb.c;
    if (A.size() < B.size()) std::swap(A, B);
    Int g(1), h(1);
    while (true) {
        long da = static_cast<long>(A.size()) - 1;
        long db = static_cast<long>(B.size()) - 1;
        long delta = da - db;
        std::vector<Int> R = zprem(A, B);
        if (R.empty()) {
            Int cb = zcontent(B);
            if (sgn(B.back()) < 0) cb = -cb;
            for (auto& v : B) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), cb.get_mpz_t());
            return from_zpoly(B);
        }
        if (static_cast<long>(R.size()) - 1 == 0) return UPoly::constant(Rational(1));
        A = std::move(B);
        Int div = g * ipow(h, static_cast<unsigned long>(delta));
        for (auto& v : R) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
        B = std::move(R);
        g = A.back();
        if (delta > 0) {
            Int num = ipow(g, static_cast<unsigned long>(delta));
            Int den = ipow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
}

Rational upoly_resultant(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return Rational(0);
    if (a.deg() == 0) return rat_pow(a.lc(), b.deg());
    if (b.deg() == 0) return rat_pow(b.lc(), a.deg());
    ZPoly za = to_zpoly(a), zb = to_zpoly(b);
    std::vector<Int> A = za.c, B = zb.c;
    int s = 1;
    if (static_cast<long>(A.size()) < static_cast<long>(B.size())) {
        if ((za.deg() & 1) && (zb.deg() & 1)) s = -s;
        std::swap(A, B);
    }
    Rational t = rat_pow(za.scale, b.deg()) * rat_pow(zb.scale, a.deg());
    Int g(1), h(1);
    while (true) {
        long da = static_cast<long>(A.size()) - 1;
        long db = static_cast<long>(B.size()) - 1;
        long delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        std::vector<Int> R = zprem(A, B);
        A = std::move(B);
        if (R.empty()) {
            // common factor of positive degree: resultant vanishes
            if (static_cast<long>(A.size()) - 1 > 0) return Rational(0);
            throw InvariantViolation("upoly_resultant: unexpected PRS termination");
        }
        Int div = g * ipow(h, static_cast<unsigned long>(delta));
        for (auto& v : R) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
        B = std::move(R);
        g = A.back();
        if (delta > 0) {
            Int num = ipow(g, static_cast<unsigned long>(delta));
            Int den = ipow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (static_cast<long>(B.size()) - 1 == 0) {
            long dA = static_cast<long>(A.size()) - 1;
            Int num = ipow(B.back(), static_cast<unsigned long>(dA));
            Int den = ipow(h, static_cast<unsigned long>(dA - 1));
            Int hlast;
            mpz_divexact(hlast.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            Rational res = Rational(hlast) * t;
            if (s < 0) res = -res;
            return res;
        }
    }
}

UPoly upoly_squarefree_part(const UPoly& a) {
    if (a.is_zero() || a.deg() == 0) return a.is_zero() ? a : UPoly::constant(Rational(1));
    UPoly g = upoly_gcd(a, a.derivative());
    if (g.deg() == 0) return a.monic();
    auto q = try_exact_div(a, g);
    if (!q) throw InvariantViolation("squarefree_part: gcd does not divide");
    return q->monic();
}

std::vector<std::pair<UPoly, int>> upoly_squarefree_decomposition(const UPoly& a) {
    std::vector<std::pair<UPoly, int>> out;
    if (a.is_zero() || a.deg() == 0) return out;
    UPoly f = a.monic();
    UPoly fp = f.derivative();
    UPoly g = upoly_gcd(f, fp).monic();
    if (g.deg() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    UPoly w = *try_exact_div(f, g);
    UPoly y = *try_exact_div(fp, g);
    UPoly z = y - w.derivative();
    int i = 1;
    while (!z.is_zero()) {
        UPoly gi = upoly_gcd(w, z).monic();
        if (gi.deg() > 0) out.emplace_back(gi, i);
        w = *try_exact_div(w, gi);
        y = *try_exact_div(z, gi);
        z = y - w.derivative();
        ++i;
    }
    if (w.deg() > 0) out.emplace_back(w.monic(), i);
    return out;
}

namespace {

// ---- real root isolation (Descartes / interval bisection on Z[x]) ----

int sign_variations(const std::vector<Int>& c) {
    int v = 0, last = 0;
    for (const auto& x : c) {
        int s = sgn(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// p(x) -> (x+1)^deg * p(1/(x+1)): counts roots in (0,1) by Descartes.
std::vector<Int> mobius01(const std::vector<Int>& c) {
    std::vector<Int> r(c.rbegin(), c.rend()); // reverse: x^n p(1/x)
    // Taylor shift by 1: r(x+1)
    std::size_t n = r.size();
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = n - 1; j >= i; --j)
            r[j - 1] += r[j];
    return r;
}

// p -> 2^deg p(x/2)
std::vector<Int> halve(const std::vector<Int>& c) {
    std::vector<Int> r = c;
    std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i)
        r[i] <<= static_cast<unsigned>(n - 1 - i);
    return r;
}

// p -> p(x+1)
std::vector<Int> shift1(const std::vector<Int>& c) {
    std::vector<Int> r = c;
    std::size_t n = r.size();
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = n - 1; j >= i; --j)
            r[j - 1] += r[j];
    return r;
}

Rational zeval(const std::vector<Int>& c, const Rational& x) {
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

// Isolates roots of p in the open interval (lo, hi); p has been transformed
// so its roots in (0,1) correspond to the target interval.
void isolate01(const std::vector<Int>& p, const Rational& lo, const Rational& hi,
               std::vector<RealRootInterval>& out, int depth) {
    if (depth > 4000) throw InvariantViolation("root isolation recursion overflow");
    int v = sign_variations(mobius01(p));
    if (v == 0) return;
    if (v == 1) {
        out.push_back({lo, hi});
        return;
    }
    Rational mid = (lo + hi) / 2;
    std::vector<Int> ph = halve(p); // roots in (0,1/2) -> (0,1)
    if (zeval(p, Rational(1, 2)) == 0) out.push_back({mid, mid});
    isolate01(ph, lo, mid, out, depth + 1);
    isolate01(shift1(ph), mid, hi, out, depth + 1); // roots in (1/2,1)
}

} // namespace

std::vector<RealRootInterval> upoly_isolate_real_roots(const UPoly& a) {
    std::vector<RealRootInterval> out;
    if (a.is_zero() || a.deg() == 0) return out;
    UPoly f = upoly_squarefree_part(a);
    ZPoly z = to_zpoly(f);
    std::vector<Int> c = z.c;
    // root at 0
    if (sgn(c[0]) == 0) {
        out.push_back({Rational(0), Rational(0)});
        std::vector<Int> shifted(c.begin() + 1, c.end());
        c = std::move(shifted);
        if (c.size() <= 1) return out;
    }
    // Cauchy bound, rounded to a power of two
    Rational maxratio(0);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        Rational r = abs(Rational(c[i]) / Rational(c.back()));
        if (r > maxratio) maxratio = r;
    }
    Rational bound(2);
    while (bound < 1 + maxratio) bound *= 2;
    // positive roots: map (0,bound) -> (0,1) via q(x) = p(bound*x)
    auto scaled = [&](const std::vector<Int>& p, bool negate) {
        std::vector<Rational> q(p.size());
        Rational pw(1);
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i] = Rational(p[i]) * pw;
            pw *= negate ? -bound : bound;
        }
        return to_zpoly(UPoly(std::move(q))).c;
    };
    std::vector<RealRootInterval> pos, neg;
    isolate01(scaled(c, false), Rational(0), bound, pos, 0);
    isolate01(scaled(c, true), Rational(0), bound, neg, 0);
    for (auto& iv : neg) out.push_back({-iv.hi, -iv.lo});
    for (auto& iv : pos) out.push_back(iv);
    std::sort(out.begin(), out.end(),
              [](const RealRootInterval& x, const RealRootInterval& y) { return x.lo < y.lo; });
    return out;
}

std::vector<Rational> upoly_rational_roots(const UPoly& a) {
    std::vector<Rational> roots;
    if (a.is_zero() || a.deg() == 0) return roots;
    UPoly f = upoly_squarefree_part(a);
    ZPoly z = to_zpoly(f);
    // For a rational root p/q in lowest terms, q | lc and p | c0; two distinct
    // candidates differ by at least 1/lc^2, so refining an isolating interval
    // below that separation pins down at most one candidate, recovered by the
    // continued-fraction convergent with denominator <= |lc|.
    Int lc = z.c.back();
    Rational sep = Rational(1) / Rational(lc * lc);
    auto intervals = upoly_isolate_real_roots(f);
    for (auto iv : intervals) {
        if (iv.exact()) {
            roots.push_back(iv.lo);
            continue;
        }
        // bisect until width < sep/2
        while (iv.hi - iv.lo >= sep / 2) {
            Rational mid = (iv.lo + iv.hi) / 2;
            Rational v = f.eval(mid);
            if (sgn(v) == 0) {
                iv.lo = iv.hi = mid;
                break;
            }
            if (sgn(v) == sgn(f.eval(iv.lo))) iv.lo = mid;
            else iv.hi = mid;
        }
        if (iv.exact()) {
            roots.push_back(iv.lo);
            continue;
        }
        // continued fraction of the midpoint, denominators capped by |lc|
        Rational x = (iv.lo + iv.hi) / 2;
        Int p0(1), q0(0), p1, q1(1);
        Rational y = x;
        mpz_fdiv_q(p1.get_mpz_t(), y.get_num().get_mpz_t(), y.get_den().get_mpz_t());
        Rational frac = y - Rational(p1);
        Int abs_lc = abs(lc);
        while (true) {
            Rational cand(p1, q1);
            cand.canonicalize();
            if (cand > iv.lo && cand < iv.hi && sgn(f.eval(cand)) == 0) {
                roots.push_back(cand);
                break;
            }
            if (sgn(frac) == 0 || q1 > abs_lc) break;
            y = 1 / frac;
            Int ai;
            mpz_fdiv_q(ai.get_mpz_t(), y.get_num().get_mpz_t(), y.get_den().get_mpz_t());
            frac = y - Rational(ai);
            Int p2 = ai * p1 + p0, q2 = ai * q1 + q0;
            p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        }
    }
    return roots;
}

} // namespace extactic
