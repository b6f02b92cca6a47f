#include "extactic/algnum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "extactic/error.hpp"
#include "extactic/multipoly.hpp"
#include "extactic/polyops.hpp"

namespace extactic {

QComplex upoly_eval_c(const UPoly& p, const QComplex& z) {
    QComplex acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * z;
        acc.re += *it;
    }
    return acc;
}

std::string RootBox::to_string() const {
    std::ostringstream os;
    os << "(" << center.re.get_d() << (sgn(center.im) < 0 ? " - " : " + ")
       << std::abs(center.im.get_d()) << "i ± " << std::sqrt(radius2.get_d()) << ")";
    return os.str();
}

namespace {

Rational round_dyadic(const Rational& x, unsigned prec_bits) {
    Int scaled;
    Int two_p = Int(1) << prec_bits;
    Int num = x.get_num() * two_p;
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    Rational r(scaled, two_p);
    r.canonicalize();
    return r;
}

QComplex round_dyadic(const QComplex& z, unsigned prec_bits) {
    return {round_dyadic(z.re, prec_bits), round_dyadic(z.im, prec_bits)};
}

// upper bound on sqrt(x) as a rational
Rational rat_sqrt_upper(const Rational& x) {
    if (sgn(x) <= 0) return Rational(0);
    double d = x.get_d();
    Rational guess;
    if (d > 0 && std::isfinite(d)) guess = Rational(std::sqrt(d) * 1.0000001 + 1e-300);
    else guess = x + 1;
    if (guess * guess < x) guess = x + 1; // fall back to a crude bound
    // a couple of Newton-from-above steps keep it an upper bound
    for (int i = 0; i < 3; ++i) {
        if (sgn(guess) <= 0) return x + 1;
        Rational next = (guess + x / guess) / 2;
        if (next * next >= x) guess = next;
    }
    return guess;
}

// Aberth-Ehrlich in double precision for starting approximations
std::vector<std::complex<double>> aberth(const UPoly& p) {
    long n = p.deg();
    std::vector<std::complex<double>> c(static_cast<std::size_t>(n) + 1);
    double lcd = std::abs(p.lc().get_d());
    bool ok = lcd > 0 && std::isfinite(lcd);
    for (long i = 0; i <= n; ++i) {
        double v = p.coeff(static_cast<std::size_t>(i)).get_d() / (ok ? p.lc().get_d() : 1.0);
        if (!std::isfinite(v)) v = 0; // extreme ratios: Newton will fix later or certification fails
        c[static_cast<std::size_t>(i)] = v;
    }
    double radius = 0;
    for (long i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[static_cast<std::size_t>(i)]));
    radius = 1 + radius;
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        double ang = 2 * M_PI * (static_cast<double>(i) + 0.354) / static_cast<double>(n);
        z[static_cast<std::size_t>(i)] = std::polar(radius * (0.5 + 0.5 * (i % 3) / 3.0), ang);
    }
    auto eval = [&](std::complex<double> w, std::complex<double>& d) {
        std::complex<double> v = 0, dv = 0;
        for (long i = n; i >= 0; --i) {
            dv = dv * w + v;
            v = v * w + c[static_cast<std::size_t>(i)];
        }
        d = dv;
        return v;
    };
    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0;
        for (long i = 0; i < n; ++i) {
            std::complex<double> d;
            std::complex<double> v = eval(z[static_cast<std::size_t>(i)], d);
            std::complex<double> newton = (d == std::complex<double>(0)) ? 0.0 : v / d;
            std::complex<double> sum = 0;
            for (long j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
            std::complex<double> w = newton / (1.0 - newton * sum);
            z[static_cast<std::size_t>(i)] -= w;
            worst = std::max(worst, std::abs(w));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

Rational radius2_bound(const UPoly& p, const UPoly& dp, const QComplex& z, long n) {
    QComplex pv = upoly_eval_c(p, z);
    QComplex dv = upoly_eval_c(dp, z);
    Rational d2 = dv.norm2();
    if (sgn(d2) == 0) return Rational(-1); // derivative vanished: try elsewhere
    return Rational(n * n) * pv.norm2() / d2;
}

} // namespace

std::vector<RootBox> isolate_complex_roots(const UPoly& p, const Rational& target_radius2) {
    if (p.deg() < 1) return {};
    UPoly f = p;
    {
        UPoly g = upoly_gcd(f, f.derivative());
        if (g.deg() > 0) throw InputError("isolate_complex_roots: polynomial is not square-free");
    }
    long n = f.deg();
    UPoly df = f.derivative();
    auto approx = aberth(f);
    std::vector<RootBox> boxes(static_cast<std::size_t>(n));
    for (unsigned prec = 128; prec <= 16384; prec *= 2) {
        bool all_ok = true;
        for (long i = 0; i < n; ++i) {
            double zr = approx[static_cast<std::size_t>(i)].real();
            double zi = approx[static_cast<std::size_t>(i)].imag();
            if (!std::isfinite(zr)) zr = 0;
            if (!std::isfinite(zi)) zi = 0;
            QComplex z{Rational(zr), Rational(zi)};
            z = round_dyadic(z, prec);
            // Newton refinement in exact rational arithmetic with dyadic rounding
            Rational r2(-1);
            for (int step = 0; step < 64; ++step) {
                QComplex pv = upoly_eval_c(f, z);
                QComplex dv = upoly_eval_c(df, z);
                Rational d2 = dv.norm2();
                if (sgn(d2) == 0) break;
                // z -= p/p' computed exactly, then rounded
                QComplex quot((pv.re * dv.re + pv.im * dv.im) / d2,
                              (pv.im * dv.re - pv.re * dv.im) / d2);
                z = round_dyadic(z - quot, prec);
                r2 = radius2_bound(f, df, z, n);
                if (sgn(r2) >= 0 && r2 <= target_radius2) break;
            }
            if (sgn(r2) < 0 || r2 > target_radius2) {
                all_ok = false;
                break;
            }
            boxes[static_cast<std::size_t>(i)] = {z, r2};
        }
        if (!all_ok) continue;
        // pairwise disjointness: |ci - cj|^2 > 2 (ri^2 + rj^2) suffices
        bool disjoint = true;
        for (long i = 0; i < n && disjoint; ++i)
            for (long j = i + 1; j < n && disjoint; ++j) {
                Rational d2 = (boxes[static_cast<std::size_t>(i)].center -
                               boxes[static_cast<std::size_t>(j)].center)
                                  .norm2();
                if (d2 <= 2 * (boxes[static_cast<std::size_t>(i)].radius2 +
                               boxes[static_cast<std::size_t>(j)].radius2))
                    disjoint = false;
            }
        if (disjoint) return boxes;
    }
    throw InvariantViolation("isolate_complex_roots: certification failed to converge");
}

bool alg_pair_value_is_zero(const UPoly& m1, const RootBox& b1, const UPoly& m2,
                            const RootBox& b2,
                            const std::vector<std::vector<Rational>>& value_poly) {
    // disk evaluation of D(theta, phi) with exact centers and radius bounds
    auto disk_eval = [&](const QComplex& c1, const Rational& r1u, const QComplex& c2,
                         const Rational& r2u, QComplex& center, Rational& radius_up) {
        // Horner in theta with disk coefficients in phi
        QComplex acc_c;
        Rational acc_r(0);
        Rational n1 = rat_sqrt_upper(c1.norm2());
        Rational n2 = rat_sqrt_upper(c2.norm2());
        for (auto it = value_poly.rbegin(); it != value_poly.rend(); ++it) {
            // acc = acc * theta + row(phi)
            QComplex nc = acc_c * c1;
            Rational nr = acc_r * n1 + rat_sqrt_upper(acc_c.norm2()) * r1u + acc_r * r1u;
            // evaluate the row at phi
            QComplex row_c;
            Rational row_r(0);
            for (auto jt = it->rbegin(); jt != it->rend(); ++jt) {
                QComplex rc = row_c * c2;
                Rational rr = row_r * n2 + rat_sqrt_upper(row_c.norm2()) * r2u + row_r * r2u;
                row_c = rc;
                row_c.re += *jt;
                row_r = rr;
            }
            acc_c = nc + row_c;
            acc_r = nr + row_r;
        }
        center = acc_c;
        radius_up = acc_r;
    };

    RootBox x1 = b1, x2 = b2;
    QComplex vc;
    Rational vr;
    disk_eval(x1.center, rat_sqrt_upper(x1.radius2), x2.center, rat_sqrt_upper(x2.radius2), vc, vr);
    Rational vnorm = rat_sqrt_upper(vc.norm2());
    // fast exit: interval excludes zero (|center| > radius)
    if (vc.norm2() > vr * vr) return false;

    // resultant certificate: the value is a root of
    //   Z(z) = Res_phi(M2, Res_theta(M1, z - D))
    VarsPtr tpz = VarSet::make({"th", "ph", "zz"});
    MultiPoly D(tpz);
    for (std::size_t i = 0; i < value_poly.size(); ++i)
        for (std::size_t j = 0; j < value_poly[i].size(); ++j) {
            if (sgn(value_poly[i][j]) == 0) continue;
            Expvec e(3, 0);
            e[0] = static_cast<std::uint32_t>(i);
            e[1] = static_cast<std::uint32_t>(j);
            D.add_term(e, value_poly[i][j]);
        }
    MultiPoly zmd = MultiPoly::variable(tpz, std::size_t(2)) - D;
    MultiPoly m1p = from_upoly(m1, tpz, 0);
    MultiPoly m2p = from_upoly(m2, tpz, 1);
    MultiPoly rz = resultant(m2p, resultant(m1p, zmd, 0), 1);
    UPoly z = to_upoly(rz, 2);
    // strip the power of z: W(0) != 0
    std::size_t k = 0;
    while (k < z.coeffs().size() && sgn(z.coeffs()[k]) == 0) ++k;
    if (k == 0) return false; // zero is not among the pair values at all
    if (k >= z.coeffs().size())
        throw InvariantViolation("alg_pair_value_is_zero: resultant vanished identically");
    std::vector<Rational> w(z.coeffs().begin() + static_cast<long>(k), z.coeffs().end());
    Rational w0 = rat_abs(w[0]);
    Rational wmax(0);
    for (const auto& c : w) { Rational a = abs(c); if (a > wmax) wmax = a; }
    Rational delta = w0 / (w0 + wmax); // any nonzero root of Z exceeds this

    // refine until the value interval is smaller than delta/2
    Rational need = delta / 2;
    for (int round = 0; round < 12; ++round) {
        if (vr < need) return vnorm < need; // value within delta of 0 iff it is exactly 0
        Rational t1 = x1.radius2 / 1000000, t2 = x2.radius2 / 1000000;
        auto bs1 = isolate_complex_roots(m1, t1);
        auto bs2 = isolate_complex_roots(m2, t2);
        // pick the refined boxes containing our original centers
        auto pick = [&](const std::vector<RootBox>& bs, const RootBox& old) {
            RootBox best = old;
            bool found = false;
            Rational bestd(0);
            for (const auto& b : bs) {
                Rational d2 = (b.center - old.center).norm2();
                if (d2 > 4 * (old.radius2 + b.radius2)) continue;
                if (!found || d2 < bestd) {
                    best = b;
                    bestd = d2;
                    found = true;
                }
            }
            return best;
        };
        x1 = pick(bs1, x1);
        x2 = pick(bs2, x2);
        disk_eval(x1.center, rat_sqrt_upper(x1.radius2), x2.center, rat_sqrt_upper(x2.radius2), vc,
                  vr);
        vnorm = rat_sqrt_upper(vc.norm2());
        if (vc.norm2() > vr * vr) return false;
    }
    throw InvariantViolation("alg_pair_value_is_zero: refinement did not separate");
}

} // namespace extactic
