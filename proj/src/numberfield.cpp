#include "extactic/numberfield.hpp"

#include "extactic/error.hpp"

namespace extactic {

NumberField::NumberField(const UPoly& modulus, bool check_squarefree) {
    if (modulus.deg() < 1) throw InputError("NumberField: modulus must have positive degree");
    m_ = modulus.monic();
    if (check_squarefree) {
        UPoly g = upoly_gcd(m_, m_.derivative());
        if (g.deg() > 0) throw InputError("NumberField: modulus is not square-free");
    }
}

UPoly NumberField::reduce(const UPoly& a) const {
    if (a.deg() < m_.deg()) return a;
    return upoly_mod(a, m_);
}

UPoly NumberField::pow(UPoly a, unsigned long e) const {
    UPoly acc = UPoly::constant(Rational(1));
    a = reduce(a);
    while (e) {
        if (e & 1) acc = mul(acc, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return acc;
}

UPoly NumberField::invert(const UPoly& a) const {
    UPoly r = reduce(a);
    if (r.is_zero()) throw InvariantViolation("NumberField: inverse of zero");
    // extended Euclid in Q[z] between M and r
    UPoly r0 = m_, r1 = r;
    UPoly t0 = UPoly(), t1 = UPoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, rem] = divmod(r0, r1);
        UPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = t2;
    }
    // r0 = gcd(M, r)
    if (r0.deg() > 0) throw D5Split{r0.monic()}; // zero divisor: M splits
    return reduce(t0 * (1 / r0.coeff(0)));
}

KUPoly::KUPoly(std::vector<UPoly> coeffs, const NumberField& k) : c_(std::move(coeffs)) {
    for (auto& x : c_) x = k.reduce(x);
    trim();
}

void KUPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

KUPoly KUPoly::from_scalar(const UPoly& a, const NumberField& k) {
    return KUPoly({a}, k);
}

KUPoly KUPoly::add(const KUPoly& o, const NumberField& k) const {
    std::vector<UPoly> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        UPoly s;
        if (i < c_.size()) s = s + c_[i];
        if (i < o.c_.size()) s = s + o.c_[i];
        r[i] = s;
    }
    return KUPoly(std::move(r), k);
}

KUPoly KUPoly::sub(const KUPoly& o, const NumberField& k) const {
    std::vector<UPoly> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        UPoly s;
        if (i < c_.size()) s = s + c_[i];
        if (i < o.c_.size()) s = s - o.c_[i];
        r[i] = s;
    }
    return KUPoly(std::move(r), k);
}

KUPoly KUPoly::mul(const KUPoly& o, const NumberField& k) const {
    if (is_zero() || o.is_zero()) return KUPoly();
    std::vector<UPoly> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
    }
    return KUPoly(std::move(r), k);
}

KUPoly KUPoly::scale(const UPoly& s, const NumberField& k) const {
    KUPoly out;
    out.c_ = c_;
    for (auto& x : out.c_) x = k.mul(x, s);
    out.trim();
    return out;
}

KUPoly KUPoly::monic(const NumberField& k) const {
    if (is_zero()) return *this;
    UPoly inv = k.invert(c_.back());
    return scale(inv, k);
}

KUPoly KUPoly::mod_monic(const KUPoly& divisor, const NumberField& k) const {
    if (divisor.is_zero()) throw InvariantViolation("KUPoly: division by zero");
    KUPoly r = *this;
    long db = divisor.deg();
    while (!r.is_zero() && r.deg() >= db) {
        long sh = r.deg() - db;
        UPoly f = r.c_.back();
        // r -= f * x^sh * divisor   (divisor monic)
        std::vector<UPoly> sub(static_cast<std::size_t>(sh) + divisor.c_.size());
        for (std::size_t i = 0; i < divisor.c_.size(); ++i)
            sub[static_cast<std::size_t>(sh) + i] = k.mul(f, divisor.c_[i]);
        KUPoly s;
        s.c_ = std::move(sub);
        s.trim();
        r = r.sub(s, k);
    }
    return r;
}

UPoly KUPoly::eval(const UPoly& point, const NumberField& k) const {
    UPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = k.add(k.mul(acc, point), *it);
    return acc;
}

KUPoly kupoly_gcd(KUPoly a, KUPoly b, const NumberField& k) {
    while (!b.is_zero()) {
        KUPoly bm = b.monic(k);
        KUPoly r = a.mod_monic(bm, k);
        a = std::move(bm);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic(k);
}

} // namespace extactic
