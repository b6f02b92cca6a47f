#include "extactic/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace extactic {

namespace {
constexpr std::uint32_t kExpCap = 1u << 20;
}

MultiPoly MultiPoly::constant(VarsPtr vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (sgn(c) != 0) p.terms_.emplace(Expvec(p.nvars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(VarsPtr vars, std::size_t index, std::uint32_t power) {
    MultiPoly p(std::move(vars));
    if (index >= p.nvars()) throw InputError("variable index out of range");
    Expvec e(p.nvars(), 0);
    e[index] = power;
    if (power > kExpCap) throw InputError("exponent overflow");
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::variable(VarsPtr vars, const std::string& name, std::uint32_t power) {
    auto idx = vars->index(name);
    if (!idx) throw InputError("unknown variable: " + name);
    return variable(std::move(vars), *idx, power);
}

MultiPoly MultiPoly::monomial(VarsPtr vars, Expvec exps, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (exps.size() != p.nvars()) throw InputError("exponent vector length mismatch");
    if (sgn(c) != 0) p.terms_.emplace(std::move(exps), c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw InvariantViolation("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

long MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first; // leading term has maximal total degree
    long d = 0;
    for (auto x : e) d += x;
    return d;
}

long MultiPoly::degree_in(std::size_t var) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[var]));
    return terms_.empty() ? -1 : d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (auto x : e) t += x;
        if (d < 0) d = t;
        else if (t != d) return false;
    }
    return true;
}

Rational MultiPoly::coeff(const Expvec& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Rational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw InvariantViolation("leading_coeff of zero polynomial");
    return terms_.begin()->second;
}

const Expvec& MultiPoly::leading_exps() const {
    if (terms_.empty()) throw InvariantViolation("leading_exps of zero polynomial");
    return terms_.begin()->first;
}

void MultiPoly::check_same_context(const MultiPoly& other) const {
    if (!same_vars(vars_, other.vars_))
        throw InputError("variable context mismatch");
}

void MultiPoly::add_term(const Expvec& exps, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    check_same_context(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    check_same_context(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    lhs.check_same_context(rhs);
    MultiPoly r(lhs.vars_);
    if (lhs.is_zero() || rhs.is_zero()) return r;
    // iterate over the smaller operand's terms in the outer loop
    const MultiPoly& a = lhs.term_count() <= rhs.term_count() ? lhs : rhs;
    const MultiPoly& b = lhs.term_count() <= rhs.term_count() ? rhs : lhs;
    Expvec e(r.nvars());
    Rational c;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            c = ca * cb;
            r.add_term(e, c);
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    if (!same_vars(vars_, rhs.vars_)) return false;
    return terms_ == rhs.terms_;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
    if (degree() > 0 && static_cast<std::uint64_t>(degree()) * e > kExpCap)
        throw InputError("exponent overflow in pow");
    MultiPoly result = MultiPoly::constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expvec d = e;
        d[var] -= 1;
        r.terms_.emplace(std::move(d), c * Rational(e[var]));
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(std::size_t var) const {
    long d = degree_in(var);
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max<long>(d, 0)) + 1, MultiPoly(vars_));
    for (const auto& [e, c] : terms_) {
        Expvec r = e;
        std::uint32_t p = r[var];
        r[var] = 0;
        out[p].add_term(r, c);
    }
    return out;
}

MultiPoly MultiPoly::coeff_of(std::size_t var, std::uint32_t power) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != power) continue;
        Expvec r = e;
        r[var] = 0;
        out.add_term(r, c);
    }
    return out;
}

MultiPoly MultiPoly::leading_coeff_in(std::size_t var) const {
    long d = degree_in(var);
    if (d < 0) return MultiPoly(vars_);
    return coeff_of(var, static_cast<std::uint32_t>(d));
}

MultiPoly MultiPoly::subst(std::size_t var, const MultiPoly& value) const {
    check_same_context(value);
    auto cs = coeffs_in(var);
    MultiPoly acc(vars_);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        acc = acc * value + *it;
    return acc;
}

MultiPoly MultiPoly::subst_all(const std::vector<MultiPoly>& values) const {
    if (values.size() != nvars()) throw InputError("subst_all: wrong number of values");
    VarsPtr target = values.empty() ? vars_ : values.front().vars();
    for (const auto& v : values)
        if (!same_vars(v.vars(), target)) throw InputError("subst_all: mixed target contexts");
    MultiPoly acc(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) term = term * values[i].pow(e[i]);
        acc += term;
    }
    return acc;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars()) throw InputError("eval: wrong point dimension");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= rat_pow(point[i], e[i]);
        acc += t;
    }
    return acc;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(0);
    Rational g(0);
    for (const auto& [e, c] : terms_) {
        g = rat_gcd(g, c);
        if (g == 1) break;
    }
    if (sgn(leading_coeff()) < 0) g = -g;
    return g;
}

MultiPoly MultiPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    Rational g = content();
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c / g);
    return r;
}

MultiPoly MultiPoly::with_vars(const VarsPtr& target) const {
    if (same_vars(vars_, target)) return *this;
    std::vector<std::size_t> where(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        auto idx = target->index(vars_->name(i));
        if (!idx) {
            if (degree_in(i) > 0)
                throw InputError("with_vars: target context lacks variable " + vars_->name(i));
            where[i] = 0; // unused variable, any slot
        } else {
            where[i] = *idx;
        }
    }
    MultiPoly r(target);
    for (const auto& [e, c] : terms_) {
        Expvec t(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t[where[i]] += e[i];
        r.add_term(t, c);
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool constant_term = std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
        bool coeff_shown = constant_term || a != 1;
        if (coeff_shown) os << rat_to_string(a);
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (coeff_shown || any) os << "*";
            os << vars_->name(i);
            if (e[i] > 1) os << "^" << e[i];
            any = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

} // namespace extactic
