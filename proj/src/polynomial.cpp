#include "heatsym/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace heatsym {

char var_name(Var v) {
    switch (v) {
        case Var::x: return 'x';
        case Var::y: return 'y';
        case Var::z: return 'z';
        case Var::t: return 't';
    }
    throw std::logic_error("var_name: bad Var");
}

unsigned MonomialExp::get(Var v) const {
    switch (v) {
        case Var::x: return a;
        case Var::y: return b;
        case Var::z: return c;
        case Var::t: return d;
    }
    throw std::logic_error("MonomialExp::get: bad Var");
}

MonomialExp MonomialExp::bumped(Var v, int delta) const {
    MonomialExp e = *this;
    unsigned* slot = nullptr;
    switch (v) {
        case Var::x: slot = &e.a; break;
        case Var::y: slot = &e.b; break;
        case Var::z: slot = &e.c; break;
        case Var::t: slot = &e.d; break;
    }
    if (delta < 0 && *slot < static_cast<unsigned>(-delta))
        throw std::logic_error("MonomialExp::bumped: exponent would go negative");
    *slot = static_cast<unsigned>(static_cast<int>(*slot) + delta);
    return e;
}

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    p.add_term(MonomialExp{}, c);
    return p;
}

Polynomial Polynomial::variable(Var v, unsigned power) {
    Polynomial p;
    p.add_term(MonomialExp{}.bumped(v, static_cast<int>(power)), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(const MonomialExp& e, const Rational& c) {
    Polynomial p;
    p.add_term(e, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == MonomialExp{});
}

unsigned Polynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

Rational Polynomial::coeff(const MonomialExp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MonomialExp& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(MonomialExp{ea.a + eb.a, ea.b + eb.b, ea.c + eb.c, ea.d + eb.d}, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r;
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Polynomial Polynomial::partial(Var v) const {
    Polynomial r;
    for (const auto& [e, c] : terms_) {
        unsigned exp = e.get(v);
        if (exp == 0) continue;
        r.add_term(e.bumped(v, -1), c * Rational(static_cast<long>(exp)));
    }
    return r;
}

namespace {

std::string monomial_str(const MonomialExp& e) {
    std::ostringstream out;
    for (Var v : kAllVars) {
        unsigned p = e.get(v);
        if (p == 0) continue;
        out << var_name(v);
        if (p > 1) out << '^' << p;
    }
    return out.str();
}

}  // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest degree first, matching the usual written layout
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c.is_negative() ? -c : c;
        if (first) {
            if (c.is_negative()) out << '-';
        } else {
            out << (c.is_negative() ? " - " : " + ");
        }
        std::string vars = monomial_str(e);
        if (vars.empty()) {
            out << mag.str();
        } else {
            if (!mag.is_one()) out << mag.str();
            out << vars;
        }
        first = false;
    }
    return out.str();
}

}  // namespace heatsym
