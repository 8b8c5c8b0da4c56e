#include "heatsym/jet.hpp"

#include <stdexcept>

namespace heatsym {

unsigned DerivIndex::get(Var v) const {
    switch (v) {
        case Var::x: return i;
        case Var::y: return j;
        case Var::z: return k;
        case Var::t: return m;
    }
    throw std::logic_error("DerivIndex::get: bad Var");
}

DerivIndex DerivIndex::bumped(Var v, int delta) const {
    DerivIndex d = *this;
    unsigned* slot = nullptr;
    switch (v) {
        case Var::x: slot = &d.i; break;
        case Var::y: slot = &d.j; break;
        case Var::z: slot = &d.k; break;
        case Var::t: slot = &d.m; break;
    }
    if (delta < 0 && *slot < static_cast<unsigned>(-delta))
        throw std::logic_error("DerivIndex::bumped: order would go negative");
    *slot = static_cast<unsigned>(static_cast<int>(*slot) + delta);
    return d;
}

std::string DerivIndex::name() const {
    std::string s = "U";
    s.append(i, 'x');
    s.append(j, 'y');
    s.append(k, 'z');
    s.append(m, 't');
    return s;
}

DiffFunction DiffFunction::term(const DerivIndex& d, const Polynomial& p) {
    DiffFunction f;
    f.add_term(d, p);
    return f;
}

bool DiffFunction::is_normal() const {
    for (const auto& [d, p] : terms_)
        if (!d.is_normal()) return false;
    return true;
}

unsigned DiffFunction::max_order() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.order();
}

Polynomial DiffFunction::coeff(const DerivIndex& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Polynomial{} : it->second;
}

void DiffFunction::add_term(const DerivIndex& d, const Polynomial& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.emplace(d, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffFunction DiffFunction::operator-() const {
    DiffFunction r;
    for (const auto& [d, p] : terms_) r.terms_.emplace(d, -p);
    return r;
}

DiffFunction& DiffFunction::operator+=(const DiffFunction& o) {
    for (const auto& [d, p] : o.terms_) add_term(d, p);
    return *this;
}

DiffFunction& DiffFunction::operator-=(const DiffFunction& o) {
    for (const auto& [d, p] : o.terms_) add_term(d, -p);
    return *this;
}

DiffFunction DiffFunction::scaled(const Rational& c) const {
    DiffFunction r;
    if (c.is_zero()) return r;
    for (const auto& [d, p] : terms_) r.terms_.emplace(d, p.scaled(c));
    return r;
}

DiffFunction DiffFunction::times(const Polynomial& q) const {
    DiffFunction r;
    if (q.is_zero()) return r;
    for (const auto& [d, p] : terms_) r.add_term(d, p * q);
    return r;
}

DiffFunction total_derivative(const DiffFunction& f, Var v) {
    DiffFunction r;
    for (const auto& [d, p] : f.terms()) {
        r.add_term(d, p.partial(v));
        r.add_term(d.bumped(v), p);
    }
    return r;
}

DiffFunction derivative(const DiffFunction& f, const DerivIndex& J) {
    DiffFunction r = f;
    for (unsigned n = 0; n < J.i; ++n) r = total_derivative(r, Var::x);
    for (unsigned n = 0; n < J.j; ++n) r = total_derivative(r, Var::y);
    for (unsigned n = 0; n < J.k; ++n) r = total_derivative(r, Var::z);
    for (unsigned n = 0; n < J.m; ++n) r = total_derivative(r, Var::t);
    return r;
}

DiffFunction heat_operator() {
    DiffFunction f = DiffFunction::term(DerivIndex{0, 0, 0, 1}, Polynomial::one());
    f.add_term(DerivIndex{2, 0, 0, 0}, -Polynomial::one());
    f.add_term(DerivIndex{0, 2, 0, 0}, -Polynomial::one());
    f.add_term(DerivIndex{0, 0, 2, 0}, -Polynomial::one());
    return f;
}

NormalForm normalize(const DiffFunction& f) {
    DiffFunction work = f;
    ReductionCertificate cert;
    for (;;) {
        // the map is ordered by graded lex, so scanning from the back finds
        // the t-derivative of highest total order first
        const DerivIndex* target = nullptr;
        for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it) {
            if (it->first.m > 0) {
                target = &it->first;
                break;
            }
        }
        if (!target) break;
        DerivIndex d = *target;
        Polynomial p = work.coeff(d);
        work.add_term(d, -p);  // remove the term
        DerivIndex base = d.bumped(Var::t, -1);
        work.add_term(base.bumped(Var::x, 2), p);
        work.add_term(base.bumped(Var::y, 2), p);
        work.add_term(base.bumped(Var::z, 2), p);
        auto [it, inserted] = cert.coeffs.emplace(base, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) cert.coeffs.erase(it);
        }
    }
    return NormalForm{std::move(work), std::move(cert)};
}

DiffFunction certificate_expansion(const ReductionCertificate& cert) {
    DiffFunction sum;
    const DiffFunction f = heat_operator();
    for (const auto& [J, c] : cert.coeffs) sum += derivative(f, J).times(c);
    return sum;
}

DiffFunction residual(const DiffFunction& q) {
    if (!q.is_normal()) throw std::invalid_argument("residual: input must be in normal form");
    DiffFunction lhs = total_derivative(q, Var::t);
    for (Var v : {Var::x, Var::y, Var::z}) lhs -= total_derivative(total_derivative(q, v), v);
    return normalize(lhs).normal;
}

bool diff_equal(const DiffFunction& f, const DiffFunction& g) {
    return normalize(f - g).normal.is_zero();
}

}  // namespace heatsym
