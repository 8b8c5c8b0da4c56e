#include "heatsym/rational.hpp"

namespace heatsym {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(s), 1);
        return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace heatsym
