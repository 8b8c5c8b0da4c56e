#include "heatsym/counting.hpp"

#include <stdexcept>

namespace heatsym {

namespace {

long long to_ll(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p()) throw std::overflow_error(std::string(what) + ": result out of range");
    return z.get_si();
}

void require_nonneg(int n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": order must be nonnegative");
}

}  // namespace

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

long long formula_N(int n) {
    require_nonneg(n, "formula_N");
    mpz_class v(n + 4);
    v *= mpz_class(n + 3) * (n + 3);
    v *= mpz_class(n + 2) * (n + 2);
    v *= (n + 1);
    mpz_class q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), 144);
    if (r != 0) throw std::logic_error("formula_N: product not divisible by 144");
    return to_ll(q, "formula_N");
}

long long deps_same_order(int k) {
    require_nonneg(k, "deps_same_order");
    auto uk = static_cast<unsigned long>(k);
    mpz_class v = binomial(uk + 8, uk) - 4 * binomial(uk + 6, uk) + 4 * binomial(uk + 5, uk) -
                  binomial(uk + 4, uk);
    return to_ll(v, "deps_same_order");
}

long long deps_cross_order(int k) {
    require_nonneg(k, "deps_cross_order");
    auto uk = static_cast<unsigned long>(k);
    mpz_class v = 4 * binomial(uk + 6, uk) - 5 * binomial(uk + 5, uk) + binomial(uk + 4, uk);
    return to_ll(v, "deps_cross_order");
}

long long dependency_total(int n) {
    require_nonneg(n, "dependency_total");
    if (n < 1) return deps_same_order(n);
    return deps_same_order(n) + deps_cross_order(n - 1);
}

long long nondecreasing_word_count(int n) {
    require_nonneg(n, "nondecreasing_word_count");
    // sum_{k<=n} C(k+8,8) telescopes to C(n+9,9)
    return to_ll(binomial(static_cast<unsigned long>(n) + 9, 9), "nondecreasing_word_count");
}

}  // namespace heatsym
