#pragma once

#include <gmpxx.h>

namespace heatsym {

mpz_class binomial(unsigned long n, unsigned long k);

// Closed form for the number of independent symmetries of order <= n:
// (n+4)(n+3)^2(n+2)^2(n+1) / 144. The product is always divisible by 144.
long long formula_N(int n);

// Dependencies among order-k words: C(k+8,k) - 4C(k+6,k) + 4C(k+5,k) - C(k+4,k).
long long deps_same_order(int k);

// Dependencies between order-(k-1) and order-k words:
// 4C(k+6,k) - 5C(k+5,k) + C(k+4,k).
long long deps_cross_order(int k);

// Dependencies newly introduced at order n: deps_same_order(n) plus
// deps_cross_order(n-1). Zero for n < 2.
long long dependency_total(int n);

// Number of nondecreasing words of length 0..n, i.e. sum_k C(k+8,8).
long long nondecreasing_word_count(int n);

}  // namespace heatsym
