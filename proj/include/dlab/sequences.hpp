#pragma once

#include "dlab/polyring.hpp"

namespace dlab::sequences {

enum class Family { Delannoy, Schroder };

char family_letter(Family f);
Family family_from_letter(char c);  // 'D' or 'S', domain error otherwise

// sum_{k=0}^{n} binomial(n+k, 2k)^h binomial(2k, k)^h x^k
polyring::IntPoly delannoy_poly(long long n, long long h);

// Same polynomial through the binomial(n,k)^h binomial(n+k,k)^h form.
// Kept separate as an independent cross-check of delannoy_poly.
polyring::IntPoly delannoy_poly_by_products(long long n, long long h);

// sum_{k=0}^{n} binomial(n+k, 2k)^h catalan(k)^h x^k
polyring::IntPoly schroder_poly(long long n, long long h);

// Memoized access used by sweeps; same values as the two builders above.
const polyring::IntPoly& family_poly(Family f, long long n, long long h);

// Memoized family_poly(f, n, h)^m.
const polyring::IntPoly& family_poly_power(Family f, long long n, long long h, long long m);

// Central Delannoy numbers 1, 3, 13, 63, 321, ...
Integer central_delannoy(long long n);

// Large Schroeder numbers 1, 2, 6, 22, 90, ...
Integer large_schroder(long long n);

}  // namespace dlab::sequences
