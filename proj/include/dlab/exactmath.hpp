#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace dlab {

// All arithmetic in this project is exact. Integer is arbitrary-precision;
// Rational is kept in lowest terms with a positive denominator and is used
// only inside solvers whose final results are proven integral.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A computation produced something the underlying mathematics rules out
// (an inexact division that must be exact, a fractional solve result).
// Distinct from domain_error: callers cannot trigger this with bad input.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

namespace exactmath {

// binomial(n, k) with k < 0 or k > n giving 0; n < 0 is a domain error.
Integer binomial(long long n, long long k);

// binomial(2k, k) / (k + 1); k < 0 is a domain error.
Integer catalan(long long k);

// x (x+1) ... (x+n-1); the empty product 1 for n = 0.
Integer rising_factorial(const Integer& x, long long n);

// gcd of all entries; empty input or all-zero input is a domain error.
Integer gcd_many(const std::vector<Integer>& xs);

// lcm of two nonzero values, always positive; zero input is a domain error.
Integer lcm2(const Integer& a, const Integer& b);

// base^e for e >= 0; negative e is a domain error.
Integer pow_int(const Integer& base, long long e);

inline bool divides(const Integer& d, const Integer& a) {
    return d != 0 && a % d == 0;
}

// a / d when d | a exactly, invariant_error otherwise.
Integer divexact(const Integer& a, const Integer& d);

inline bool is_even(const Integer& a) { return a % 2 == 0; }
inline bool is_odd(const Integer& a) { return !is_even(a); }

}  // namespace exactmath
}  // namespace dlab
