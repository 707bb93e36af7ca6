#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dlab/exactmath.hpp"

// Pointwise checkers for the side identities, parity facts and quotient
// integralities the divisibility theorems rest on. Every checker returns a
// CheckResult instead of asserting, so sweeps can report witnesses.
namespace dlab::identities {

struct CheckResult {
    std::string id;
    std::vector<std::pair<std::string, long long>> params;
    // Modulus the check is about: 2 for parity facts, the claimed divisor for
    // quotient checks, 1 for pure equalities.
    Integer modulus = 1;
    bool pass = true;
    // Empty iff pass. By convention starts with "index" (failing point) and
    // "value" (offending quantity), followed by any extra context.
    std::vector<std::pair<std::string, Integer>> witness;
};

// Difference form of the summand (sign in {-1, +1}):
//   sign^k (2k+1) binomial(k+l+u, 2l+2u) = cert(k+1) - cert(k)
// where cert(k) = sign^{k+1} (k-l-u) binomial(k+l+u, 2l+2u) for sign = -1 and
// cert(k) = k (k-l-u) binomial(k+l+u, 2l+2u) / (l+1+u) for sign = +1 (the
// division is checked exact). Verified for k = 0..kmax.
CheckResult check_telescope(int sign, long long l, long long u, long long kmax);

// Closed form of the partial sums sum_{k=0}^{n} of the same summand:
//   sign = -1:  (-1)^n (n+1+l+u) binomial(n+l+u, 2l+2u)
//   sign = +1:  (n+1) (n+1+l+u) binomial(n+l+u, 2l+2u) / (l+1+u), exact.
// Verified against running sums for n = 0..nmax.
CheckResult check_telescope_sum(int sign, long long l, long long u, long long nmax);

// 2 binomial(n-1, l-1) binomial(n+l+1, l) / (n+2) is an integer and equals
// binomial(n-1, l-1) binomial(n+l+1, l) - binomial(n, l) binomial(n+l+1, n+2).
CheckResult check_half_product_integrality(long long n, long long l);

// binomial(x+a, b) binomial(y+b, a)
//   = sum_{i=0}^{a} binomial(x+y+i, i) binomial(y, a-i) binomial(x, b-i).
CheckResult check_binomial_convolution(long long x, long long y, long long a, long long b);

// w_value(n, l) = binomial(n-1, l-1) binomial(n+l, l)
//                 - binomial(n, l) binomial(n+l, l-1)
// (the integer form of binomial(n-1, l-1) binomial(n+l, l-1) / l).
Integer w_value(long long n, long long l);

// h_value(n, l) = w_value(n, l+1) + w_value(n+1, l+1); always even.
Integer h_value(long long n, long long l);

// sum_{l=0}^{2b} w_value(n, l+1) is odd and sum_{l=0}^{2b} h_value(n, l) even.
CheckResult check_w_sum_parity(long long n, long long b);

// w_value(n, 2b) + w_value(n, 2b+1) = binomial(n+2b, n-2b) * catalan(2b),
// an even number (n >= 1, b >= 1).
CheckResult check_w_pair_value(long long n, long long b);

// For J <= l <= 2J the parity of scaled_pair_coeff(J, J, l) does not depend
// on l, and it is odd exactly when J+1 is a power of two (J >= 1).
CheckResult check_diagonal_parity(long long J);

// Head coefficients of newton_coeffs(l, a): c_0/(l(l+1)) = 1 for a = 1; both
// c_0/(l(l+1)) and c_1 are even for a > 1 (l >= 1).
CheckResult check_newton_head_parity(long long l, long long a);

// sum of product_coeff over all 2M-tuples with entries in [0, n] summing to I
// is even for l >= 1.
CheckResult check_pair_sum_parity(long long M, long long n, long long I, long long l);

// For odd I: sum over the same tuples of
//   scaled_power_product_coeff(tuple, l, h) * prod_j catalan(i_j)^{h-1}
// is even for every l >= 0.
CheckResult check_tilde_sum_parity_odd(long long M, long long n, long long I, long long l,
                                       long long h);

// For even I and even e:
//   sum_{l=0}^{e} h_value(n, l) * sum over M-tuples (j_1..j_M) in [0, n]
//   summing to I/2 of scaled_power_product_coeff(doubled tuple, l, h)
//   * (prod_s catalan(j_s)^{h-1})^2
// is even, where the doubled tuple is (j_1..j_M, j_1..j_M).
CheckResult check_tilde_sum_parity_even(long long M, long long n, long long I, long long e,
                                        long long h);

// The three closed-form families whose exact quotients drive the theorems;
// named for the sum they come from.
enum class QuotientKind { DelannoyAlt, SchroderPos, SchroderAlt };

// With K_u = weight_coeff(u, l, a), T = n+1+l+u, B = binomial(n+l+u, 2l+2u):
//   DelannoyAlt:  f_u = K_u (-1)^n T B
//     u = 0: 2 f_0 / (n(n+1)(n+2)) integral, equal to
//            (-1)^n (c_0/l) [2 binomial(n+l+1, l) binomial(n-1, l-1) / (n+2)]
//     u >= 1: f_u / (n(n+1)(n+2)) = (-1)^n c_u binomial(n+1+l+u, n+2)
//             binomial(n-1, n-l-u) rising_factorial(l+1, u-1)^2
//   SchroderPos:  g_u = K_u (n+1) T B / ((l+1)(l+1+u)), divided by n(n+1):
//     u = 0: (c_0/(l(l+1))) binomial(n+l+1, l+1) binomial(n-1, l-1)
//     u = 1: c_1 binomial(n+l+2, l+2) binomial(n-1, l)
//     u >= 2: c_u binomial(n+1+l+u, l+u+1) binomial(n-1, l+u-1)
//             rising_factorial(l+1, u) rising_factorial(l+2, u-2)
//   SchroderAlt:  g_u = K_u T B / (l+1)
//     u = 0 over n(n+1): (c_0/(l(l+1))) binomial(n+l+1, l) binomial(n-1, l-1)
//     u = 1 over n(n+1): c_1 binomial(n+l+2, l+1) binomial(n-1, l)
//     u >= 2 over n(n+1)(n+2): c_u binomial(n+1+l+u, l+u-1)
//             binomial(n-1, l+u-1) rising_factorial(l+1, u-1)
//             rising_factorial(l+2, u-2)
// Each check asserts the exact division and the closed form of the quotient.
CheckResult check_quotient_family(QuotientKind kind, long long l, long long a, long long u,
                                  long long n);

// At a = 1 the two SchroderAlt terms pair up to half of h_value:
//   2 (g_0 + g_1) = h_value(n, l) * n(n+1)(n+2).
CheckResult check_schroder_alt_pairing(long long l, long long n);

}  // namespace dlab::identities
