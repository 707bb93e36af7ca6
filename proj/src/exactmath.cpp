#include "dlab/exactmath.hpp"

#include <algorithm>

namespace dlab::exactmath {

Integer binomial(long long n, long long k) {
    if (n < 0) throw std::domain_error("binomial: negative upper index");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is binomial(n-k+i, i) after each step
    }
    return r;
}

Integer catalan(long long k) {
    if (k < 0) throw std::domain_error("catalan: negative index");
    return divexact(binomial(2 * k, k), Integer(k + 1));
}

Integer rising_factorial(const Integer& x, long long n) {
    if (n < 0) throw std::domain_error("rising_factorial: negative length");
    Integer r = 1;
    for (long long i = 0; i < n; ++i) r *= x + i;
    return r;
}

Integer gcd_many(const std::vector<Integer>& xs) {
    if (xs.empty()) throw std::domain_error("gcd_many: empty input");
    Integer g = 0;
    for (const Integer& x : xs) g = boost::multiprecision::gcd(g, x);
    if (g == 0) throw std::domain_error("gcd_many: all entries zero");
    return g;
}

Integer lcm2(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) throw std::domain_error("lcm2: zero input");
    Integer l = boost::multiprecision::lcm(a, b);
    return l < 0 ? Integer(-l) : l;
}

Integer pow_int(const Integer& base, long long e) {
    if (e < 0) throw std::domain_error("pow_int: negative exponent");
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

Integer divexact(const Integer& a, const Integer& d) {
    if (d == 0 || a % d != 0)
        throw invariant_error("divexact: " + a.str() + " not divisible by " + d.str());
    return a / d;
}

}  // namespace dlab::exactmath
