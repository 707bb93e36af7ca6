#include "dlab/sequences.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace dlab::sequences {

using exactmath::binomial;
using exactmath::catalan;
using exactmath::pow_int;
using polyring::IntPoly;

char family_letter(Family f) { return f == Family::Delannoy ? 'D' : 'S'; }

Family family_from_letter(char c) {
    if (c == 'D') return Family::Delannoy;
    if (c == 'S') return Family::Schroder;
    throw std::domain_error(std::string("family_from_letter: ") + c);
}

static void check_poly_args(long long n, long long h) {
    if (n < 0) throw std::domain_error("family polynomial: n < 0");
    if (h < 1) throw std::domain_error("family polynomial: h < 1");
}

IntPoly delannoy_poly(long long n, long long h) {
    check_poly_args(n, h);
    std::vector<Integer> cs(n + 1);
    for (long long k = 0; k <= n; ++k)
        cs[k] = pow_int(binomial(n + k, 2 * k), h) * pow_int(binomial(2 * k, k), h);
    return IntPoly(std::move(cs));
}

IntPoly delannoy_poly_by_products(long long n, long long h) {
    check_poly_args(n, h);
    std::vector<Integer> cs(n + 1);
    for (long long k = 0; k <= n; ++k)
        cs[k] = pow_int(binomial(n, k), h) * pow_int(binomial(n + k, k), h);
    return IntPoly(std::move(cs));
}

IntPoly schroder_poly(long long n, long long h) {
    check_poly_args(n, h);
    std::vector<Integer> cs(n + 1);
    for (long long k = 0; k <= n; ++k)
        cs[k] = pow_int(binomial(n + k, 2 * k), h) * pow_int(catalan(k), h);
    return IntPoly(std::move(cs));
}

// Both memo maps only ever grow and std::map nodes are reference-stable, so
// returned references stay valid for the life of the process.
const IntPoly& family_poly(Family f, long long n, long long h) {
    check_poly_args(n, h);
    using Key = std::tuple<int, long long, long long>;
    static std::mutex mu;
    static std::map<Key, IntPoly> memo;
    const Key key{static_cast<int>(f), n, h};
    {
        std::scoped_lock lk(mu);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    IntPoly p = f == Family::Delannoy ? delannoy_poly(n, h) : schroder_poly(n, h);
    std::scoped_lock lk(mu);
    return memo.try_emplace(key, std::move(p)).first->second;
}

const IntPoly& family_poly_power(Family f, long long n, long long h, long long m) {
    if (m < 0) throw std::domain_error("family_poly_power: m < 0");
    using Key = std::tuple<int, long long, long long, long long>;
    static std::mutex mu;
    static std::map<Key, IntPoly> memo;
    const Key key{static_cast<int>(f), n, h, m};
    {
        std::scoped_lock lk(mu);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    IntPoly p = family_poly(f, n, h).pow(m);
    std::scoped_lock lk(mu);
    return memo.try_emplace(key, std::move(p)).first->second;
}

Integer central_delannoy(long long n) { return delannoy_poly(n, 1).eval(1); }

Integer large_schroder(long long n) { return schroder_poly(n, 1).eval(1); }

}  // namespace dlab::sequences
