#include "dlab/reduction.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace dlab::reduction {

using exactmath::binomial;
using exactmath::catalan;
using exactmath::divexact;
using exactmath::divides;
using exactmath::pow_int;
using exactmath::rising_factorial;

namespace {

// Grow-only map with reference-stable nodes; compute runs unlocked, so
// concurrent duplicate work is possible but harmless for pure functions.
template <class K, class V>
class Cache {
public:
    template <class F>
    const V& get(const K& key, F&& make) {
        {
            std::scoped_lock lk(mu_);
            if (auto it = map_.find(key); it != map_.end()) return it->second;
        }
        V value = make();
        std::scoped_lock lk(mu_);
        return map_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::mutex mu_;
    std::map<K, V> map_;
};

void require_nonneg(long long v, const char* what) {
    if (v < 0) throw std::domain_error(std::string(what) + ": negative index");
}

std::vector<long long> checked_indices(std::vector<long long> indices) {
    if (indices.empty()) throw std::domain_error("reduction: empty index tuple");
    for (long long i : indices) require_nonneg(i, "reduction index");
    return indices;
}

long long sum_of(const std::vector<long long>& v) {
    return std::accumulate(v.begin(), v.end(), 0LL);
}

}  // namespace

Integer central_basis(long long k, long long t) {
    require_nonneg(t, "central_basis");
    return binomial(k + t, 2 * t) * binomial(2 * t, t);
}

Integer catalan_basis(long long k, long long t) {
    require_nonneg(t, "catalan_basis");
    return binomial(k + t, 2 * t) * catalan(t);
}

const std::vector<Integer>& newton_coeffs(long long l, long long a) {
    require_nonneg(l, "newton_coeffs l");
    require_nonneg(a, "newton_coeffs a");
    static Cache<std::pair<long long, long long>, std::vector<Integer>> cache;
    return cache.get({l, a}, [&] {
        std::vector<Integer> nodes(a + 1);
        for (long long v = 0; v <= a; ++v) nodes[v] = Integer(l + v) * (l + v + 1);
        std::vector<Rational> dd(a + 1);
        for (long long v = 0; v <= a; ++v) dd[v] = Rational(pow_int(nodes[v], a));
        for (long long order = 1; order <= a; ++order)
            for (long long j = a; j >= order; --j)
                dd[j] = (dd[j] - dd[j - 1]) / Rational(nodes[j] - nodes[j - order]);
        std::vector<Integer> out(a + 1);
        for (long long u = 0; u <= a; ++u) {
            if (boost::multiprecision::denominator(dd[u]) != 1)
                throw invariant_error("newton_coeffs: non-integral divided difference");
            out[u] = boost::multiprecision::numerator(dd[u]);
        }
        return out;
    });
}

Integer weight_coeff(long long u, long long l, long long a) {
    if (u < 0 || u > a) throw std::domain_error("weight_coeff: u outside [0, a]");
    const Integer& c = newton_coeffs(l, a)[u];
    return c * binomial(2 * l + 2 * u, l + u) * pow_int(rising_factorial(l + 1, u), 2);
}

const std::vector<Integer>& power_row(long long i, long long h) {
    require_nonneg(i, "power_row");
    if (h < 1) throw std::domain_error("power_row: h < 1");
    static Cache<std::pair<long long, long long>, std::vector<Integer>> cache;
    return cache.get({i, h}, [&] {
        std::vector<Integer> b(h * i - i + 1);
        for (long long t = i; t <= h * i; ++t) {
            // evaluate both sides at k = t; only s <= t contribute on the right
            Integer val = pow_int(binomial(t + i, 2 * i), h) * binomial(2 * i, i);
            for (long long s = i; s < t; ++s) val -= b[s - i] * central_basis(t, s);
            Integer bt = divexact(val, binomial(2 * t, t));
            if (!divides(binomial(t, i), bt))
                throw invariant_error("power_row: binomial(t, i) does not divide entry");
            b[t - i] = std::move(bt);
        }
        return b;
    });
}

Integer power_coeff(long long i, long long t, long long h) {
    require_nonneg(i, "power_coeff");
    if (h < 1) throw std::domain_error("power_coeff: h < 1");
    if (t < i || t > h * i) return 0;
    return power_row(i, h)[t - i];
}

Integer scaled_power_coeff(long long i, long long t, long long h) {
    Integer b = power_coeff(i, t, h);
    return divexact(b * (t + 1), Integer(i + 1));
}

Integer pair_coeff(long long i, long long j, long long l) {
    require_nonneg(i, "pair_coeff");
    require_nonneg(j, "pair_coeff");
    require_nonneg(l, "pair_coeff");
    return binomial(i + j, i) * binomial(j, i + j - l) * binomial(l, j);
}

Integer scaled_pair_coeff(long long i, long long j, long long l) {
    require_nonneg(i, "scaled_pair_coeff");
    require_nonneg(j, "scaled_pair_coeff");
    require_nonneg(l, "scaled_pair_coeff");
    return binomial(i + j, i + j - l) * binomial(l, j) * binomial(l + 1, i + 1) -
           binomial(i + j, i + 1) * binomial(j, i + j - l) * binomial(l + 1, l - j);
}

namespace detail {

template <class Pair>
std::vector<Integer> fold_row(const std::vector<long long>& indices, Pair pair) {
    std::vector<Integer> row(indices[0] + 1);
    row[indices[0]] = 1;
    for (std::size_t q = 1; q < indices.size(); ++q) {
        const long long add = indices[q];
        const long long cur = static_cast<long long>(row.size()) - 1;
        std::vector<Integer> next(cur + add + 1);
        for (long long lp = 0; lp <= cur; ++lp) {
            if (row[lp] == 0) continue;
            for (long long l = std::max(lp, add); l <= lp + add; ++l)
                next[l] += row[lp] * pair(lp, add, l);
        }
        row = std::move(next);
    }
    return row;
}

std::vector<Integer> fold_product_row(const std::vector<long long>& indices) {
    return fold_row(checked_indices(indices), pair_coeff);
}

std::vector<Integer> fold_scaled_product_row(const std::vector<long long>& indices) {
    return fold_row(checked_indices(indices), scaled_pair_coeff);
}

}  // namespace detail

const std::vector<Integer>& product_row(std::vector<long long> indices) {
    indices = checked_indices(std::move(indices));
    std::sort(indices.begin(), indices.end());
    static Cache<std::vector<long long>, std::vector<Integer>> cache;
    return cache.get(indices, [&] { return detail::fold_product_row(indices); });
}

Integer product_coeff(std::vector<long long> indices, long long l) {
    require_nonneg(l, "product_coeff");
    const auto& row = product_row(std::move(indices));
    return l < static_cast<long long>(row.size()) ? row[l] : Integer(0);
}

const std::vector<Integer>& scaled_product_row(std::vector<long long> indices) {
    indices = checked_indices(std::move(indices));
    std::sort(indices.begin(), indices.end());
    static Cache<std::vector<long long>, std::vector<Integer>> cache;
    return cache.get(indices, [&] { return detail::fold_scaled_product_row(indices); });
}

Integer scaled_product_coeff(std::vector<long long> indices, long long l) {
    require_nonneg(l, "scaled_product_coeff");
    const auto& row = scaled_product_row(std::move(indices));
    return l < static_cast<long long>(row.size()) ? row[l] : Integer(0);
}

namespace {

// Contract per-factor power rows through the m-fold table: enumerate the
// tuples (t_1..t_m), i_j <= t_j <= h*i_j, and accumulate the weighted rows.
template <class CoeffFn, class RowFn>
std::vector<Integer> power_product(const std::vector<long long>& indices, long long h,
                                   CoeffFn coeff, RowFn row_fn) {
    const long long total = h * sum_of(indices);
    std::vector<Integer> acc(total + 1);
    std::vector<long long> t(indices.size());
    auto rec = [&](auto&& self, std::size_t pos, const Integer& w) -> void {
        if (pos == indices.size()) {
            const std::vector<Integer>& row = row_fn(t);
            for (std::size_t l = 0; l < row.size(); ++l) acc[l] += w * row[l];
            return;
        }
        for (t[pos] = indices[pos]; t[pos] <= h * indices[pos]; ++t[pos]) {
            Integer w2 = w * coeff(indices[pos], t[pos], h);
            if (w2 != 0) self(self, pos + 1, w2);
        }
    };
    rec(rec, 0, Integer(1));
    return acc;
}

}  // namespace

const std::vector<Integer>& power_product_row(std::vector<long long> indices, long long h) {
    indices = checked_indices(std::move(indices));
    if (h < 1) throw std::domain_error("power_product_row: h < 1");
    std::sort(indices.begin(), indices.end());
    static Cache<std::pair<std::vector<long long>, long long>, std::vector<Integer>> cache;
    return cache.get({indices, h}, [&] {
        return power_product(indices, h, power_coeff,
                             [](const std::vector<long long>& t) -> const std::vector<Integer>& {
                                 return product_row(t);
                             });
    });
}

Integer power_product_coeff(std::vector<long long> indices, long long l, long long h) {
    require_nonneg(l, "power_product_coeff");
    const auto& row = power_product_row(std::move(indices), h);
    return l < static_cast<long long>(row.size()) ? row[l] : Integer(0);
}

const std::vector<Integer>& scaled_power_product_row(std::vector<long long> indices, long long h) {
    indices = checked_indices(std::move(indices));
    if (h < 1) throw std::domain_error("scaled_power_product_row: h < 1");
    std::sort(indices.begin(), indices.end());
    static Cache<std::pair<std::vector<long long>, long long>, std::vector<Integer>> cache;
    return cache.get({indices, h}, [&] {
        return power_product(indices, h, scaled_power_coeff,
                             [](const std::vector<long long>& t) -> const std::vector<Integer>& {
                                 return scaled_product_row(t);
                             });
    });
}

Integer scaled_power_product_coeff(std::vector<long long> indices, long long l, long long h) {
    require_nonneg(l, "scaled_power_product_coeff");
    const auto& row = scaled_power_product_row(std::move(indices), h);
    return l < static_cast<long long>(row.size()) ? row[l] : Integer(0);
}

}  // namespace dlab::reduction
