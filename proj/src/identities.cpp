#include "dlab/identities.hpp"

#include <functional>

#include "dlab/reduction.hpp"

namespace dlab::identities {

using exactmath::binomial;
using exactmath::catalan;
using exactmath::divexact;
using exactmath::divides;
using exactmath::is_even;
using exactmath::is_odd;
using exactmath::pow_int;
using exactmath::rising_factorial;

namespace {

CheckResult start(std::string id, std::vector<std::pair<std::string, long long>> params,
                  Integer modulus = 1) {
    CheckResult r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.modulus = std::move(modulus);
    return r;
}

void fail(CheckResult& r, long long index, Integer value,
          std::vector<std::pair<std::string, Integer>> extra = {}) {
    if (!r.pass) return;  // keep the first witness
    r.pass = false;
    r.witness.emplace_back("index", Integer(index));
    r.witness.emplace_back("value", std::move(value));
    for (auto& e : extra) r.witness.push_back(std::move(e));
}

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

int require_sign(int sign) {
    require(sign == 1 || sign == -1, "sign must be +1 or -1");
    return sign;
}

// Enumerates tuples of the given length with entries in [0, n] summing to I.
void for_each_tuple(long long length, long long n, long long I,
                    const std::function<void(const std::vector<long long>&)>& fn) {
    std::vector<long long> cur(length);
    auto rec = [&](auto&& self, long long pos, long long left) -> void {
        if (pos == length) {
            if (left == 0) fn(cur);
            return;
        }
        const long long hi = std::min(n, left);
        for (long long v = 0; v <= hi; ++v) {
            if (left - v > n * (length - pos - 1)) continue;
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    if (I >= 0) rec(rec, 0, I);
}

Integer sign_pow(int sign, long long k) { return sign < 0 && (k & 1) ? -1 : 1; }

}  // namespace

CheckResult check_telescope(int sign, long long l, long long u, long long kmax) {
    require_sign(sign);
    require(l >= 0 && u >= 0 && kmax >= 0, "check_telescope: bad range");
    auto r = start("telescope", {{"sign", sign}, {"l", l}, {"u", u}, {"kmax", kmax}});
    const long long d = l + u;
    auto cert = [&](long long k, Integer& out) -> bool {
        const Integer b = binomial(k + d, 2 * d);
        if (sign < 0) {
            out = sign_pow(sign, k + 1) * (k - d) * b;
            return true;
        }
        const Integer num = Integer(k) * (k - d) * b;
        if (!divides(Integer(d + 1), num)) return false;
        out = num / (d + 1);
        return true;
    };
    for (long long k = 0; k <= kmax && r.pass; ++k) {
        Integer lo, hi;
        if (!cert(k, lo)) {
            fail(r, k, Integer(k) * (k - d) * binomial(k + d, 2 * d),
                 {{"divisor", Integer(d + 1)}});
            break;
        }
        if (!cert(k + 1, hi)) {
            fail(r, k + 1, Integer(k + 1) * (k + 1 - d) * binomial(k + 1 + d, 2 * d),
                 {{"divisor", Integer(d + 1)}});
            break;
        }
        const Integer lhs = sign_pow(sign, k) * (2 * k + 1) * binomial(k + d, 2 * d);
        const Integer rhs = hi - lo;
        if (lhs != rhs) fail(r, k, lhs - rhs, {{"lhs", lhs}, {"rhs", rhs}});
    }
    return r;
}

CheckResult check_telescope_sum(int sign, long long l, long long u, long long nmax) {
    require_sign(sign);
    require(l >= 0 && u >= 0 && nmax >= 0, "check_telescope_sum: bad range");
    auto r = start("telescope-sum", {{"sign", sign}, {"l", l}, {"u", u}, {"nmax", nmax}});
    const long long d = l + u;
    Integer running = 0;
    for (long long n = 0; n <= nmax && r.pass; ++n) {
        running += sign_pow(sign, n) * (2 * n + 1) * binomial(n + d, 2 * d);
        Integer closed;
        if (sign < 0) {
            closed = sign_pow(sign, n) * (n + 1 + d) * binomial(n + d, 2 * d);
        } else {
            const Integer num = Integer(n + 1) * (n + 1 + d) * binomial(n + d, 2 * d);
            if (!divides(Integer(d + 1), num)) {
                fail(r, n, num, {{"divisor", Integer(d + 1)}});
                break;
            }
            closed = num / (d + 1);
        }
        if (running != closed) fail(r, n, running - closed, {{"lhs", running}, {"rhs", closed}});
    }
    return r;
}

CheckResult check_half_product_integrality(long long n, long long l) {
    require(n >= 1 && l >= 1, "check_half_product_integrality: n, l >= 1");
    auto r = start("half-product", {{"n", n}, {"l", l}}, Integer(n + 2));
    const Integer num = 2 * binomial(n - 1, l - 1) * binomial(n + l + 1, l);
    if (!divides(Integer(n + 2), num)) {
        fail(r, 0, num, {{"divisor", Integer(n + 2)}});
        return r;
    }
    const Integer direct = num / (n + 2);
    const Integer decomposed =
        binomial(n - 1, l - 1) * binomial(n + l + 1, l) - binomial(n, l) * binomial(n + l + 1, n + 2);
    if (direct != decomposed)
        fail(r, 0, direct - decomposed, {{"lhs", direct}, {"rhs", decomposed}});
    return r;
}

CheckResult check_binomial_convolution(long long x, long long y, long long a, long long b) {
    require(x >= 0 && y >= 0 && a >= 0 && b >= 0, "check_binomial_convolution: negative input");
    auto r = start("convolution", {{"x", x}, {"y", y}, {"a", a}, {"b", b}});
    const Integer lhs = binomial(x + a, b) * binomial(y + b, a);
    Integer rhs = 0;
    for (long long i = 0; i <= a; ++i)
        rhs += binomial(x + y + i, i) * binomial(y, a - i) * binomial(x, b - i);
    if (lhs != rhs) fail(r, 0, lhs - rhs, {{"lhs", lhs}, {"rhs", rhs}});
    return r;
}

Integer w_value(long long n, long long l) {
    require(n >= 1 && l >= 1, "w_value: n, l >= 1");
    return binomial(n - 1, l - 1) * binomial(n + l, l) - binomial(n, l) * binomial(n + l, l - 1);
}

Integer h_value(long long n, long long l) {
    require(l >= 0, "h_value: l >= 0");
    return w_value(n, l + 1) + w_value(n + 1, l + 1);
}

CheckResult check_w_sum_parity(long long n, long long b) {
    require(n >= 1 && b >= 0, "check_w_sum_parity: n >= 1, b >= 0");
    auto r = start("w-parity", {{"n", n}, {"b", b}}, 2);
    Integer w_sum = 0, h_sum = 0;
    for (long long l = 0; l <= 2 * b; ++l) {
        w_sum += w_value(n, l + 1);
        h_sum += h_value(n, l);
    }
    if (!is_odd(w_sum)) fail(r, 0, w_sum);
    if (!is_even(h_sum)) fail(r, 1, h_sum);
    return r;
}

CheckResult check_w_pair_value(long long n, long long b) {
    require(n >= 1 && b >= 1, "check_w_pair_value: n, b >= 1");
    auto r = start("w-pair", {{"n", n}, {"b", b}}, 2);
    const Integer lhs = w_value(n, 2 * b) + w_value(n, 2 * b + 1);
    const Integer rhs = binomial(n + 2 * b, n - 2 * b) * catalan(2 * b);
    if (lhs != rhs) fail(r, 0, lhs - rhs, {{"lhs", lhs}, {"rhs", rhs}});
    if (!is_even(lhs)) fail(r, 1, lhs);
    return r;
}

CheckResult check_diagonal_parity(long long J) {
    require(J >= 1, "check_diagonal_parity: J >= 1");
    auto r = start("diagonal-parity", {{"J", J}}, 2);
    const bool expect_odd = ((J + 1) & J) == 0;  // J+1 a power of two
    const bool head_odd = is_odd(reduction::scaled_pair_coeff(J, J, J));
    for (long long l = J; l <= 2 * J; ++l) {
        const Integer v = reduction::scaled_pair_coeff(J, J, l);
        if (is_odd(v) != head_odd) {
            fail(r, l, v);
            return r;
        }
    }
    if (head_odd != expect_odd) fail(r, J, reduction::scaled_pair_coeff(J, J, J));
    return r;
}

CheckResult check_newton_head_parity(long long l, long long a) {
    require(l >= 1 && a >= 1, "check_newton_head_parity: l, a >= 1");
    auto r = start("newton-head-parity", {{"l", l}, {"a", a}}, 2);
    const auto& c = reduction::newton_coeffs(l, a);
    const Integer ll1 = Integer(l) * (l + 1);
    if (!divides(ll1, c[0])) {
        fail(r, 0, c[0], {{"divisor", ll1}});
        return r;
    }
    const Integer head = c[0] / ll1;
    if (a == 1) {
        if (head != 1) fail(r, 0, head);
    } else {
        if (!is_even(head)) fail(r, 0, head);
        if (!is_even(c[1])) fail(r, 1, c[1]);
    }
    return r;
}

CheckResult check_pair_sum_parity(long long M, long long n, long long I, long long l) {
    require(M >= 1 && n >= 1 && I >= 0 && l >= 1, "check_pair_sum_parity: bad input");
    auto r = start("pair-parity", {{"M", M}, {"n", n}, {"I", I}, {"l", l}}, 2);
    Integer total = 0;
    for_each_tuple(2 * M, n, I, [&](const std::vector<long long>& t) {
        total += reduction::product_coeff(t, l);
    });
    if (!is_even(total)) fail(r, 0, total);
    return r;
}

CheckResult check_tilde_sum_parity_odd(long long M, long long n, long long I, long long l,
                                       long long h) {
    require(M >= 1 && n >= 1 && h >= 1 && l >= 0, "check_tilde_sum_parity_odd: bad input");
    require(I >= 1 && (I & 1) == 1, "check_tilde_sum_parity_odd: I must be odd");
    auto r = start("tilde-parity-odd", {{"M", M}, {"n", n}, {"I", I}, {"l", l}, {"h", h}}, 2);
    Integer total = 0;
    for_each_tuple(2 * M, n, I, [&](const std::vector<long long>& t) {
        Integer weight = 1;
        for (long long i : t) weight *= pow_int(catalan(i), h - 1);
        total += reduction::scaled_power_product_coeff(t, l, h) * weight;
    });
    if (!is_even(total)) fail(r, 0, total);
    return r;
}

CheckResult check_tilde_sum_parity_even(long long M, long long n, long long I, long long e,
                                        long long h) {
    require(M >= 1 && n >= 1 && h >= 1, "check_tilde_sum_parity_even: bad input");
    require(I >= 0 && (I & 1) == 0, "check_tilde_sum_parity_even: I must be even");
    require(e >= 0 && (e & 1) == 0, "check_tilde_sum_parity_even: e must be even");
    auto r = start("tilde-parity-even", {{"M", M}, {"n", n}, {"I", I}, {"e", e}, {"h", h}}, 2);
    std::vector<Integer> inner;  // summed rows of the doubled tuples
    for_each_tuple(M, n, I / 2, [&](const std::vector<long long>& j) {
        std::vector<long long> doubled(j);
        doubled.insert(doubled.end(), j.begin(), j.end());
        Integer weight = 1;
        for (long long v : j) weight *= pow_int(catalan(v), h - 1);
        weight *= weight;
        const auto& row = reduction::scaled_power_product_row(doubled, h);
        if (row.size() > inner.size()) inner.resize(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) inner[i] += weight * row[i];
    });
    Integer total = 0;
    for (long long l = 0; l <= e; ++l)
        if (l < static_cast<long long>(inner.size())) total += h_value(n, l) * inner[l];
    if (!is_even(total)) fail(r, 0, total);
    return r;
}

namespace {

const char* quotient_id(QuotientKind kind) {
    switch (kind) {
        case QuotientKind::DelannoyAlt: return "quotients-delannoy-alt";
        case QuotientKind::SchroderPos: return "quotients-schroder-pos";
        case QuotientKind::SchroderAlt: return "quotients-schroder-alt";
    }
    throw std::domain_error("quotient_id: bad kind");
}

}  // namespace

CheckResult check_quotient_family(QuotientKind kind, long long l, long long a, long long u,
                                  long long n) {
    require(l >= 1 && a >= 1 && n >= 1, "check_quotient_family: l, a, n >= 1");
    require(u >= 0 && u <= a, "check_quotient_family: u outside [0, a]");
    const Integer m2 = Integer(n) * (n + 1);
    const Integer m3 = m2 * (n + 2);
    const Integer sgn = (n & 1) ? -1 : 1;
    const Integer ku = reduction::weight_coeff(u, l, a);
    const Integer tail = Integer(n + 1 + l + u) * binomial(n + l + u, 2 * l + 2 * u);
    const auto& c = reduction::newton_coeffs(l, a);

    auto r = start(quotient_id(kind), {{"l", l}, {"a", a}, {"u", u}, {"n", n}});
    auto checked_div = [&](const Integer& num, const Integer& den, Integer& out) {
        if (!divides(den, num)) {
            fail(r, u, num, {{"divisor", den}});
            return false;
        }
        out = num / den;
        return true;
    };

    Integer value, quotient, closed;
    switch (kind) {
        case QuotientKind::DelannoyAlt: {
            r.modulus = m3;
            value = ku * sgn * tail;
            if (u == 0) {
                Integer lemma_part, head;
                if (!checked_div(2 * binomial(n + l + 1, l) * binomial(n - 1, l - 1),
                                 Integer(n + 2), lemma_part))
                    return r;
                if (!checked_div(c[0], Integer(l), head)) return r;
                if (!checked_div(2 * value, m3, quotient)) return r;
                closed = sgn * head * lemma_part;
            } else {
                if (!checked_div(value, m3, quotient)) return r;
                closed = sgn * c[u] * binomial(n + 1 + l + u, n + 2) * binomial(n - 1, n - l - u) *
                         pow_int(rising_factorial(l + 1, u - 1), 2);
            }
            break;
        }
        case QuotientKind::SchroderPos: {
            r.modulus = m2;
            if (!checked_div(ku * (n + 1) * tail, Integer(l + 1) * (l + 1 + u), value)) return r;
            if (!checked_div(value, m2, quotient)) return r;
            if (u == 0) {
                Integer head;
                if (!checked_div(c[0], Integer(l) * (l + 1), head)) return r;
                closed = head * binomial(n + l + 1, l + 1) * binomial(n - 1, l - 1);
            } else if (u == 1) {
                closed = c[1] * binomial(n + l + 2, l + 2) * binomial(n - 1, l);
            } else {
                closed = c[u] * binomial(n + 1 + l + u, l + u + 1) * binomial(n - 1, l + u - 1) *
                         rising_factorial(l + 1, u) * rising_factorial(l + 2, u - 2);
            }
            break;
        }
        case QuotientKind::SchroderAlt: {
            r.modulus = u <= 1 ? m2 : m3;
            if (!checked_div(ku * tail, Integer(l + 1), value)) return r;
            if (!checked_div(value, r.modulus, quotient)) return r;
            if (u == 0) {
                Integer head;
                if (!checked_div(c[0], Integer(l) * (l + 1), head)) return r;
                closed = head * binomial(n + l + 1, l) * binomial(n - 1, l - 1);
            } else if (u == 1) {
                closed = c[1] * binomial(n + l + 2, l + 1) * binomial(n - 1, l);
            } else {
                closed = c[u] * binomial(n + 1 + l + u, l + u - 1) * binomial(n - 1, l + u - 1) *
                         rising_factorial(l + 1, u - 1) * rising_factorial(l + 2, u - 2);
            }
            break;
        }
    }
    if (r.pass && quotient != closed)
        fail(r, u, quotient - closed, {{"lhs", quotient}, {"rhs", closed}});
    return r;
}

CheckResult check_schroder_alt_pairing(long long l, long long n) {
    require(l >= 1 && n >= 1, "check_schroder_alt_pairing: l, n >= 1");
    const Integer m3 = Integer(n) * (n + 1) * (n + 2);
    auto r = start("quotients-pairing", {{"l", l}, {"n", n}}, m3);
    Integer g0, g1;
    auto scaled = [&](long long u, Integer& out) {
        const Integer num =
            reduction::weight_coeff(u, l, 1) * (n + 1 + l + u) * binomial(n + l + u, 2 * l + 2 * u);
        if (!divides(Integer(l + 1), num)) {
            fail(r, u, num, {{"divisor", Integer(l + 1)}});
            return false;
        }
        out = num / (l + 1);
        return true;
    };
    if (!scaled(0, g0) || !scaled(1, g1)) return r;
    const Integer lhs = 2 * (g0 + g1);
    const Integer rhs = h_value(n, l) * m3;
    if (lhs != rhs) fail(r, 0, lhs - rhs, {{"lhs", lhs}, {"rhs", rhs}});
    return r;
}

}  // namespace dlab::identities
