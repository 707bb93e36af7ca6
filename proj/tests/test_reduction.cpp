#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "dlab/reduction.hpp"

using namespace dlab;
using exactmath::binomial;
using exactmath::catalan;
using exactmath::pow_int;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> vs) {
    return std::vector<Integer>(vs.begin(), vs.end());
}

Integer node(long long l, long long v) { return Integer(l + v - 1) * (l + v); }

}  // namespace

TEST_CASE("basis values") {
    CHECK(reduction::central_basis(2, 1) == 6);   // C(3,2)*C(2,1)
    CHECK(reduction::central_basis(3, 3) == 20);  // C(6,6)*C(6,3)
    CHECK(reduction::central_basis(1, 2) == 0);   // vanishes below the diagonal
    CHECK(reduction::catalan_basis(2, 2) == 2);   // C(4,4)*Cat(2)
    CHECK(reduction::catalan_basis(3, 2) == 10);  // C(5,4)*Cat(2)
    CHECK_THROWS_AS(reduction::central_basis(2, -1), std::domain_error);
}

TEST_CASE("newton_coeffs pinned rows") {
    CHECK(reduction::newton_coeffs(2, 1) == ints({6, 1}));
    CHECK(reduction::newton_coeffs(3, 0) == ints({1}));
    CHECK(reduction::newton_coeffs(1, 2) == ints({4, 8, 1}));
    CHECK(reduction::newton_coeffs(2, 2) == ints({36, 18, 1}));
}

TEST_CASE("newton_coeffs expand (k(k+1))^a, leading coefficient 1") {
    for (long long l = 0; l <= 4; ++l)
        for (long long a = 0; a <= 4; ++a) {
            const auto& c = reduction::newton_coeffs(l, a);
            REQUIRE(c.size() == static_cast<std::size_t>(a + 1));
            CHECK(c[a] == 1);
            for (long long k = 0; k <= 6; ++k) {
                const Integer y = Integer(k) * (k + 1);
                Integer sum = 0;
                for (long long u = 0; u <= a; ++u) {
                    Integer term = c[u];
                    for (long long v = 1; v <= u; ++v) term *= y - node(l, v);
                    sum += term;
                }
                CHECK(sum == pow_int(y, a));
            }
        }
}

TEST_CASE("weight_coeff pinned values and range check") {
    CHECK(reduction::weight_coeff(0, 1, 1) == 4);
    CHECK(reduction::weight_coeff(1, 1, 1) == 24);
    CHECK(reduction::weight_coeff(0, 0, 0) == 1);
    CHECK_THROWS_AS(reduction::weight_coeff(2, 1, 1), std::domain_error);
    CHECK_THROWS_AS(reduction::weight_coeff(-1, 1, 1), std::domain_error);
}

TEST_CASE("weight_coeff expands the weighted basis element") {
    // k^a (k+1)^a central_basis(k,l) = sum_u K_u binomial(k+l+u, 2l+2u),
    // including the degenerate l = 0 column.
    for (long long l = 0; l <= 4; ++l)
        for (long long a = 0; a <= 4; ++a)
            for (long long k = 0; k <= 12; ++k) {
                const Integer lhs =
                    pow_int(Integer(k) * (k + 1), a) * reduction::central_basis(k, l);
                Integer rhs = 0;
                for (long long u = 0; u <= a; ++u)
                    rhs += reduction::weight_coeff(u, l, a) *
                           binomial(k + l + u, 2 * l + 2 * u);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("power_row pinned rows") {
    CHECK(reduction::power_row(3, 1) == ints({1}));
    CHECK(reduction::power_row(0, 3) == ints({1}));
    CHECK(reduction::power_row(1, 2) == ints({1, 2}));
    CHECK(reduction::power_row(2, 2) == ints({1, 6, 6}));
}

TEST_CASE("power_row expands the h-th basis power") {
    for (long long i = 0; i <= 4; ++i)
        for (long long h = 1; h <= 3; ++h)
            for (long long k = 0; k <= 15; ++k) {
                const Integer lhs =
                    pow_int(binomial(k + i, 2 * i), h) * binomial(2 * i, i);
                Integer rhs = 0;
                for (long long t = i; t <= h * i; ++t)
                    rhs += reduction::power_coeff(i, t, h) * reduction::central_basis(k, t);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("binomial(t, i) divides every power_row entry") {
    for (long long i = 0; i <= 6; ++i)
        for (long long h = 1; h <= 3; ++h)
            for (long long t = i; t <= h * i; ++t)
                CHECK(exactmath::divides(binomial(t, i), reduction::power_coeff(i, t, h)));
}

TEST_CASE("power_coeff support and argument checks") {
    CHECK(reduction::power_coeff(2, 1, 2) == 0);
    CHECK(reduction::power_coeff(2, 5, 2) == 0);
    CHECK(reduction::power_coeff(2, 2, 2) == 1);
    CHECK_THROWS_AS(reduction::power_row(2, 0), std::domain_error);
    CHECK_THROWS_AS(reduction::power_row(-1, 2), std::domain_error);
}

TEST_CASE("scaled_power_coeff pinned values") {
    CHECK(reduction::scaled_power_coeff(1, 1, 2) == 1);
    CHECK(reduction::scaled_power_coeff(1, 2, 2) == 3);
    CHECK(reduction::scaled_power_coeff(4, 4, 1) == 1);
}

TEST_CASE("scaled_power_coeff expands the power over the catalan basis") {
    for (long long i = 0; i <= 4; ++i)
        for (long long h = 1; h <= 3; ++h)
            for (long long k = 0; k <= 15; ++k) {
                const Integer lhs = pow_int(binomial(k + i, 2 * i), h) * catalan(i);
                Integer rhs = 0;
                for (long long t = i; t <= h * i; ++t)
                    rhs += reduction::scaled_power_coeff(i, t, h) *
                           reduction::catalan_basis(k, t);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("pair_coeff pinned values, delta row, support") {
    CHECK(reduction::pair_coeff(1, 1, 1) == 2);
    CHECK(reduction::pair_coeff(1, 1, 2) == 4);
    CHECK(reduction::pair_coeff(1, 2, 2) == 6);
    CHECK(reduction::pair_coeff(1, 2, 3) == 9);
    CHECK(reduction::pair_coeff(1, 1, 0) == 0);
    CHECK(reduction::pair_coeff(1, 1, 3) == 0);
    for (long long i = 0; i <= 4; ++i)
        for (long long l = 0; l <= 4; ++l)
            CHECK(reduction::pair_coeff(i, 0, l) == (i == l ? 1 : 0));
}

TEST_CASE("pair_coeff is symmetric") {
    for (long long i = 0; i <= 6; ++i)
        for (long long j = 0; j <= 6; ++j)
            for (long long l = 0; l <= 12; ++l)
                CHECK(reduction::pair_coeff(i, j, l) == reduction::pair_coeff(j, i, l));
}

TEST_CASE("pair_coeff linearizes basis products") {
    for (long long i = 0; i <= 5; ++i)
        for (long long j = 0; j <= 5; ++j)
            for (long long k = 0; k <= 20; ++k) {
                const Integer lhs =
                    reduction::central_basis(k, i) * reduction::central_basis(k, j);
                Integer rhs = 0;
                for (long long l = 0; l <= i + j; ++l)
                    rhs += reduction::pair_coeff(i, j, l) * reduction::central_basis(k, l);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("scaled_pair_coeff pinned values and delta row") {
    CHECK(reduction::scaled_pair_coeff(1, 1, 1) == 1);
    CHECK(reduction::scaled_pair_coeff(1, 1, 2) == 3);
    CHECK(reduction::scaled_pair_coeff(2, 2, 2) == 2);
    CHECK(reduction::scaled_pair_coeff(2, 2, 3) == 16);
    CHECK(reduction::scaled_pair_coeff(2, 2, 4) == 20);
    for (long long i = 0; i <= 4; ++i)
        for (long long l = 0; l <= 4; ++l)
            CHECK(reduction::scaled_pair_coeff(i, 0, l) == (i == l ? 1 : 0));
}

TEST_CASE("scaled_pair_coeff is symmetric") {
    for (long long i = 0; i <= 6; ++i)
        for (long long j = 0; j <= 6; ++j)
            for (long long l = 0; l <= 12; ++l)
                CHECK(reduction::scaled_pair_coeff(i, j, l) ==
                      reduction::scaled_pair_coeff(j, i, l));
}

TEST_CASE("scaled_pair_coeff linearizes catalan-basis products") {
    for (long long i = 0; i <= 5; ++i)
        for (long long j = 0; j <= 5; ++j)
            for (long long k = 0; k <= 20; ++k) {
                const Integer lhs =
                    reduction::catalan_basis(k, i) * reduction::catalan_basis(k, j);
                Integer rhs = 0;
                for (long long l = 0; l <= i + j; ++l)
                    rhs += reduction::scaled_pair_coeff(i, j, l) *
                           reduction::catalan_basis(k, l);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("scaled_pair_coeff matches the single-fraction form for j >= 1") {
    for (long long i = 0; i <= 6; ++i)
        for (long long j = 1; j <= 6; ++j)
            for (long long l = 0; l <= 12; ++l) {
                const Rational expect(
                    binomial(i + j, i + 1) * binomial(j, i + j - l) * binomial(l + 1, l - j),
                    Integer(j));
                CHECK(Rational(reduction::scaled_pair_coeff(i, j, l)) == expect);
            }
}

TEST_CASE("product_row pinned rows") {
    CHECK(reduction::product_row({0}) == ints({1}));
    CHECK(reduction::product_row({2}) == ints({0, 0, 1}));
    CHECK(reduction::product_row({1, 1}) == ints({0, 2, 4}));
    CHECK(reduction::product_row({1, 2}) == ints({0, 0, 6, 9}));
    CHECK(reduction::product_coeff({1, 1, 0}, 2) == 4);  // index 0 is the identity
    CHECK(reduction::product_coeff({1, 2}, 7) == 0);
    CHECK(reduction::scaled_product_row({1, 1}) == ints({0, 1, 3}));
}

TEST_CASE("product rows are invariant under index permutation") {
    const std::vector<std::vector<long long>> perms = {
        {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    const auto base = reduction::detail::fold_product_row(perms[0]);
    const auto scaled_base = reduction::detail::fold_scaled_product_row(perms[0]);
    for (const auto& p : perms) {
        CHECK(reduction::detail::fold_product_row(p) == base);
        CHECK(reduction::detail::fold_scaled_product_row(p) == scaled_base);
    }
    CHECK(reduction::product_row({3, 1, 2}) == base);
    CHECK(reduction::scaled_product_row({3, 1, 2}) == scaled_base);
}

TEST_CASE("product rows linearize m-fold basis products") {
    const std::vector<std::vector<long long>> tuples = {
        {1, 1, 1}, {2, 2}, {2, 3}, {1, 2, 3}, {1, 1, 2, 2}};
    for (const auto& is : tuples)
        for (long long k = 0; k <= 15; ++k) {
            Integer lhs = 1, lhs_scaled = 1;
            for (long long i : is) {
                lhs *= reduction::central_basis(k, i);
                lhs_scaled *= reduction::catalan_basis(k, i);
            }
            const auto& row = reduction::product_row(is);
            const auto& srow = reduction::scaled_product_row(is);
            Integer rhs = 0, rhs_scaled = 0;
            for (std::size_t l = 0; l < row.size(); ++l)
                rhs += row[l] * reduction::central_basis(k, static_cast<long long>(l));
            for (std::size_t l = 0; l < srow.size(); ++l)
                rhs_scaled +=
                    srow[l] * reduction::catalan_basis(k, static_cast<long long>(l));
            CHECK(lhs == rhs);
            CHECK(lhs_scaled == rhs_scaled);
        }
}

TEST_CASE("power_product_row degenerates at h = 1 and stacks power rows") {
    CHECK(reduction::power_product_row({1, 2}, 1) == reduction::product_row({1, 2}));
    CHECK(reduction::power_product_row({1}, 2) == ints({0, 1, 2}));
    CHECK(reduction::scaled_power_product_row({1}, 2) == ints({0, 1, 3}));
    CHECK(reduction::scaled_power_product_row({2, 3}, 1) ==
          reduction::scaled_product_row({2, 3}));
}

TEST_CASE("power_product_row linearizes products of basis powers") {
    const std::vector<std::vector<long long>> tuples = {{1, 1}, {1, 2}, {2, 2}, {1, 2, 3}};
    for (const auto& is : tuples)
        for (long long h = 1; h <= 3; ++h)
            for (long long k = 0; k <= 12; ++k) {
                Integer lhs = 1, lhs_scaled = 1;
                for (long long i : is) {
                    lhs *= pow_int(binomial(k + i, 2 * i), h) * binomial(2 * i, i);
                    lhs_scaled *= pow_int(binomial(k + i, 2 * i), h) * catalan(i);
                }
                const auto& row = reduction::power_product_row(is, h);
                const auto& srow = reduction::scaled_power_product_row(is, h);
                Integer rhs = 0, rhs_scaled = 0;
                for (std::size_t l = 0; l < row.size(); ++l)
                    rhs += row[l] * reduction::central_basis(k, static_cast<long long>(l));
                for (std::size_t l = 0; l < srow.size(); ++l)
                    rhs_scaled +=
                        srow[l] * reduction::catalan_basis(k, static_cast<long long>(l));
                CHECK(lhs == rhs);
                CHECK(lhs_scaled == rhs_scaled);
            }
}

TEST_CASE("tuple argument checks") {
    CHECK_THROWS_AS(reduction::product_row({}), std::domain_error);
    CHECK_THROWS_AS(reduction::product_row({1, -2}), std::domain_error);
    CHECK_THROWS_AS(reduction::scaled_product_row({}), std::domain_error);
    CHECK_THROWS_AS(reduction::power_product_row({1, 2}, 0), std::domain_error);
    CHECK_THROWS_AS(reduction::scaled_power_product_row({-1}, 2), std::domain_error);
}
