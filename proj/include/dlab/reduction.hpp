#pragma once

#include <vector>

#include "dlab/exactmath.hpp"

// Expansion tables over the two binomial bases
//
//   central_basis(k, t) = binomial(k+t, 2t) * binomial(2t, t)
//   catalan_basis(k, t) = binomial(k+t, 2t) * catalan(t)
//
// used to rewrite weighted products of powers of these bases back into the
// bases themselves. All coefficients are integers; every solver asserts the
// integrality it relies on and throws invariant_error when violated.
namespace dlab::reduction {

Integer central_basis(long long k, long long t);
Integer catalan_basis(long long k, long long t);

// newton_coeffs(l, a)[u] is the coefficient c_u in
//   (k(k+1))^a = sum_{u=0}^{a} c_u * prod_{v=1}^{u} (k(k+1) - (l+v-1)(l+v)),
// computed as exact divided differences of y^a at the nodes (l+v-1)(l+v).
// Always integral; the leading coefficient is 1.
const std::vector<Integer>& newton_coeffs(long long l, long long a);

// weight_coeff(u, l, a) = newton_coeffs(l,a)[u] * binomial(2l+2u, l+u)
//                         * rising_factorial(l+1, u)^2, giving
//   k^a (k+1)^a central_basis(k, l)
//     = sum_{u=0}^{a} weight_coeff(u, l, a) * binomial(k+l+u, 2l+2u).
Integer weight_coeff(long long u, long long l, long long a);

// power_row(i, h)[t - i] is the coefficient of central_basis(k, t) in
//   binomial(k+i, 2i)^h * binomial(2i, i),  t in [i, h*i],
// solved triangularly by evaluating at k = i..h*i (the basis vanishes at
// k < t). The leading entry is 1 and binomial(t, i) divides every entry.
const std::vector<Integer>& power_row(long long i, long long h);
Integer power_coeff(long long i, long long t, long long h);  // 0 outside [i, h*i]

// power_coeff scaled onto the catalan basis: b * (t+1) / (i+1), an integer.
Integer scaled_power_coeff(long long i, long long t, long long h);

// pair_coeff(i, j, l): coefficient of central_basis(k, l) in
// central_basis(k, i) * central_basis(k, j); supported on max(i,j) <= l <= i+j
// and symmetric in i, j.
Integer pair_coeff(long long i, long long j, long long l);

// scaled_pair_coeff(i, j, l): same role for the catalan basis. Computed by the
// subtraction decomposition that is manifestly integral and valid at j = 0.
Integer scaled_pair_coeff(long long i, long long j, long long l);

// product_row(indices)[l]: coefficient of central_basis(k, l) in
// prod_j central_basis(k, indices[j]); l runs to sum(indices). Invariant
// under permutation of indices; memoized under the sorted tuple.
const std::vector<Integer>& product_row(std::vector<long long> indices);
Integer product_coeff(std::vector<long long> indices, long long l);

const std::vector<Integer>& scaled_product_row(std::vector<long long> indices);
Integer scaled_product_coeff(std::vector<long long> indices, long long l);

// power_product_row(indices, h)[l]: coefficient of central_basis(k, l) in
// prod_j [binomial(k+i_j, 2 i_j)^h * binomial(2 i_j, i_j)]; l runs to
// h * sum(indices). Contracts power_row through product_row.
const std::vector<Integer>& power_product_row(std::vector<long long> indices, long long h);
Integer power_product_coeff(std::vector<long long> indices, long long l, long long h);

// Catalan-basis analogue, contracting scaled_power_coeff through
// scaled_product_row. At h = 1 both power-product rows equal the plain ones.
const std::vector<Integer>& scaled_power_product_row(std::vector<long long> indices, long long h);
Integer scaled_power_product_coeff(std::vector<long long> indices, long long l, long long h);

namespace detail {

// Order-respecting folds without memoization or key sorting; exercised by the
// permutation-invariance tests.
std::vector<Integer> fold_product_row(const std::vector<long long>& indices);
std::vector<Integer> fold_scaled_product_row(const std::vector<long long>& indices);

}  // namespace detail
}  // namespace dlab::reduction
