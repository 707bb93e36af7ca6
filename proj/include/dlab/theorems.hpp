#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dlab/polyring.hpp"
#include "dlab/sequences.hpp"

// Divisibility checkers for the weighted power sums
//
//   sum(spec) = sum_{k=1}^{n} eps^k k^a (k+1)^a (2k+1) P_k(x)^m,
//
// P_k the Delannoy or Schroeder family polynomial of order h. Each checker
// recomputes the sum from the family polynomials alone (never through the
// reduction tables, which are verified separately) and tests coefficient-wise
// divisibility by the claimed modulus, a divisor of n(n+1)(n+2).
namespace dlab::theorems {

using sequences::Family;

struct SumSpec {
    Family family;
    long long n = 1;
    long long h = 1;
    long long m = 1;
    long long a = 1;
    int eps = 1;
};

struct DivisibilityReport {
    SumSpec spec;
    std::string check_id;
    Integer modulus;
    bool pass = true;
    std::optional<polyring::DivisionWitness> witness;  // lowest offending coefficient
    long long quotient_degree = -1;                    // degree of the sum (= quotient)
};

// The weighted sum above, k = 1..n.
polyring::IntPoly weighted_power_sum(const SumSpec& spec);

// Same weight and summand over k = 0..n-1 (the k = 0 term vanishes).
polyring::IntPoly weighted_power_prefix(const SumSpec& spec);

// Delannoy family, either sign: modulus n(n+1)(n+2) / gcd(2, n).
DivisibilityReport check_delannoy_weighted(const SumSpec& spec);

// Delannoy family, eps = -1 only: modulus n(n+1)(n+2) for h > 1 and
// n(n+1)(n+2) / gcd(2, m-1, n) for h = 1.
DivisibilityReport check_delannoy_alternating(const SumSpec& spec);

// Schroeder family: modulus n(n+1)(n+2) / gcd(2, n) for eps = +1 and
// n(n+1)(n+2) / gcd(2, m-1, n) for eps = -1.
DivisibilityReport check_schroder_weighted(const SumSpec& spec);

// The a = 1 specialization, dispatched to the matching checker above.
DivisibilityReport check_order_one_weight(Family family, long long n, long long h, long long m,
                                          int eps);

// weighted_power_prefix(spec) is divisible by n coefficient-wise.
DivisibilityReport check_prefix_congruence(const SumSpec& spec);

// Divisibility of weighted_power_sum by n, n+1 and n+2 individually; implied
// by any of the moduli above, checked as separate claims.
struct SplitDivisibility {
    bool by_n = false, by_n1 = false, by_n2 = false;
    bool all() const { return by_n && by_n1 && by_n2; }
};
SplitDivisibility split_divisibility(const SumSpec& spec);

// Re-runs specs against the undivided modulus n(n+1)(n+2) and returns only
// the failing reports: nonempty output shows the gcd factor in the stated
// modulus is not an artifact.
std::vector<DivisibilityReport> probe_full_modulus(const std::string& check_id,
                                                   const std::vector<SumSpec>& specs);

}  // namespace dlab::theorems
