#include "dlab/theorems.hpp"

namespace dlab::theorems {

using exactmath::divexact;
using exactmath::gcd_many;
using exactmath::pow_int;
using polyring::IntPoly;

namespace {

void validate(const SumSpec& spec) {
    if (spec.n < 1 || spec.h < 1 || spec.m < 1 || spec.a < 1)
        throw std::domain_error("SumSpec: n, h, m, a must all be >= 1");
    if (spec.eps != 1 && spec.eps != -1) throw std::domain_error("SumSpec: eps must be +1 or -1");
}

IntPoly weighted_sum_over(const SumSpec& spec, long long k_lo, long long k_hi) {
    IntPoly acc;
    for (long long k = k_lo; k <= k_hi; ++k) {
        Integer w = pow_int(Integer(k), spec.a) * pow_int(Integer(k + 1), spec.a) * (2 * k + 1);
        if (spec.eps < 0 && (k & 1)) w = -w;
        acc = acc + sequences::family_poly_power(spec.family, k, spec.h, spec.m).scaled(w);
    }
    return acc;
}

Integer cube_modulus(long long n) { return Integer(n) * (n + 1) * (n + 2); }

DivisibilityReport report_for(const SumSpec& spec, std::string check_id, Integer modulus,
                              const IntPoly& sum, bool check_split) {
    DivisibilityReport rep;
    rep.spec = spec;
    rep.check_id = std::move(check_id);
    rep.modulus = std::move(modulus);
    rep.quotient_degree = sum.degree();
    auto w = polyring::divisibility_witness(sum, rep.modulus);
    rep.pass = !w.has_value();
    rep.witness = std::move(w);
    // Each of n, n+1, n+2 divides every stated modulus, so a passing combined
    // check forces the split to pass as well; anything else is a defect here.
    if (rep.pass && check_split &&
        !(polyring::divisible_by(sum, Integer(spec.n)) &&
          polyring::divisible_by(sum, Integer(spec.n + 1)) &&
          polyring::divisible_by(sum, Integer(spec.n + 2))))
        throw invariant_error("split divisibility failed while the combined modulus passed");
    return rep;
}

}  // namespace

IntPoly weighted_power_sum(const SumSpec& spec) {
    validate(spec);
    return weighted_sum_over(spec, 1, spec.n);
}

IntPoly weighted_power_prefix(const SumSpec& spec) {
    validate(spec);
    return weighted_sum_over(spec, 1, spec.n - 1);  // the k = 0 term is zero
}

DivisibilityReport check_delannoy_weighted(const SumSpec& spec) {
    validate(spec);
    if (spec.family != Family::Delannoy)
        throw std::domain_error("check_delannoy_weighted: family must be D");
    const Integer modulus = divexact(cube_modulus(spec.n), gcd_many({2, Integer(spec.n)}));
    return report_for(spec, "delannoy-weighted", modulus, weighted_power_sum(spec), true);
}

DivisibilityReport check_delannoy_alternating(const SumSpec& spec) {
    validate(spec);
    if (spec.family != Family::Delannoy)
        throw std::domain_error("check_delannoy_alternating: family must be D");
    if (spec.eps != -1) throw std::domain_error("check_delannoy_alternating: eps must be -1");
    Integer modulus = cube_modulus(spec.n);
    if (spec.h == 1)
        modulus = divexact(modulus, gcd_many({2, Integer(spec.m - 1), Integer(spec.n)}));
    return report_for(spec, "delannoy-alternating", modulus, weighted_power_sum(spec), true);
}

DivisibilityReport check_schroder_weighted(const SumSpec& spec) {
    validate(spec);
    if (spec.family != Family::Schroder)
        throw std::domain_error("check_schroder_weighted: family must be S");
    const Integer g = spec.eps > 0 ? gcd_many({2, Integer(spec.n)})
                                   : gcd_many({2, Integer(spec.m - 1), Integer(spec.n)});
    const Integer modulus = divexact(cube_modulus(spec.n), g);
    return report_for(spec, "schroder-weighted", modulus, weighted_power_sum(spec), true);
}

DivisibilityReport check_order_one_weight(Family family, long long n, long long h, long long m,
                                          int eps) {
    SumSpec spec{family, n, h, m, 1, eps};
    DivisibilityReport rep;
    if (family == Family::Delannoy)
        rep = eps > 0 ? check_delannoy_weighted(spec) : check_delannoy_alternating(spec);
    else
        rep = check_schroder_weighted(spec);
    rep.check_id = "order-one";
    return rep;
}

DivisibilityReport check_prefix_congruence(const SumSpec& spec) {
    validate(spec);
    return report_for(spec, "prefix", Integer(spec.n), weighted_power_prefix(spec), false);
}

SplitDivisibility split_divisibility(const SumSpec& spec) {
    validate(spec);
    const IntPoly sum = weighted_power_sum(spec);
    return SplitDivisibility{polyring::divisible_by(sum, Integer(spec.n)),
                             polyring::divisible_by(sum, Integer(spec.n + 1)),
                             polyring::divisible_by(sum, Integer(spec.n + 2))};
}

std::vector<DivisibilityReport> probe_full_modulus(const std::string& check_id,
                                                   const std::vector<SumSpec>& specs) {
    const Family expect = check_id == "schroder-weighted" ? Family::Schroder : Family::Delannoy;
    if (check_id != "delannoy-weighted" && check_id != "delannoy-alternating" &&
        check_id != "schroder-weighted")
        throw std::domain_error("probe_full_modulus: unknown check id " + check_id);
    std::vector<DivisibilityReport> failures;
    for (const SumSpec& spec : specs) {
        validate(spec);
        if (spec.family != expect) throw std::domain_error("probe_full_modulus: family mismatch");
        if (check_id == "delannoy-alternating" && spec.eps != -1)
            throw std::domain_error("probe_full_modulus: eps must be -1 for the alternating sum");
        DivisibilityReport rep;
        rep.spec = spec;
        rep.check_id = check_id + "-full-modulus";
        rep.modulus = cube_modulus(spec.n);
        const IntPoly sum = weighted_power_sum(spec);
        rep.quotient_degree = sum.degree();
        auto w = polyring::divisibility_witness(sum, rep.modulus);
        rep.pass = !w.has_value();
        rep.witness = std::move(w);
        if (!rep.pass) failures.push_back(std::move(rep));
    }
    return failures;
}

}  // namespace dlab::theorems
