#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dlab/exactmath.hpp"

namespace dlab::polyring {

struct DivisionWitness {
    std::size_t index;  // lowest offending coefficient index
    Integer value;
};

// divexact_by on a polynomial with a coefficient the divisor does not divide.
struct division_error : std::domain_error {
    division_error(std::string msg, DivisionWitness w)
        : std::domain_error(std::move(msg)), witness(std::move(w)) {}
    DivisionWitness witness;
};

// Dense univariate polynomial over Integer. Coefficient storage never keeps
// trailing zeros, so the zero polynomial is the empty vector and degree() is
// -1 for it.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);

    static IntPoly constant(Integer c);
    static IntPoly monomial(Integer c, std::size_t i);

    bool is_zero() const { return coeffs_.empty(); }
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    const Integer& coeff(std::size_t i) const;

    bool operator==(const IntPoly&) const = default;

    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& rhs) const;

    IntPoly scaled(const Integer& c) const;
    IntPoly pow(long long m) const;  // m < 0 is a domain error

    Integer eval(const Integer& x) const;

    // "c0 + c1*x + c2*x^2"; zero terms are skipped, negative coefficients
    // join with " - ", the zero polynomial renders as "0".
    std::string str() const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

// Lowest-index coefficient not divisible by d, if any. d = 0 is a domain error.
std::optional<DivisionWitness> divisibility_witness(const IntPoly& p, const Integer& d);

bool divisible_by(const IntPoly& p, const Integer& d);

// Coefficient-wise exact quotient; throws division_error with the lowest
// offending index when d does not divide p.
IntPoly divexact_by(const IntPoly& p, const Integer& d);

}  // namespace dlab::polyring
