#include "dlab/polyring.hpp"

#include <sstream>
#include <utility>

namespace dlab::polyring {

namespace {
const Integer kZero = 0;
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(Integer c) {
    IntPoly p;
    p.coeffs_.push_back(std::move(c));
    p.trim();
    return p;
}

IntPoly IntPoly::monomial(Integer c, std::size_t i) {
    IntPoly p;
    p.coeffs_.assign(i + 1, kZero);
    p.coeffs_[i] = std::move(c);
    p.trim();
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    IntPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), kZero);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeff(i) + rhs.coeff(i);
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const { return *this + (-rhs); }

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (Integer& c : r.coeffs_) c = -c;
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    IntPoly r;
    r.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, kZero);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    r.trim();  // cannot trigger over an integral domain; keeps the invariant local
    return r;
}

IntPoly IntPoly::scaled(const Integer& c) const {
    IntPoly r = *this;
    for (Integer& v : r.coeffs_) v *= c;
    r.trim();
    return r;
}

IntPoly IntPoly::pow(long long m) const {
    if (m < 0) throw std::domain_error("IntPoly::pow: negative exponent");
    IntPoly r = constant(1);
    IntPoly base = *this;
    while (m > 0) {
        if (m & 1) r = r * base;
        m >>= 1;
        if (m > 0) base = base * base;
    }
    return r;
}

Integer IntPoly::eval(const Integer& x) const {
    Integer r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Integer& c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << Integer(boost::multiprecision::abs(c)).str();
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
    }
    return os.str();
}

std::optional<DivisionWitness> divisibility_witness(const IntPoly& p, const Integer& d) {
    if (d == 0) throw std::domain_error("divisibility_witness: zero divisor");
    const auto& cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i] % d != 0) return DivisionWitness{i, cs[i]};
    return std::nullopt;
}

bool divisible_by(const IntPoly& p, const Integer& d) {
    return !divisibility_witness(p, d).has_value();
}

IntPoly divexact_by(const IntPoly& p, const Integer& d) {
    if (auto w = divisibility_witness(p, d)) {
        throw division_error("divexact_by: coefficient " + w->value.str() + " at index " +
                                 std::to_string(w->index) + " not divisible by " + d.str(),
                             *w);
    }
    std::vector<Integer> q = p.coeffs();
    for (Integer& c : q) c /= d;
    return IntPoly(std::move(q));
}

}  // namespace dlab::polyring
