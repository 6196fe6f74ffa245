#include "kloos/integer_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace kloos {

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntegerPolynomial IntegerPolynomial::constant(const BigInt& c) { return IntegerPolynomial({c}); }

IntegerPolynomial IntegerPolynomial::monomial(const BigInt& c, std::size_t degree) {
    std::vector<BigInt> coeffs(degree + 1, BigInt(0));
    coeffs[degree] = c;
    return IntegerPolynomial(std::move(coeffs));
}

void IntegerPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntegerPolynomial& IntegerPolynomial::operator+=(const IntegerPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

IntegerPolynomial& IntegerPolynomial::operator-=(const IntegerPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntegerPolynomial(std::move(out));
}

BigInt IntegerPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::pair<IntegerPolynomial, IntegerPolynomial> IntegerPolynomial::divmod_monic(const IntegerPolynomial& g) const {
    if (!g.is_monic()) throw std::invalid_argument("divisor must be monic");
    std::vector<BigInt> rem = coeffs_;
    const std::size_t dg = g.coeffs_.size() - 1;
    if (rem.size() <= dg) return {IntegerPolynomial{}, *this};
    std::vector<BigInt> quot(rem.size() - dg, BigInt(0));
    for (std::size_t k = rem.size(); k-- > dg;) {
        const BigInt c = rem[k];
        if (c == 0) continue;
        quot[k - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] -= c * g.coeffs_[j];
    }
    return {IntegerPolynomial(std::move(quot)), IntegerPolynomial(std::move(rem))};
}

fp::Poly IntegerPolynomial::reduce_mod(std::uint64_t p) const {
    fp::Poly out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = mod_u(coeffs_[i], p);
    fp::trim(out);
    return out;
}

std::string IntegerPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) out << mag.get_str();
        if (i >= 1) out << "x";
        if (i >= 2) out << "^" << i;
    }
    return out.str();
}

}  // namespace kloos
