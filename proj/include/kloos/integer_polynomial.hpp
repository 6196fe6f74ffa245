#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kloos/fp_poly.hpp"
#include "kloos/number_theory.hpp"

namespace kloos {

/// Dense polynomial over Z, coefficients low-to-high, no trailing zeros.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<BigInt> coeffs);

    static IntegerPolynomial constant(const BigInt& c);
    static IntegerPolynomial monomial(const BigInt& c, std::size_t degree);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

    IntegerPolynomial& operator+=(const IntegerPolynomial& other);
    IntegerPolynomial& operator-=(const IntegerPolynomial& other);
    friend IntegerPolynomial operator+(IntegerPolynomial a, const IntegerPolynomial& b) { return a += b; }
    friend IntegerPolynomial operator-(IntegerPolynomial a, const IntegerPolynomial& b) { return a -= b; }
    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

    /// Horner evaluation in any ring T supporting T * T, T + T and BigInt * T.
    template <class T>
    T evaluate(const T& x, const T& one) const {
        T acc = BigInt(0) * one;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            T term = coeffs_[i] * one;
            acc = acc * x;
            acc = acc + term;
        }
        return acc;
    }
    BigInt evaluate(const BigInt& x) const;

    /// Division by a monic divisor: f = q * g + r with deg r < deg g.
    /// Throws std::invalid_argument if g is not monic.
    std::pair<IntegerPolynomial, IntegerPolynomial> divmod_monic(const IntegerPolynomial& g) const;

    fp::Poly reduce_mod(std::uint64_t p) const;

    std::string to_string() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

}  // namespace kloos
