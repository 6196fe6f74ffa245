#pragma once

// Dickson polynomials of the first kind, D_n(x, r), determined by
// D_n(y + r/y, r) = y^n + (r/y)^n.

#include <cstdint>

#include <gmpxx.h>

#include "kloos/cyclotomic.hpp"
#include "kloos/integer_polynomial.hpp"
#include "kloos/kloosterman.hpp"

namespace kloos {

using Rational = mpq_class;

/// Closed form sum_{i <= n/2} n/(n-i) * C(n-i, i) * (-r)^i * x^{n-2i}; D_0 = 2.
IntegerPolynomial dickson_poly(unsigned n, const BigInt& r);

/// D_n(x, r) in any commutative ring via D_k = x D_{k-1} - r D_{k-2}, D_0 = 2, D_1 = x.
template <class T>
T dickson_eval(unsigned n, const BigInt& r, const T& x, const T& one) {
    T prev = BigInt(2) * one;
    if (n == 0) return prev;
    T cur = x;
    for (unsigned k = 2; k <= n; ++k) {
        T next = x * cur;
        T correction = r * prev;
        next = next - correction;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt dickson_eval(unsigned n, const BigInt& r, const BigInt& x);
Rational dickson_eval(unsigned n, const BigInt& r, const Rational& x);
CyclotomicInteger dickson_eval(unsigned n, const BigInt& r, const CyclotomicInteger& x);

struct CarlitzResult {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t n = 0;
    FieldElement a;
    KloostermanValue extension_sum;  // K_{q^n}(a), direct summation
    KloostermanValue base_sum;       // K_q(a)
    CyclotomicInteger dickson_side{2};  // (-1)^{n-1} D_n(K_q(a), q)
    bool equal = false;
};

/// Checks K_{q^n}(a) = (-1)^{n-1} D_n(K_q(a), q) exactly, where the table is F_{q^n}.
/// Throws std::invalid_argument unless m divides d, a != 0 and a^q = a.
CarlitzResult carlitz_check(const PowerTable& extension, std::uint32_t m, const FieldElement& a);

}  // namespace kloos
