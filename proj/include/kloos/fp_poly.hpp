#pragma once

// Dense univariate polynomials over F_p, p < 2^32.
// Coefficients are stored low-to-high; the zero polynomial is the empty vector.

#include <cstdint>
#include <vector>

namespace kloos::fp {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& f);
int degree(const Poly& f);  // -1 for the zero polynomial
bool is_zero(const Poly& f);

Poly add(const Poly& f, const Poly& g, std::uint64_t p);
Poly sub(const Poly& f, const Poly& g, std::uint64_t p);
Poly mul(const Poly& f, const Poly& g, std::uint64_t p);
Poly scale(const Poly& f, std::uint64_t c, std::uint64_t p);

/// Quotient and remainder; g must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, std::uint64_t p);
Poly mod(const Poly& f, const Poly& g, std::uint64_t p);

Poly make_monic(const Poly& f, std::uint64_t p);
Poly gcd(Poly f, Poly g, std::uint64_t p);  // monic result
Poly derivative(const Poly& f, std::uint64_t p);

Poly mulmod(const Poly& f, const Poly& g, const Poly& modulus, std::uint64_t p);
Poly powmod(Poly base, std::uint64_t exp, const Poly& modulus, std::uint64_t p);

/// x^(p^k) mod `modulus` by k successive p-th powerings.
Poly frobenius_power_of_x(unsigned k, const Poly& modulus, std::uint64_t p);

/// (x + c)^n over F_p.
Poly binomial_power(std::uint64_t c, unsigned n, std::uint64_t p);

/// Rabin irreducibility test for a monic polynomial of degree >= 1.
bool is_irreducible(const Poly& f, std::uint64_t p);

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

}  // namespace kloos::fp
