#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace kloos {

using BigInt = mpz_class;

/// Deterministic primality for 64-bit inputs (Miller-Rabin with a fixed base set).
bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, as (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// Sieve of Eratosthenes, all primes <= limit.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// First `count` primes.
std::vector<std::uint32_t> first_primes(std::size_t count);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Integer power with overflow check; throws std::overflow_error.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

/// Reduces an arbitrary-precision integer into [0, p).
std::uint64_t mod_u(const BigInt& value, std::uint64_t p);

BigInt binomial(unsigned n, unsigned k);

}  // namespace kloos
