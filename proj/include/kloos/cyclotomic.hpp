#pragma once

// Exact arithmetic in Z[zeta_p], zeta_p a primitive p-th root of unity.
//
// Elements are stored in the power basis {1, zeta, ..., zeta^{p-2}}, which is a Z-basis,
// so equality is coordinate equality. zeta^{p-1} is rewritten as -(1 + zeta + ... + zeta^{p-2}).
// For p = 2 the ring is Z itself (zeta = -1) and elements carry a single coordinate.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kloos/number_theory.hpp"

namespace kloos {

class CyclotomicInteger {
public:
    /// The zero element of Z[zeta_p]; throws std::invalid_argument for non-prime p.
    explicit CyclotomicInteger(std::uint32_t p);
    CyclotomicInteger(std::uint32_t p, std::vector<BigInt> coords);

    static CyclotomicInteger integer(std::uint32_t p, const BigInt& value);
    /// zeta^k for any k (taken mod p).
    static CyclotomicInteger zeta_power(std::uint32_t p, std::uint64_t k);
    /// Sum of counts[c] * zeta^c over c = 0..p-1; coordinate k is counts[k] - counts[p-1].
    static CyclotomicInteger from_exponent_counts(std::uint32_t p, std::span<const BigInt> counts);
    static CyclotomicInteger from_exponent_counts(std::uint32_t p, std::span<const std::uint64_t> counts);

    std::uint32_t p() const { return p_; }
    const std::vector<BigInt>& coords() const { return coords_; }

    CyclotomicInteger& operator+=(const CyclotomicInteger& other);
    CyclotomicInteger& operator-=(const CyclotomicInteger& other);
    CyclotomicInteger& operator*=(const CyclotomicInteger& other);
    CyclotomicInteger& operator*=(const BigInt& scalar);

    friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
    friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
    friend CyclotomicInteger operator*(CyclotomicInteger a, const CyclotomicInteger& b) { return a *= b; }
    friend CyclotomicInteger operator*(const BigInt& s, CyclotomicInteger a) { return a *= s; }
    CyclotomicInteger operator-() const;

    friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
        return a.p_ == b.p_ && a.coords_ == b.coords_;
    }
    /// Lexicographic order on (p, coords); canonical tie-break for sorting conjugates.
    friend bool operator<(const CyclotomicInteger& a, const CyclotomicInteger& b);

    bool is_zero() const;

    /// sigma_j: zeta -> zeta^j. Throws std::invalid_argument when p divides j.
    CyclotomicInteger galois_apply(std::uint64_t j) const;

    /// The integer value if the element lies in Z, otherwise nullopt.
    std::optional<BigInt> as_rational_integer() const;

    /// Image under zeta -> 1 in Z[zeta]/(1 - zeta) = F_p.
    std::uint64_t lambda_residue() const;

    /// Values under zeta -> exp(2 pi i j / p), j = 1..p-1.
    std::vector<std::complex<double>> complex_embeddings() const;

private:
    void require_same_ring(const CyclotomicInteger& other) const;
    static CyclotomicInteger reduce(std::uint32_t p, std::vector<BigInt> full);

    std::uint32_t p_;
    std::vector<BigInt> coords_;
};

}  // namespace kloos
