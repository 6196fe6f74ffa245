#pragma once

// Finite fields F_{p^d} realised as F_p[x]/(f) for a monic irreducible f of degree d.
// A FieldSpec also carries a designated primitive element, so every nonzero element
// has a well-defined discrete logarithm ("power index").

#include <cstdint>
#include <vector>

namespace kloos {

struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t d = 1;
    std::vector<std::uint32_t> modulus;    // d + 1 entries, low-to-high, monic
    std::vector<std::uint32_t> generator;  // d entries

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct FieldElement {
    std::vector<std::uint32_t> coeffs;  // d entries, low-to-high, each in [0, p)

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Random monic irreducible polynomial of degree d over F_p, deterministic in `seed`.
/// Throws std::invalid_argument if p is not prime or d == 0.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t d, std::uint64_t seed);

/// Builds a validated field descriptor. Prefers a modulus for which x itself is primitive.
/// Throws std::invalid_argument for non-prime p, d == 0 or p^d > 2^32.
FieldSpec make_field(std::uint32_t p, std::uint32_t d, std::uint64_t seed = 0);

/// Checks every FieldSpec invariant; throws std::invalid_argument naming the first failure.
void validate(const FieldSpec& spec);

class Field {
public:
    /// Assumes `spec` is valid (see validate()).
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t p() const { return spec_.p; }
    std::uint32_t d() const { return spec_.d; }
    std::uint64_t order() const { return order_; }
    std::uint64_t multiplicative_order() const { return order_ - 1; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement generator() const { return FieldElement{spec_.generator}; }
    FieldElement from_residue(std::uint64_t c) const;
    /// Throws std::invalid_argument when the length or an entry is out of range.
    FieldElement from_coeffs(std::vector<std::uint32_t> coeffs) const;

    /// Little-endian base-p encoding of the coefficient vector.
    std::uint64_t to_index(const FieldElement& e) const;
    FieldElement from_index(std::uint64_t index) const;

    bool is_valid(const FieldElement& e) const;
    bool is_zero(const FieldElement& e) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement scale(const FieldElement& a, std::uint64_t c) const;
    /// Throws std::domain_error on zero.
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, std::uint64_t exp) const;
    FieldElement frobenius(const FieldElement& a) const { return pow(a, spec_.p); }

    /// Multiplies by the class of x in O(d); used for walking powers of a generator equal to x.
    FieldElement mul_by_x(const FieldElement& a) const;

    /// Absolute trace x + x^p + ... + x^{p^{d-1}}, returned as a residue in [0, p).
    std::uint32_t trace_to_prime(const FieldElement& a) const;

    /// Multiplicative order of a nonzero element.
    std::uint64_t element_order(const FieldElement& a) const;

    /// Generator of the subfield F_{p^m}: gamma^((p^d - 1) / (p^m - 1)).
    /// Throws std::invalid_argument unless m divides d.
    FieldElement subfield_generator(std::uint32_t m) const;

    bool generator_is_x() const { return generator_is_x_; }

private:
    void check(const FieldElement& e) const;

    FieldSpec spec_;
    std::uint64_t order_;
    bool generator_is_x_;
};

}  // namespace kloos
