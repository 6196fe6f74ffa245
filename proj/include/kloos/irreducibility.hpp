#pragma once

// Irreducibility of Dickson translates D_n(x, r) + 1 over Q.
//
// turnwald_decide applies the prime-divisor criterion for odd n: the polynomial is
// reducible iff some prime l | n admits a rational c with D_l(c, r^{n/l}) = -1, and
// since D_l(x, s) + 1 is monic with constant term 1 the only candidates are c = +-1.
// certify_by_patterns is an independent, one-sided check from factor-degree patterns mod p.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kloos/fp_poly.hpp"
#include "kloos/integer_polynomial.hpp"

namespace kloos {

enum class Verdict { irreducible, reducible, undecided };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// Factor-degree multiset: degree -> number of irreducible factors of that degree.
using DegreePattern = std::map<unsigned, unsigned>;

struct TurnwaldStep {
    unsigned ell = 0;
    BigInt s;                      // r^{n/ell}
    BigInt constant_coefficient;   // of D_ell(x, s) + 1
    BigInt value_at_plus_one;      // D_ell(1, s)
    BigInt value_at_minus_one;     // D_ell(-1, s)
};

struct PatternStep {
    std::uint32_t prime = 0;
    bool skipped = false;  // not squarefree mod prime
    DegreePattern pattern;
};

struct FactorWitness {
    unsigned ell = 0;
    int c = 0;
    IntegerPolynomial factor;  // D_{n/ell}(x, r) - c
};

struct IrreducibilityCertificate {
    IntegerPolynomial polynomial;
    Verdict verdict = Verdict::undecided;
    std::vector<TurnwaldStep> turnwald;
    std::vector<PatternStep> patterns;
    std::optional<FactorWitness> witness;
};

/// Throws std::invalid_argument for even n, n == 0 or r in {0, 1, -1}.
IrreducibilityCertificate turnwald_decide(unsigned n, const BigInt& r);

/// Distinct-degree factorization of f mod p; nullopt when f is not squarefree mod p.
std::optional<DegreePattern> ddf_degree_pattern(const fp::Poly& f, std::uint64_t p);

/// Irreducible or undecided, never reducible. Throws std::invalid_argument for an empty
/// prime list or a non-monic / constant f.
IrreducibilityCertificate certify_by_patterns(const IntegerPolynomial& f, const std::vector<std::uint32_t>& primes);

/// Sums of sub-multisets of factor degrees, as a sorted list.
std::vector<unsigned> achievable_degrees(const DegreePattern& pattern);

}  // namespace kloos
