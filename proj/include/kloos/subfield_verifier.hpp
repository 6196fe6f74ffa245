#pragma once

// Minimal polynomials of Kloosterman sums over F_q and the executable replay of the
// argument that K_{q^l}(a) = -1 is impossible for a in F_q^*, p > 3.

#include <cstdint>
#include <string>
#include <vector>

#include "kloos/cyclotomic.hpp"
#include "kloos/integer_polynomial.hpp"
#include "kloos/kloosterman.hpp"

namespace kloos {

struct MinimalPolynomialRecord {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint64_t a_index = 0;  // a = delta^a_index
    std::vector<CyclotomicInteger> orbit;  // distinct conjugates K_q(j^2 a), canonical order
    IntegerPolynomial g;
    unsigned t = 0;
    /// Groups of distinct squares j^2 (mod p) whose arguments j^2 a give the same sum.
    std::vector<std::vector<std::uint64_t>> coincidences;

    friend bool operator==(const MinimalPolynomialRecord&, const MinimalPolynomialRecord&) = default;
};

/// max(1, (p - 1) / 2): the degree of the real subfield of Q(zeta_p).
unsigned minimal_polynomial_degree_bound(std::uint32_t p);

/// Minimal polynomial of K_q(a), a = delta^a_index, from the orbit {K_q(j^2 a)}.
/// Conjugates come from direct summation and are cross-checked against the Galois action;
/// any disagreement or non-integral coefficient throws std::logic_error.
MinimalPolynomialRecord minimal_polynomial(const PowerTable& table, const SubfieldTraces& sub,
                                           std::uint64_t a_index);
/// Convenience form over a freshly constructed F_{p^m}.
MinimalPolynomialRecord minimal_polynomial(std::uint32_t p, std::uint32_t m, std::uint64_t a_index,
                                           std::uint64_t seed = 0);

/// True iff g reduces to (x + 1)^t mod p, i.e. g_k = (-1)^k C(t, k) mod p for
/// g = x^t - g_1 x^{t-1} + ... + (-1)^t g_t.
bool binomial_congruence_check(const IntegerPolynomial& g, std::uint32_t p);
bool binomial_congruence_check(const MinimalPolynomialRecord& rec);

struct DivisibilityVerdict {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t ell = 0;
    std::uint64_t a_index = 0;
    CyclotomicInteger extension_value{2};  // K_{q^l}(a)
    bool is_minus_one = false;
    IntegerPolynomial g;
    /// D_l(x, q) - (-1)^l: the polynomial with root K_q(a) whenever K_{q^l}(a) = -1.
    IntegerPolynomial target;
    bool divides = false;
    /// The literal D_l(x, q) + 1 form; coincides with `target` for odd l.
    bool divides_plus_one_form = false;
    /// The forward implication "sum = -1 => g | target" holds on this instance.
    bool consistent = false;
};

/// `extension` must be F_{q^l} with q = p^m; a = delta^a_index in F_q^*.
DivisibilityVerdict divisibility_step(const PowerTable& extension, std::uint32_t m, std::uint64_t a_index);
/// Replaces g before dividing (negative controls).
DivisibilityVerdict divisibility_step_with(const PowerTable& extension, std::uint32_t m, std::uint64_t a_index,
                                           const IntegerPolynomial& g);

struct ReplayStep {
    std::string name;
    std::string detail;
    bool passed = false;
    bool skipped = false;
};

struct ReplayTrace {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t ell = 0;
    std::uint64_t q = 0;
    std::vector<ReplayStep> steps;

    bool passed() const;
};

/// Executes every step of the contradiction for K_{q^l}(a) = -1, p > 3, l prime.
/// Direct evaluation over F_{q^l} is included when q^l <= evaluation_ceiling.
/// Throws std::invalid_argument when p <= 3, p or l is not prime.
ReplayTrace contradiction_replay(std::uint32_t p, std::uint32_t m, std::uint32_t ell,
                                 std::uint64_t evaluation_ceiling = std::uint64_t{1} << 20, std::uint64_t seed = 0);

}  // namespace kloos
