#pragma once

// Lucas sequences u_k = (a^k - b^k)/(a - b), v_k = a^k + b^k for a + b = P, ab = Q,
// and primitive divisors of u_k under the rational criterion: a prime is primitive
// for index k when it divides u_k but none of D, u_1, ..., u_{k-1}.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kloos/number_theory.hpp"

namespace kloos {

struct LucasPair {
    BigInt P;
    BigInt Q;

    BigInt discriminant() const { return P * P - 4 * Q; }
};

/// Raised when a pair falls outside the hypotheses of the primitive-divisor theorem.
class HypothesisViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// (u_k, v_k).
std::pair<BigInt, BigInt> lucas_terms(const LucasPair& pair, unsigned k);
/// u_0..u_kmax.
std::vector<BigInt> lucas_u_sequence(const LucasPair& pair, unsigned k_max);

/// True iff alpha/beta is a root of unity: P^2 in {0, Q, 2Q, 3Q, 4Q} (so Q > 0 unless P = 0).
/// Throws std::domain_error for Q = 0.
bool ratio_is_root_of_unity(const LucasPair& pair);

/// The first violated hypothesis (P, Q nonzero, coprime, ratio not a root of unity), if any.
std::optional<std::string> hypothesis_violation(const LucasPair& pair);

struct PrimitiveDivisorResult {
    unsigned k = 0;
    BigInt u_k;
    /// u_k stripped of every prime dividing D * u_1 * ... * u_{k-1}; a primitive divisor exists iff > 1.
    BigInt primitive_part;
    bool exists = false;
    /// Smallest primitive prime; absent only if the primitive part resists factoring.
    std::optional<BigInt> witness;
};

/// Throws HypothesisViolation for pairs outside the theorem, std::invalid_argument for k < 2,
/// std::domain_error when u_k = 0.
PrimitiveDivisorResult primitive_divisor(const LucasPair& pair, unsigned k,
                                         std::uint32_t trial_bound = 1'000'000);

struct WindowReport {
    LucasPair pair;
    unsigned k_min = 31;
    unsigned k_max = 0;
    std::optional<std::string> violation;  // hypothesis gate failure; no indices checked
    std::vector<unsigned> missing;         // indices with no primitive divisor
    /// Witnesses here are some primitive prime (cheap search), not necessarily the smallest.
    std::vector<PrimitiveDivisorResult> results;

    bool passed() const { return !violation && missing.empty(); }
};

/// Checks that every k in [k_min, k_max] has a primitive divisor (default window 30 < k).
WindowReport bhv_window_check(const LucasPair& pair, unsigned k_max, unsigned k_min = 31,
                              std::uint32_t trial_bound = 10'000);

struct ChainVerdict {
    unsigned ell = 0;
    int c = 1;
    BigInt s;
    BigInt v_ell;                  // D_ell(c, s) = alpha^ell + beta^ell
    bool vacuous = true;           // v_ell != -1
    bool u_double_is_minus_u = false;
    bool no_primitive_divisor_at_double = false;
    bool index_within_exception_window = false;  // 2 ell <= 30
};

/// Replays the chain D_ell(c, s) = -1 => u_{2 ell} = -u_ell => no primitive divisor at 2 ell.
/// Throws std::invalid_argument unless ell is an odd prime, c = +-1 and |s| >= 2.
ChainVerdict no_primitive_divisor_chain(unsigned ell, int c, const BigInt& s);

struct EndgameResult {
    unsigned ell = 0;
    std::int64_t s_max = 0;
    std::uint64_t evaluations = 0;
    std::vector<std::pair<int, std::int64_t>> counterexamples;  // (c, s) with D_ell(c, s) = -1
};

/// Exhaustively evaluates D_ell(+-1, s) for 2 <= |s| <= s_max and records every value equal to -1.
EndgameResult endgame_check(unsigned ell, std::int64_t s_max);

}  // namespace kloos
