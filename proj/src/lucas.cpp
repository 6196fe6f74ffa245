#include "kloos/lucas.hpp"

#include <algorithm>

#include "kloos/dickson.hpp"

namespace kloos {

namespace {

const std::vector<std::uint32_t>& trial_primes(std::uint32_t bound) {
    static const std::vector<std::uint32_t> primes = primes_up_to(1'000'000);
    if (bound > 1'000'000) throw std::invalid_argument("trial division bound is capped at 10^6");
    return primes;
}

/// Removes from x every prime factor it shares with m.
BigInt strip_common_primes(BigInt x, const BigInt& m) {
    for (;;) {
        BigInt r = m % x;
        BigInt g;
        mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), r.get_mpz_t());
        if (g == 1) return x;
        x /= g;
    }
}

bool probable_prime(const BigInt& x) { return mpz_probab_prime_p(x.get_mpz_t(), 40) > 0; }

/// Brent's variant of Pollard rho; a nontrivial factor of composite x, or nullopt when the
/// iteration budget runs out.
std::optional<BigInt> rho_split(const BigInt& x, std::uint64_t budget) {
    for (unsigned long c = 1; c <= 8; ++c) {
        BigInt y = 2, ys, r_prod = 1, g = 1, xs;
        std::uint64_t r = 1, used = 0;
        auto step = [&](BigInt& v) { v = (v * v + c) % x; };
        while (g == 1 && used < budget) {
            xs = y;
            for (std::uint64_t i = 0; i < r; ++i) step(y);
            for (std::uint64_t k = 0; k < r && g == 1; k += 128) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min<std::uint64_t>(128, r - k); ++i) {
                    step(y);
                    BigInt diff = abs(xs - y);
                    r_prod = (r_prod * diff) % x;
                }
                mpz_gcd(g.get_mpz_t(), r_prod.get_mpz_t(), x.get_mpz_t());
                used += 128;
            }
            r *= 2;
        }
        if (g == x) {
            // Batched product overshot; backtrack one step at a time.
            do {
                step(ys);
                BigInt diff = abs(xs - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), x.get_mpz_t());
            } while (g == 1);
        }
        if (g != 1 && g != x) return g;
    }
    return std::nullopt;
}

/// Complete factorization of x (all prime factors assumed above the trial bound) into primes,
/// or nullopt if some composite piece resists rho within the budget.
std::optional<std::vector<BigInt>> split_completely(const BigInt& x, std::uint64_t budget) {
    std::vector<BigInt> primes, pending{x};
    while (!pending.empty()) {
        BigInt n = std::move(pending.back());
        pending.pop_back();
        if (n == 1) continue;
        if (probable_prime(n)) {
            primes.push_back(std::move(n));
            continue;
        }
        const auto f = rho_split(n, budget);
        if (!f) return std::nullopt;
        pending.push_back(*f);
        pending.push_back(n / *f);
    }
    return primes;
}

/// Smallest prime factor of x > 1: trial division up to `bound`, then rho on the cofactor.
/// nullopt only when the cofactor cannot be fully split within the rho budget.
std::optional<BigInt> smallest_prime_factor(const BigInt& x, std::uint32_t bound) {
    if (x <= 1) return std::nullopt;
    for (std::uint32_t prime : trial_primes(bound)) {
        if (prime > bound) break;
        if (BigInt(prime) * prime > x) break;
        if (mpz_divisible_ui_p(x.get_mpz_t(), prime) != 0) return BigInt(prime);
    }
    const BigInt b(bound);
    if (b * b >= x || probable_prime(x)) return x;
    const auto primes = split_completely(x, std::uint64_t{1} << 20);
    if (!primes) return std::nullopt;
    return *std::min_element(primes->begin(), primes->end());
}

/// Some prime factor of x > 1, not necessarily the smallest: trial division, then a short rho
/// descent that keeps the smaller half until it is prime.
std::optional<BigInt> any_prime_factor(BigInt x, std::uint32_t bound) {
    if (x <= 1) return std::nullopt;
    for (std::uint32_t prime : trial_primes(bound)) {
        if (prime > bound) break;
        if (BigInt(prime) * prime > x) break;
        if (mpz_divisible_ui_p(x.get_mpz_t(), prime) != 0) return BigInt(prime);
    }
    while (!probable_prime(x)) {
        const auto f = rho_split(x, std::uint64_t{1} << 14);
        if (!f) return std::nullopt;
        x = std::min<BigInt>(*f, x / *f);
    }
    return x;
}

void require_hypotheses(const LucasPair& pair) {
    if (auto why = hypothesis_violation(pair)) throw HypothesisViolation(*why);
}

}  // namespace

std::pair<BigInt, BigInt> lucas_terms(const LucasPair& pair, unsigned k) {
    BigInt u0 = 0, u1 = 1, v0 = 2, v1 = pair.P;
    if (k == 0) return {u0, v0};
    for (unsigned i = 2; i <= k; ++i) {
        BigInt u2 = pair.P * u1 - pair.Q * u0;
        BigInt v2 = pair.P * v1 - pair.Q * v0;
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    return {u1, v1};
}

std::vector<BigInt> lucas_u_sequence(const LucasPair& pair, unsigned k_max) {
    std::vector<BigInt> u{BigInt(0), BigInt(1)};
    for (unsigned i = 2; i <= k_max; ++i) u.push_back(pair.P * u[i - 1] - pair.Q * u[i - 2]);
    u.resize(k_max + 1);
    return u;
}

bool ratio_is_root_of_unity(const LucasPair& pair) {
    if (pair.Q == 0) throw std::domain_error("degenerate Lucas pair: Q = 0");
    // (alpha/beta) + (beta/alpha) = P^2/Q - 2 must be an integer in [-2, 2]. P = 0 gives ratio -1
    // for either sign of Q; otherwise P^2 > 0 forces Q > 0.
    const BigInt p2 = pair.P * pair.P;
    for (int mult = 0; mult <= 4; ++mult) {
        if (p2 == mult * pair.Q) return true;
    }
    return false;
}

std::optional<std::string> hypothesis_violation(const LucasPair& pair) {
    if (pair.P == 0) return "alpha + beta = P must be nonzero";
    if (pair.Q == 0) return "alpha * beta = Q must be nonzero";
    BigInt g;
    mpz_gcd(g.get_mpz_t(), pair.P.get_mpz_t(), pair.Q.get_mpz_t());
    if (g != 1) return "P and Q must be coprime (gcd = " + g.get_str() + ")";
    if (ratio_is_root_of_unity(pair)) return "alpha / beta is a root of unity";
    return std::nullopt;
}

PrimitiveDivisorResult primitive_divisor(const LucasPair& pair, unsigned k, std::uint32_t trial_bound) {
    require_hypotheses(pair);
    if (k < 2) throw std::invalid_argument("primitive divisors are defined for k >= 2");
    const std::vector<BigInt> u = lucas_u_sequence(pair, k);
    if (u[k] == 0) throw std::domain_error("u_k = 0: alpha / beta is a root of unity");

    BigInt earlier = abs(pair.discriminant());
    for (unsigned j = 1; j < k; ++j) earlier *= abs(u[j]);

    PrimitiveDivisorResult out;
    out.k = k;
    out.u_k = u[k];
    out.primitive_part = strip_common_primes(abs(u[k]), earlier);
    out.exists = out.primitive_part > 1;
    if (out.exists) out.witness = smallest_prime_factor(out.primitive_part, trial_bound);
    return out;
}

WindowReport bhv_window_check(const LucasPair& pair, unsigned k_max, unsigned k_min, std::uint32_t trial_bound) {
    WindowReport report;
    report.pair = pair;
    report.k_min = k_min;
    report.k_max = k_max;
    report.violation = hypothesis_violation(pair);
    if (report.violation) return report;
    if (k_min < 2) throw std::invalid_argument("window must start at k >= 2");

    const std::vector<BigInt> u = lucas_u_sequence(pair, k_max);
    BigInt earlier = abs(pair.discriminant());
    for (unsigned k = 1; k <= k_max; ++k) {
        if (k >= k_min) {
            if (u[k] == 0) throw std::domain_error("u_k = 0: alpha / beta is a root of unity");
            PrimitiveDivisorResult r;
            r.k = k;
            r.u_k = u[k];
            r.primitive_part = strip_common_primes(abs(u[k]), earlier);
            r.exists = r.primitive_part > 1;
            if (r.exists) {
                r.witness = any_prime_factor(r.primitive_part, trial_bound);
            } else {
                report.missing.push_back(k);
            }
            report.results.push_back(std::move(r));
        }
        earlier *= abs(u[k]);
    }
    return report;
}

ChainVerdict no_primitive_divisor_chain(unsigned ell, int c, const BigInt& s) {
    if (ell < 3 || !is_prime(ell)) throw std::invalid_argument("ell must be an odd prime");
    if (c != 1 && c != -1) throw std::invalid_argument("c must be +1 or -1");
    if (abs(s) < 2) throw std::invalid_argument("|s| must be at least 2");

    ChainVerdict out;
    out.ell = ell;
    out.c = c;
    out.s = s;
    const LucasPair pair{BigInt(c), s};
    const auto [u_ell, v_ell] = lucas_terms(pair, ell);
    out.v_ell = v_ell;
    out.vacuous = v_ell != -1;
    out.index_within_exception_window = 2 * ell <= 30;
    if (out.vacuous) return out;

    const auto [u_double, v_double] = lucas_terms(pair, 2 * ell);
    out.u_double_is_minus_u = u_double == u_ell * v_ell && u_double == -u_ell;
    out.no_primitive_divisor_at_double = !primitive_divisor(pair, 2 * ell).exists;
    return out;
}

EndgameResult endgame_check(unsigned ell, std::int64_t s_max) {
    if (ell < 3 || !is_prime(ell)) throw std::invalid_argument("ell must be an odd prime");
    EndgameResult out;
    out.ell = ell;
    out.s_max = s_max;

    // Returns true when D_ell(c, s) = -1; exact, with a big-integer fallback on overflow.
    auto hits_minus_one = [ell](int c, std::int64_t s) {
        __int128 prev = 2;
        __int128 cur = c;
        for (unsigned k = 2; k <= ell; ++k) {
            __int128 a = 0, b = 0, next = 0;
            if (__builtin_mul_overflow(static_cast<__int128>(c), cur, &a) ||
                __builtin_mul_overflow(static_cast<__int128>(s), prev, &b) ||
                __builtin_sub_overflow(a, b, &next)) {
                return dickson_eval(ell, BigInt(static_cast<long>(s)), BigInt(c)) == -1;
            }
            prev = cur;
            cur = next;
        }
        return cur == -1;
    };

    for (std::int64_t mag = 2; mag <= s_max; ++mag) {
        for (std::int64_t s : {mag, -mag}) {
            for (int c : {1, -1}) {
                ++out.evaluations;
                if (hits_minus_one(c, s)) out.counterexamples.emplace_back(c, s);
            }
        }
    }
    return out;
}

}  // namespace kloos
