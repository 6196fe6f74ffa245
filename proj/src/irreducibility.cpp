#include "kloos/irreducibility.hpp"

#include <set>
#include <stdexcept>

#include "kloos/dickson.hpp"

namespace kloos {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::irreducible: return "irreducible";
        case Verdict::reducible: return "reducible";
        case Verdict::undecided: return "undecided";
    }
    return "undecided";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "irreducible") return Verdict::irreducible;
    if (s == "reducible") return Verdict::reducible;
    if (s == "undecided") return Verdict::undecided;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

IrreducibilityCertificate turnwald_decide(unsigned n, const BigInt& r) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("Turnwald criterion is applied to odd n only");
    if (abs(r) < 2) throw std::invalid_argument("parameter r must satisfy |r| >= 2");

    IrreducibilityCertificate cert;
    cert.polynomial = dickson_poly(n, r) + IntegerPolynomial::constant(1);
    if (n == 1) {
        cert.verdict = Verdict::irreducible;
        return cert;
    }

    for (std::uint64_t ell64 : distinct_prime_factors(n)) {
        const auto ell = static_cast<unsigned>(ell64);
        TurnwaldStep step;
        step.ell = ell;
        mpz_pow_ui(step.s.get_mpz_t(), r.get_mpz_t(), n / ell);
        const IntegerPolynomial translate = dickson_poly(ell, step.s) + IntegerPolynomial::constant(1);
        step.constant_coefficient = translate.coeff(0);
        if (!translate.is_monic() || abs(step.constant_coefficient) != 1) {
            throw std::logic_error("D_l(x, s) + 1 is not monic with unit constant term");
        }
        step.value_at_plus_one = dickson_eval(ell, step.s, BigInt(1));
        step.value_at_minus_one = dickson_eval(ell, step.s, BigInt(-1));
        // The recurrence must agree with the closed form at the only rational-root candidates.
        if (translate.evaluate(BigInt(1)) != step.value_at_plus_one + 1 ||
            translate.evaluate(BigInt(-1)) != step.value_at_minus_one + 1) {
            throw std::logic_error("Dickson closed form and recurrence disagree");
        }
        for (int c : {1, -1}) {
            const BigInt& value = c == 1 ? step.value_at_plus_one : step.value_at_minus_one;
            if (value == -1 && !cert.witness) {
                // D_n(x, r) = D_l(D_{n/l}(x, r), s), and (y - c) divides D_l(y, s) + 1.
                FactorWitness w{ell, c, dickson_poly(n / ell, r) - IntegerPolynomial::constant(c)};
                const auto [quot, rem] = cert.polynomial.divmod_monic(w.factor);
                if (!rem.is_zero()) throw std::logic_error("factor witness does not divide");
                cert.witness = std::move(w);
            }
        }
        cert.turnwald.push_back(std::move(step));
    }
    cert.verdict = cert.witness ? Verdict::reducible : Verdict::irreducible;
    return cert;
}

std::optional<DegreePattern> ddf_degree_pattern(const fp::Poly& f_in, std::uint64_t p) {
    fp::Poly f = fp::make_monic(f_in, p);
    const int deg = fp::degree(f);
    if (deg < 1) throw std::invalid_argument("degree pattern needs a nonconstant polynomial");
    if (fp::degree(fp::gcd(f, fp::derivative(f, p), p)) != 0) return std::nullopt;

    DegreePattern pattern;
    const fp::Poly x{0, 1};
    fp::Poly h = fp::mod(x, f, p);
    unsigned d = 0;
    while (fp::degree(f) >= 2 * static_cast<int>(d + 1)) {
        ++d;
        h = fp::powmod(h, p, f, p);
        const fp::Poly g = fp::gcd(fp::sub(h, x, p), f, p);
        const int dg = fp::degree(g);
        if (dg > 0) {
            pattern[d] += static_cast<unsigned>(dg) / d;
            f = fp::divmod(f, g, p).first;
            h = fp::mod(h, f, p);
        }
    }
    if (fp::degree(f) > 0) pattern[static_cast<unsigned>(fp::degree(f))] += 1;
    return pattern;
}

std::vector<unsigned> achievable_degrees(const DegreePattern& pattern) {
    std::set<unsigned> sums{0};
    for (const auto& [degree, count] : pattern) {
        for (unsigned i = 0; i < count; ++i) {
            std::set<unsigned> next = sums;
            for (unsigned s : sums) next.insert(s + degree);
            sums = std::move(next);
        }
    }
    return {sums.begin(), sums.end()};
}

IrreducibilityCertificate certify_by_patterns(const IntegerPolynomial& f, const std::vector<std::uint32_t>& primes) {
    if (primes.empty()) throw std::invalid_argument("at least one prime is required");
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("polynomial must be monic and nonconstant");

    IrreducibilityCertificate cert;
    cert.polynomial = f;
    const auto deg = static_cast<unsigned>(f.degree());
    if (deg == 1) {
        cert.verdict = Verdict::irreducible;
        return cert;
    }

    std::set<unsigned> common;
    bool any = false;
    bool single_factor = false;
    for (std::uint32_t prime : primes) {
        PatternStep step;
        step.prime = prime;
        const auto pattern = ddf_degree_pattern(f.reduce_mod(prime), prime);
        if (!pattern) {
            step.skipped = true;
            cert.patterns.push_back(std::move(step));
            continue;
        }
        step.pattern = *pattern;
        unsigned total = 0;
        for (const auto& [degree, count] : step.pattern) total += degree * count;
        if (total != deg) throw std::logic_error("distinct-degree factorization lost degree");
        if (step.pattern == DegreePattern{{deg, 1}}) single_factor = true;

        const auto sums = achievable_degrees(step.pattern);
        if (!any) {
            common.insert(sums.begin(), sums.end());
            any = true;
        } else {
            std::set<unsigned> kept;
            for (unsigned s : sums) {
                if (common.count(s) != 0) kept.insert(s);
            }
            common = std::move(kept);
        }
        cert.patterns.push_back(std::move(step));
    }
    const bool only_trivial = any && common == std::set<unsigned>{0, deg};
    cert.verdict = (single_factor || only_trivial) ? Verdict::irreducible : Verdict::undecided;
    return cert;
}

}  // namespace kloos
