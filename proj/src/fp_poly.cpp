#include "kloos/fp_poly.hpp"

#include <stdexcept>

#include "kloos/number_theory.hpp"

namespace kloos::fp {

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) {
    Poly g = f;
    trim(g);
    return static_cast<int>(g.size()) - 1;
}

bool is_zero(const Poly& f) { return degree(f) < 0; }

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("inverse of zero modulo p");
    // p is prime so Fermat applies.
    return pow_mod(a, p - 2, p);
}

Poly add(const Poly& f, const Poly& g, std::uint64_t p) {
    Poly out(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] % p;
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = (out[i] + g[i]) % p;
    trim(out);
    return out;
}

Poly sub(const Poly& f, const Poly& g, std::uint64_t p) {
    Poly out(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] % p;
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = (out[i] + p - g[i] % p) % p;
    trim(out);
    return out;
}

Poly mul(const Poly& f, const Poly& g, std::uint64_t p) {
    if (f.empty() || g.empty()) return {};
    Poly out(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            out[i + j] = (out[i + j] + f[i] * g[j] % p) % p;
        }
    }
    trim(out);
    return out;
}

Poly scale(const Poly& f, std::uint64_t c, std::uint64_t p) {
    Poly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * (c % p) % p;
    trim(out);
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, std::uint64_t p) {
    Poly divisor = g;
    trim(divisor);
    if (divisor.empty()) throw std::domain_error("polynomial division by zero");
    Poly rem = f;
    for (auto& c : rem) c %= p;
    trim(rem);
    const std::size_t dg = divisor.size() - 1;
    if (rem.size() < divisor.size()) return {Poly{}, rem};
    Poly quot(rem.size() - dg, 0);
    const std::uint64_t lead_inv = inv_mod(divisor.back(), p);
    for (std::size_t k = rem.size(); k-- > dg;) {
        const std::uint64_t c = rem[k] * lead_inv % p;
        if (c == 0) continue;
        quot[k - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j) {
            std::uint64_t& slot = rem[k - dg + j];
            slot = (slot + p - c * divisor[j] % p) % p;
        }
    }
    trim(quot);
    trim(rem);
    return {quot, rem};
}

Poly mod(const Poly& f, const Poly& g, std::uint64_t p) { return divmod(f, g, p).second; }

Poly make_monic(const Poly& f, std::uint64_t p) {
    Poly g = f;
    trim(g);
    if (g.empty()) return g;
    return scale(g, inv_mod(g.back(), p), p);
}

Poly gcd(Poly f, Poly g, std::uint64_t p) {
    trim(f);
    trim(g);
    while (!g.empty()) {
        Poly r = mod(f, g, p);
        f = std::move(g);
        g = std::move(r);
    }
    return make_monic(f, p);
}

Poly derivative(const Poly& f, std::uint64_t p) {
    if (f.size() <= 1) return {};
    Poly out(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = (i % p) * (f[i] % p) % p;
    trim(out);
    return out;
}

Poly mulmod(const Poly& f, const Poly& g, const Poly& modulus, std::uint64_t p) {
    return mod(mul(f, g, p), modulus, p);
}

Poly powmod(Poly base, std::uint64_t exp, const Poly& modulus, std::uint64_t p) {
    Poly result = mod(Poly{1}, modulus, p);
    base = mod(base, modulus, p);
    while (exp != 0) {
        if (exp & 1) result = mulmod(result, base, modulus, p);
        exp >>= 1;
        if (exp != 0) base = mulmod(base, base, modulus, p);
    }
    return result;
}

Poly frobenius_power_of_x(unsigned k, const Poly& modulus, std::uint64_t p) {
    Poly h = mod(Poly{0, 1}, modulus, p);
    for (unsigned i = 0; i < k; ++i) h = powmod(h, p, modulus, p);
    return h;
}

Poly binomial_power(std::uint64_t c, unsigned n, std::uint64_t p) {
    Poly out{1};
    const Poly linear{c % p, 1};
    for (unsigned i = 0; i < n; ++i) out = mul(out, linear, p);
    return out;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
    const int d = degree(f);
    if (d < 1) return false;
    if (d == 1) return true;
    const Poly x{0, 1};
    const Poly x_mod = mod(x, f, p);
    if (sub(frobenius_power_of_x(static_cast<unsigned>(d), f, p), x_mod, p) != Poly{}) return false;
    for (std::uint64_t ell : distinct_prime_factors(static_cast<std::uint64_t>(d))) {
        const Poly h = frobenius_power_of_x(static_cast<unsigned>(d / ell), f, p);
        if (degree(gcd(sub(h, x_mod, p), f, p)) != 0) return false;
    }
    return true;
}

}  // namespace kloos::fp
