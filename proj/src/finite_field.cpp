#include "kloos/finite_field.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "kloos/fp_poly.hpp"
#include "kloos/number_theory.hpp"

namespace kloos {

namespace {

fp::Poly to_poly(const std::vector<std::uint32_t>& v) {
    fp::Poly out(v.begin(), v.end());
    fp::trim(out);
    return out;
}

std::uint64_t field_order(std::uint32_t p, std::uint32_t d) {
    std::uint64_t order = 0;
    try {
        order = checked_pow(p, d);
    } catch (const std::overflow_error&) {
        throw std::invalid_argument("field order p^d exceeds 2^32");
    }
    if (order > (std::uint64_t{1} << 32)) throw std::invalid_argument("field order p^d exceeds 2^32");
    return order;
}

void check_request(std::uint32_t p, std::uint32_t d) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (d == 0) throw std::invalid_argument("extension degree must be at least 1");
    field_order(p, d);
}

bool is_primitive(const Field& field, const FieldElement& g) {
    if (field.is_zero(g)) return false;
    const std::uint64_t n = field.multiplicative_order();
    for (std::uint64_t r : distinct_prime_factors(n)) {
        if (field.pow(g, n / r) == field.one()) return false;
    }
    return true;
}

}  // namespace

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t d, std::uint64_t seed) {
    check_request(p, d);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    for (;;) {
        fp::Poly f(d + 1);
        for (std::uint32_t i = 0; i < d; ++i) f[i] = coeff(rng);
        f[d] = 1;
        if (d > 1 && f[0] == 0) continue;
        if (fp::is_irreducible(f, p)) return {f.begin(), f.end()};
    }
}

FieldSpec make_field(std::uint32_t p, std::uint32_t d, std::uint64_t seed) {
    check_request(p, d);
    FieldSpec spec{p, d, {}, {}};
    std::vector<std::uint32_t> x_class(d, 0);
    // For d == 1 the class of x is the constant -c0, filled in per candidate below.
    for (std::uint64_t attempt = 0; attempt < 256; ++attempt) {
        spec.modulus = find_irreducible(p, d, seed * 1000003u + attempt);
        if (d == 1) {
            x_class[0] = (p - spec.modulus[0]) % p;
        } else {
            x_class.assign(d, 0);
            x_class[1] = 1;
        }
        spec.generator = x_class;
        Field field(spec);
        if (is_primitive(field, field.generator())) return spec;
    }
    // No primitive modulus found among the attempts: keep the last modulus and scan for a generator.
    spec.generator.assign(d, 0);
    spec.generator[0] = 1;
    Field field(spec);
    const std::uint64_t order = field.order();
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    const std::uint64_t start = rng() % order;
    for (std::uint64_t k = 0; k < order; ++k) {
        FieldElement candidate = field.from_index((start + k) % order);
        if (is_primitive(field, candidate)) {
            spec.generator = candidate.coeffs;
            return spec;
        }
    }
    throw std::logic_error("finite field has no primitive element");
}

void validate(const FieldSpec& spec) {
    check_request(spec.p, spec.d);
    if (spec.modulus.size() != spec.d + 1 || spec.modulus.back() != 1) {
        throw std::invalid_argument("modulus must be monic of degree d");
    }
    for (auto c : spec.modulus) {
        if (c >= spec.p) throw std::invalid_argument("modulus coefficient out of range");
    }
    if (!fp::is_irreducible(to_poly(spec.modulus), spec.p)) {
        throw std::invalid_argument("modulus is not irreducible over F_p");
    }
    if (spec.generator.size() != spec.d) throw std::invalid_argument("generator has wrong length");
    for (auto c : spec.generator) {
        if (c >= spec.p) throw std::invalid_argument("generator coefficient out of range");
    }
    Field field(spec);
    if (!is_primitive(field, field.generator())) {
        throw std::invalid_argument("generator is not a primitive element");
    }
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)), order_(field_order(spec_.p, spec_.d)) {
    if (spec_.modulus.size() != spec_.d + 1 || spec_.generator.size() != spec_.d) {
        throw std::invalid_argument("malformed field descriptor");
    }
    if (spec_.d == 1) {
        generator_is_x_ = spec_.generator[0] == (spec_.p - spec_.modulus[0]) % spec_.p;
    } else {
        std::vector<std::uint32_t> x_class(spec_.d, 0);
        x_class[1] = 1;
        generator_is_x_ = spec_.generator == x_class;
    }
}

void Field::check(const FieldElement& e) const {
    if (!is_valid(e)) throw std::invalid_argument("element does not belong to this field");
}

bool Field::is_valid(const FieldElement& e) const {
    if (e.coeffs.size() != spec_.d) return false;
    for (auto c : e.coeffs) {
        if (c >= spec_.p) return false;
    }
    return true;
}

bool Field::is_zero(const FieldElement& e) const {
    for (auto c : e.coeffs) {
        if (c != 0) return false;
    }
    return true;
}

FieldElement Field::zero() const { return FieldElement{std::vector<std::uint32_t>(spec_.d, 0)}; }

FieldElement Field::one() const { return from_residue(1); }

FieldElement Field::from_residue(std::uint64_t c) const {
    FieldElement e = zero();
    e.coeffs[0] = static_cast<std::uint32_t>(c % spec_.p);
    return e;
}

FieldElement Field::from_coeffs(std::vector<std::uint32_t> coeffs) const {
    FieldElement e{std::move(coeffs)};
    check(e);
    return e;
}

std::uint64_t Field::to_index(const FieldElement& e) const {
    std::uint64_t index = 0;
    for (std::size_t i = e.coeffs.size(); i-- > 0;) index = index * spec_.p + e.coeffs[i];
    return index;
}

FieldElement Field::from_index(std::uint64_t index) const {
    if (index >= order_) throw std::invalid_argument("element index out of range");
    FieldElement e = zero();
    for (std::uint32_t i = 0; i < spec_.d; ++i) {
        e.coeffs[i] = static_cast<std::uint32_t>(index % spec_.p);
        index /= spec_.p;
    }
    return e;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement out = zero();
    for (std::uint32_t i = 0; i < spec_.d; ++i) {
        out.coeffs[i] = static_cast<std::uint32_t>((std::uint64_t{a.coeffs[i]} + b.coeffs[i]) % spec_.p);
    }
    return out;
}

FieldElement Field::neg(const FieldElement& a) const {
    check(a);
    FieldElement out = zero();
    for (std::uint32_t i = 0; i < spec_.d; ++i) out.coeffs[i] = (spec_.p - a.coeffs[i]) % spec_.p;
    return out;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement Field::scale(const FieldElement& a, std::uint64_t c) const {
    check(a);
    FieldElement out = zero();
    c %= spec_.p;
    for (std::uint32_t i = 0; i < spec_.d; ++i) {
        out.coeffs[i] = static_cast<std::uint32_t>(a.coeffs[i] * c % spec_.p);
    }
    return out;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    const std::uint64_t p = spec_.p;
    const std::uint32_t d = spec_.d;
    std::vector<std::uint64_t> prod(2 * d - 1, 0);
    for (std::uint32_t i = 0; i < d; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::uint32_t j = 0; j < d; ++j) {
            prod[i + j] = (prod[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j] % p) % p;
        }
    }
    // Reduce with x^d = -(m_0 + ... + m_{d-1} x^{d-1}).
    for (std::size_t k = prod.size(); k-- > d;) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::uint32_t j = 0; j < d; ++j) {
            std::uint64_t& slot = prod[k - d + j];
            slot = (slot + (p - spec_.modulus[j]) % p * c % p) % p;
        }
    }
    FieldElement out = zero();
    for (std::uint32_t i = 0; i < d; ++i) out.coeffs[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
}

FieldElement Field::mul_by_x(const FieldElement& a) const {
    const std::uint64_t p = spec_.p;
    const std::uint32_t d = spec_.d;
    FieldElement out = zero();
    const std::uint64_t top = a.coeffs[d - 1];
    for (std::uint32_t i = d - 1; i > 0; --i) out.coeffs[i] = a.coeffs[i - 1];
    out.coeffs[0] = 0;
    if (d == 1) {
        // x is the constant -m_0.
        out.coeffs[0] = static_cast<std::uint32_t>(top * ((p - spec_.modulus[0]) % p) % p);
        return out;
    }
    if (top != 0) {
        for (std::uint32_t j = 0; j < d; ++j) {
            out.coeffs[j] = static_cast<std::uint32_t>((out.coeffs[j] + (p - spec_.modulus[j]) % p * top % p) % p);
        }
    }
    return out;
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t exp) const {
    FieldElement result = one();
    FieldElement base = a;
    while (exp != 0) {
        if (exp & 1) result = mul(result, base);
        exp >>= 1;
        if (exp != 0) base = mul(base, base);
    }
    return result;
}

FieldElement Field::inv(const FieldElement& a) const {
    check(a);
    if (is_zero(a)) throw std::domain_error("inverse of zero field element");
    return pow(a, order_ - 2);
}

std::uint32_t Field::trace_to_prime(const FieldElement& a) const {
    check(a);
    FieldElement acc = a;
    FieldElement term = a;
    for (std::uint32_t i = 1; i < spec_.d; ++i) {
        term = frobenius(term);
        acc = add(acc, term);
    }
    for (std::uint32_t i = 1; i < spec_.d; ++i) {
        if (acc.coeffs[i] != 0) throw std::logic_error("trace did not land in the prime field");
    }
    return acc.coeffs[0];
}

std::uint64_t Field::element_order(const FieldElement& a) const {
    if (is_zero(a)) throw std::domain_error("zero has no multiplicative order");
    std::uint64_t n = multiplicative_order();
    for (const auto& [r, e] : factorize(multiplicative_order())) {
        for (unsigned k = 0; k < e; ++k) {
            if (pow(a, n / r) == one()) {
                n /= r;
            } else {
                break;
            }
        }
    }
    return n;
}

FieldElement Field::subfield_generator(std::uint32_t m) const {
    if (m == 0 || spec_.d % m != 0) {
        throw std::invalid_argument("subfield degree " + std::to_string(m) + " does not divide " +
                                    std::to_string(spec_.d));
    }
    const std::uint64_t sub_order = checked_pow(spec_.p, m) - 1;
    return pow(generator(), multiplicative_order() / sub_order);
}

}  // namespace kloos
