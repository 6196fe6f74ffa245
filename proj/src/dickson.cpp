#include "kloos/dickson.hpp"

#include <stdexcept>

namespace kloos {

IntegerPolynomial dickson_poly(unsigned n, const BigInt& r) {
    if (n == 0) return IntegerPolynomial::constant(2);
    std::vector<BigInt> coeffs(n + 1, BigInt(0));
    BigInt minus_r_power = 1;  // (-r)^i
    for (unsigned i = 0; 2 * i <= n; ++i) {
        const BigInt numerator = BigInt(n) * binomial(n - i, i);
        if (numerator % (n - i) != 0) throw std::logic_error("Dickson coefficient is not integral");
        coeffs[n - 2 * i] = numerator / (n - i) * minus_r_power;
        minus_r_power *= -r;
    }
    return IntegerPolynomial(std::move(coeffs));
}

BigInt dickson_eval(unsigned n, const BigInt& r, const BigInt& x) {
    return dickson_eval<BigInt>(n, r, x, BigInt(1));
}

Rational dickson_eval(unsigned n, const BigInt& r, const Rational& x) {
    Rational prev = 2;
    if (n == 0) return prev;
    Rational cur = x;
    const Rational rq(r);
    for (unsigned k = 2; k <= n; ++k) {
        Rational next = x * cur - rq * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

CyclotomicInteger dickson_eval(unsigned n, const BigInt& r, const CyclotomicInteger& x) {
    return dickson_eval<CyclotomicInteger>(n, r, x, CyclotomicInteger::integer(x.p(), 1));
}

CarlitzResult carlitz_check(const PowerTable& extension, std::uint32_t m, const FieldElement& a) {
    const Field& field = extension.field();
    if (m == 0 || field.d() % m != 0) throw std::invalid_argument("subfield degree must divide the field degree");
    if (!field.is_valid(a) || field.is_zero(a)) throw std::invalid_argument("a must be a nonzero field element");
    const std::uint64_t q = checked_pow(field.p(), m);
    if (field.pow(a, q) != a) throw std::invalid_argument("a does not lie in the subfield F_q");

    CarlitzResult out;
    out.p = field.p();
    out.m = m;
    out.n = field.d() / m;
    out.a = a;
    const SubfieldTraces sub(extension, m);
    const std::uint64_t k = extension.log(a);
    out.extension_sum = kloosterman_sum_at_power(extension, k);
    out.base_sum = subfield_kloosterman_sum(extension, sub, k / sub.step());
    out.dickson_side = dickson_eval(out.n, BigInt(static_cast<unsigned long>(q)), out.base_sum.value);
    if (out.n % 2 == 0) out.dickson_side = -out.dickson_side;
    out.equal = out.dickson_side == out.extension_sum.value;
    return out;
}

}  // namespace kloos
