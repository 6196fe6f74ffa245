#include <gtest/gtest.h>

#include <random>
#include <set>

#include "kloos/finite_field.hpp"
#include "kloos/fp_poly.hpp"
#include "kloos/number_theory.hpp"
#include "kloos/serialization.hpp"

using namespace kloos;

namespace {

fp::Poly to_poly(const std::vector<std::uint32_t>& v) { return fp::Poly(v.begin(), v.end()); }

// Brute-force root count over F_p: an oracle that shares nothing with the Rabin test.
bool has_root(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
        if (acc == 0) return true;
    }
    return false;
}

FieldElement random_element(const Field& f, std::mt19937_64& rng) {
    return f.from_index(rng() % f.order());
}

}  // namespace

TEST(FindIrreducible, DegreeOneAndTwoOverF2) {
    const auto lin = find_irreducible(2, 1, 7);
    ASSERT_EQ(lin.size(), 2u);
    EXPECT_EQ(lin[1], 1u);
    EXPECT_EQ(find_irreducible(2, 2, 0), (std::vector<std::uint32_t>{1, 1, 1}));
    EXPECT_EQ(find_irreducible(2, 2, 12345), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(FindIrreducible, CubicOverF5MatchesFrobeniusOracle) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto f = find_irreducible(5, 3, seed);
        ASSERT_EQ(f.size(), 4u);
        EXPECT_EQ(f[3], 1u);
        const fp::Poly fp = to_poly(f);
        // x^125 = x mod f and gcd(x^5 - x, f) = 1.
        EXPECT_EQ(fp::frobenius_power_of_x(3, fp, 5), (fp::Poly{0, 1}));
        const fp::Poly x5 = fp::sub(fp::frobenius_power_of_x(1, fp, 5), fp::Poly{0, 1}, 5);
        EXPECT_EQ(fp::degree(fp::gcd(x5, fp, 5)), 0);
        // A cubic is irreducible iff it has no root.
        EXPECT_FALSE(has_root(f, 5));
    }
}

TEST(FindIrreducible, DeterministicAndRejectsBadInput) {
    EXPECT_EQ(find_irreducible(7, 4, 99), find_irreducible(7, 4, 99));
    EXPECT_THROW(find_irreducible(6, 2, 0), std::invalid_argument);
    EXPECT_THROW(find_irreducible(5, 0, 0), std::invalid_argument);
    EXPECT_THROW(make_field(9, 1), std::invalid_argument);
}

TEST(MakeField, GeneratorHasFullOrder) {
    for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 4}, {2, 8}, {3, 5}, {5, 3}, {7, 2}, {13, 2}, {11, 3}}) {
        const FieldSpec spec = make_field(p, d, 3);
        EXPECT_NO_THROW(validate(spec));
        const Field f(spec);
        EXPECT_EQ(f.element_order(f.generator()), f.order() - 1);
        // Walking the generator visits every nonzero element exactly once.
        if (f.order() <= 4096) {
            std::set<std::uint64_t> seen;
            FieldElement e = f.one();
            for (std::uint64_t i = 0; i + 1 < f.order(); ++i) {
                seen.insert(f.to_index(e));
                e = f.mul(e, f.generator());
            }
            EXPECT_EQ(seen.size(), f.order() - 1);
            EXPECT_EQ(seen.count(0), 0u);
        }
    }
}

TEST(Validate, RejectsBrokenSpecs) {
    FieldSpec spec = make_field(5, 2);
    FieldSpec reducible = spec;
    reducible.modulus = {4, 0, 1};  // x^2 - 1
    EXPECT_THROW(validate(reducible), std::invalid_argument);
    FieldSpec bad_gen = spec;
    bad_gen.generator = {1, 0};
    EXPECT_THROW(validate(bad_gen), std::invalid_argument);
    FieldSpec not_monic = spec;
    not_monic.modulus.back() = 2;
    EXPECT_THROW(validate(not_monic), std::invalid_argument);
}

TEST(FieldArithmetic, SmallExamples) {
    FieldSpec spec4{2, 2, {1, 1, 1}, {0, 1}};
    ASSERT_NO_THROW(validate(spec4));
    const Field f4(spec4);
    const FieldElement x = f4.from_coeffs({0, 1});
    EXPECT_EQ(f4.mul(x, x), f4.from_coeffs({1, 1}));
    EXPECT_EQ(f4.trace_to_prime(x), 1u);

    const Field f5(make_field(5, 1));
    EXPECT_EQ(f5.inv(f5.from_residue(2)), f5.from_residue(3));
    for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 2}, {7, 3}}) {
        const Field f(make_field(p, d));
        EXPECT_EQ(f.inv(f.one()), f.one());
        EXPECT_THROW(f.inv(f.zero()), std::domain_error);
        EXPECT_EQ(f.trace_to_prime(f.zero()), 0u);
        EXPECT_EQ(f.trace_to_prime(f.one()), d % p);
    }
}

TEST(FieldArithmetic, RejectsMalformedElements) {
    const Field f(make_field(5, 2));
    EXPECT_THROW(f.from_coeffs({1}), std::invalid_argument);
    EXPECT_THROW(f.from_coeffs({1, 5}), std::invalid_argument);
}

TEST(FieldArithmetic, AxiomsOnRandomElements) {
    std::mt19937_64 rng(42);
    for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 7}, {3, 4}, {5, 3}, {13, 2}, {65521, 1}}) {
        const Field f(make_field(p, d, 1));
        for (int trial = 0; trial < 100; ++trial) {
            const FieldElement a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
            EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
            EXPECT_EQ(f.sub(a, b), f.add(a, f.neg(b)));
            if (!f.is_zero(a)) EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
            // Cardinality and Frobenius invariance of the trace.
            EXPECT_EQ(f.pow(a, f.order()), a);
            EXPECT_EQ(f.trace_to_prime(f.frobenius(a)), f.trace_to_prime(a));
            EXPECT_EQ(f.trace_to_prime(f.add(a, b)), (f.trace_to_prime(a) + f.trace_to_prime(b)) % p);
            EXPECT_EQ(f.from_index(f.to_index(a)), a);
        }
    }
}

TEST(SubfieldGenerator, ExamplesAndEnumeration) {
    const Field f16(make_field(2, 4));
    const FieldElement delta = f16.subfield_generator(2);
    EXPECT_EQ(delta, f16.pow(f16.generator(), 5));
    EXPECT_EQ(f16.element_order(delta), 3u);
    EXPECT_EQ(f16.add(f16.add(f16.mul(delta, delta), delta), f16.one()), f16.zero());
    EXPECT_EQ(f16.subfield_generator(4), f16.generator());
    EXPECT_THROW(f16.subfield_generator(3), std::invalid_argument);

    for (auto [p, d, m] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
             {2, 6, 2}, {2, 6, 3}, {3, 4, 2}, {5, 2, 1}, {7, 3, 1}}) {
        const Field f(make_field(p, d));
        const FieldElement g = f.subfield_generator(m);
        const std::uint64_t q = checked_pow(p, m);
        EXPECT_EQ(f.element_order(g), q - 1);
        std::set<FieldElement> elements;
        FieldElement e = f.one();
        for (std::uint64_t i = 0; i + 1 < q; ++i) {
            EXPECT_EQ(f.pow(e, q), e);
            elements.insert(e);
            e = f.mul(e, g);
        }
        EXPECT_EQ(elements.size(), q - 1);
        // Nothing else in the big field is fixed by the q-power map.
        std::uint64_t fixed = 0;
        for (std::uint64_t idx = 1; idx < f.order(); ++idx) {
            const FieldElement y = f.from_index(idx);
            if (f.pow(y, q) == y) ++fixed;
        }
        EXPECT_EQ(fixed, q - 1);
    }
}

TEST(FieldSpecJson, RoundTrip) {
    const FieldSpec spec = make_field(3, 5, 11);
    const Json j = spec;
    EXPECT_EQ(j.get<FieldSpec>(), spec);
    EXPECT_EQ(j.at("modulus").size(), 6u);
}
