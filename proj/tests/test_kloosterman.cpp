#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "kloos/kloosterman.hpp"
#include "kloos/number_theory.hpp"
#include "kloos/serialization.hpp"

using namespace kloos;

namespace {

// Direct summation over F_p with plain integer arithmetic (the trace is the identity).
std::vector<std::uint64_t> prime_field_counts(std::uint64_t p, std::uint64_t b) {
    std::vector<std::uint64_t> counts(p, 0);
    for (std::uint64_t x = 1; x < p; ++x) {
        std::uint64_t inv = 1;
        while (inv * x % p != 1) ++inv;
        ++counts[(x + b * inv) % p];
    }
    return counts;
}

// Numeric oracle: sum of exp(2 pi i Tr(x + b/x) / p), computed with the field API only.
std::complex<double> numeric_sum(const Field& f, const FieldElement& b) {
    std::complex<double> acc = 0;
    for (std::uint64_t idx = 1; idx < f.order(); ++idx) {
        const FieldElement x = f.from_index(idx);
        const auto t = f.trace_to_prime(f.add(x, f.mul(b, f.inv(x))));
        acc += std::polar(1.0, 2 * std::numbers::pi * t / f.p());
    }
    return acc;
}

CyclotomicInteger coords(std::uint32_t p, std::initializer_list<long> values) {
    std::vector<BigInt> out;
    for (long v : values) out.emplace_back(v);
    return CyclotomicInteger(p, out);
}

}  // namespace

TEST(KloostermanSum, F2) {
    const FieldSpec spec = make_field(2, 1);
    const Field f(spec);
    const KloostermanValue kv = kloosterman_sum(spec, f.one());
    EXPECT_EQ(kv.counts, (std::vector<std::uint64_t>{1, 0}));
    EXPECT_EQ(kv.value.as_rational_integer(), BigInt(1));
    EXPECT_EQ(shifted_sum(kv).as_rational_integer(), BigInt(2));
}

TEST(KloostermanSum, F5Examples) {
    const FieldSpec spec = make_field(5, 1);
    const Field f(spec);
    const KloostermanValue k1 = kloosterman_sum(spec, f.from_residue(1));
    EXPECT_EQ(k1.counts, (std::vector<std::uint64_t>{2, 0, 1, 1, 0}));
    EXPECT_EQ(k1.value, coords(5, {2, 0, 1, 1}));
    const KloostermanValue k4 = kloosterman_sum(spec, f.from_residue(4));
    EXPECT_EQ(k4.counts, (std::vector<std::uint64_t>{2, 1, 0, 0, 1}));
    EXPECT_EQ(k4.value, CyclotomicInteger::integer(5, 2) + CyclotomicInteger::zeta_power(5, 1) +
                            CyclotomicInteger::zeta_power(5, 4));
    EXPECT_EQ(k1.value.galois_apply(2), k4.value);
}

TEST(KloostermanSum, ZeroRejected) {
    const FieldSpec spec = make_field(3, 2);
    EXPECT_THROW(kloosterman_sum(spec, Field(spec).zero()), std::domain_error);
}

TEST(KloostermanSum, PrimeFieldsMatchIntegerOracle) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 101u}) {
        const PowerTable table(make_field(p, 1));
        for (std::uint64_t b = 1; b < p; ++b) {
            EXPECT_EQ(kloosterman_sum(table, table.field().from_residue(b)).counts, prime_field_counts(p, b));
        }
    }
}

TEST(KloostermanSum, FastPathMatchesNaiveEnumeration) {
    std::mt19937_64 rng(9);
    for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {2, 7}, {3, 3}, {5, 2}, {7, 2}, {13, 2}}) {
        for (std::uint64_t seed : {0u, 5u}) {
            const PowerTable table(make_field(p, d, seed));
            const Field& f = table.field();
            for (int i = 0; i < 10; ++i) {
                const FieldElement b = f.from_index(1 + rng() % (f.order() - 1));
                const KloostermanValue kv = kloosterman_sum(table, b);
                EXPECT_EQ(kv.counts, kloosterman_counts_naive(f, b));
                const auto numeric = numeric_sum(f, b);
                EXPECT_NEAR(std::abs(kv.value.complex_embeddings()[0] - numeric), 0.0, 1e-7);
            }
        }
    }
}

TEST(KloostermanSum, SubfieldSumsMatchStandaloneFields) {
    // Relative-trace sums inside F_{q^n} against enumeration of the fixed field of x -> x^q,
    // and against plain integer arithmetic when q = p.
    for (auto [p, d, m] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
             {5, 3, 1}, {3, 4, 2}, {2, 6, 3}, {7, 2, 1}}) {
        const PowerTable table(make_field(p, d));
        const SubfieldTraces sub(table, m);
        for (std::uint64_t i = 0; i + 1 < sub.q(); ++i) {
            const KloostermanValue kv = subfield_kloosterman_sum(table, sub, i);
            EXPECT_EQ(kv.degree, m);
            EXPECT_EQ(kv.counts, subfield_kloosterman_counts_naive(table.field(), m, table.power(i * sub.step())));
        }
        if (m == 1) {
            for (std::uint64_t r = 1; r < p; ++r) {
                const std::uint64_t i = sub.delta_log_of_residue(r);
                EXPECT_EQ(table.power(i * sub.step()), table.field().from_residue(r));
                EXPECT_EQ(subfield_kloosterman_sum(table, sub, i).counts, prime_field_counts(p, r));
            }
        }
    }
}

TEST(KloostermanSum, InvariantsAndProperties) {
    for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 5}, {3, 4}, {5, 3}, {7, 2}, {11, 2}, {13, 2}}) {
        const PowerTable table(make_field(p, d));
        const Field& f = table.field();
        for (std::uint64_t k = 0; k < f.order() - 1; k += 1 + (f.order() / 40)) {
            const KloostermanValue kv = kloosterman_sum_at_power(table, k);
            std::uint64_t total = 0;
            for (auto c : kv.counts) total += c;
            EXPECT_EQ(total, f.order() - 1);
            EXPECT_EQ(kv.value.lambda_residue(), p - 1);
            EXPECT_EQ(shifted_sum(kv).lambda_residue(), 0u);
            EXPECT_TRUE(within_weil_bound(kv.value, f.order()));
            // Galois conjugacy sigma_j(K(b)) = K(j^2 b), checked for every j.
            for (std::uint64_t j = 1; j < p; ++j) {
                const FieldElement jb = f.scale(kv.b, j * j % p);
                EXPECT_EQ(kv.value.galois_apply(j), kloosterman_sum(table, jb).value);
            }
        }
    }
}

TEST(KloostermanSum, WeilBoundIsTightEnoughToFail) {
    // 5 exceeds 2 sqrt(4) = 4; the check must reject it.
    EXPECT_FALSE(within_weil_bound(CyclotomicInteger::integer(2, 5), 4));
    EXPECT_TRUE(within_weil_bound(CyclotomicInteger::integer(2, 4), 4));
}

TEST(KloostermanSum, KloostermanZeroInF16) {
    const PowerTable table(make_field(2, 4));
    const KloostermanValue kv = kloosterman_sum(table, table.field().one());
    EXPECT_TRUE(kv.is_minus_one());
    EXPECT_TRUE(shifted_sum(kv).is_zero());
}

TEST(PowerTable, LogAntilogAndCeiling) {
    const PowerTable table(make_field(3, 5));
    const Field& f = table.field();
    for (std::uint64_t i = 0; i < table.cycle(); i += 7) EXPECT_EQ(table.log(table.power(i)), i);
    EXPECT_THROW(table.log(f.zero()), std::domain_error);
    EXPECT_THROW(PowerTable(make_field(2, 23)), std::invalid_argument);
}

TEST(KloostermanJson, RoundTrip) {
    const PowerTable table(make_field(7, 2));
    const KloostermanValue kv = kloosterman_sum_at_power(table, 11);
    const Json j = kv;
    EXPECT_EQ(kloosterman_value_from_json(j), kv);
    EXPECT_EQ(j.at("is_minus_one").get<bool>(), false);
    EXPECT_EQ(j.at("embeddings").size(), 6u);
}
