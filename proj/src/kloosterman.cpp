#include "kloos/kloosterman.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "kloos/number_theory.hpp"

namespace kloos {

namespace {

constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

}  // namespace

PowerTable::PowerTable(FieldSpec spec) : field_(std::move(spec)) {
    if (field_.order() > kMaxOrder) {
        throw std::invalid_argument("power tables are limited to fields of order <= 2^22");
    }
    const std::uint32_t p = field_.p();
    const std::uint32_t d = field_.d();
    const std::uint64_t cycle = field_.multiplicative_order();

    // Tr is F_p-linear: precompute it on the monomial basis.
    std::vector<std::uint64_t> basis_trace(d);
    for (std::uint32_t j = 0; j < d; ++j) {
        FieldElement e = field_.zero();
        e.coeffs[j] = 1;
        basis_trace[j] = field_.trace_to_prime(e);
    }

    antilog_.resize(cycle);
    traces_.resize(cycle);
    log_.assign(field_.order(), kNoLog);
    const FieldElement gamma = field_.generator();
    FieldElement x = field_.one();
    for (std::uint64_t i = 0; i < cycle; ++i) {
        const std::uint64_t index = field_.to_index(x);
        if (log_[index] != kNoLog) throw std::logic_error("field generator is not primitive");
        antilog_[i] = static_cast<std::uint32_t>(index);
        log_[index] = static_cast<std::uint32_t>(i);
        std::uint64_t tr = 0;
        for (std::uint32_t j = 0; j < d; ++j) tr += x.coeffs[j] * basis_trace[j] % p;
        traces_[i] = static_cast<std::uint32_t>(tr % p);
        x = field_.generator_is_x() ? field_.mul_by_x(x) : field_.mul(x, gamma);
    }
    if (x != field_.one()) throw std::logic_error("generator order does not match field order");
}

FieldElement PowerTable::power(std::uint64_t i) const { return field_.from_index(antilog_index(i)); }

std::uint64_t PowerTable::log_of_index(std::uint64_t element_index) const {
    if (element_index >= log_.size()) throw std::invalid_argument("element index out of range");
    const std::uint32_t l = log_[element_index];
    if (l == kNoLog) throw std::domain_error("discrete log of zero");
    return l;
}

std::uint64_t PowerTable::log(const FieldElement& e) const {
    if (!field_.is_valid(e)) throw std::invalid_argument("element does not belong to this field");
    return log_of_index(field_.to_index(e));
}

SubfieldTraces::SubfieldTraces(const PowerTable& table, std::uint32_t m) : m_(m), p_(table.p()) {
    const Field& field = table.field();
    if (m == 0 || field.d() % m != 0) {
        throw std::invalid_argument("subfield degree " + std::to_string(m) + " does not divide " +
                                    std::to_string(field.d()));
    }
    const std::uint64_t q = checked_pow(field.p(), m);
    const std::uint64_t cycle = table.cycle();
    step_ = cycle / (q - 1);
    traces_.resize(q - 1);
    for (std::uint64_t i = 0; i < q - 1; ++i) {
        // Tr_{F_q/F_p}(y) = y + y^p + ... + y^{p^{m-1}}, evaluated in the ambient field.
        std::uint64_t exponent = (i * step_) % cycle;
        FieldElement acc = field.zero();
        for (std::uint32_t j = 0; j < m; ++j) {
            acc = field.add(acc, table.power(exponent));
            exponent = static_cast<std::uint64_t>(static_cast<unsigned __int128>(exponent) * field.p() % cycle);
        }
        for (std::uint32_t j = 1; j < field.d(); ++j) {
            if (acc.coeffs[j] != 0) throw std::logic_error("relative trace left the prime field");
        }
        traces_[i] = acc.coeffs[0];
    }
    // F_p^* sits inside F_q^* as the powers of delta^{(q-1)/(p-1)}.
    residue_logs_.assign(p_, 0);
    for (std::uint64_t k = 0; k < p_ - 1; ++k) {
        const std::uint64_t i = k * ((q - 1) / (p_ - 1));
        const FieldElement e = table.power(i * step_);
        residue_logs_[e.coeffs[0]] = i;
    }
}

std::uint64_t SubfieldTraces::delta_log_of_residue(std::uint64_t j) const {
    j %= p_;
    if (j == 0) throw std::domain_error("discrete log of zero");
    return residue_logs_[j];
}

bool is_minus_one(const CyclotomicInteger& z) {
    const auto value = z.as_rational_integer();
    return value && *value == -1;
}

bool KloostermanValue::is_minus_one() const { return kloos::is_minus_one(value); }

std::vector<std::uint64_t> kloosterman_counts(std::span<const std::uint32_t> traces, std::uint64_t k,
                                              std::uint32_t p) {
    const std::uint64_t cycle = traces.size();
    std::vector<std::uint64_t> counts(p, 0);
    std::uint64_t j = k % cycle;  // tracks k - i mod cycle
    for (std::uint64_t i = 0; i < cycle; ++i) {
        std::uint32_t c = traces[i] + traces[j];
        if (c >= p) c -= p;
        ++counts[c];
        j = (j == 0) ? cycle - 1 : j - 1;
    }
    return counts;
}

KloostermanValue kloosterman_sum_at_power(const PowerTable& table, std::uint64_t k) {
    KloostermanValue kv;
    kv.field = table.field().spec();
    kv.b = table.power(k);
    kv.degree = table.field().d();
    kv.counts = kloosterman_counts(table.traces(), k, table.p());
    kv.value = CyclotomicInteger::from_exponent_counts(table.p(), std::span<const std::uint64_t>(kv.counts));
    return kv;
}

KloostermanValue kloosterman_sum(const PowerTable& table, const FieldElement& b) {
    if (!table.field().is_valid(b)) throw std::invalid_argument("element does not belong to this field");
    if (table.field().is_zero(b)) throw std::domain_error("Kloosterman sum is undefined for b = 0");
    return kloosterman_sum_at_power(table, table.log(b));
}

KloostermanValue kloosterman_sum(const FieldSpec& field, const FieldElement& b) {
    return kloosterman_sum(PowerTable(field), b);
}

KloostermanValue subfield_kloosterman_sum(const PowerTable& table, const SubfieldTraces& sub, std::uint64_t k) {
    KloostermanValue kv;
    kv.field = table.field().spec();
    kv.b = table.power((k % (sub.q() - 1)) * sub.step());
    kv.degree = sub.m();
    kv.counts = kloosterman_counts(sub.traces(), k, table.p());
    kv.value = CyclotomicInteger::from_exponent_counts(table.p(), std::span<const std::uint64_t>(kv.counts));
    return kv;
}

std::vector<std::uint64_t> kloosterman_counts_naive(const Field& field, const FieldElement& b) {
    if (field.is_zero(b)) throw std::domain_error("Kloosterman sum is undefined for b = 0");
    std::vector<std::uint64_t> counts(field.p(), 0);
    for (std::uint64_t index = 1; index < field.order(); ++index) {
        const FieldElement x = field.from_index(index);
        const FieldElement t = field.add(x, field.mul(b, field.inv(x)));
        ++counts[field.trace_to_prime(t)];
    }
    return counts;
}

std::vector<std::uint64_t> subfield_kloosterman_counts_naive(const Field& field, std::uint32_t m,
                                                             const FieldElement& b) {
    if (m == 0 || field.d() % m != 0) throw std::invalid_argument("subfield degree must divide d");
    if (field.is_zero(b)) throw std::domain_error("Kloosterman sum is undefined for b = 0");
    const std::uint64_t q = checked_pow(field.p(), m);
    if (field.pow(b, q) != b) throw std::invalid_argument("b does not lie in the requested subfield");
    auto relative_trace = [&](const FieldElement& y) {
        FieldElement acc = y;
        FieldElement term = y;
        for (std::uint32_t j = 1; j < m; ++j) {
            term = field.frobenius(term);
            acc = field.add(acc, term);
        }
        return acc.coeffs[0];
    };
    std::vector<std::uint64_t> counts(field.p(), 0);
    for (std::uint64_t index = 1; index < field.order(); ++index) {
        const FieldElement x = field.from_index(index);
        if (field.pow(x, q) != x) continue;
        const FieldElement t = field.add(x, field.mul(b, field.inv(x)));
        ++counts[relative_trace(t)];
    }
    return counts;
}

CyclotomicInteger shifted_sum(const KloostermanValue& kv) {
    return kv.value + CyclotomicInteger::integer(kv.value.p(), 1);
}

bool within_weil_bound(const CyclotomicInteger& value, std::uint64_t order, double slack) {
    const double bound = 2.0 * std::sqrt(static_cast<double>(order)) + slack;
    for (const auto& z : value.complex_embeddings()) {
        if (std::abs(z) > bound) return false;
    }
    return true;
}

}  // namespace kloos
