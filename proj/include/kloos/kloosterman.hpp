#pragma once

// Exact Kloosterman sums K(b) = sum_{x != 0} zeta_p^{Tr(x + b/x)} as elements of Z[zeta_p].
//
// The fast path walks x = gamma^i over the cyclic group, so b/x = gamma^{k - i} for b = gamma^k
// and the sum reduces to a tally over a precomputed table of Tr(gamma^i). The naive path
// enumerates elements by coefficient vector and inverts each one; it shares no code with
// the fast path beyond Field arithmetic and is used to re-verify results.

#include <cstdint>
#include <span>
#include <vector>

#include "kloos/cyclotomic.hpp"
#include "kloos/finite_field.hpp"

namespace kloos {

/// Discrete-log, antilog and trace tables for F_{p^d}, indexed by power of the generator.
class PowerTable {
public:
    /// Throws std::invalid_argument when p^d exceeds 2^22.
    explicit PowerTable(FieldSpec spec);

    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 22;

    const Field& field() const { return field_; }
    std::uint32_t p() const { return field_.p(); }
    std::uint64_t cycle() const { return antilog_.size(); }

    /// gamma^i for any i (reduced mod the group order).
    FieldElement power(std::uint64_t i) const;
    /// Discrete log to base gamma; throws std::domain_error for zero.
    std::uint64_t log(const FieldElement& e) const;
    std::uint64_t log_of_index(std::uint64_t element_index) const;
    std::uint64_t antilog_index(std::uint64_t i) const { return antilog_[i % antilog_.size()]; }

    /// Tr(gamma^i) for i in [0, p^d - 1).
    std::span<const std::uint32_t> traces() const { return traces_; }

private:
    Field field_;
    std::vector<std::uint32_t> antilog_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> traces_;
};

/// Relative traces Tr_{F_q/F_p}(delta^i) on the subfield F_q = F_{p^m}, delta = gamma^{(p^d-1)/(q-1)}.
class SubfieldTraces {
public:
    /// Throws std::invalid_argument unless m divides d.
    SubfieldTraces(const PowerTable& table, std::uint32_t m);

    std::uint32_t m() const { return m_; }
    std::uint64_t q() const { return traces_.size() + 1; }
    /// Exponent step: delta^i = gamma^{i * step}.
    std::uint64_t step() const { return step_; }
    std::span<const std::uint32_t> traces() const { return traces_; }

    /// Power index i with delta^i = j, for a residue j in F_p^*.
    std::uint64_t delta_log_of_residue(std::uint64_t j) const;

private:
    std::uint32_t m_;
    std::uint64_t step_;
    std::uint32_t p_;
    std::vector<std::uint32_t> traces_;
    std::vector<std::uint64_t> residue_logs_;
};

struct KloostermanValue {
    FieldSpec field;               // ambient field holding b
    FieldElement b;
    std::uint32_t degree = 1;      // summation runs over F_{p^degree} (a subfield of `field`)
    std::vector<std::uint64_t> counts;  // counts[c] = #{x : Tr(x + b/x) = c}
    CyclotomicInteger value{2};

    bool is_minus_one() const;

    friend bool operator==(const KloostermanValue&, const KloostermanValue&) = default;
};

bool is_minus_one(const CyclotomicInteger& z);

/// Tally of Tr-values of x + b/x for b = g^k over a cyclic group given its trace table.
std::vector<std::uint64_t> kloosterman_counts(std::span<const std::uint32_t> traces, std::uint64_t k,
                                              std::uint32_t p);

/// K_{p^d}(b) by the power-table walk. Throws std::domain_error for b = 0.
KloostermanValue kloosterman_sum(const PowerTable& table, const FieldElement& b);
KloostermanValue kloosterman_sum(const FieldSpec& field, const FieldElement& b);
/// K_{p^d}(gamma^k).
KloostermanValue kloosterman_sum_at_power(const PowerTable& table, std::uint64_t k);

/// K_q(delta^k) over the subfield F_q.
KloostermanValue subfield_kloosterman_sum(const PowerTable& table, const SubfieldTraces& sub, std::uint64_t k);

/// Counts by direct enumeration with explicit inversion and Frobenius traces.
std::vector<std::uint64_t> kloosterman_counts_naive(const Field& field, const FieldElement& b);
/// Same over the subfield of degree m: enumerates every element with e^{p^m} = e.
std::vector<std::uint64_t> subfield_kloosterman_counts_naive(const Field& field, std::uint32_t m,
                                                             const FieldElement& b);

/// The sum over all of F with 0^{-1} = 0, i.e. K + 1.
CyclotomicInteger shifted_sum(const KloostermanValue& kv);

/// |sigma(K)| <= 2 sqrt(order) + slack for every complex embedding sigma.
bool within_weil_bound(const CyclotomicInteger& value, std::uint64_t order, double slack = 1e-6);

}  // namespace kloos
