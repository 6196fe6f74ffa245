#pragma once

// Exhaustive search for K_{q^n}(a) = -1 with a in F_q^*, n > 1, over every field F_{p^d}
// with p^d within the configured ceiling and every factorization d = m * n.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kloos {

inline constexpr std::uint64_t kSweepCeiling = std::uint64_t{1} << 16;

struct SearchConfig {
    std::vector<std::uint32_t> primes;
    std::uint64_t max_order = kSweepCeiling;
    std::string ceiling_source = "default";
    unsigned workers = 1;
    std::uint64_t seed = 0;
    /// Per-instance lambda-residue and Weil-bound checks, minimal-polynomial invariants for p > 2,
    /// and the prime-degree reduction cross-check for composite n.
    bool verify_properties = false;
    std::optional<std::string> checkpoint_path;
    bool resume = false;
};

struct SearchCell {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t n = 0;

    std::uint32_t d() const { return m * n; }
    friend bool operator==(const SearchCell&, const SearchCell&) = default;
};

struct SearchHit {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t n = 0;
    std::uint64_t a_index = 0;  // a = delta^a_index, delta generating F_q^*
    std::vector<std::uint64_t> counts;
    bool reverified = false;

    std::uint64_t field_order() const;
    friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

struct CellSummary {
    SearchCell cell;
    std::uint64_t instances = 0;
    std::uint64_t hits = 0;
    std::uint64_t property_checks = 0;
    friend bool operator==(const CellSummary&, const CellSummary&) = default;
};

struct SearchReport {
    std::vector<std::uint32_t> primes;
    std::uint64_t ceiling = 0;
    std::string ceiling_source;
    std::uint64_t seed = 0;
    std::vector<SearchCell> grid;
    std::vector<CellSummary> cells;
    std::uint64_t instances_tested = 0;
    std::vector<SearchHit> hits;
    std::vector<std::string> failures;  // failed property or re-verification checks
    double runtime_seconds = 0.0;

    friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

/// Cells (p, m, n) with n > 1 and p^{mn} <= max_order, in canonical order.
/// Throws std::invalid_argument for a non-prime p or a ceiling above 2^16.
std::vector<SearchCell> search_grid(const std::vector<std::uint32_t>& primes, std::uint64_t max_order);

SearchReport exhaustive_search(const SearchConfig& config);

/// Rows "p,m,n,a_index,field_order,counts" with counts joined by ';'.
std::string hits_to_csv(const SearchReport& report);

}  // namespace kloos
