#include "kloos/search.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kloos/dickson.hpp"
#include "kloos/kloosterman.hpp"
#include "kloos/number_theory.hpp"
#include "kloos/serialization.hpp"
#include "kloos/subfield_verifier.hpp"

namespace kloos {

namespace {

struct ChunkResult {
    std::uint64_t instances = 0;
    std::uint64_t property_checks = 0;
    std::vector<SearchHit> hits;
    std::vector<std::string> failures;
};

std::string describe(const SearchCell& cell, std::uint64_t a_index) {
    std::ostringstream out;
    out << "(p=" << cell.p << ", m=" << cell.m << ", n=" << cell.n << ", a_index=" << a_index << ")";
    return out.str();
}

/// Evaluates the cell for a in [begin, end) of the delta-power range.
ChunkResult run_chunk(const PowerTable& table, const SubfieldTraces& sub,
                      const std::vector<std::pair<std::uint32_t, SubfieldTraces>>& intermediates, const SearchCell& cell,
                      std::uint64_t begin, std::uint64_t end, bool verify) {
    ChunkResult out;
    const std::uint32_t p = cell.p;
    const std::uint64_t order = table.field().order();
    for (std::uint64_t i = begin; i < end; ++i) {
        const std::uint64_t k = i * sub.step();
        std::vector<std::uint64_t> counts = kloosterman_counts(table.traces(), k, p);
        const CyclotomicInteger value = CyclotomicInteger::from_exponent_counts(p, std::span<const std::uint64_t>(counts));
        ++out.instances;

        if (is_minus_one(value)) {
            SearchHit hit{cell.p, cell.m, cell.n, i, counts, false};
            // Independent path: coefficient-order enumeration with explicit inversion.
            const Field& field = table.field();
            const FieldElement a = field.pow(field.generator(), k);
            hit.reverified = kloosterman_counts_naive(field, a) == counts && field.pow(a, sub.q()) == a;
            if (!hit.reverified) out.failures.push_back("hit failed re-verification at " + describe(cell, i));
            out.hits.push_back(std::move(hit));
        }

        if (!verify) continue;
        if (value.lambda_residue() != (p - 1) % p) out.failures.push_back("lambda residue != -1 at " + describe(cell, i));
        if (!within_weil_bound(value, order)) out.failures.push_back("Weil bound violated at " + describe(cell, i));
        out.property_checks += 2;
        if (p > 2) {
            try {
                const MinimalPolynomialRecord rec = minimal_polynomial(table, sub, i);
                if (rec.t > minimal_polynomial_degree_bound(p)) {
                    out.failures.push_back("minimal polynomial degree too large at " + describe(cell, i));
                }
                if (!binomial_congruence_check(rec)) out.failures.push_back("congruence failed at " + describe(cell, i));
            } catch (const std::logic_error& e) {
                out.failures.push_back(std::string(e.what()) + " at " + describe(cell, i));
            }
            out.property_checks += 2;
        }
        // n = s * l: the same sum seen from F_Q = F_{q^s} with a prime-degree extension on top.
        for (const auto& [ell, mid] : intermediates) {
            const KloostermanValue inner = subfield_kloosterman_sum(table, mid, k / mid.step());
            CyclotomicInteger rhs = dickson_eval(ell, BigInt(static_cast<unsigned long>(mid.q())), inner.value);
            if (ell % 2 == 0) rhs = -rhs;
            if (rhs != value) out.failures.push_back("prime-degree reduction mismatch at " + describe(cell, i));
            ++out.property_checks;
        }
    }
    return out;
}

void write_checkpoint(const std::string& path, const SearchReport& partial) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
        out << Json(partial).dump(1) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

SearchReport read_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read checkpoint " + path);
    return Json::parse(in).get<SearchReport>();
}

bool hit_less(const SearchHit& a, const SearchHit& b) {
    return std::tie(a.p, a.m, a.n, a.a_index) < std::tie(b.p, b.m, b.n, b.a_index);
}

}  // namespace

std::uint64_t SearchHit::field_order() const { return checked_pow(p, m * n); }

std::vector<SearchCell> search_grid(const std::vector<std::uint32_t>& primes, std::uint64_t max_order) {
    if (max_order > kSweepCeiling) throw std::invalid_argument("sweep ceiling may not exceed 2^16");
    std::vector<std::uint32_t> sorted = primes;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<SearchCell> grid;
    for (std::uint32_t p : sorted) {
        if (!is_prime(p)) throw std::invalid_argument("search prime " + std::to_string(p) + " is not prime");
        std::uint64_t order = std::uint64_t{p} * p;
        for (std::uint32_t d = 2; order <= max_order; ++d, order *= p) {
            for (std::uint32_t m = 1; m < d; ++m) {
                if (d % m == 0) grid.push_back(SearchCell{p, m, d / m});
            }
        }
    }
    return grid;
}

SearchReport exhaustive_search(const SearchConfig& config) {
    const auto started = std::chrono::steady_clock::now();
    SearchReport report;
    report.grid = search_grid(config.primes, config.max_order);
    report.primes = config.primes;
    std::sort(report.primes.begin(), report.primes.end());
    report.primes.erase(std::unique(report.primes.begin(), report.primes.end()), report.primes.end());
    report.ceiling = config.max_order;
    report.ceiling_source = config.ceiling_source;
    report.seed = config.seed;

    if (config.resume) {
        if (!config.checkpoint_path) throw std::invalid_argument("resume requires a checkpoint path");
        if (std::filesystem::exists(*config.checkpoint_path)) {
            SearchReport saved = read_checkpoint(*config.checkpoint_path);
            if (saved.primes != report.primes || saved.ceiling != report.ceiling || saved.seed != report.seed ||
                saved.grid != report.grid) {
                throw std::invalid_argument("checkpoint was written for a different search configuration");
            }
            report.cells = std::move(saved.cells);
            report.hits = std::move(saved.hits);
            report.failures = std::move(saved.failures);
            report.instances_tested = saved.instances_tested;
        }
    }

    const unsigned workers = std::max(1u, config.workers);
    std::unique_ptr<PowerTable> table;
    for (const SearchCell& cell : report.grid) {
        const bool done = std::any_of(report.cells.begin(), report.cells.end(),
                                      [&](const CellSummary& s) { return s.cell == cell; });
        if (done) continue;

        if (!table || table->p() != cell.p || table->field().d() != cell.d()) {
            table.reset();
            table = std::make_unique<PowerTable>(make_field(cell.p, cell.d(), config.seed));
        }
        const SubfieldTraces sub(*table, cell.m);
        std::vector<std::pair<std::uint32_t, SubfieldTraces>> intermediates;
        if (config.verify_properties) {
            for (std::uint64_t ell : distinct_prime_factors(cell.n)) {
                if (ell == cell.n) continue;
                intermediates.emplace_back(static_cast<std::uint32_t>(ell),
                                           SubfieldTraces(*table, cell.m * cell.n / static_cast<std::uint32_t>(ell)));
            }
        }

        const std::uint64_t total = sub.q() - 1;
        const std::uint64_t chunks = std::min<std::uint64_t>(workers, total);
        std::vector<ChunkResult> results(chunks);
        std::vector<std::exception_ptr> errors(chunks);
        std::vector<std::thread> threads;
        for (std::uint64_t c = 0; c < chunks; ++c) {
            const std::uint64_t begin = total * c / chunks;
            const std::uint64_t end = total * (c + 1) / chunks;
            threads.emplace_back([&, c, begin, end] {
                try {
                    results[c] = run_chunk(*table, sub, intermediates, cell, begin, end, config.verify_properties);
                } catch (...) {
                    errors[c] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }

        CellSummary summary{cell, 0, 0, 0};
        for (auto& r : results) {
            summary.instances += r.instances;
            summary.hits += r.hits.size();
            summary.property_checks += r.property_checks;
            report.hits.insert(report.hits.end(), r.hits.begin(), r.hits.end());
            report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
        }
        report.instances_tested += summary.instances;
        report.cells.push_back(summary);
        if (config.checkpoint_path) write_checkpoint(*config.checkpoint_path, report);
    }

    // Canonical order regardless of worker count or resume history.
    std::sort(report.hits.begin(), report.hits.end(), hit_less);
    std::vector<CellSummary> ordered;
    for (const auto& cell : report.grid) {
        for (const auto& s : report.cells) {
            if (s.cell == cell) ordered.push_back(s);
        }
    }
    report.cells = std::move(ordered);
    report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

std::string hits_to_csv(const SearchReport& report) {
    std::ostringstream out;
    out << "p,m,n,a_index,field_order,counts\n";
    for (const auto& hit : report.hits) {
        out << hit.p << ',' << hit.m << ',' << hit.n << ',' << hit.a_index << ',' << hit.field_order() << ',';
        for (std::size_t i = 0; i < hit.counts.size(); ++i) out << (i ? ";" : "") << hit.counts[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace kloos
