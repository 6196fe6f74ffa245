#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "kloos/kloosterman.hpp"
#include "kloos/search.hpp"
#include "kloos/serialization.hpp"

using namespace kloos;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("kloos_search_" + name)).string();
}

Json stable(SearchReport r) {
    r.runtime_seconds = 0;
    return Json(r);
}

}  // namespace

TEST(SearchGrid, CellsAndValidation) {
    const auto grid = search_grid({2}, 64);
    // d = 2..6 with every proper divisor m
    std::vector<SearchCell> expected{{2, 1, 2}, {2, 1, 3}, {2, 1, 4}, {2, 2, 2}, {2, 1, 5}, {2, 1, 6}, {2, 2, 3}, {2, 3, 2}};
    EXPECT_EQ(grid, expected);
    EXPECT_THROW(search_grid({4}, 64), std::invalid_argument);
    EXPECT_THROW(search_grid({2}, kSweepCeiling + 1), std::invalid_argument);
    EXPECT_EQ(search_grid({3, 3}, 81), search_grid({3}, 81));
}

TEST(ExhaustiveSearch, PowersOfTwoHitOnlyAtSixteen) {
    SearchConfig config;
    config.primes = {2};
    config.max_order = 4096;
    config.verify_properties = true;
    const SearchReport report = exhaustive_search(config);
    EXPECT_TRUE(report.failures.empty());
    ASSERT_EQ(report.hits.size(), 2u);
    for (const auto& hit : report.hits) {
        EXPECT_EQ(hit.field_order(), 16u);
        EXPECT_TRUE(hit.reverified);
        EXPECT_EQ(hit.a_index, 0u);
    }
    EXPECT_EQ(report.hits[0].m, 1u);
    EXPECT_EQ(report.hits[0].n, 4u);
    EXPECT_EQ(report.hits[1].m, 2u);
    EXPECT_EQ(report.hits[1].n, 2u);
    // Independent oracle: the hit counts equal naive summation over F_16 at b = 1.
    const Field f16(make_field(2, 4));
    EXPECT_EQ(report.hits[0].counts, kloosterman_counts_naive(f16, f16.one()));
    std::uint64_t instances = 0;
    for (const auto& cell : report.grid) instances += (std::uint64_t{1} << cell.m) - 1;
    EXPECT_EQ(report.instances_tested, instances);
}

TEST(ExhaustiveSearch, OddPrimesHaveNoHits) {
    SearchConfig config;
    config.primes = {3, 5, 7, 11};
    config.max_order = 1u << 14;
    config.verify_properties = true;
    const SearchReport report = exhaustive_search(config);
    EXPECT_TRUE(report.hits.empty());
    EXPECT_TRUE(report.failures.empty());
    for (const auto& cell : report.cells) EXPECT_GT(cell.property_checks, 0u);
}

TEST(ExhaustiveSearch, DeterministicAcrossWorkerCounts) {
    SearchConfig config;
    config.primes = {2, 3, 5};
    config.max_order = 1u << 12;
    config.verify_properties = true;
    config.workers = 1;
    const Json one = stable(exhaustive_search(config));
    config.workers = 4;
    const Json four = stable(exhaustive_search(config));
    EXPECT_EQ(one.dump(), four.dump());
}

TEST(ExhaustiveSearch, CheckpointAndResume) {
    const std::string ckpt = temp_path("ckpt.json");
    std::filesystem::remove(ckpt);
    SearchConfig config;
    config.primes = {2, 3};
    config.max_order = 1u << 10;
    config.checkpoint_path = ckpt;
    const SearchReport full = exhaustive_search(config);
    ASSERT_TRUE(std::filesystem::exists(ckpt));

    // Truncate the checkpoint to its first two cells and resume from there.
    Json partial = Json::parse(std::ifstream(ckpt));
    SearchReport saved = partial.get<SearchReport>();
    saved.cells.resize(2);
    saved.hits.clear();
    saved.instances_tested = saved.cells[0].instances + saved.cells[1].instances;
    std::ofstream(ckpt, std::ios::trunc) << Json(saved).dump();

    config.resume = true;
    const SearchReport resumed = exhaustive_search(config);
    EXPECT_EQ(stable(resumed), stable(full));

    // A checkpoint for another configuration is refused.
    config.primes = {2, 5};
    EXPECT_THROW(exhaustive_search(config), std::invalid_argument);
    std::filesystem::remove(ckpt);
}

TEST(SearchReportJson, RoundTripAndCsv) {
    SearchConfig config;
    config.primes = {2};
    config.max_order = 256;
    const SearchReport report = exhaustive_search(config);
    const Json j = report;
    EXPECT_EQ(j.get<SearchReport>(), report);
    EXPECT_EQ(j.at("header").at("ceiling_source"), "default");
    const std::string csv = hits_to_csv(report);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "p,m,n,a_index,field_order,counts");
    EXPECT_NE(csv.find("2,1,4,0,16,"), std::string::npos);
    EXPECT_NE(csv.find("2,2,2,0,16,"), std::string::npos);
}
