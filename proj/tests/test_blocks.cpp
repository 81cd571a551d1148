#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <limits>

#include "topoplan/blocks.hpp"
#include "topoplan/errors.hpp"
#include "test_support.hpp"

using namespace topoplan;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

std::uint64_t fibonacci(int n) {
    std::uint64_t a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        std::uint64_t next = a + b;
        a = b;
        b = next;
    }
    return a;
}

// direct nested-loop recomputation used as the stats oracle
BlockStats brute_stats(const Instance& instance, Block block, int d_max) {
    BlockStats stats;
    stats.block = block;
    stats.ref_lf1 = 0.0;
    for (int t = block.t_s; t <= block.t_e; ++t)
        stats.ref_lf1 = std::max(stats.ref_lf1, instance.lf1(instance.reference_id(), t));
    stats.best_nonref_lf1.assign(d_max + 1, kInf);
    for (const auto& rec : instance.topologies()) {
        if (rec.id == instance.reference_id()) continue;
        double block_max = 0.0;
        bool everywhere = true;
        for (int t = block.t_s; t <= block.t_e && everywhere; ++t) {
            if (!instance.available(rec.id, t))
                everywhere = false;
            else
                block_max = std::max(block_max, instance.lf1(rec.id, t));
        }
        if (!everywhere) continue;
        for (int d = rec.depth; d <= d_max; ++d)
            stats.best_nonref_lf1[d] = std::min(stats.best_nonref_lf1[d], block_max);
    }
    return stats;
}

}  // namespace

TEST_CASE("enumerate_blocks counts and order") {
    CHECK(enumerate_blocks(24).size() == 300);
    CHECK(enumerate_blocks(1).size() == 1);
    CHECK(enumerate_blocks(4).size() == 10);  // C(4,2) + 4

    auto blocks = enumerate_blocks(5);
    for (std::size_t i = 1; i < blocks.size(); ++i)
        CHECK(std::tie(blocks[i - 1].t_s, blocks[i - 1].t_e) <
              std::tie(blocks[i].t_s, blocks[i].t_e));
    for (std::size_t i = 0; i < blocks.size(); ++i)
        CHECK(block_index(blocks[i].t_s, blocks[i].t_e, 5) == static_cast<int>(i));
}

TEST_CASE("enumerate_configurations matches binomial counts exhaustively") {
    CHECK(enumerate_configurations(24, 0).size() == 1);
    CHECK(enumerate_configurations(24, 1).size() == 23);
    CHECK(enumerate_configurations(6, 2).size() == 10);

    for (int t_max = 1; t_max <= 12; ++t_max) {
        std::uint64_t total = 0;
        for (int l = 0; l <= t_max - 1; ++l) {
            auto configs = enumerate_configurations(t_max, l);
            CHECK(configs.size() == binomial(t_max - 1, l));
            total += configs.size();
            for (const auto& config : configs) {
                REQUIRE(config.blocks.size() == static_cast<std::size_t>(l + 1));
                CHECK(config.blocks.front().t_s == 0);
                CHECK(config.blocks.back().t_e == t_max - 1);
                for (std::size_t b = 1; b < config.blocks.size(); ++b)
                    CHECK(config.blocks[b].t_s == config.blocks[b - 1].t_e + 1);
                CHECK(config.switches() == l);
            }
        }
        CHECK(total == (1ull << (t_max - 1)));
    }

    CHECK_THROWS_AS(enumerate_configurations(4, 4), ValidationError);
    CHECK_THROWS_AS(enumerate_configurations(4, -1), ValidationError);
}

TEST_CASE("enumerate_reference_assignments counts Fibonacci") {
    auto one_block = enumerate_configurations(3, 0)[0];
    CHECK(enumerate_reference_assignments(one_block).size() == 2);

    auto two_blocks = enumerate_configurations(3, 1)[0];
    CHECK(enumerate_reference_assignments(two_blocks).size() == 3);

    auto five_blocks = enumerate_configurations(5, 4)[0];
    auto assignments = enumerate_reference_assignments(five_blocks);
    CHECK(assignments.size() == 13);  // F_7

    for (int n = 1; n <= 12; ++n) {
        auto config = enumerate_configurations(n, n - 1)[0];
        auto all = enumerate_reference_assignments(config);
        CHECK(all.size() == fibonacci(n + 2));
        // independent subset-filter count
        std::uint64_t expected = 0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
            if ((mask & (mask << 1)) == 0) ++expected;
        CHECK(all.size() == expected);
        for (const auto& assignment : all)
            for (std::size_t i = 1; i < assignment.ref_blocks.size(); ++i)
                CHECK(assignment.ref_blocks[i] > assignment.ref_blocks[i - 1] + 1);
    }
}

TEST_CASE("compute_block_stats on the stressed day has no depth-0 candidates") {
    auto instance = test::day_reference_instance();
    auto stats = compute_block_stats(instance, {0, 23}, 0);
    CHECK(stats.ref_lf1 == doctest::Approx(144.4).epsilon(1e-12));
    CHECK(stats.best_nonref_lf1[0] == kInf);
}

TEST_CASE("compute_block_stats picks the single candidate on a singleton block") {
    std::vector<TopologyRecord> topologies{{0, 0}, {1, 1}};
    std::vector<std::vector<std::pair<TopologyId, double>>> rows(1);
    rows[0] = {{0, 112.0}, {1, 90.0}};
    Instance instance("single", 1, 0, topologies, rows);
    auto stats = compute_block_stats(instance, {0, 0}, 1);
    CHECK(stats.best_nonref_lf1[0] == kInf);
    CHECK(stats.best_nonref_lf1[1] == doctest::Approx(90.0));
}

TEST_CASE("compute_block_stats equals nested-loop recomputation on random instances") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto instance = test::small_instance(seed);
        const int d_max = instance.max_depth();
        for (const auto& block : enumerate_blocks(instance.t_max())) {
            auto fast = compute_block_stats(instance, block, d_max);
            auto slow = brute_stats(instance, block, d_max);
            CHECK(fast.ref_lf1 == slow.ref_lf1);
            REQUIRE(fast.best_nonref_lf1.size() == slow.best_nonref_lf1.size());
            for (std::size_t d = 0; d < fast.best_nonref_lf1.size(); ++d)
                CHECK(fast.best_nonref_lf1[d] == slow.best_nonref_lf1[d]);
            for (std::size_t d = 1; d < fast.best_nonref_lf1.size(); ++d)
                CHECK(fast.best_nonref_lf1[d] <= fast.best_nonref_lf1[d - 1]);
        }
    }
}

TEST_CASE("all-blocks kernels agree with the per-block reference, serial and parallel") {
    for (std::uint64_t seed : {2, 5, 8}) {
        auto instance = test::small_instance(seed, 6);
        const int d_max = instance.max_depth();
        auto serial = compute_all_block_stats_serial(instance, d_max);
        auto parallel = compute_all_block_stats(instance, d_max, 4);
        auto blocks = enumerate_blocks(instance.t_max());
        REQUIRE(serial.size() == blocks.size());
        REQUIRE(parallel.size() == blocks.size());
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            auto direct = compute_block_stats(instance, blocks[i], d_max);
            CHECK(serial[i].ref_lf1 == direct.ref_lf1);
            CHECK(serial[i].best_nonref_lf1 == direct.best_nonref_lf1);
            CHECK(parallel[i].ref_lf1 == serial[i].ref_lf1);
            CHECK(parallel[i].best_nonref_lf1 == serial[i].best_nonref_lf1);
        }
    }
}

TEST_CASE("admissible_topologies filters by depth, availability and threshold") {
    auto instance = test::small_instance(4, 5);
    const int d_max = instance.max_depth();
    Block block{1, 3};

    SUBCASE("infinite threshold keeps every non-reference candidate in G_B") {
        auto all = admissible_topologies(instance, block, d_max, kInf);
        std::vector<TopologyId> expected;
        for (const auto& rec : instance.topologies()) {
            if (rec.id == instance.reference_id()) continue;
            bool everywhere = true;
            for (int t = block.t_s; t <= block.t_e; ++t)
                if (!instance.available(rec.id, t)) everywhere = false;
            if (everywhere) expected.push_back(rec.id);
        }
        CHECK(all == expected);
    }
    SUBCASE("threshold below every block maximum gives the empty set") {
        CHECK(admissible_topologies(instance, block, d_max, 0.01).empty());
    }
    SUBCASE("threshold at the block best is attained by every member") {
        auto stats = compute_block_stats(instance, block, d_max);
        for (int d = 0; d <= d_max; ++d) {
            if (std::isinf(stats.best_nonref_lf1[d])) continue;
            auto members = admissible_topologies(instance, block, d, stats.best_nonref_lf1[d]);
            CHECK_FALSE(members.empty());
            for (TopologyId id : members) {
                double block_max = 0.0;
                for (int t = block.t_s; t <= block.t_e; ++t)
                    block_max = std::max(block_max, instance.lf1(id, t));
                CHECK(block_max <= stats.best_nonref_lf1[d]);
                CHECK(instance.depth_of(id) <= d);
            }
        }
    }
}
