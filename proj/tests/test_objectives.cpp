#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "topoplan/errors.hpp"
#include "topoplan/objectives.hpp"
#include "test_support.hpp"

using namespace topoplan;

namespace {

ObjectiveVector random_vector(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> lf1(70.0, 90.0);
    std::uniform_int_distribution<int> small(0, 3);
    return {round_lf1(lf1(rng)), small(rng), small(rng), small(rng)};
}

// plain pairwise-check oracle
std::vector<ObjectiveVector> quadratic_front(const std::vector<ObjectiveVector>& points) {
    std::vector<ObjectiveVector> unique;
    for (const auto& p : points)
        if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(p);
    std::vector<ObjectiveVector> front;
    for (const auto& p : unique) {
        bool dominated = false;
        for (const auto& q : unique)
            if (dominates(q, p)) dominated = true;
        if (!dominated) front.push_back(p);
    }
    return front;
}

bool same_point_set(std::vector<ObjectiveVector> a, std::vector<ObjectiveVector> b) {
    auto less = [](const ObjectiveVector& x, const ObjectiveVector& y) {
        return std::tie(x.lf1, x.depth, x.switches, x.non_ref) <
               std::tie(y.lf1, y.depth, y.switches, y.non_ref);
    };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    return a == b;
}

}  // namespace

TEST_CASE("evaluate the all-reference strategy on the stressed day") {
    auto instance = test::day_reference_instance();
    Strategy all_ref;
    all_ref.genes.assign(24, 0);
    auto v = evaluate(instance, all_ref);
    CHECK(v.lf1 == doctest::Approx(144.4).epsilon(1e-12));
    CHECK(v.depth == 0);
    CHECK(v.switches == 0);
    CHECK(v.non_ref == 0);
}

TEST_CASE("evaluate a single-step reference strategy") {
    GeneratorConfig config;
    config.t_max = 1;
    config.count_per_depth = {{1, 1}};
    config.seed = 2;
    auto instance = generate_instance(config);
    Strategy s{{0}};
    auto v = evaluate(instance, s);
    CHECK(v.lf1 == instance.lf1(0, 0));
    CHECK(v == ObjectiveVector{instance.lf1(0, 0), 0, 0, 0});
}

TEST_CASE("evaluate matches a direct recomputation on random strategies") {
    auto instance = test::small_instance(1);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Strategy s;
        for (int t = 0; t < instance.t_max(); ++t) {
            const auto& pool = instance.available_at(t);
            std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
            s.genes.push_back(pool[dist(rng)]);
        }
        auto v = evaluate(instance, s);

        double lf1 = 0.0;
        int depth = 0, switches = 0, non_ref = 0;
        for (int t = 0; t < instance.t_max(); ++t) {
            lf1 = std::max(lf1, instance.lf1(s.genes[t], t));
            depth = std::max(depth, instance.depth_of(s.genes[t]));
            if (t >= 1 && s.genes[t] != s.genes[t - 1]) ++switches;
            if (s.genes[t] != instance.reference_id()) ++non_ref;
        }
        CHECK(v == ObjectiveVector{lf1, depth, switches, non_ref});
    }
}

TEST_CASE("evaluate rejects unavailable genes") {
    auto instance = test::day_reference_instance();
    Strategy s;
    s.genes.assign(24, 0);
    s.genes[5] = 7;  // no such topology
    CHECK_THROWS_AS(evaluate(instance, s), ValidationError);
}

TEST_CASE("dominates follows the four-objective rule") {
    CHECK_FALSE(dominates({80, 1, 2, 3}, {80, 1, 2, 3}));
    CHECK(dominates({80, 1, 2, 3}, {80, 2, 2, 3}));
    CHECK_FALSE(dominates({80, 1, 2, 3}, {79, 2, 2, 3}));
    CHECK_FALSE(dominates({79, 2, 2, 3}, {80, 1, 2, 3}));
}

TEST_CASE("dominance is irreflexive, asymmetric and transitive") {
    std::mt19937_64 rng(7);
    std::vector<ObjectiveVector> points;
    for (int i = 0; i < 60; ++i) points.push_back(random_vector(rng));
    for (const auto& a : points) {
        CHECK_FALSE(dominates(a, a));
        for (const auto& b : points) {
            if (dominates(a, b)) CHECK_FALSE(dominates(b, a));
            for (const auto& c : points)
                if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
        }
    }
}

TEST_CASE("pareto_front basics") {
    std::vector<ObjectiveVector> two{{1, 0, 0, 0}, {2, 0, 0, 0}};
    CHECK(pareto_front(two) == std::vector<ObjectiveVector>{{1, 0, 0, 0}});

    std::vector<ObjectiveVector> one{{5, 1, 2, 3}};
    CHECK(pareto_front(one) == one);
}

TEST_CASE("pareto_front agrees with the quadratic oracle on random sets") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ObjectiveVector> points;
        for (int i = 0; i < 200; ++i) points.push_back(random_vector(rng));
        CHECK(same_point_set(pareto_front(points), quadratic_front(points)));
    }
}

TEST_CASE("pareto_front is invariant under duplication and permutation") {
    std::mt19937_64 rng(13);
    std::vector<ObjectiveVector> points;
    for (int i = 0; i < 50; ++i) points.push_back(random_vector(rng));
    auto base = pareto_front(points);

    auto doubled = points;
    doubled.insert(doubled.end(), points.begin(), points.end());
    std::shuffle(doubled.begin(), doubled.end(), rng);
    CHECK(pareto_front(doubled) == base);
}

TEST_CASE("rank_fronts peels chains and incomparable sets") {
    std::vector<ObjectiveVector> chain{{1, 0, 0, 0}, {2, 1, 0, 0}, {3, 2, 0, 0}};
    auto fronts = rank_fronts(chain, 10);
    REQUIRE(fronts.size() == 3);
    for (const auto& front : fronts) CHECK(front.size() == 1);

    std::vector<ObjectiveVector> incomparable{{1, 3, 0, 0}, {2, 2, 0, 0}, {3, 1, 0, 0}};
    fronts = rank_fronts(incomparable, 10);
    REQUIRE(fronts.size() == 1);
    CHECK(fronts[0].size() == 3);
}

TEST_CASE("rank_fronts agrees with iterated peeling") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ObjectiveVector> points;
        for (int i = 0; i < 120; ++i) points.push_back(random_vector(rng));

        auto fronts = rank_fronts(points, 1000);

        std::vector<ObjectiveVector> remaining;
        for (const auto& p : points)
            if (std::find(remaining.begin(), remaining.end(), p) == remaining.end())
                remaining.push_back(p);
        std::size_t level = 0;
        while (!remaining.empty()) {
            auto front = quadratic_front(remaining);
            REQUIRE(level < fronts.size());
            CHECK(same_point_set(fronts[level], front));
            std::vector<ObjectiveVector> next;
            for (const auto& p : remaining)
                if (std::find(front.begin(), front.end(), p) == front.end()) next.push_back(p);
            remaining = std::move(next);
            ++level;
        }
        CHECK(level == fronts.size());
    }
}

TEST_CASE("every deeper-front point is dominated by the front above") {
    std::mt19937_64 rng(19);
    std::vector<ObjectiveVector> points;
    for (int i = 0; i < 150; ++i) points.push_back(random_vector(rng));
    auto fronts = rank_fronts(points, 1000);
    for (std::size_t f = 1; f < fronts.size(); ++f) {
        for (const auto& p : fronts[f]) {
            bool dominated_by_prev = false;
            for (const auto& q : fronts[f - 1])
                if (dominates(q, p)) dominated_by_prev = true;
            CHECK(dominated_by_prev);
            for (const auto& q : fronts[f]) CHECK_FALSE(dominates(q, p));
        }
    }
}

TEST_CASE("round_lf1 rounds to one decimal, ties away from zero") {
    CHECK(round_lf1(80.04) == doctest::Approx(80.0).epsilon(1e-12));
    CHECK(round_lf1(80.05) == doctest::Approx(80.1).epsilon(1e-12));
    CHECK(round_lf1(144.4) == doctest::Approx(144.4).epsilon(1e-12));
    CHECK(round_lf1(-80.05) == doctest::Approx(-80.1).epsilon(1e-12));
    CHECK(std::isinf(round_lf1(std::numeric_limits<double>::infinity())));
    CHECK(lf1_to_deci(std::numeric_limits<double>::infinity()) == LF1_DECI_INFINITY);

    // nearest multiple of 0.1 within half a quantum
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> dist(0.0, 300.0);
    for (int i = 0; i < 10000; ++i) {
        const double x = dist(rng);
        const long long deci = lf1_to_deci(x);
        CHECK(std::abs(x * 10.0 - static_cast<double>(deci)) <= 0.5 + 1e-9);
        CHECK(round_lf1(x) == doctest::Approx(static_cast<double>(deci) / 10.0).epsilon(1e-12));
    }
}
