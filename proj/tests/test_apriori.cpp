#include <catch2/catch_amalgamated.hpp>

#include "fim/apriori.hpp"
#include "fim/mfif.hpp"
#include "fim/oracle.hpp"
#include "fixtures.hpp"

using namespace fim;

TEST_CASE("apriori_join") {
    auto s = [](std::initializer_list<int> items) { return fixtures::items_1based(8, items); };

    SECTION("canonical three-set join") {
        auto joined = apriori_join({s({1, 2}), s({1, 3}), s({2, 3})});
        REQUIRE(joined.size() == 1);
        CHECK(joined.front() == s({1, 2, 3}));
    }
    SECTION("singletons pair up") {
        auto joined = apriori_join({s({1}), s({2})});
        REQUIRE(joined.size() == 1);
        CHECK(joined.front() == s({1, 2}));
    }
    SECTION("no shared prefix, no join") {
        CHECK(apriori_join({s({1, 2}), s({3, 4})}).empty());
    }
    SECTION("empty input") {
        CHECK(apriori_join({}).empty());
    }
}

TEST_CASE("apriori_prune") {
    auto s = [](std::initializer_list<int> items) { return fixtures::items_1based(8, items); };

    SECTION("candidate with a missing subset is removed") {
        auto kept = apriori_prune({s({1, 2, 3})}, {s({1, 2}), s({1, 3})});
        CHECK(kept.empty());
    }
    SECTION("candidate with all subsets present is kept") {
        auto kept = apriori_prune({s({1, 2, 3})}, {s({1, 2}), s({1, 3}), s({2, 3})});
        REQUIRE(kept.size() == 1);
        CHECK(kept.front() == s({1, 2, 3}));
    }
    SECTION("empty candidates") {
        CHECK(apriori_prune({}, {s({1, 2})}).empty());
    }
}

TEST_CASE("mine_apriori on the 10x20 sample") {
    auto db = fixtures::ten_by_twenty();
    auto res = mine_apriori(db, threshold_from_percent(20, db.size()));

    REQUIRE(res.levels.levels.size() == 13); // levels 0..12
    REQUIRE(res.levels.levels[12].size() == 1);
    CHECK(res.levels.levels[12].begin()->first == fixtures::top_itemset_10x20());
    CHECK(res.levels.levels[12].begin()->second == 2);
    CHECK(res.metrics.db_scans == 12);

    SECTION("downward closure holds level by level") {
        for (std::size_t k = 1; k < res.levels.levels.size(); ++k) {
            for (const auto& [x, sup] : res.levels.levels[k]) {
                for (item_index i : x.items()) {
                    ItemSet sub = x;
                    sub.reset(i);
                    CHECK(res.levels.levels[k - 1].count(sub) == 1);
                }
            }
        }
    }
}

TEST_CASE("mine_apriori degenerate cases") {
    SECTION("single transaction at 100% yields its powerset by level") {
        auto db = TransactionDb(ItemUniverse(4), {fixtures::items_1based(4, {1, 2, 4})});
        auto res = mine_apriori(db, threshold_from_percent(100, db.size()));
        REQUIRE(res.levels.levels.size() == 4);
        CHECK(res.levels.levels[0].size() == 1);
        CHECK(res.levels.levels[1].size() == 3);
        CHECK(res.levels.levels[2].size() == 3);
        CHECK(res.levels.levels[3].size() == 1);
    }
    SECTION("unattainable threshold") {
        auto db = TransactionDb(ItemUniverse(3), {fixtures::items_1based(3, {1})});
        auto res = mine_apriori(db, threshold_from_absolute(5));
        CHECK(res.levels.levels.empty());
        CHECK(res.warning);
    }
}

TEST_CASE("maximal_from_levels") {
    SECTION("empty set is maximal only when alone") {
        auto db = TransactionDb(ItemUniverse(3), {ItemSet(3), ItemSet(3)});
        auto res = mine_apriori(db, threshold_from_percent(100, db.size()));
        auto border = maximal_from_levels(res.levels);
        REQUIRE(border.size() == 1);
        CHECK(border.front().first.cardinality() == 0);
    }
    SECTION("singleton dominates the empty set") {
        auto db = TransactionDb(ItemUniverse(2), {fixtures::items_1based(2, {1})});
        auto res = mine_apriori(db, threshold_from_percent(100, db.size()));
        auto border = maximal_from_levels(res.levels);
        REQUIRE(border.size() == 1);
        CHECK(border.front().first == fixtures::items_1based(2, {1}));
    }
    SECTION("10x20 sample at 20% includes the 12-itemset") {
        auto db = fixtures::ten_by_twenty();
        auto res = mine_apriori(db, threshold_from_percent(20, db.size()));
        auto border = maximal_from_levels(res.levels);
        CHECK(border.front().first == fixtures::top_itemset_10x20());
        CHECK(border.size() == 15);
    }
}

TEST_CASE("apriori agrees with the oracle and with the top-down miner", "[property]") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 50; ++it) {
        auto db = fixtures::random_db(rng, 10, 20);
        auto threshold = threshold_from_percent(10 + static_cast<std::int64_t>(rng() % 51), db.size());

        auto apriori_res = mine_apriori(db, threshold);
        SupportMap family;
        for (const auto& level : apriori_res.levels.levels)
            for (const auto& entry : level) family.insert(entry);
        REQUIRE(family == oracle_frequent(db, threshold));

        auto border = maximal_from_levels(apriori_res.levels);
        auto mfif_res = mine_maximal(db, threshold);
        REQUIRE(border == mfif_res.itemsets);
    }
}
