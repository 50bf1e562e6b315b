#include <catch2/catch_amalgamated.hpp>

#include "fim/io.hpp"
#include "fim/mfif.hpp"
#include "fim/oracle.hpp"
#include "fixtures.hpp"

using namespace fim;

TEST_CASE("parse_matrix") {
    SECTION("two rows") {
        auto db = parse_matrix("0 1\n1 0");
        REQUIRE(db.size() == 2);
        CHECK(db.universe().size() == 2);
        CHECK(db.transaction(0) == fixtures::items_1based(2, {2}));
        CHECK(db.transaction(1) == fixtures::items_1based(2, {1}));
    }
    SECTION("empty text") {
        auto db = parse_matrix("");
        CHECK(db.size() == 0);
        CHECK(db.universe().size() == 0);
    }
    SECTION("the 10x20 sample") {
        auto db = fixtures::ten_by_twenty();
        REQUIRE(db.size() == 10);
        CHECK(db.universe().size() == 20);
        CHECK(db.transaction(0) == db.transaction(5));
        CHECK(db.transaction(0).cardinality() == 12);
        CHECK(db.universe().label(0) == "I1");
        CHECK(db.universe().label(19) == "I20");
    }
    SECTION("ragged rows are rejected with the row number") {
        try {
            parse_matrix("0 1\n1\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.row() == 2);
        }
    }
    SECTION("non-binary tokens are rejected with the position") {
        try {
            parse_matrix("0 1\n0 2\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.row() == 2);
            CHECK(e.column() == 2);
        }
    }
}

TEST_CASE("parse_basket") {
    SECTION("universe is the sorted token set") {
        auto db = parse_basket("milk,bread\nbread\n");
        REQUIRE(db.size() == 2);
        REQUIRE(db.universe().size() == 2);
        CHECK(db.universe().label(0) == "bread");
        CHECK(db.universe().label(1) == "milk");
        CHECK(db.transaction(0).cardinality() == 2);
        CHECK(db.transaction(1) == fixtures::items_1based(2, {1}));
    }
    SECTION("duplicate tokens collapse") {
        auto db = parse_basket("a,a,a\n");
        CHECK(db.transaction(0).cardinality() == 1);
    }
    SECTION("blank line is an empty transaction") {
        auto db = parse_basket("a\n\nb\n");
        REQUIRE(db.size() == 3);
        CHECK(db.transaction(1).cardinality() == 0);
    }
    SECTION("line order is preserved") {
        auto db = parse_basket("b\na\n");
        CHECK(db.transaction(0) == fixtures::items_1based(2, {2})); // "b" sorts second
        CHECK(db.transaction(1) == fixtures::items_1based(2, {1}));
    }
}

TEST_CASE("round-trips", "[property]") {
    std::mt19937_64 rng(37);
    SECTION("matrix survives write/parse for any default-labelled db") {
        int done = 0;
        while (done < 60) {
            auto db = fixtures::random_db(rng, 12, 15);
            if (db.size() == 0) continue; // a rowless matrix cannot carry its width
            CHECK(parse_matrix(write_matrix(db)) == db);
            ++done;
        }
    }
    SECTION("basket survives write/parse when labels sort and every item occurs") {
        for (int it = 0; it < 60; ++it) {
            auto db = fixtures::random_db(rng, 9, 15); // <= 9 items: I1..I9 sort correctly
            std::vector<ItemSet> rows = db.transactions();
            ItemSet all(db.universe().size());
            for (item_index i = 0; i < db.universe().size(); ++i) all.set(i);
            rows.push_back(all); // make every item occur at least once
            auto full = TransactionDb(db.universe(), std::move(rows));
            CHECK(parse_basket(write_basket(full)) == full);
        }
    }
}

TEST_CASE("generate") {
    SECTION("plant occupies exactly the requested rows") {
        GeneratorSpec spec;
        spec.transactions = 10;
        spec.items = 20;
        spec.planted = fixtures::top_itemset_10x20();
        spec.planted_occurrences = 2;
        spec.noise_density = Ratio{5, 100};
        spec.seed = 42;
        auto db = generate(spec);
        REQUIRE(db.size() == 10);

        std::size_t carrying = 0;
        for (const auto& t : db.transactions())
            if (spec.planted->is_subset_of(t)) ++carrying;
        CHECK(carrying == 2);

        auto threshold = threshold_from_percent(20, db.size());
        auto res = mine_maximal(db, threshold);
        REQUIRE(res.itemsets.size() == 1);
        CHECK(res.itemsets.front().first == *spec.planted);
        CHECK(res.itemsets == oracle_maximal(db, threshold)); // plant is the unique maximal set
    }
    SECTION("occurrences == transactions with zero noise gives identical rows") {
        GeneratorSpec spec;
        spec.transactions = 5;
        spec.items = 6;
        spec.planted = fixtures::items_1based(6, {2, 3});
        spec.planted_occurrences = 5;
        spec.noise_density = Ratio{0, 1};
        auto db = generate(spec);
        for (const auto& t : db.transactions()) CHECK(t == *spec.planted);
    }
    SECTION("same seed, same database") {
        GeneratorSpec spec;
        spec.transactions = 30;
        spec.items = 10;
        spec.noise_density = Ratio{30, 100};
        spec.seed = 7;
        CHECK(generate(spec) == generate(spec));
        spec.seed = 8;
        auto other = generate(spec);
        spec.seed = 7;
        CHECK_FALSE(generate(spec) == other);
    }
    SECTION("validation") {
        GeneratorSpec spec;
        spec.transactions = 3;
        spec.items = 4;
        spec.planted = fixtures::items_1based(4, {1});
        spec.planted_occurrences = 5;
        CHECK_THROWS_AS(generate(spec), std::invalid_argument);

        spec.planted_occurrences = 2;
        spec.noise_density = Ratio{3, 2};
        CHECK_THROWS_AS(generate(spec), std::invalid_argument);

        spec.noise_density = Ratio{1, 2};
        spec.planted = ItemSet(5); // wrong width
        CHECK_THROWS_AS(generate(spec), std::invalid_argument);
    }
    SECTION("full noise makes the plant impossible to isolate") {
        GeneratorSpec spec;
        spec.transactions = 10;
        spec.items = 8;
        spec.planted = fixtures::items_1based(8, {1, 2});
        spec.planted_occurrences = 2;
        spec.noise_density = Ratio{1, 1};
        CHECK_THROWS_AS(generate(spec), std::runtime_error);
    }
}
