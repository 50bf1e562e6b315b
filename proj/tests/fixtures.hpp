#pragma once

#include <random>
#include <vector>

#include "fim/core.hpp"
#include "fim/io.hpp"

namespace fixtures {

// 10 transactions over 20 items; rows 1 and 6 are identical 12-item baskets,
// making {I2,I3,I4,I5,I6,I12,I13,I14,I15,I16,I17,I20} the largest itemset
// with support 2.
inline const char* kTenByTwenty =
    "0 1 1 1 1 1 0 0 0 0 0 1 1 1 1 1 1 0 0 1\n"
    "1 1 0 1 0 0 0 0 1 1 0 1 0 1 0 1 0 0 0 1\n"
    "0 1 0 0 0 0 1 1 0 0 1 0 0 1 0 1 0 0 1 0\n"
    "0 1 1 0 0 0 1 1 0 1 0 1 0 1 0 1 0 1 0 0\n"
    "1 1 1 0 1 0 1 1 0 0 1 1 0 0 0 0 1 0 0 0\n"
    "0 1 1 1 1 1 0 0 0 0 0 1 1 1 1 1 1 0 0 1\n"
    "0 1 1 0 1 0 1 1 0 0 1 0 1 0 1 0 1 0 0 1\n"
    "1 1 1 0 0 1 0 0 1 0 1 1 0 0 1 0 1 0 0 1\n"
    "0 1 0 1 1 0 0 1 0 1 0 0 1 0 1 0 1 0 0 1\n"
    "1 1 1 0 1 0 0 1 0 1 0 0 1 1 0 1 0 0 0 0\n";

inline fim::TransactionDb ten_by_twenty() { return fim::parse_matrix(kTenByTwenty); }

// Builds an itemset from 1-based item numbers (the display numbering).
inline fim::ItemSet items_1based(fim::item_index width, std::initializer_list<int> items) {
    fim::ItemSet s(width);
    for (int i : items) s.set(static_cast<fim::item_index>(i - 1));
    return s;
}

inline fim::ItemSet top_itemset_10x20() {
    return items_1based(20, {2, 3, 4, 5, 6, 12, 13, 14, 15, 16, 17, 20});
}

// Deterministic random database for property tests.
inline fim::TransactionDb random_db(std::mt19937_64& rng, fim::item_index max_items,
                                    std::size_t max_transactions) {
    fim::item_index n = 1 + static_cast<fim::item_index>(rng() % max_items);
    std::size_t m = rng() % (max_transactions + 1);
    std::vector<fim::ItemSet> rows;
    rows.reserve(m);
    std::uint64_t density_pct = 20 + rng() % 60;
    for (std::size_t r = 0; r < m; ++r) {
        fim::ItemSet row(n);
        for (fim::item_index i = 0; i < n; ++i)
            if (rng() % 100 < density_pct) row.set(i);
        rows.push_back(std::move(row));
    }
    return fim::TransactionDb(fim::ItemUniverse(n), std::move(rows));
}

inline fim::ItemSet random_subset_of(std::mt19937_64& rng, const fim::ItemSet& y) {
    fim::ItemSet x(y.width());
    for (fim::item_index i : y.items())
        if (rng() % 2) x.set(i);
    return x;
}

} // namespace fixtures
