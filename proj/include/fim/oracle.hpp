#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fim/core.hpp"
#include "fim/support.hpp"

namespace fim {

// Hard cap for powerset enumeration; 2^20 patterns is still desk-scale.
inline constexpr item_index kOracleMaxItems = 20;

namespace detail {

inline std::uint64_t to_mask(const ItemSet& s) {
    std::uint64_t m = 0;
    for (item_index i : s.items()) m |= std::uint64_t{1} << i;
    return m;
}

inline ItemSet from_mask(std::uint64_t mask, item_index width) {
    ItemSet s(width);
    while (mask) {
        s.set(static_cast<item_index>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return s;
}

} // namespace detail

// Ground truth by exhaustive enumeration: every itemset of the universe with
// support >= threshold, with exact counts. Enumeration order is numeric over
// bit patterns.
inline SupportMap oracle_frequent(const TransactionDb& db, const SupportThreshold& min_sup,
                                  item_index max_items = kOracleMaxItems) {
    const item_index n = db.universe().size();
    if (n > max_items)
        throw std::invalid_argument("oracle refuses universes larger than " + std::to_string(max_items) +
                                    " items (2^n enumeration)");
    std::vector<std::uint64_t> rows;
    rows.reserve(db.size());
    for (const auto& t : db.transactions()) rows.push_back(detail::to_mask(t));

    SupportMap out;
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        std::uint64_t sup = 0;
        for (std::uint64_t r : rows)
            if ((mask & ~r) == 0) ++sup;
        if (sup >= min_sup.absolute) out.emplace(detail::from_mask(mask, n), sup);
    }
    return out;
}

// The border: frequent itemsets with no frequent strict superset. The empty
// itemset is reported only when it is the sole frequent set.
inline std::vector<std::pair<ItemSet, std::uint64_t>> oracle_maximal(const TransactionDb& db,
                                                                     const SupportThreshold& min_sup,
                                                                     item_index max_items = kOracleMaxItems) {
    SupportMap frequent = oracle_frequent(db, min_sup, max_items);
    const item_index n = db.universe().size();
    std::vector<std::pair<ItemSet, std::uint64_t>> out;
    for (const auto& [x, sup] : frequent) {
        if (x.cardinality() == 0 && frequent.size() > 1) continue;
        bool maximal = true;
        for (item_index i = 0; i < n; ++i) {
            if (x.test(i)) continue;
            ItemSet ext = x;
            ext.set(i);
            if (frequent.count(ext)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.emplace_back(x, sup);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        item_index ca = a.first.cardinality();
        item_index cb = b.first.cardinality();
        if (ca != cb) return ca > cb;
        return lex_less(a.first, b.first);
    });
    return out;
}

} // namespace fim
