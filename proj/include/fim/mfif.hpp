#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fim/core.hpp"
#include "fim/support.hpp"

namespace fim {

enum class MineMode {
    all_maximal, // keep descending until floor_k; returns the complete maximal border
    first_only,  // stop at the highest cardinality with a frequent itemset
};

struct MfifConfig {
    MineMode mode = MineMode::all_maximal;
    // Lowest cardinality the search descends to. 1 means no assumption about
    // how large the maximal sets are; raise it to trade completeness for
    // fewer levels.
    item_index floor_k = 1;
};

// One level of the top-down search: candidates all have cardinality k, are
// distinct, and none is a subset of an itemset already accepted as maximal.
struct LevelState {
    item_index k = 0;
    std::vector<ItemSet> candidates;
    std::vector<std::pair<ItemSet, std::uint64_t>> found;
};

struct MiningResult {
    // Sorted by descending cardinality, then by ascending item sequence.
    std::vector<std::pair<ItemSet, std::uint64_t>> itemsets;
    RunMetrics metrics;
    bool warning = false;
    std::string warning_text;
};

// Cardinality of each transaction, in transaction order. Reads the whole
// database once, so it counts as a scan when metrics are supplied.
inline std::vector<std::size_t> transaction_lengths(const TransactionDb& db, RunMetrics* metrics = nullptr) {
    std::vector<std::size_t> lengths;
    lengths.reserve(db.size());
    for (const auto& t : db.transactions()) lengths.push_back(t.cardinality());
    if (metrics) metrics->db_scans += 1;
    return lengths;
}

// Distinct transactions of cardinality exactly k, in lexicographic order.
inline std::vector<ItemSet> seed_candidates(const TransactionDb& db, item_index k) {
    std::set<ItemSet, ItemSetLexLess> distinct;
    for (const auto& t : db.transactions())
        if (t.cardinality() == k) distinct.insert(t);
    return {distinct.begin(), distinct.end()};
}

// All k subsets of cardinality k-1, built by dropping one item at a time.
// The empty itemset has no smaller subsets.
inline std::vector<ItemSet> subsets_one_smaller(const ItemSet& x) {
    std::vector<ItemSet> out;
    for (item_index i : x.items()) {
        ItemSet sub = x;
        sub.reset(i);
        out.push_back(std::move(sub));
    }
    return out;
}

namespace detail {

inline bool under_found(const ItemSet& c, const std::vector<std::pair<ItemSet, std::uint64_t>>& found) {
    for (const auto& [f, sup] : found)
        if (c.is_subset_of(f)) return true;
    return false;
}

} // namespace detail

// Moves the search one cardinality down. state.candidates must hold the
// infrequent survivors of level k; the next pool is their one-smaller subsets
// merged with the distinct database transactions of length k-1, deduplicated,
// minus anything covered by an already-found maximal set.
inline LevelState descend(const LevelState& state, const TransactionDb& db) {
    if (state.k < 1) throw std::invalid_argument("cannot descend below cardinality 0");
    LevelState next;
    next.k = state.k - 1;
    next.found = state.found;
    std::set<ItemSet, ItemSetLexLess> pool;
    for (const auto& c : state.candidates)
        for (auto& sub : subsets_one_smaller(c)) pool.insert(std::move(sub));
    for (auto& t : seed_candidates(db, next.k)) pool.insert(std::move(t));
    for (const auto& c : pool)
        if (!detail::under_found(c, next.found)) next.candidates.push_back(c);
    return next;
}

// Top-down maximal frequent itemset search. Seeds candidates from the longest
// transactions and walks down one cardinality per level; each level is
// counted against the full database in a single batch scan. A frequent
// candidate is maximal by construction: every superset that occurs in the
// database was already tested (and failed) at a higher level, and subsets of
// accepted sets are pruned from later pools. Infrequent candidates descend
// via their drop-one-item subsets. Only one level of subsets is ever alive.
inline MiningResult mine_maximal(const TransactionDb& db, const SupportThreshold& min_sup,
                                 const MfifConfig& config = {}) {
    if (config.floor_k < 1) throw std::invalid_argument("floor_k must be at least 1");
    if (db.universe().size() > 0 && config.floor_k > db.universe().size())
        throw std::invalid_argument("floor_k exceeds universe size");

    const auto t0 = std::chrono::steady_clock::now();
    MiningResult out;

    if (min_sup.absolute > db.size()) {
        out.warning = true;
        out.warning_text = "minimum support exceeds the number of transactions; nothing can be frequent";
        out.metrics.wall_time = std::chrono::steady_clock::now() - t0;
        return out;
    }

    std::vector<std::size_t> lengths = transaction_lengths(db, &out.metrics);
    item_index max_len = 0;
    for (std::size_t len : lengths) max_len = std::max<item_index>(max_len, static_cast<item_index>(len));

    LevelState state;
    state.k = max_len;
    state.candidates = seed_candidates(db, max_len);

    while (state.k >= config.floor_k) {
        if (!state.candidates.empty()) {
            SupportMap counts = support_batch(state.candidates, db, out.metrics);
            out.metrics.candidates_generated += state.candidates.size();
            std::vector<ItemSet> infrequent;
            std::vector<std::pair<ItemSet, std::uint64_t>> frequent;
            for (const auto& c : state.candidates) {
                std::uint64_t sup = counts.at(c);
                if (sup >= min_sup.absolute)
                    frequent.emplace_back(c, sup);
                else
                    infrequent.push_back(c);
            }
            if (config.mode == MineMode::first_only && !frequent.empty()) {
                state.found = std::move(frequent);
                break;
            }
            state.found.insert(state.found.end(), frequent.begin(), frequent.end());
            state.candidates = std::move(infrequent);
        }
        if (state.k == config.floor_k) break;
        state = descend(state, db);
    }

    if (state.found.empty()) {
        if (config.floor_k == 1) {
            // The whole lattice above the empty set was searched; the empty
            // itemset is the only frequent set left.
            ItemSet empty(db.universe().size());
            state.found.emplace_back(std::move(empty), db.size());
        } else {
            out.warning = true;
            out.warning_text = "no frequent itemset with at least " + std::to_string(config.floor_k) +
                               " items; smaller maximal sets may exist below the configured floor";
        }
    }

    std::sort(state.found.begin(), state.found.end(), [](const auto& a, const auto& b) {
        item_index ca = a.first.cardinality();
        item_index cb = b.first.cardinality();
        if (ca != cb) return ca > cb;
        return lex_less(a.first, b.first);
    });
    out.itemsets = std::move(state.found);
    out.metrics.wall_time = std::chrono::steady_clock::now() - t0;
    return out;
}

} // namespace fim
