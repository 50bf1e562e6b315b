#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "fim/core.hpp"
#include "fim/support.hpp"

namespace fim {

// levels[k] maps every frequent k-itemset to its support. Level 0 holds the
// empty itemset whenever the threshold is attainable at all, so the family is
// downward closed as a whole.
struct FrequentLevels {
    std::vector<SupportMap> levels;
};

struct AprioriResult {
    FrequentLevels levels;
    RunMetrics metrics;
    bool warning = false;
};

// Connecting step: joins pairs of (k-1)-itemsets that share all but their
// largest item into k-candidates. Classic sorted-prefix pairing, so every
// candidate is produced exactly once.
inline std::vector<ItemSet> apriori_join(const std::vector<ItemSet>& l_prev) {
    if (l_prev.empty() || l_prev.front().cardinality() == 0) return {};
    std::vector<std::vector<item_index>> seqs;
    seqs.reserve(l_prev.size());
    for (const auto& s : l_prev) seqs.push_back(s.items());
    std::sort(seqs.begin(), seqs.end());

    std::vector<ItemSet> out;
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        for (std::size_t j = i + 1; j < seqs.size(); ++j) {
            const auto& a = seqs[i];
            const auto& b = seqs[j];
            if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) break;
            ItemSet joined(l_prev.front().width());
            for (item_index it : a) joined.set(it);
            joined.set(b.back());
            out.push_back(std::move(joined));
        }
    }
    return out;
}

// Pruning step: a k-candidate survives only if every (k-1)-subset is frequent.
inline std::vector<ItemSet> apriori_prune(const std::vector<ItemSet>& candidates,
                                          const std::vector<ItemSet>& l_prev) {
    std::set<ItemSet, ItemSetLexLess> prev(l_prev.begin(), l_prev.end());
    std::vector<ItemSet> out;
    for (const auto& c : candidates) {
        bool keep = true;
        for (item_index i : c.items()) {
            ItemSet sub = c;
            sub.reset(i);
            if (!prev.count(sub)) {
                keep = false;
                break;
            }
        }
        if (keep) out.push_back(c);
    }
    return out;
}

// Bottom-up levelwise mining: one full database scan per candidate level, so
// db_scans ends up equal to the largest k that had candidates.
inline AprioriResult mine_apriori(const TransactionDb& db, const SupportThreshold& min_sup) {
    const auto t0 = std::chrono::steady_clock::now();
    AprioriResult out;

    if (min_sup.absolute > db.size()) {
        out.warning = true;
        out.metrics.wall_time = std::chrono::steady_clock::now() - t0;
        return out;
    }

    const item_index n = db.universe().size();
    SupportMap level0;
    level0.emplace(ItemSet(n), db.size());
    out.levels.levels.push_back(std::move(level0));

    std::vector<ItemSet> candidates;
    for (item_index i = 0; i < n; ++i) candidates.push_back(ItemSet::with_items(n, {i}));

    while (!candidates.empty()) {
        SupportMap counts = support_batch(candidates, db, out.metrics);
        out.metrics.candidates_generated += candidates.size();
        SupportMap frequent;
        for (const auto& [c, sup] : counts)
            if (sup >= min_sup.absolute) frequent.emplace(c, sup);
        if (frequent.empty()) break;
        std::vector<ItemSet> l_k;
        l_k.reserve(frequent.size());
        for (const auto& [c, sup] : frequent) l_k.push_back(c);
        out.levels.levels.push_back(std::move(frequent));
        candidates = apriori_prune(apriori_join(l_k), l_k);
    }

    out.metrics.wall_time = std::chrono::steady_clock::now() - t0;
    return out;
}

// Frequent itemsets with no frequent strict superset. By downward closure it
// is enough to look one level up; the empty itemset drops out on its own
// whenever any single item is frequent.
inline std::vector<std::pair<ItemSet, std::uint64_t>> maximal_from_levels(const FrequentLevels& levels) {
    std::vector<std::pair<ItemSet, std::uint64_t>> out;
    const auto& lv = levels.levels;
    for (std::size_t k = lv.size(); k-- > 0;) {
        for (const auto& [x, sup] : lv[k]) {
            bool covered = false;
            if (k + 1 < lv.size()) {
                for (const auto& [y, ysup] : lv[k + 1]) {
                    if (x.is_subset_of(y)) {
                        covered = true;
                        break;
                    }
                }
            }
            if (!covered) out.emplace_back(x, sup);
        }
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
