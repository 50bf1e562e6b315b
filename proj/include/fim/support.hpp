#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <vector>

#include "fim/core.hpp"

namespace fim {

// Instrumentation counters behind the scan-count comparisons. One db_scan is
// one full pass over all transactions, no matter how many candidates that
// pass serves.
struct RunMetrics {
    std::uint64_t db_scans = 0;
    std::uint64_t support_calls = 0;
    std::uint64_t candidates_generated = 0;
    std::chrono::duration<double> wall_time{0.0};
};

using SupportMap = std::map<ItemSet, std::uint64_t, ItemSetLexLess>;

// sigma(x): number of transactions containing x as a subset. The empty
// itemset is contained in every transaction.
inline std::uint64_t support(const ItemSet& x, const TransactionDb& db) {
    if (x.width() != db.universe().size()) throw std::invalid_argument("itemset universe mismatch");
    std::uint64_t n = 0;
    for (const auto& t : db.transactions())
        if (x.is_subset_of(t)) ++n;
    return n;
}

// Counts all candidates in one pass over the database: db_scans += 1,
// support_calls += |xs|. The pass happens even for an empty candidate list.
inline SupportMap support_batch(const std::vector<ItemSet>& xs, const TransactionDb& db, RunMetrics& metrics) {
    for (const auto& x : xs)
        if (x.width() != db.universe().size()) throw std::invalid_argument("itemset universe mismatch");
    std::vector<std::uint64_t> counts(xs.size(), 0);
    for (const auto& t : db.transactions())
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (xs[i].is_subset_of(t)) ++counts[i];
    metrics.db_scans += 1;
    metrics.support_calls += xs.size();
    SupportMap out;
    for (std::size_t i = 0; i < xs.size(); ++i) out.emplace(xs[i], counts[i]);
    return out;
}

} // namespace fim
