#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fim/core.hpp"
#include "fim/support.hpp"

namespace fim {

// X => Y with X, Y disjoint and nonempty. Confidence is the exact count
// ratio sigma(X u Y) / sigma(X); both counts are kept so comparisons against
// a rational bound never round.
struct AssociationRule {
    ItemSet antecedent;
    ItemSet consequent;
    std::uint64_t support = 0;            // sigma(X u Y)
    std::uint64_t antecedent_support = 0; // sigma(X)

    double confidence() const {
        return static_cast<double>(support) / static_cast<double>(antecedent_support);
    }
};

namespace detail {

// confidence >= bound, exactly: sup/ante >= num/den  <=>  sup*den >= num*ante.
inline bool confidence_at_least(std::uint64_t sup, std::uint64_t ante, const Ratio& bound) {
    using u128 = unsigned __int128;
    return static_cast<u128>(sup) * static_cast<u128>(bound.den) >=
           static_cast<u128>(bound.num) * static_cast<u128>(ante);
}

// a.confidence > b.confidence, exactly.
inline bool confidence_greater(const AssociationRule& a, const AssociationRule& b) {
    using u128 = unsigned __int128;
    return static_cast<u128>(a.support) * b.antecedent_support >
           static_cast<u128>(b.support) * a.antecedent_support;
}

} // namespace detail

// All strong rules over a downward-closed frequent family: every nonempty
// bipartition X => Y of every frequent set with at least two items, kept when
// confidence meets min_conf. Ordered by confidence desc, support desc, then
// lexicographically.
inline std::vector<AssociationRule> generate_rules(const SupportMap& frequents, Ratio min_conf,
                                                   std::uint64_t db_size) {
    if (min_conf.den <= 0 || min_conf.num < 0 || min_conf.num > min_conf.den)
        throw std::invalid_argument("minimum confidence must be in [0, 1]");

    std::vector<AssociationRule> out;
    for (const auto& [whole, sup] : frequents) {
        if (sup > db_size) throw std::invalid_argument("support exceeds database size");
        std::vector<item_index> items = whole.items();
        const std::size_t m = items.size();
        if (m < 2) continue;
        const std::uint64_t limit = std::uint64_t{1} << m;
        for (std::uint64_t pick = 1; pick + 1 < limit; ++pick) {
            ItemSet antecedent(whole.width());
            ItemSet consequent(whole.width());
            for (std::size_t i = 0; i < m; ++i) {
                if ((pick >> i) & 1)
                    antecedent.set(items[i]);
                else
                    consequent.set(items[i]);
            }
            auto it = frequents.find(antecedent);
            if (it == frequents.end())
                throw std::invalid_argument("frequent family is not downward closed: antecedent support missing");
            if (detail::confidence_at_least(sup, it->second, min_conf))
                out.push_back(AssociationRule{std::move(antecedent), std::move(consequent), sup, it->second});
        }
    }

    std::sort(out.begin(), out.end(), [](const AssociationRule& a, const AssociationRule& b) {
        if (detail::confidence_greater(a, b)) return true;
        if (detail::confidence_greater(b, a)) return false;
        if (a.support != b.support) return a.support > b.support;
        if (a.antecedent != b.antecedent) return lex_less(a.antecedent, b.antecedent);
        return lex_less(a.consequent, b.consequent);
    });
    return out;
}

// Expands a maximal border to the full frequent family it represents: the
// union of the members' powersets, recounted in one extra batch scan. This is
// what lets rule generation run off a border-only mining result.
inline SupportMap expand_border(const std::vector<std::pair<ItemSet, std::uint64_t>>& border,
                                const TransactionDb& db, RunMetrics& metrics) {
    if (border.empty()) return {};
    std::set<ItemSet, ItemSetLexLess> closure;
    for (const auto& [x, sup] : border) {
        std::vector<item_index> items = x.items();
        const std::size_t m = items.size();
        if (m > 25) throw std::invalid_argument("border member too large to expand (2^k subsets)");
        const std::uint64_t limit = std::uint64_t{1} << m;
        for (std::uint64_t pick = 0; pick < limit; ++pick) {
            ItemSet sub(x.width());
            for (std::size_t i = 0; i < m; ++i)
                if ((pick >> i) & 1) sub.set(items[i]);
            closure.insert(std::move(sub));
        }
    }
    std::vector<ItemSet> all(closure.begin(), closure.end());
    return support_batch(all, db, metrics);
}

} // namespace fim
