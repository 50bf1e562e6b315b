#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "fim/core.hpp"
#include "fim/rules.hpp"
#include "fim/support.hpp"

namespace fim {

// --min-sup accepts "20%" (a percentage of the database) or a bare count
// like "2" (absolute transactions).
struct MinSup {
    std::optional<Ratio> percent;
    std::uint64_t absolute = 0;
};

inline MinSup parse_min_sup(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty --min-sup value");
    if (text.back() == '%') {
        Ratio pct = parse_decimal_ratio(text.substr(0, text.size() - 1));
        if (pct.num > 100 * pct.den) throw std::invalid_argument("support percentage must be in [0, 100]");
        return MinSup{pct, 0};
    }
    Ratio count = parse_decimal_ratio(text);
    if (count.num % count.den != 0)
        throw std::invalid_argument("absolute support must be a whole number of transactions");
    return MinSup{std::nullopt, static_cast<std::uint64_t>(count.num / count.den)};
}

inline SupportThreshold to_threshold(const MinSup& spec, std::uint64_t db_size) {
    if (spec.percent) return threshold_from_percent(*spec.percent, db_size);
    return threshold_from_absolute(spec.absolute);
}

namespace detail {

inline std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

} // namespace detail

inline std::string render_label_line(const ItemSet& x, const ItemUniverse& universe) {
    if (x.cardinality() == 0) return "(empty set)";
    std::string out;
    for (item_index i : x.items()) {
        if (!out.empty()) out += ' ';
        out += universe.label(i);
    }
    return out;
}

inline std::string render_matrix_row(const ItemSet& x) {
    std::string out;
    for (item_index i = 0; i < x.width(); ++i) {
        if (i) out += ' ';
        out += x.test(i) ? '1' : '0';
    }
    return out;
}

// The result block printed by the mine command. with_matrix_rows adds the 0/1
// row above each label line (used for matrix inputs only).
inline std::string render_mine_report(const std::vector<std::pair<ItemSet, std::uint64_t>>& itemsets,
                                      const ItemUniverse& universe, bool with_matrix_rows) {
    if (itemsets.empty()) return "NO FREQUENT ITEM SET FOUND\n";
    std::string out = "THE FREQUENT ITEM SET IS:\n";
    bool first = true;
    for (const auto& [x, sup] : itemsets) {
        if (!first) out += '\n';
        first = false;
        if (with_matrix_rows) out += render_matrix_row(x) + '\n';
        out += render_label_line(x, universe) + '\n';
        out += "support: " + std::to_string(sup) + '\n';
    }
    return out;
}

inline std::string render_metrics_line(const std::string& algo, const RunMetrics& metrics) {
    return "# algo=" + algo + " db_scans=" + std::to_string(metrics.db_scans) +
           " support_calls=" + std::to_string(metrics.support_calls) +
           " candidates_generated=" + std::to_string(metrics.candidates_generated) + '\n';
}

inline std::string render_rules_report(const std::vector<AssociationRule>& rules, const ItemUniverse& universe) {
    std::string out;
    for (const AssociationRule& r : rules) {
        out += render_label_line(r.antecedent, universe) + " => " + render_label_line(r.consequent, universe) +
               " (sup=" + std::to_string(r.support) + ", conf=" + detail::format_number(r.confidence()) + ")\n";
    }
    return out;
}

} // namespace fim
