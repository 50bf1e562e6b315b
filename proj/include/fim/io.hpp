#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fim/core.hpp"

namespace fim {

enum class DatasetFormat { matrix, basket };

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t row, std::size_t column)
        : std::runtime_error("row " + std::to_string(row) + ", position " + std::to_string(column) + ": " + message),
          row_(row),
          column_(column) {}

    std::size_t row() const { return row_; }
    std::size_t column() const { return column_; }

private:
    std::size_t row_;
    std::size_t column_;
};

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace detail

// Matrix format: one transaction per line, space-separated 0/1 tokens, one
// column per item (left to right = I1..In). All rows must have equal length;
// blank lines are ignored. Item labels are not stored in this format.
inline TransactionDb parse_matrix(std::string_view text) {
    std::vector<std::vector<bool>> rows;
    std::size_t row_no = 0;
    for (const std::string& raw : detail::split_lines(text)) {
        ++row_no;
        std::istringstream in(raw);
        std::vector<bool> row;
        std::string token;
        std::size_t col = 0;
        while (in >> token) {
            ++col;
            if (token == "0")
                row.push_back(false);
            else if (token == "1")
                row.push_back(true);
            else
                throw ParseError("expected 0 or 1, got '" + token + "'", row_no, col);
        }
        if (row.empty()) continue; // blank line
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("row has " + std::to_string(row.size()) + " columns, expected " +
                                 std::to_string(rows.front().size()),
                             row_no, row.size());
        rows.push_back(std::move(row));
    }

    item_index width = rows.empty() ? 0 : static_cast<item_index>(rows.front().size());
    std::vector<ItemSet> transactions;
    transactions.reserve(rows.size());
    for (const auto& row : rows) {
        ItemSet t(width);
        for (item_index i = 0; i < width; ++i)
            if (row[i]) t.set(i);
        transactions.push_back(std::move(t));
    }
    return TransactionDb(ItemUniverse(width), std::move(transactions));
}

inline std::string write_matrix(const TransactionDb& db) {
    std::string out;
    for (const auto& t : db.transactions()) {
        for (item_index i = 0; i < db.universe().size(); ++i) {
            if (i) out += ' ';
            out += t.test(i) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

// Basket format: one transaction per line, comma-separated item tokens. A
// blank line is an empty transaction; duplicate tokens within a line collapse.
// The universe is the sorted set of tokens that appear, so items no
// transaction mentions are not representable.
inline TransactionDb parse_basket(std::string_view text) {
    std::vector<std::vector<std::string>> lines_tokens;
    for (const std::string& raw : detail::split_lines(text)) {
        std::vector<std::string> tokens;
        std::size_t start = 0;
        while (start <= raw.size()) {
            std::size_t end = raw.find(',', start);
            std::string piece = detail::trim(end == std::string::npos ? raw.substr(start)
                                                                      : raw.substr(start, end - start));
            if (!piece.empty()) tokens.push_back(std::move(piece));
            if (end == std::string::npos) break;
            start = end + 1;
        }
        lines_tokens.push_back(std::move(tokens));
    }

    std::set<std::string> vocabulary;
    for (const auto& tokens : lines_tokens)
        for (const auto& t : tokens) vocabulary.insert(t);

    std::vector<std::string> labels(vocabulary.begin(), vocabulary.end());
    std::map<std::string, item_index> index_of;
    for (item_index i = 0; i < labels.size(); ++i) index_of.emplace(labels[i], i);

    item_index width = static_cast<item_index>(labels.size());
    std::vector<ItemSet> transactions;
    transactions.reserve(lines_tokens.size());
    for (const auto& tokens : lines_tokens) {
        ItemSet t(width);
        for (const auto& tok : tokens) t.set(index_of.at(tok));
        transactions.push_back(std::move(t));
    }
    return TransactionDb(ItemUniverse(width, std::move(labels)), std::move(transactions));
}

inline std::string write_basket(const TransactionDb& db) {
    std::string out;
    for (const auto& t : db.transactions()) {
        bool first = true;
        for (item_index i : t.items()) {
            if (!first) out += ',';
            out += db.universe().label(i);
            first = false;
        }
        out += '\n';
    }
    return out;
}

inline TransactionDb parse_dataset(std::string_view text, DatasetFormat format) {
    return format == DatasetFormat::matrix ? parse_matrix(text) : parse_basket(text);
}

inline std::string write_dataset(const TransactionDb& db, DatasetFormat format) {
    return format == DatasetFormat::matrix ? write_matrix(db) : write_basket(db);
}

// Synthetic database with an optional planted itemset. Plant rows are exactly
// the planted itemset; every other cell is 1 with probability noise_density.
// The generator guarantees the plant is the unique maximal frequent itemset at
// threshold = occurrences: exactly `occurrences` rows contain it, and every
// item outside it stays below that count (enforced, with bounded retries).
struct GeneratorSpec {
    std::uint64_t transactions = 0;
    item_index items = 0;
    std::optional<ItemSet> planted;
    std::uint64_t planted_occurrences = 0;
    Ratio noise_density{0, 1};
    std::uint64_t seed = 0;
};

namespace detail {

// Unbiased draw in [0, n) from raw engine output; avoids the
// implementation-defined std::uniform_int_distribution so that a seed means
// the same database everywhere.
inline std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n) {
    using u128 = unsigned __int128;
    const u128 span = u128{1} << 64;
    const std::uint64_t bound = static_cast<std::uint64_t>(span - span % n);
    for (;;) {
        std::uint64_t x = rng();
        if (bound == 0 || x < bound) return x % n;
    }
}

inline bool noise_hit(std::mt19937_64& rng, const Ratio& density) {
    return rng() % static_cast<std::uint64_t>(density.den) < static_cast<std::uint64_t>(density.num);
}

} // namespace detail

inline TransactionDb generate(const GeneratorSpec& spec) {
    if (spec.noise_density.den <= 0 || spec.noise_density.num < 0 || spec.noise_density.num > spec.noise_density.den)
        throw std::invalid_argument("noise density must be in [0, 1]");
    if (spec.planted) {
        if (spec.planted->width() != spec.items)
            throw std::invalid_argument("planted itemset width must equal the item count");
        if (spec.planted->cardinality() == 0) throw std::invalid_argument("planted itemset must be nonempty");
        if (spec.planted_occurrences < 1)
            throw std::invalid_argument("planted occurrences must be at least 1");
        if (spec.planted_occurrences > spec.transactions)
            throw std::invalid_argument("planted occurrences exceed the transaction count");
    }

    constexpr int kMaxAttempts = 8;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::mt19937_64 rng(spec.seed + static_cast<std::uint64_t>(attempt));

        // which rows carry the plant: a seeded partial Fisher-Yates pick
        std::vector<bool> is_plant_row(spec.transactions, false);
        if (spec.planted) {
            std::vector<std::uint64_t> order(spec.transactions);
            for (std::uint64_t i = 0; i < spec.transactions; ++i) order[i] = i;
            for (std::uint64_t i = 0; i < spec.planted_occurrences; ++i) {
                std::uint64_t j = i + detail::next_below(rng, spec.transactions - i);
                std::swap(order[i], order[j]);
                is_plant_row[order[i]] = true;
            }
        }

        std::vector<ItemSet> rows;
        rows.reserve(spec.transactions);
        for (std::uint64_t r = 0; r < spec.transactions; ++r) {
            if (is_plant_row[r]) {
                rows.push_back(*spec.planted);
                continue;
            }
            ItemSet row(spec.items);
            for (item_index i = 0; i < spec.items; ++i)
                if (detail::noise_hit(rng, spec.noise_density)) row.set(i);
            if (spec.planted && spec.planted->is_subset_of(row)) row.reset(spec.planted->items().front());
            rows.push_back(std::move(row));
        }

        if (spec.planted) {
            // any frequent itemset outside the plant's powerset would contain
            // a frequent outside item, so checking singletons is enough
            bool dominated = true;
            for (item_index i = 0; i < spec.items && dominated; ++i) {
                if (spec.planted->test(i)) continue;
                std::uint64_t count = 0;
                for (const auto& row : rows) count += row.test(i);
                if (count >= spec.planted_occurrences) dominated = false;
            }
            if (!dominated) continue;
        }

        return TransactionDb(ItemUniverse(spec.items), std::move(rows));
    }
    throw std::runtime_error(
        "could not generate a database where the planted itemset dominates; lower noise_density or raise occurrences");
}

} // namespace fim
