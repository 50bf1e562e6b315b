#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fim {

using item_index = std::uint32_t;

// Exact rational, used for percentage thresholds and confidence bounds so
// that comparisons like "count meets 12.5% of 10" never go through floats.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Ratio&) const = default;
};

inline Ratio make_ratio(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("ratio denominator must be positive");
    if (num < 0) throw std::invalid_argument("ratio must be non-negative");
    return Ratio{num, den};
}

// Parses a non-negative decimal literal ("20", "12.5", ".05") into an exact
// ratio. At most 9 fractional digits.
inline Ratio parse_decimal_ratio(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    std::size_t dot = text.find('.');
    std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
    std::string frac = dot == std::string::npos ? std::string() : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw std::invalid_argument("malformed number: " + text);
    if (frac.size() > 9) throw std::invalid_argument("too many decimal places: " + text);
    for (char c : whole + frac)
        if (c < '0' || c > '9') throw std::invalid_argument("malformed number: " + text);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::int64_t whole_v = whole.empty() ? 0 : std::stoll(whole);
    std::int64_t frac_v = frac.empty() ? 0 : std::stoll(frac);
    return Ratio{whole_v * den + frac_v, den};
}

// A set of items over a fixed universe, stored as a bit vector. Bit i is the
// item displayed as "I<i+1>". Width is part of the value: operations across
// different widths are usage errors.
class ItemSet {
public:
    ItemSet() = default;
    explicit ItemSet(item_index width) : width_(width), blocks_((width + 63) / 64, 0) {}

    static ItemSet with_items(item_index width, std::initializer_list<item_index> items) {
        ItemSet s(width);
        for (item_index i : items) s.set(i);
        return s;
    }

    item_index width() const { return width_; }

    bool test(item_index i) const {
        check_index(i);
        return (blocks_[i / 64] >> (i % 64)) & 1u;
    }

    void set(item_index i) {
        check_index(i);
        blocks_[i / 64] |= std::uint64_t{1} << (i % 64);
    }

    void reset(item_index i) {
        check_index(i);
        blocks_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }

    item_index cardinality() const {
        std::uint64_t n = 0;
        for (std::uint64_t b : blocks_) n += std::popcount(b);
        return static_cast<item_index>(n);
    }

    bool none() const {
        return std::all_of(blocks_.begin(), blocks_.end(), [](std::uint64_t b) { return b == 0; });
    }

    bool is_subset_of(const ItemSet& other) const {
        check_width(other);
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & ~other.blocks_[i]) return false;
        return true;
    }

    ItemSet set_union(const ItemSet& other) const {
        check_width(other);
        ItemSet out(width_);
        for (std::size_t i = 0; i < blocks_.size(); ++i) out.blocks_[i] = blocks_[i] | other.blocks_[i];
        return out;
    }

    ItemSet set_intersection(const ItemSet& other) const {
        check_width(other);
        ItemSet out(width_);
        for (std::size_t i = 0; i < blocks_.size(); ++i) out.blocks_[i] = blocks_[i] & other.blocks_[i];
        return out;
    }

    bool disjoint_with(const ItemSet& other) const {
        check_width(other);
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & other.blocks_[i]) return false;
        return true;
    }

    // Item indices in ascending order.
    std::vector<item_index> items() const {
        std::vector<item_index> out;
        out.reserve(cardinality());
        for (std::size_t w = 0; w < blocks_.size(); ++w) {
            std::uint64_t b = blocks_[w];
            while (b) {
                out.push_back(static_cast<item_index>(w * 64 + std::countr_zero(b)));
                b &= b - 1;
            }
        }
        return out;
    }

    bool operator==(const ItemSet&) const = default;

private:
    void check_index(item_index i) const {
        if (i >= width_) throw std::invalid_argument("item index out of range");
    }
    void check_width(const ItemSet& other) const {
        if (width_ != other.width_) throw std::invalid_argument("itemset width mismatch");
    }

    item_index width_ = 0;
    std::vector<std::uint64_t> blocks_;
};

inline item_index cardinality(const ItemSet& x) { return x.cardinality(); }

inline bool is_subset(const ItemSet& x, const ItemSet& y) { return x.is_subset_of(y); }

// Orders itemsets by their ascending item sequences ({I1,I2} < {I1,I3} < {I2}),
// the tie-break used for all deterministic output.
inline bool lex_less(const ItemSet& a, const ItemSet& b) {
    std::vector<item_index> ia = a.items();
    std::vector<item_index> ib = b.items();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

struct ItemSetLexLess {
    bool operator()(const ItemSet& a, const ItemSet& b) const { return lex_less(a, b); }
};

class ItemUniverse {
public:
    ItemUniverse() = default;

    explicit ItemUniverse(item_index size) : size_(size) {
        labels_.reserve(size);
        for (item_index i = 0; i < size; ++i) labels_.push_back("I" + std::to_string(i + 1));
    }

    ItemUniverse(item_index size, std::vector<std::string> labels) : size_(size), labels_(std::move(labels)) {
        if (labels_.size() != size_) throw std::invalid_argument("label count must equal universe size");
        for (const auto& l : labels_)
            if (l.empty()) throw std::invalid_argument("empty item label");
        std::vector<std::string> sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate item label");
    }

    item_index size() const { return size_; }
    const std::string& label(item_index i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const ItemUniverse&) const = default;

private:
    item_index size_ = 0;
    std::vector<std::string> labels_;
};

// Immutable ordered list of transactions over one universe. Duplicates and
// empty transactions are legal; order is preserved.
class TransactionDb {
public:
    TransactionDb() = default;

    TransactionDb(ItemUniverse universe, std::vector<ItemSet> transactions)
        : universe_(std::move(universe)), transactions_(std::move(transactions)) {
        for (const auto& t : transactions_)
            if (t.width() != universe_.size())
                throw std::invalid_argument("transaction width does not match universe size");
    }

    const ItemUniverse& universe() const { return universe_; }
    std::size_t size() const { return transactions_.size(); }
    const ItemSet& transaction(std::size_t i) const { return transactions_.at(i); }
    const std::vector<ItemSet>& transactions() const { return transactions_; }

    bool operator==(const TransactionDb&) const = default;

private:
    ItemUniverse universe_;
    std::vector<ItemSet> transactions_;
};

// User-facing minimum support: the percentage as entered plus the absolute
// transaction count it translates to. An itemset is frequent when its support
// count is >= absolute.
struct SupportThreshold {
    std::optional<Ratio> percent;
    std::uint64_t absolute = 1;
};

inline SupportThreshold threshold_from_percent(Ratio percent, std::uint64_t db_size) {
    if (percent.den <= 0 || percent.num < 0 || percent.num > 100 * percent.den)
        throw std::invalid_argument("support percentage must be in [0, 100]");
    using u128 = unsigned __int128;
    u128 numer = static_cast<u128>(percent.num) * db_size;
    u128 denom = static_cast<u128>(percent.den) * 100;
    std::uint64_t abs = static_cast<std::uint64_t>((numer + denom - 1) / denom);
    if (abs < 1) abs = 1;
    return SupportThreshold{percent, abs};
}

inline SupportThreshold threshold_from_percent(std::int64_t percent, std::uint64_t db_size) {
    return threshold_from_percent(Ratio{percent, 1}, db_size);
}

inline SupportThreshold threshold_from_absolute(std::uint64_t count) {
    if (count < 1) throw std::invalid_argument("absolute support must be at least 1");
    return SupportThreshold{std::nullopt, count};
}

} // namespace fim
