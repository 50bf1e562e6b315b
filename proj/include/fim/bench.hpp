#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "fim/apriori.hpp"
#include "fim/core.hpp"
#include "fim/io.hpp"
#include "fim/mfif.hpp"

namespace fim {

struct BenchSpec {
    std::vector<std::uint64_t> sizes;
    item_index items = 20;
    item_index plant_size = 12;
    Ratio plant_percent{20, 1}; // share of transactions carrying the plant
    Ratio noise_density{5, 100};
    Ratio min_sup_percent{20, 1};
    MineMode mode = MineMode::first_only;
    std::uint64_t seed = 1;
    int repetitions = 3;
};

struct BenchRow {
    std::uint64_t transactions = 0;
    std::string algo;
    double seconds = 0.0;
    std::uint64_t db_scans = 0;
    std::uint64_t candidates = 0;
    std::uint64_t support_calls = 0; // not part of the CSV contract
};

// A seeded random itemset of the given size, for planting.
inline ItemSet pick_plant(item_index items, item_index plant_size, std::uint64_t seed) {
    if (plant_size > items) throw std::invalid_argument("plant size exceeds item count");
    std::mt19937_64 rng(seed ^ 0xD1B54A32D192ED03ULL);
    std::vector<item_index> pool(items);
    for (item_index i = 0; i < items; ++i) pool[i] = i;
    ItemSet plant(items);
    for (item_index i = 0; i < plant_size; ++i) {
        std::uint64_t j = i + detail::next_below(rng, items - i);
        std::swap(pool[i], pool[j]);
        plant.set(pool[i]);
    }
    return plant;
}

namespace detail {

inline double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    std::size_t n = xs.size();
    if (n == 0) return 0.0;
    return n % 2 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

} // namespace detail

// One generated database per size, both algorithms on it, seconds = median of
// the repetitions. Occurrences of the plant are plant_percent of the size, so
// at min_sup_percent == plant_percent the plant is exactly at threshold.
inline std::vector<BenchRow> run_bench(const BenchSpec& spec) {
    if (spec.plant_size > spec.items) throw std::invalid_argument("plant size exceeds item count");
    if (spec.repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");

    std::vector<BenchRow> rows;
    for (std::uint64_t size : spec.sizes) {
        GeneratorSpec gen_spec;
        gen_spec.transactions = size;
        gen_spec.items = spec.items;
        if (spec.plant_size > 0) {
            gen_spec.planted = pick_plant(spec.items, spec.plant_size, spec.seed);
            gen_spec.planted_occurrences = threshold_from_percent(spec.plant_percent, size).absolute;
        }
        gen_spec.noise_density = spec.noise_density;
        gen_spec.seed = spec.seed + size; // distinct stream per size
        TransactionDb db;
        try {
            db = generate(gen_spec);
        } catch (const std::exception& e) {
            throw std::runtime_error("generation failed for size " + std::to_string(size) + ": " + e.what());
        }
        SupportThreshold threshold = threshold_from_percent(spec.min_sup_percent, db.size());

        BenchRow mfif_row{size, "mfif", 0.0, 0, 0, 0};
        std::vector<double> mfif_times;
        for (int rep = 0; rep < spec.repetitions; ++rep) {
            MiningResult res = mine_maximal(db, threshold, MfifConfig{spec.mode, 1});
            mfif_times.push_back(res.metrics.wall_time.count());
            mfif_row.db_scans = res.metrics.db_scans;
            mfif_row.candidates = res.metrics.candidates_generated;
            mfif_row.support_calls = res.metrics.support_calls;
        }
        mfif_row.seconds = detail::median(std::move(mfif_times));
        rows.push_back(std::move(mfif_row));

        BenchRow apriori_row{size, "apriori", 0.0, 0, 0, 0};
        std::vector<double> apriori_times;
        for (int rep = 0; rep < spec.repetitions; ++rep) {
            AprioriResult res = mine_apriori(db, threshold);
            apriori_times.push_back(res.metrics.wall_time.count());
            apriori_row.db_scans = res.metrics.db_scans;
            apriori_row.candidates = res.metrics.candidates_generated;
            apriori_row.support_calls = res.metrics.support_calls;
        }
        apriori_row.seconds = detail::median(std::move(apriori_times));
        rows.push_back(std::move(apriori_row));
    }
    return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::string out = "transactions,algo,seconds,db_scans,candidates\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%llu,%s,%.6f,%llu,%llu\n",
                      static_cast<unsigned long long>(r.transactions), r.algo.c_str(), r.seconds,
                      static_cast<unsigned long long>(r.db_scans), static_cast<unsigned long long>(r.candidates));
        out += buf;
    }
    return out;
}

} // namespace fim
