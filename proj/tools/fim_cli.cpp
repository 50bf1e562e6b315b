// fim: transaction-database mining from the command line.
//
// Exit codes: 0 success, 1 parse/validation/runtime error, 2 the mine or
// rules command found nothing frequent at the given threshold.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fim/fim.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

fim::DatasetFormat parse_format(const std::string& name) {
    if (name == "matrix") return fim::DatasetFormat::matrix;
    if (name == "basket") return fim::DatasetFormat::basket;
    throw std::invalid_argument("unknown format: " + name);
}

fim::MineMode parse_mode(const std::string& name) {
    if (name == "all" || name == "all_maximal") return fim::MineMode::all_maximal;
    if (name == "first" || name == "first_only") return fim::MineMode::first_only;
    throw std::invalid_argument("unknown mode: " + name);
}

// Plant items come as 1-based indices, with or without the "I" prefix.
fim::ItemSet parse_plant_items(const std::string& text, fim::item_index items) {
    fim::ItemSet plant(items);
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (!token.empty() && (token[0] == 'I' || token[0] == 'i')) token = token.substr(1);
        fim::Ratio idx = fim::parse_decimal_ratio(token);
        if (idx.den != 1 || idx.num < 1 || idx.num > items)
            throw std::invalid_argument("plant item out of range: " + token);
        plant.set(static_cast<fim::item_index>(idx.num - 1));
    }
    if (plant.cardinality() == 0) throw std::invalid_argument("empty plant item list");
    return plant;
}

fim::Ratio parse_percent_value(std::string text) {
    if (!text.empty() && text.back() == '%') text.pop_back();
    fim::Ratio pct = fim::parse_decimal_ratio(text);
    if (pct.num > 100 * pct.den) throw std::invalid_argument("percentage must be in [0, 100]");
    return pct;
}

struct MineOptions {
    std::string input;
    std::string format = "matrix";
    std::string algo = "mfif";
    std::string min_sup;
    std::string mode = "all";
    fim::item_index min_k = 1;
};

int run_mine(const MineOptions& opt) {
    fim::DatasetFormat format = parse_format(opt.format);
    fim::TransactionDb db = fim::parse_dataset(read_file(opt.input), format);
    fim::SupportThreshold threshold = fim::to_threshold(fim::parse_min_sup(opt.min_sup), db.size());
    fim::MineMode mode = parse_mode(opt.mode);

    std::vector<std::pair<fim::ItemSet, std::uint64_t>> border;
    fim::RunMetrics metrics;
    std::string warning_text;

    if (opt.algo == "mfif") {
        fim::MiningResult res = fim::mine_maximal(db, threshold, fim::MfifConfig{mode, opt.min_k});
        border = std::move(res.itemsets);
        metrics = res.metrics;
        if (res.warning) warning_text = res.warning_text;
    } else if (opt.algo == "apriori") {
        fim::AprioriResult res = fim::mine_apriori(db, threshold);
        border = fim::maximal_from_levels(res.levels);
        metrics = res.metrics;
        if (res.warning) warning_text = "minimum support exceeds the number of transactions; nothing can be frequent";
    } else if (opt.algo == "oracle") {
        border = fim::oracle_maximal(db, threshold);
    } else {
        throw std::invalid_argument("unknown algorithm: " + opt.algo);
    }

    // mfif stops at the first frequent level natively; for the others the
    // first mode keeps only the largest-cardinality border members
    if (mode == fim::MineMode::first_only && opt.algo != "mfif" && !border.empty()) {
        fim::item_index top = border.front().first.cardinality();
        std::erase_if(border, [top](const auto& e) { return e.first.cardinality() != top; });
    }

    if (!warning_text.empty()) std::cerr << "warning: " << warning_text << '\n';
    std::cout << fim::render_mine_report(border, db.universe(), format == fim::DatasetFormat::matrix);
    std::cout << fim::render_metrics_line(opt.algo, metrics);
    std::cerr << "# wall_time_s=" << metrics.wall_time.count() << '\n';
    return border.empty() ? 2 : 0;
}

struct RulesOptions {
    std::string input;
    std::string format = "matrix";
    std::string min_sup;
    std::string min_conf;
};

int run_rules(const RulesOptions& opt) {
    fim::DatasetFormat format = parse_format(opt.format);
    fim::TransactionDb db = fim::parse_dataset(read_file(opt.input), format);
    fim::SupportThreshold threshold = fim::to_threshold(fim::parse_min_sup(opt.min_sup), db.size());
    fim::Ratio min_conf = fim::parse_decimal_ratio(opt.min_conf);

    fim::MiningResult res = fim::mine_maximal(db, threshold);
    if (res.warning) std::cerr << "warning: " << res.warning_text << '\n';
    if (res.itemsets.empty()) {
        std::cout << "NO FREQUENT ITEM SET FOUND\n";
        return 2;
    }
    // the border alone lacks subset supports; expand it and recount once
    fim::SupportMap closure = fim::expand_border(res.itemsets, db, res.metrics);
    std::vector<fim::AssociationRule> rules = fim::generate_rules(closure, min_conf, db.size());
    std::cout << fim::render_rules_report(rules, db.universe());
    std::cout << fim::render_metrics_line("mfif", res.metrics);
    std::cerr << "# wall_time_s=" << res.metrics.wall_time.count() << '\n';
    return 0;
}

struct GenOptions {
    std::string out;
    std::string format = "matrix";
    std::uint64_t transactions = 0;
    fim::item_index items = 0;
    std::string plant_items;
    fim::item_index plant_size = 0;
    std::uint64_t plant_occurrences = 0;
    std::string noise = "0.05";
    std::uint64_t seed = 1;
};

int run_gen(const GenOptions& opt) {
    fim::GeneratorSpec spec;
    spec.transactions = opt.transactions;
    spec.items = opt.items;
    spec.noise_density = fim::parse_decimal_ratio(opt.noise);
    spec.seed = opt.seed;
    if (!opt.plant_items.empty()) {
        spec.planted = parse_plant_items(opt.plant_items, opt.items);
        spec.planted_occurrences = opt.plant_occurrences;
    } else if (opt.plant_size > 0) {
        spec.planted = fim::pick_plant(opt.items, opt.plant_size, opt.seed);
        spec.planted_occurrences = opt.plant_occurrences;
    }
    fim::TransactionDb db = fim::generate(spec);
    write_file(opt.out, fim::write_dataset(db, parse_format(opt.format)));
    return 0;
}

struct BenchOptions {
    std::string out;
    std::vector<std::uint64_t> sizes;
    fim::item_index items = 20;
    fim::item_index plant_size = 12;
    std::string plant_percent = "20";
    std::string noise = "0.05";
    std::string min_sup = "20%";
    std::string mode = "first";
    std::uint64_t seed = 1;
    int reps = 3;
};

int run_bench(const BenchOptions& opt) {
    fim::BenchSpec spec;
    spec.sizes = opt.sizes;
    spec.items = opt.items;
    spec.plant_size = opt.plant_size;
    spec.plant_percent = parse_percent_value(opt.plant_percent);
    spec.noise_density = fim::parse_decimal_ratio(opt.noise);
    fim::MinSup min_sup = fim::parse_min_sup(opt.min_sup);
    if (!min_sup.percent) throw std::invalid_argument("bench needs a percentage --min-sup (e.g. 20%)");
    spec.min_sup_percent = *min_sup.percent;
    spec.mode = parse_mode(opt.mode);
    spec.seed = opt.seed;
    spec.repetitions = opt.reps;

    std::vector<fim::BenchRow> rows = fim::run_bench(spec);
    write_file(opt.out, fim::bench_csv(rows));
    for (const auto& r : rows)
        std::cerr << r.transactions << " " << r.algo << ": " << r.seconds << "s, " << r.db_scans << " scans\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fim: maximal frequent itemset mining and association rules"};
    app.require_subcommand(1);

    MineOptions mine_opt;
    CLI::App* mine = app.add_subcommand("mine", "mine maximal frequent itemsets");
    mine->add_option("input", mine_opt.input, "dataset file")->required();
    mine->add_option("--format", mine_opt.format, "matrix|basket")->default_val("matrix");
    mine->add_option("--algo", mine_opt.algo, "mfif|apriori|oracle")->default_val("mfif");
    mine->add_option("--min-sup", mine_opt.min_sup, "minimum support: \"20%\" or absolute count \"2\"")->required();
    mine->add_option("--mode", mine_opt.mode, "all|first")->default_val("all");
    mine->add_option("--min-k", mine_opt.min_k, "lowest itemset cardinality to search (mfif)")->default_val(1);

    RulesOptions rules_opt;
    CLI::App* rules = app.add_subcommand("rules", "generate strong association rules");
    rules->add_option("input", rules_opt.input, "dataset file")->required();
    rules->add_option("--format", rules_opt.format, "matrix|basket")->default_val("matrix");
    rules->add_option("--min-sup", rules_opt.min_sup, "minimum support: \"20%\" or absolute count")->required();
    rules->add_option("--min-conf", rules_opt.min_conf, "minimum confidence in [0, 1]")->required();

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "generate a synthetic dataset");
    gen->add_option("--out", gen_opt.out, "output file")->required();
    gen->add_option("--format", gen_opt.format, "matrix|basket")->default_val("matrix");
    gen->add_option("--transactions", gen_opt.transactions, "number of transactions")->required();
    gen->add_option("--items", gen_opt.items, "number of items")->required();
    auto* plant_items_opt = gen->add_option("--plant-items", gen_opt.plant_items,
                                            "planted itemset, e.g. I2,I3,I12 or 2,3,12");
    auto* plant_size_opt =
        gen->add_option("--plant-size", gen_opt.plant_size, "plant a seeded random itemset of this size");
    auto* plant_occ_opt =
        gen->add_option("--plant-occurrences", gen_opt.plant_occurrences, "rows carrying the plant");
    plant_items_opt->excludes(plant_size_opt);
    plant_items_opt->needs(plant_occ_opt);
    plant_size_opt->needs(plant_occ_opt);
    gen->add_option("--noise", gen_opt.noise, "cell density outside plant rows, in [0, 1]")->default_val("0.05");
    gen->add_option("--seed", gen_opt.seed, "RNG seed")->default_val(1);

    BenchOptions bench_opt;
    CLI::App* bench = app.add_subcommand("bench", "compare mfif and apriori on generated data");
    bench->add_option("--out", bench_opt.out, "output CSV")->required();
    bench->add_option("--sizes", bench_opt.sizes, "transaction counts, e.g. 100,500,5000")->delimiter(',');
    bench->add_option("--items", bench_opt.items, "number of items")->default_val(20);
    bench->add_option("--plant-size", bench_opt.plant_size, "planted itemset size")->default_val(12);
    bench->add_option("--plant-percent", bench_opt.plant_percent, "share of rows carrying the plant")
        ->default_val("20");
    bench->add_option("--noise", bench_opt.noise, "cell density outside plant rows")->default_val("0.05");
    bench->add_option("--min-sup", bench_opt.min_sup, "minimum support percent")->default_val("20%");
    bench->add_option("--mode", bench_opt.mode, "mfif mode: all|first")->default_val("first");
    bench->add_option("--seed", bench_opt.seed, "RNG seed")->default_val(1);
    bench->add_option("--reps", bench_opt.reps, "repetitions per measurement")->default_val(3);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (mine->parsed()) return run_mine(mine_opt);
        if (rules->parsed()) return run_rules(rules_opt);
        if (gen->parsed()) return run_gen(gen_opt);
        if (bench->parsed()) return run_bench(bench_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
