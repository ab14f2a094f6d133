// hyperfilt: hypergraph filtration experiments on point clouds.
//
//   hyperfilt generate  --out run
//   hyperfilt analyze   --out run --metric parabolic
//   hyperfilt quantify  --out run
//   hyperfilt compare   --out run --group points
//   hyperfilt show-config

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>

#include "hyperfilt/pipeline.hpp"

namespace {

struct Overrides {
    std::string config_path;
    std::vector<std::string> metrics;
    std::string grid;
    std::size_t realizations = 0;
    std::int64_t seed = -1;
    bool no_normalize = false;
    std::string spacing;
    bool paper_scale = false;
    std::string out;
};

hyperfilt::GridParams parse_grid(const std::string& text) {
    std::vector<double> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = text.find(':', start);
        const auto piece = text.substr(start, colon == std::string::npos ? std::string::npos : colon - start);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (ec != std::errc{} || ptr != piece.data() + piece.size())
            throw std::invalid_argument("--grid expects start:step:stop, got '" + text + "'");
        parts.push_back(v);
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (parts.size() != 3) throw std::invalid_argument("--grid expects start:step:stop, got '" + text + "'");
    return {parts[0], parts[1], parts[2]};
}

hyperfilt::RunConfig resolve(const Overrides& o) {
    nlohmann::json base = nlohmann::json::object();
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw std::runtime_error("cannot open config '" + o.config_path + "'");
        base = nlohmann::json::parse(in);
    }
    auto config = hyperfilt::config_from_json(base);
    if (o.paper_scale) config.realizations = 100;
    if (!o.metrics.empty()) {
        config.metrics.clear();
        for (const auto& m : o.metrics) config.metrics.push_back(hyperfilt::parse_metric(m));
    }
    if (!o.grid.empty()) config.grid = parse_grid(o.grid);
    if (o.realizations > 0) config.realizations = o.realizations;
    if (o.seed >= 0) config.base_seed = static_cast<std::uint64_t>(o.seed);
    if (o.no_normalize) config.normalize = false;
    if (!o.spacing.empty()) config.spacing = hyperfilt::parse_spacing(o.spacing);
    if (!o.out.empty()) config.output_dir = o.out;
    config.validate();
    return config;
}

void add_common(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config_path, "JSON run configuration");
    cmd->add_option("--metric", o.metrics, "Metric name, repeatable (e.g. minkowski:4, parabolic:1,0.5,0.5)")
        ->allow_extra_args(false);
    cmd->add_option("--grid", o.grid, "Radius grid start:step:stop");
    cmd->add_option("--realizations", o.realizations, "Realizations per dataset");
    cmd->add_option("--seed", o.seed, "Base seed");
    cmd->add_flag("--no-normalize", o.no_normalize, "Keep raw distances");
    cmd->add_option("--spacing", o.spacing, "Sobolev spacing: grid or index");
    cmd->add_flag("--paper-scale", o.paper_scale, "Use 100 realizations");
    cmd->add_option("--out", o.out, "Output directory");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypergraph filtration of point clouds"};
    app.require_subcommand(1);
    Overrides o;
    std::string group;

    auto* generate = app.add_subcommand("generate", "Write point clouds for every dataset and realization");
    auto* analyze = app.add_subcommand("analyze", "Compute filtration curves and mean/std summaries");
    auto* quantify = app.add_subcommand("quantify", "Tabulate L1 and Sobolev quantifiers");
    auto* compare = app.add_subcommand("compare", "Band-distance matrices between datasets of a group");
    auto* show = app.add_subcommand("show-config", "Print the resolved configuration as JSON");
    for (auto* cmd : {generate, analyze, quantify, compare, show}) add_common(cmd, o);
    compare->add_option("--group", group, "Dataset group (default: all groups)");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto config = resolve(o);
        if (show->parsed()) {
            std::cout << hyperfilt::config_to_json(config).dump(2) << '\n';
        } else if (generate->parsed()) {
            for (const auto& p : hyperfilt::cmd_generate(config)) std::cout << p.string() << '\n';
        } else if (analyze->parsed()) {
            for (const auto& p : hyperfilt::cmd_analyze(config)) std::cout << p.string() << '\n';
        } else if (quantify->parsed()) {
            const auto rows = hyperfilt::cmd_quantify(config);
            hyperfilt::io::write_report_csv(std::cout, rows);
        } else if (compare->parsed()) {
            for (const auto& r : hyperfilt::cmd_compare(config, group)) std::cout << r.csv_path.string() << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "hyperfilt: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
