#include "hyperfilt/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hyperfilt/filtration.hpp"
#include "hyperfilt/parallel.hpp"

namespace hyperfilt {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::map<std::string, Generator>& generator_names() {
    static const std::map<std::string, Generator> names{
        {"normal", Generator::Normal},   {"poisson", Generator::Poisson},       {"uniform", Generator::Uniform},
        {"lattice", Generator::Lattice}, {"fractal", Generator::Fractal},       {"white_noise", Generator::WhiteNoise},
        {"file", Generator::File},
    };
    return names;
}

std::string generator_name(const DatasetSpec& d) {
    if (d.generator == Generator::Ode) return std::string(system_name(d.ode.system));
    for (const auto& [name, g] : generator_names())
        if (g == d.generator) return name;
    return "unknown";
}

DatasetSpec dataset_defaults(const std::string& generator) {
    DatasetSpec d;
    if (auto it = generator_names().find(generator); it != generator_names().end()) {
        d.generator = it->second;
    } else {
        d.generator = Generator::Ode;
        d.ode = OdeSpec::defaults(parse_system(generator));
    }
    d.label = generator;
    d.group = (d.generator == Generator::Ode || d.generator == Generator::WhiteNoise) ? "dynamics" : "points";
    if (d.generator == Generator::WhiteNoise) d.seed_offset = 1000;
    if (d.generator == Generator::File) d.group = "files";
    return d;
}

json metric_to_json(const MetricSpec& m) {
    json j{{"kind", kind_name(m.kind)}};
    if (m.kind == MetricKind::Minkowski) j["p"] = m.p;
    if (m.kind == MetricKind::Parabolic) j["alphas"] = std::vector<double>(m.alphas.data(), m.alphas.data() + m.alphas.size());
    return j;
}

MetricSpec metric_from_json(const json& j) {
    if (j.is_string()) return parse_metric(j.get<std::string>());
    MetricSpec m = parse_metric(j.at("kind").get<std::string>());
    if (j.contains("p")) m.p = j["p"].get<double>();
    if (j.contains("alphas")) {
        const auto a = j["alphas"].get<std::vector<double>>();
        m.alphas = Eigen::Map<const Eigen::VectorXd>(a.data(), static_cast<Eigen::Index>(a.size()));
    }
    return m;
}

json dataset_to_json(const DatasetSpec& d) {
    json j{{"label", d.label}, {"group", d.group}, {"generator", generator_name(d)}};
    switch (d.generator) {
        case Generator::Normal: j.update({{"n", d.n}, {"mu", d.mu}, {"sigma", d.sigma}}); break;
        case Generator::Poisson: j.update({{"n", d.n}, {"lambda", d.lambda}}); break;
        case Generator::Uniform: j.update({{"n", d.n}, {"a", d.a}, {"b", d.b}}); break;
        case Generator::Lattice: j.update({{"n", d.n}}); break;
        case Generator::Fractal: j.update({{"n", d.n}, {"terms", d.terms}}); break;
        case Generator::WhiteNoise: j.update({{"n", d.n}}); break;
        case Generator::Ode:
            j.update({{"params", d.ode.params},
                      {"initial", {d.ode.initial.x(), d.ode.initial.y(), d.ode.initial.z()}},
                      {"dt", d.ode.dt},
                      {"steps", d.ode.steps},
                      {"stride", d.ode.subsample_stride},
                      {"burn_in", d.ode.burn_in},
                      {"perturbation", d.perturbation}});
            if (d.ode.system == OdeSystem::ComplexButterfly)
                j["butterfly_form"] = d.ode.butterfly_form == ButterflyForm::Printed ? "printed" : "canonical";
            break;
        case Generator::File: j["path"] = d.path; break;
    }
    j["seed_offset"] = d.seed_offset;
    return j;
}

DatasetSpec dataset_from_json(const json& j) {
    DatasetSpec d = dataset_defaults(j.at("generator").get<std::string>());
    d.label = j.value("label", d.label);
    d.group = j.value("group", d.group);
    d.n = j.value("n", d.n);
    d.mu = j.value("mu", d.mu);
    d.sigma = j.value("sigma", d.sigma);
    d.lambda = j.value("lambda", d.lambda);
    d.a = j.value("a", d.a);
    d.b = j.value("b", d.b);
    d.terms = j.value("terms", d.terms);
    d.seed_offset = j.value("seed_offset", d.seed_offset);
    d.path = j.value("path", d.path);
    d.perturbation = j.value("perturbation", d.perturbation);
    if (d.generator == Generator::Ode) {
        if (j.contains("params"))
            for (const auto& [k, v] : j["params"].items()) d.ode.params[k] = v.get<double>();
        if (j.contains("initial")) {
            const auto init = j["initial"].get<std::vector<double>>();
            if (init.size() != 3) throw std::invalid_argument("dataset '" + d.label + "': initial needs 3 values");
            d.ode.initial = {init[0], init[1], init[2]};
        }
        d.ode.dt = j.value("dt", d.ode.dt);
        d.ode.steps = j.value("steps", d.ode.steps);
        d.ode.subsample_stride = j.value("stride", d.ode.subsample_stride);
        d.ode.burn_in = j.value("burn_in", d.ode.burn_in);
        const auto form = j.value("butterfly_form", std::string("printed"));
        if (form != "printed" && form != "canonical")
            throw std::invalid_argument("butterfly_form must be printed or canonical");
        d.ode.butterfly_form = form == "printed" ? ButterflyForm::Printed : ButterflyForm::Canonical;
    }
    if (d.generator == Generator::File && d.path.empty())
        throw std::invalid_argument("dataset '" + d.label + "': file generator needs a path");
    return d;
}

std::string substitute(std::string pattern, std::size_t k) {
    const std::string key = "{realization}";
    for (auto pos = pattern.find(key); pos != std::string::npos; pos = pattern.find(key, pos))
        pattern.replace(pos, key.size(), std::to_string(k));
    return pattern;
}

PointCloud load_points(const fs::path& path, const std::string& label) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing dataset file '" + path.string() + "' (run generate first?)");
    if (path.extension() == ".json") {
        auto cloud = io::points_from_json(json::parse(in));
        cloud.label = label;
        return cloud;
    }
    return io::read_points_csv(in, label);
}

}  // namespace

PointCloud DatasetSpec::realize(std::size_t k, std::uint64_t seed) const {
    PointCloud cloud;
    switch (generator) {
        case Generator::Normal: cloud = gen_normal(n, mu, sigma, seed); break;
        case Generator::Poisson: cloud = gen_poisson(n, lambda, seed); break;
        case Generator::Uniform: cloud = gen_uniform(n, a, b, seed); break;
        case Generator::Lattice: cloud = gen_lattice(n); break;
        case Generator::Fractal: cloud = gen_fractal(n, terms, seed); break;
        case Generator::WhiteNoise: cloud = gen_white_noise(n, seed); break;
        case Generator::Ode: {
            cloud = integrate(perturbation > 0.0 ? perturb_initial(ode, seed, perturbation) : ode);
            break;
        }
        case Generator::File: cloud = load_points(substitute(path, k), label); break;
    }
    cloud.label = label;
    cloud.seed = seed;
    return cloud;
}

RunConfig RunConfig::defaults() {
    RunConfig c;
    for (const char* g : {"lattice", "fractal", "normal", "poisson", "uniform", "white_noise", "complex_butterfly",
                          "lorenz", "rossler"})
        c.datasets.push_back(dataset_defaults(g));
    c.metrics = {MetricSpec::euclidean(), MetricSpec::chebyshev(), MetricSpec::cityblock(), MetricSpec::minkowski(),
                 MetricSpec::parabolic()};
    return c;
}

void RunConfig::validate() const {
    if (realizations < 1) throw std::invalid_argument("realizations must be >= 1");
    if (!(grid.start > 0.0) || !(grid.step > 0.0) || !(grid.stop >= grid.start))
        throw std::invalid_argument("grid requires start > 0, step > 0, stop >= start");
    if (metrics.empty()) throw std::invalid_argument("no metrics configured");
    std::set<std::string> labels, metric_names;
    for (const auto& d : datasets) {
        if (d.label.empty() || d.label.find_first_of("/\\,") != std::string::npos)
            throw std::invalid_argument("invalid dataset label '" + d.label + "'");
        if (!labels.insert(d.label).second) throw std::invalid_argument("duplicate dataset label '" + d.label + "'");
    }
    for (const auto& m : metrics)
        if (!metric_names.insert(m.name()).second) throw std::invalid_argument("duplicate metric '" + m.name() + "'");
}

std::size_t RunConfig::realizations_of(const DatasetSpec& dataset) const {
    if (dataset.generator == Generator::File && dataset.path.find("{realization}") == std::string::npos) return 1;
    return realizations;
}

fs::path RunConfig::points_path(const DatasetSpec& d, std::size_t k) const {
    return output_dir / "points" / (d.label + "_" + std::to_string(k) + ".csv");
}

fs::path RunConfig::ensemble_path(const DatasetSpec& d, const MetricSpec& m) const {
    return output_dir / "curves" / (d.label + "_" + m.name() + "_ensemble.csv");
}

fs::path RunConfig::summary_path(const DatasetSpec& d, const MetricSpec& m) const {
    return output_dir / "curves" / (d.label + "_" + m.name() + "_summary.csv");
}

fs::path RunConfig::distances_path(const std::string& group, const MetricSpec& m, Quantifier q,
                                   const char* extension) const {
    return output_dir / "distances" / (group + "_" + m.name() + "_" + std::string(quantifier_name(q)) + extension);
}

std::vector<std::string> RunConfig::groups() const {
    std::vector<std::string> out;
    for (const auto& d : datasets)
        if (std::find(out.begin(), out.end(), d.group) == out.end()) out.push_back(d.group);
    return out;
}

json config_to_json(const RunConfig& c) {
    json datasets = json::array();
    for (const auto& d : c.datasets) datasets.push_back(dataset_to_json(d));
    json metrics = json::array();
    for (const auto& m : c.metrics) metrics.push_back(metric_to_json(m));
    return {{"datasets", datasets},
            {"metrics", metrics},
            {"grid", {{"start", c.grid.start}, {"step", c.grid.step}, {"stop", c.grid.stop}}},
            {"realizations", c.realizations},
            {"base_seed", c.base_seed},
            {"normalize", c.normalize},
            {"output_dir", c.output_dir.string()},
            {"spacing", spacing_name(c.spacing)},
            {"std", c.std_convention == StdConvention::Population ? "population" : "sample"}};
}

RunConfig config_from_json(const json& j) {
    RunConfig c = RunConfig::defaults();
    if (j.contains("datasets")) {
        c.datasets.clear();
        for (const auto& d : j["datasets"]) c.datasets.push_back(dataset_from_json(d));
    }
    if (j.contains("metrics")) {
        c.metrics.clear();
        for (const auto& m : j["metrics"]) c.metrics.push_back(metric_from_json(m));
    }
    if (j.contains("grid")) {
        c.grid.start = j["grid"].value("start", c.grid.start);
        c.grid.step = j["grid"].value("step", c.grid.step);
        c.grid.stop = j["grid"].value("stop", c.grid.stop);
    }
    c.realizations = j.value("realizations", c.realizations);
    c.base_seed = j.value("base_seed", c.base_seed);
    c.normalize = j.value("normalize", c.normalize);
    c.output_dir = j.value("output_dir", c.output_dir.string());
    if (j.contains("spacing")) c.spacing = parse_spacing(j["spacing"].get<std::string>());
    if (j.contains("std")) {
        const auto s = j["std"].get<std::string>();
        if (s != "population" && s != "sample") throw std::invalid_argument("std must be population or sample");
        c.std_convention = s == "population" ? StdConvention::Population : StdConvention::Sample;
    }
    c.validate();
    return c;
}

FiltrationCurve analyze_cloud(const PointCloud& cloud, const MetricSpec& metric, const RadiusGrid& grid,
                              bool normalize_distances) {
    auto d = pairwise_matrix(cloud.points, metric);
    // A cloud of coincident points has no scale to normalize by; every ball is already the full set.
    if (normalize_distances && d.entries.maxCoeff() > 0.0) d = normalize(d);
    return filtration_curve(d, grid);
}

std::vector<fs::path> cmd_generate(const RunConfig& config) {
    config.validate();
    struct Task {
        const DatasetSpec* dataset;
        std::size_t realization;
    };
    std::vector<Task> tasks;
    for (const auto& d : config.datasets) {
        if (d.generator == Generator::File) continue;
        for (std::size_t k = 0; k < config.realizations; ++k) tasks.push_back({&d, k});
    }
    std::vector<fs::path> written(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t t) {
        const auto& [d, k] = tasks[t];
        const auto cloud = d->realize(k, config.seed_for(*d, k));
        written[t] = config.points_path(*d, k);
        io::write_file(written[t], [&](std::ostream& out) { io::write_points_csv(out, cloud); });
    });
    return written;
}

std::vector<fs::path> cmd_analyze(const RunConfig& config) {
    config.validate();
    const RadiusGrid grid = config.grid.build();
    struct Task {
        const DatasetSpec* dataset;
        std::size_t realization;
        std::vector<FiltrationCurve> curves;  // one per metric
    };
    std::vector<Task> tasks;
    for (const auto& d : config.datasets)
        for (std::size_t k = 0; k < config.realizations_of(d); ++k) tasks.push_back({&d, k, {}});

    parallel_for(tasks.size(), [&](std::size_t t) {
        auto& task = tasks[t];
        const auto& d = *task.dataset;
        const auto cloud = d.generator == Generator::File ? d.realize(task.realization, 0)
                                                          : load_points(config.points_path(d, task.realization), d.label);
        for (const auto& m : config.metrics) {
            try {
                task.curves.push_back(analyze_cloud(cloud, m, grid, config.normalize));
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("dataset '" + d.label + "', metric " + m.name() + ": " + e.what());
            }
        }
    });

    std::vector<fs::path> summaries;
    std::size_t t = 0;
    for (const auto& d : config.datasets) {
        const std::size_t k = config.realizations_of(d);
        for (std::size_t mi = 0; mi < config.metrics.size(); ++mi) {
            std::vector<FiltrationCurve> curves;
            for (std::size_t r = 0; r < k; ++r) curves.push_back(tasks[t + r].curves[mi]);
            const auto ensemble = ensemble_stats(curves, config.std_convention);
            const auto& m = config.metrics[mi];
            io::write_file(config.ensemble_path(d, m), [&](std::ostream& out) { io::write_ensemble_csv(out, curves); });
            io::write_file(config.summary_path(d, m), [&](std::ostream& out) { io::write_summary_csv(out, ensemble); });
            summaries.push_back(config.summary_path(d, m));
        }
        t += k;
    }
    return summaries;
}

namespace {

CurveEnsemble load_ensemble(const RunConfig& config, const DatasetSpec& d, const MetricSpec& m) {
    const auto path = config.ensemble_path(d, m);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing curves '" + path.string() + "' (run analyze first?)");
    return ensemble_stats(io::read_ensemble_csv(in), config.std_convention);
}

}  // namespace

std::vector<io::ReportRow> cmd_quantify(const RunConfig& config) {
    config.validate();
    std::vector<io::ReportRow> rows;
    for (const auto& m : config.metrics)
        for (const auto& d : config.datasets)
            rows.push_back({d.label, m.name(),
                            quantifier_report(load_ensemble(config, d, m), config.spacing, config.std_convention)});
    const auto dir = config.output_dir / "tables";
    io::write_file(dir / "quantifiers.csv", [&](std::ostream& out) { io::write_report_csv(out, rows); });
    io::write_file(dir / "quantifiers.json", [&](std::ostream& out) { out << io::report_to_json(rows).dump(2) << '\n'; });
    return rows;
}

std::vector<ComparisonResult> cmd_compare(const RunConfig& config, const std::string& group) {
    config.validate();
    std::vector<std::string> groups = config.groups();
    if (!group.empty()) {
        if (std::find(groups.begin(), groups.end(), group) == groups.end())
            throw std::invalid_argument("unknown dataset group '" + group + "'");
        groups = {group};
    }
    std::vector<ComparisonResult> results;
    for (const auto& g : groups) {
        for (const auto& m : config.metrics) {
            std::vector<std::string> labels;
            std::vector<CurveEnsemble> ensembles;
            for (const auto& d : config.datasets) {
                if (d.group != g) continue;
                labels.push_back(d.label);
                ensembles.push_back(load_ensemble(config, d, m));
            }
            for (auto q : {Quantifier::L1, Quantifier::Sobolev}) {
                ComparisonResult r{g, m.name(), q, {labels, distance_matrix(ensembles, q, config.spacing)},
                                   config.distances_path(g, m, q, ".csv")};
                io::write_file(r.csv_path,
                               [&](std::ostream& out) { io::write_matrix_csv(out, r.matrix); });
                io::write_file(config.distances_path(g, m, q, ".json"),
                               [&](std::ostream& out) { out << io::matrix_to_json(r.matrix).dump(2) << '\n'; });
                results.push_back(std::move(r));
            }
        }
    }
    return results;
}

}  // namespace hyperfilt
