#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperfilt/datagen.hpp"
#include "hyperfilt/io.hpp"
#include "hyperfilt/metrics.hpp"
#include "hyperfilt/quantify.hpp"

namespace hyperfilt {

enum class Generator { Normal, Poisson, Uniform, Lattice, Fractal, WhiteNoise, Ode, File };

/// One dataset of the experiment: a generator with its parameters, or an input file.
struct DatasetSpec {
    std::string label;
    std::string group;
    Generator generator = Generator::Normal;
    Eigen::Index n = 1000;
    double mu = 0.0;
    double sigma = 1.0;
    double lambda = 1.0;
    double a = -1.0;
    double b = 1.0;
    int terms = 100;
    OdeSpec ode;
    /// Half-width of the seed-derived shift applied to the ODE initial condition per realization.
    double perturbation = 1e-3;
    /// Added to each realization seed; separates streams of datasets that share a generator.
    std::uint64_t seed_offset = 0;
    /// For Generator::File. `{realization}` is replaced by the realization index.
    std::string path;

    /// Point cloud of realization `k`, generated or loaded. `seed` is the realization seed.
    PointCloud realize(std::size_t k, std::uint64_t seed) const;
};

struct GridParams {
    double start = 0.01;
    double step = 0.01;
    double stop = 1.01;

    RadiusGrid build() const { return RadiusGrid::uniform(start, step, stop); }
};

struct RunConfig {
    std::vector<DatasetSpec> datasets;
    std::vector<MetricSpec> metrics;
    GridParams grid;
    std::size_t realizations = 10;
    std::uint64_t base_seed = 1;
    bool normalize = true;
    std::filesystem::path output_dir = "hyperfilt_out";
    SpacingMode spacing = SpacingMode::Index;
    StdConvention std_convention = StdConvention::Population;

    /// Nine datasets in groups `points` and `dynamics`, five metrics, 10 realizations.
    static RunConfig defaults();
    void validate() const;

    /// Realizations a dataset actually has (file inputs without a placeholder have one).
    std::size_t realizations_of(const DatasetSpec& dataset) const;
    std::uint64_t seed_for(const DatasetSpec& dataset, std::size_t realization) const {
        return base_seed + dataset.seed_offset + realization;
    }

    std::filesystem::path points_path(const DatasetSpec& dataset, std::size_t realization) const;
    std::filesystem::path ensemble_path(const DatasetSpec& dataset, const MetricSpec& metric) const;
    std::filesystem::path summary_path(const DatasetSpec& dataset, const MetricSpec& metric) const;
    std::filesystem::path distances_path(const std::string& group, const MetricSpec& metric, Quantifier q,
                                         const char* extension) const;
    std::vector<std::string> groups() const;
};

nlohmann::json config_to_json(const RunConfig& config);
/// Fields present in `json` override the defaults.
RunConfig config_from_json(const nlohmann::json& json);

/// Filtration curve of one cloud under one metric, normalizing when requested.
FiltrationCurve analyze_cloud(const PointCloud& cloud, const MetricSpec& metric, const RadiusGrid& grid,
                              bool normalize);

/// Writes points/<label>_<k>.csv for every generated dataset; returns the paths written.
std::vector<std::filesystem::path> cmd_generate(const RunConfig& config);

/// Writes curves/<label>_<metric>_{ensemble,summary}.csv; returns the summary paths.
std::vector<std::filesystem::path> cmd_analyze(const RunConfig& config);

/// Writes tables/quantifiers.{csv,json}.
std::vector<io::ReportRow> cmd_quantify(const RunConfig& config);

struct ComparisonResult {
    std::string group;
    std::string metric;
    Quantifier quantifier;
    io::LabeledMatrix matrix;
    std::filesystem::path csv_path;
};

/// Writes distances/<group>_<metric>_<quantifier>.{csv,json}. An empty group compares every group.
std::vector<ComparisonResult> cmd_compare(const RunConfig& config, const std::string& group = {});

}  // namespace hyperfilt
