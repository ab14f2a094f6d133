#pragma once

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperfilt/datagen.hpp"
#include "hyperfilt/filtration.hpp"
#include "hyperfilt/quantify.hpp"

namespace hyperfilt::io {

// All CSV output uses '.' decimals, '\n' line endings and the shortest
// representation that parses back to the same double.

std::string format_double(double value);

// Point clouds: header x1,...,xd then one point per row.
void write_points_csv(std::ostream& out, const PointCloud& cloud);
PointCloud read_points_csv(std::istream& in, std::string label = {});
nlohmann::json points_to_json(const PointCloud& cloud);
PointCloud points_from_json(const nlohmann::json& record);

// Curves: r,delta_e. Ensembles: realization,r,delta_e.
void write_curve_csv(std::ostream& out, const FiltrationCurve& curve);
FiltrationCurve read_curve_csv(std::istream& in);
void write_ensemble_csv(std::ostream& out, std::span<const FiltrationCurve> curves);
std::vector<FiltrationCurve> read_ensemble_csv(std::istream& in);

/// r,mu,sigma rows of an ensemble.
void write_summary_csv(std::ostream& out, const CurveEnsemble& ensemble);

struct Summary {
    std::vector<double> r, mu, sigma;
};
Summary read_summary_csv(std::istream& in);

struct ReportRow {
    std::string dataset;
    std::string metric;
    QuantifierReport report;
};

// dataset,metric,L_mean,L_std,S_mean,S_std
void write_report_csv(std::ostream& out, std::span<const ReportRow> rows);
std::vector<ReportRow> read_report_csv(std::istream& in);
nlohmann::json report_to_json(std::span<const ReportRow> rows);

/// Labelled square matrix: header row and first column hold the labels.
struct LabeledMatrix {
    std::vector<std::string> labels;
    Eigen::MatrixXd values;
};
void write_matrix_csv(std::ostream& out, const LabeledMatrix& matrix);
LabeledMatrix read_matrix_csv(std::istream& in);
nlohmann::json matrix_to_json(const LabeledMatrix& matrix);

// File helpers. Writers create parent directories; readers throw std::runtime_error naming the path.
std::string read_text(const std::filesystem::path& path);

template <typename Fn>
void write_file(const std::filesystem::path& path, Fn&& fn) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    fn(out);
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace hyperfilt::io
