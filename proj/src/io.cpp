#include "hyperfilt/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace hyperfilt::io {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return true;
    }
    return false;
}

double parse(const std::string& field, std::size_t line_no) {
    double value = 0.0;
    const char* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw std::runtime_error("line " + std::to_string(line_no) + ": cannot parse number '" + field + "'");
    return value;
}

long parse_int(const std::string& field, std::size_t line_no) {
    long value = 0;
    const char* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw std::runtime_error("line " + std::to_string(line_no) + ": cannot parse integer '" + field + "'");
    return value;
}

void expect_header(std::istream& in, const std::vector<std::string>& expected, const char* what) {
    std::string line;
    if (!next_line(in, line)) throw std::runtime_error(std::string(what) + ": empty input");
    if (split(line) != expected) throw std::runtime_error(std::string(what) + ": unexpected header '" + line + "'");
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return {buf, ptr};
}

void write_points_csv(std::ostream& out, const PointCloud& cloud) {
    for (Eigen::Index l = 0; l < cloud.dim(); ++l) out << (l ? ",x" : "x") << l + 1;
    out << '\n';
    for (Eigen::Index i = 0; i < cloud.size(); ++i) {
        for (Eigen::Index l = 0; l < cloud.dim(); ++l) out << (l ? "," : "") << format_double(cloud.points(i, l));
        out << '\n';
    }
}

PointCloud read_points_csv(std::istream& in, std::string label) {
    std::string line;
    if (!next_line(in, line)) throw std::runtime_error("points csv: empty input");
    const auto header = split(line);
    for (std::size_t l = 0; l < header.size(); ++l)
        if (header[l] != "x" + std::to_string(l + 1))
            throw std::runtime_error("points csv: unexpected header '" + line + "'");
    const auto dim = static_cast<Eigen::Index>(header.size());

    std::vector<double> flat;
    std::size_t line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        const auto fields = split(line);
        if (static_cast<Eigen::Index>(fields.size()) != dim)
            throw std::runtime_error("points csv: line " + std::to_string(line_no) + " has " +
                                     std::to_string(fields.size()) + " columns, expected " + std::to_string(dim));
        for (const auto& f : fields) flat.push_back(parse(f, line_no));
    }
    if (flat.empty()) throw std::runtime_error("points csv: no points");
    PointCloud cloud;
    cloud.label = std::move(label);
    cloud.points = Eigen::Map<const PointMatrix<double>>(flat.data(), static_cast<Eigen::Index>(flat.size()) / dim, dim);
    return cloud;
}

nlohmann::json points_to_json(const PointCloud& cloud) {
    nlohmann::json points = nlohmann::json::array();
    for (Eigen::Index i = 0; i < cloud.size(); ++i) {
        const Eigen::VectorXd row = cloud.points.row(i).transpose();
        points.push_back(std::vector<double>(row.data(), row.data() + row.size()));
    }
    return {{"label", cloud.label}, {"seed", cloud.seed}, {"points", std::move(points)}};
}

PointCloud points_from_json(const nlohmann::json& record) {
    PointCloud cloud;
    cloud.label = record.at("label").get<std::string>();
    cloud.seed = record.value("seed", std::uint64_t{0});
    const auto rows = record.at("points").get<std::vector<std::vector<double>>>();
    if (rows.empty()) throw std::runtime_error("points json: no points");
    const auto dim = static_cast<Eigen::Index>(rows.front().size());
    cloud.points.resize(static_cast<Eigen::Index>(rows.size()), dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<Eigen::Index>(rows[i].size()) != dim)
            throw std::runtime_error("points json: point " + std::to_string(i) + " has the wrong dimension");
        for (Eigen::Index l = 0; l < dim; ++l) cloud.points(static_cast<Eigen::Index>(i), l) = rows[i][static_cast<std::size_t>(l)];
    }
    return cloud;
}

void write_curve_csv(std::ostream& out, const FiltrationCurve& curve) {
    out << "r,delta_e\n";
    for (std::size_t k = 0; k < curve.grid.size(); ++k)
        out << format_double(curve.grid[k]) << ',' << curve.degrees(static_cast<Eigen::Index>(k)) << '\n';
}

FiltrationCurve read_curve_csv(std::istream& in) {
    expect_header(in, {"r", "delta_e"}, "curve csv");
    std::vector<double> radii;
    std::vector<int> values;
    std::string line;
    std::size_t line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        const auto f = split(line);
        if (f.size() != 2) throw std::runtime_error("curve csv: line " + std::to_string(line_no) + " malformed");
        radii.push_back(parse(f[0], line_no));
        values.push_back(static_cast<int>(parse_int(f[1], line_no)));
    }
    return {RadiusGrid(std::move(radii)), Eigen::Map<const Eigen::VectorXi>(values.data(), static_cast<Eigen::Index>(values.size()))};
}

void write_ensemble_csv(std::ostream& out, std::span<const FiltrationCurve> curves) {
    out << "realization,r,delta_e\n";
    for (std::size_t c = 0; c < curves.size(); ++c)
        for (std::size_t k = 0; k < curves[c].grid.size(); ++k)
            out << c << ',' << format_double(curves[c].grid[k]) << ',' << curves[c].degrees(static_cast<Eigen::Index>(k))
                << '\n';
}

std::vector<FiltrationCurve> read_ensemble_csv(std::istream& in) {
    expect_header(in, {"realization", "r", "delta_e"}, "ensemble csv");
    std::vector<std::vector<double>> radii;
    std::vector<std::vector<int>> values;
    std::string line;
    std::size_t line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        const auto f = split(line);
        if (f.size() != 3) throw std::runtime_error("ensemble csv: line " + std::to_string(line_no) + " malformed");
        const long realization = parse_int(f[0], line_no);
        if (realization < 0 || static_cast<std::size_t>(realization) > radii.size())
            throw std::runtime_error("ensemble csv: line " + std::to_string(line_no) + " realization out of order");
        if (static_cast<std::size_t>(realization) == radii.size()) {
            radii.emplace_back();
            values.emplace_back();
        }
        radii[static_cast<std::size_t>(realization)].push_back(parse(f[1], line_no));
        values[static_cast<std::size_t>(realization)].push_back(static_cast<int>(parse_int(f[2], line_no)));
    }
    std::vector<FiltrationCurve> out;
    for (std::size_t c = 0; c < radii.size(); ++c)
        out.push_back({RadiusGrid(std::move(radii[c])),
                       Eigen::Map<const Eigen::VectorXi>(values[c].data(), static_cast<Eigen::Index>(values[c].size()))});
    return out;
}

void write_summary_csv(std::ostream& out, const CurveEnsemble& ensemble) {
    out << "r,mu,sigma\n";
    for (std::size_t k = 0; k < ensemble.grid.size(); ++k) {
        const auto i = static_cast<Eigen::Index>(k);
        out << format_double(ensemble.grid[k]) << ',' << format_double(ensemble.mean(i)) << ','
            << format_double(ensemble.stddev(i)) << '\n';
    }
}

Summary read_summary_csv(std::istream& in) {
    expect_header(in, {"r", "mu", "sigma"}, "summary csv");
    Summary s;
    std::string line;
    std::size_t line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        const auto f = split(line);
        if (f.size() != 3) throw std::runtime_error("summary csv: line " + std::to_string(line_no) + " malformed");
        s.r.push_back(parse(f[0], line_no));
        s.mu.push_back(parse(f[1], line_no));
        s.sigma.push_back(parse(f[2], line_no));
    }
    return s;
}

void write_report_csv(std::ostream& out, std::span<const ReportRow> rows) {
    out << "dataset,metric,L_mean,L_std,S_mean,S_std\n";
    for (const auto& row : rows) {
        out << row.dataset << ',' << row.metric << ',' << format_double(row.report.l_mean) << ','
            << format_double(row.report.l_std) << ',' << format_double(row.report.s_mean) << ','
            << format_double(row.report.s_std) << '\n';
    }
}

std::vector<ReportRow> read_report_csv(std::istream& in) {
    expect_header(in, {"dataset", "metric", "L_mean", "L_std", "S_mean", "S_std"}, "report csv");
    std::vector<ReportRow> rows;
    std::string line;
    std::size_t line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        const auto f = split(line);
        if (f.size() != 6) throw std::runtime_error("report csv: line " + std::to_string(line_no) + " malformed");
        rows.push_back({f[0], f[1], {parse(f[2], line_no), parse(f[3], line_no), parse(f[4], line_no), parse(f[5], line_no)}});
    }
    return rows;
}

nlohmann::json report_to_json(std::span<const ReportRow> rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
        out.push_back({{"dataset", row.dataset},
                       {"metric", row.metric},
                       {"L_mean", row.report.l_mean},
                       {"L_std", row.report.l_std},
                       {"S_mean", row.report.s_mean},
                       {"S_std", row.report.s_std}});
    }
    return out;
}

void write_matrix_csv(std::ostream& out, const LabeledMatrix& matrix) {
    for (const auto& label : matrix.labels) out << ',' << label;
    out << '\n';
    for (Eigen::Index i = 0; i < matrix.values.rows(); ++i) {
        out << matrix.labels[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < matrix.values.cols(); ++j) out << ',' << format_double(matrix.values(i, j));
        out << '\n';
    }
}

LabeledMatrix read_matrix_csv(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw std::runtime_error("matrix csv: empty input");
    auto header = split(line);
    if (header.empty() || !header.front().empty()) throw std::runtime_error("matrix csv: header must start with an empty cell");
    LabeledMatrix m;
    m.labels.assign(header.begin() + 1, header.end());
    const auto n = static_cast<Eigen::Index>(m.labels.size());
    m.values.resize(n, n);
    Eigen::Index i = 0;
    std::size_t line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        const auto f = split(line);
        if (i >= n || static_cast<Eigen::Index>(f.size()) != n + 1 || f[0] != m.labels[static_cast<std::size_t>(i)])
            throw std::runtime_error("matrix csv: line " + std::to_string(line_no) + " malformed");
        for (Eigen::Index j = 0; j < n; ++j) m.values(i, j) = parse(f[static_cast<std::size_t>(j + 1)], line_no);
        ++i;
    }
    if (i != n) throw std::runtime_error("matrix csv: expected " + std::to_string(n) + " rows");
    return m;
}

nlohmann::json matrix_to_json(const LabeledMatrix& matrix) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < matrix.values.rows(); ++i) {
        std::vector<double> row(static_cast<std::size_t>(matrix.values.cols()));
        for (Eigen::Index j = 0; j < matrix.values.cols(); ++j) row[static_cast<std::size_t>(j)] = matrix.values(i, j);
        rows.push_back(std::move(row));
    }
    return {{"labels", matrix.labels}, {"values", std::move(rows)}};
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace hyperfilt::io
