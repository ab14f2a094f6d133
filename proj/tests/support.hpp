#pragma once

#include <random>

#include "hyperfilt/filtration.hpp"
#include "hyperfilt/metrics.hpp"
#include "hyperfilt/quantify.hpp"
#include "oracles.hpp"

namespace support {

inline hyperfilt::DistanceMatrix to_matrix(const oracle::Matrix& d) {
    hyperfilt::DistanceMatrix out;
    const auto n = static_cast<Eigen::Index>(d.size());
    out.entries.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) out.entries(i, j) = d[i][j];
    return out;
}

inline std::vector<std::vector<double>> rows_of(const hyperfilt::PointMatrix<double>& pts) {
    std::vector<std::vector<double>> rows;
    for (Eigen::Index i = 0; i < pts.rows(); ++i) rows.emplace_back(pts.row(i).begin(), pts.row(i).end());
    return rows;
}

/// Ensemble whose every curve is the constant `mu`, with a forced std `sigma`.
inline hyperfilt::CurveEnsemble constant_band(const hyperfilt::RadiusGrid& grid, double mu, double sigma) {
    hyperfilt::CurveEnsemble e;
    const auto m = static_cast<Eigen::Index>(grid.size());
    e.grid = grid;
    e.curves = Eigen::MatrixXi::Constant(1, m, static_cast<int>(mu));
    e.mean = Eigen::VectorXd::Constant(m, mu);
    e.stddev = Eigen::VectorXd::Constant(m, sigma);
    return e;
}

inline hyperfilt::PointMatrix<double> random_points(std::mt19937_64& rng, Eigen::Index n, Eigen::Index dim,
                                                    double lo = -5.0, double hi = 5.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    hyperfilt::PointMatrix<double> p(n, dim);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index l = 0; l < dim; ++l) p(i, l) = u(rng);
    return p;
}

}  // namespace support
