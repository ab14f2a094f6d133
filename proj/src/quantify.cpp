#include "hyperfilt/quantify.hpp"

#include <cmath>
#include <string>

#include "hyperfilt/parallel.hpp"

namespace hyperfilt {

namespace {

void require_same_grid(const CurveEnsemble& a, const CurveEnsemble& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("ensembles are sampled on different radius grids");
}

double spread(const Eigen::ArrayXd& x, StdConvention convention) {
    const auto k = static_cast<double>(x.size());
    if (x.size() < 2) return 0.0;
    const double ss = (x - x.mean()).square().sum();
    return std::sqrt(ss / (convention == StdConvention::Population ? k : k - 1.0));
}

}  // namespace

std::string_view spacing_name(SpacingMode mode) { return mode == SpacingMode::Grid ? "grid" : "index"; }

SpacingMode parse_spacing(std::string_view name) {
    if (name == "grid") return SpacingMode::Grid;
    if (name == "index") return SpacingMode::Index;
    throw std::invalid_argument("unknown spacing mode '" + std::string(name) + "' (expected grid or index)");
}

std::string_view quantifier_name(Quantifier q) { return q == Quantifier::L1 ? "L1" : "sobolev"; }

CurveEnsemble ensemble_stats(std::span<const FiltrationCurve> curves, StdConvention convention) {
    if (curves.empty()) throw std::invalid_argument("ensemble_stats: no curves");
    const auto& grid = curves.front().grid;
    const auto m = static_cast<Eigen::Index>(grid.size());
    CurveEnsemble out{grid, Eigen::MatrixXi(static_cast<Eigen::Index>(curves.size()), m), {}, {}};
    for (std::size_t k = 0; k < curves.size(); ++k) {
        if (!(curves[k].grid == grid) || curves[k].degrees.size() != m)
            throw std::invalid_argument("ensemble_stats: curve " + std::to_string(k) + " uses a different grid");
        out.curves.row(static_cast<Eigen::Index>(k)) = curves[k].degrees.transpose();
    }
    const Eigen::MatrixXd values = out.curves.cast<double>();
    out.mean = values.colwise().mean().transpose();
    out.stddev.resize(m);
    for (Eigen::Index c = 0; c < m; ++c) out.stddev(c) = spread(values.col(c).array(), convention);
    return out;
}

QuantifierReport quantifier_report(const CurveEnsemble& ensemble, SpacingMode mode, StdConvention convention) {
    const Eigen::Index k = ensemble.count();
    Eigen::ArrayXd l(k), s(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        l(i) = l1_norm(ensemble.curves.row(i));
        s(i) = sobolev_seminorm(ensemble.curves.row(i), ensemble.grid, mode);
    }
    return {l.mean(), spread(l, convention), s.mean(), spread(s, convention)};
}

Eigen::VectorXd band_distance(const CurveEnsemble& a, const CurveEnsemble& b) {
    require_same_grid(a, b);
    const Eigen::ArrayXd a_low = a.mean.array() - a.stddev.array();
    const Eigen::ArrayXd a_high = a.mean.array() + a.stddev.array();
    const Eigen::ArrayXd b_low = b.mean.array() - b.stddev.array();
    const Eigen::ArrayXd b_high = b.mean.array() + b.stddev.array();
    return (a_low - b_high).max(b_low - a_high).max(0.0).matrix();
}

double system_distance(const CurveEnsemble& a, const CurveEnsemble& b, Quantifier quantifier, SpacingMode mode) {
    const Eigen::VectorXd gap = band_distance(a, b);
    return quantifier == Quantifier::L1 ? l1_norm(gap) : sobolev_seminorm(gap, a.grid, mode);
}

Eigen::MatrixXd distance_matrix(std::span<const CurveEnsemble> ensembles, Quantifier quantifier, SpacingMode mode) {
    const auto n = static_cast<Eigen::Index>(ensembles.size());
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) require_same_grid(ensembles[0], ensembles[static_cast<std::size_t>(i)]);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
        const auto i = static_cast<Eigen::Index>(row);
        for (Eigen::Index j = i + 1; j < n; ++j)
            out(i, j) = system_distance(ensembles[row], ensembles[static_cast<std::size_t>(j)], quantifier, mode);
    });
    out.triangularView<Eigen::StrictlyLower>() = out.transpose();
    return out;
}

}  // namespace hyperfilt
