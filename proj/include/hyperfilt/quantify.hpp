#pragma once

#include <Eigen/Core>

#include <span>
#include <stdexcept>
#include <string_view>

#include "hyperfilt/filtration.hpp"

namespace hyperfilt {

/// Denominator of each Sobolev difference: the grid step r_i - r_{i-1}, or 1.
enum class SpacingMode { Grid, Index };

enum class StdConvention { Population, Sample };

enum class Quantifier { L1, Sobolev };

std::string_view spacing_name(SpacingMode mode);
SpacingMode parse_spacing(std::string_view name);
std::string_view quantifier_name(Quantifier q);

/// Sum of absolute values of the samples.
template <typename Derived>
double l1_norm(const Eigen::DenseBase<Derived>& values) {
    return values.derived().template cast<double>().array().abs().sum();
}

inline double l1_norm(const FiltrationCurve& curve) { return l1_norm(curve.degrees); }

/// Sum over successive samples of |v_i - v_{i-1}| / spacing.
template <typename Derived>
double sobolev_seminorm(const Eigen::DenseBase<Derived>& values, const RadiusGrid& grid, SpacingMode mode) {
    const Eigen::Index m = values.size();
    if (m < 2) throw std::invalid_argument("sobolev_seminorm: curve needs at least two samples");
    if (static_cast<std::size_t>(m) != grid.size())
        throw std::invalid_argument("sobolev_seminorm: curve and grid lengths differ");
    const Eigen::VectorXd v = values.derived().template cast<double>().reshaped();
    const Eigen::ArrayXd jumps = (v.tail(m - 1) - v.head(m - 1)).array().abs();
    if (mode == SpacingMode::Index) return jumps.sum();
    const auto r = grid.as_vector();
    return (jumps / (r.tail(m - 1) - r.head(m - 1)).array()).sum();
}

inline double sobolev_seminorm(const FiltrationCurve& curve, SpacingMode mode = SpacingMode::Index) {
    return sobolev_seminorm(curve.degrees, curve.grid, mode);
}

/// k curves on one grid with their pointwise mean and standard deviation.
struct CurveEnsemble {
    RadiusGrid grid;
    Eigen::MatrixXi curves;  ///< one realization per row
    Eigen::VectorXd mean;
    Eigen::VectorXd stddev;

    Eigen::Index count() const { return curves.rows(); }
    FiltrationCurve curve(Eigen::Index k) const { return {grid, curves.row(k).transpose()}; }
};

CurveEnsemble ensemble_stats(std::span<const FiltrationCurve> curves,
                             StdConvention convention = StdConvention::Population);

/// Mean and standard deviation of L and S over the ensemble's curves.
struct QuantifierReport {
    double l_mean = 0.0;
    double l_std = 0.0;
    double s_mean = 0.0;
    double s_std = 0.0;
};

QuantifierReport quantifier_report(const CurveEnsemble& ensemble, SpacingMode mode = SpacingMode::Index,
                                   StdConvention convention = StdConvention::Population);

/**
 * Per-radius gap between the mean +/- std bands of two ensembles.
 *
 * Zero wherever the bands [mu - sigma, mu + sigma] intersect, otherwise the
 * lower edge of the higher band minus the upper edge of the lower band.
 */
Eigen::VectorXd band_distance(const CurveEnsemble& a, const CurveEnsemble& b);

/// L1 norm or Sobolev seminorm of band_distance(a, b).
double system_distance(const CurveEnsemble& a, const CurveEnsemble& b, Quantifier quantifier,
                       SpacingMode mode = SpacingMode::Index);

/// Symmetric matrix of system_distance over all pairs, zero diagonal.
Eigen::MatrixXd distance_matrix(std::span<const CurveEnsemble> ensembles, Quantifier quantifier,
                                SpacingMode mode = SpacingMode::Index);

}  // namespace hyperfilt
