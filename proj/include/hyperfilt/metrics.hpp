#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hyperfilt/parallel.hpp"

namespace hyperfilt {

/// Row-major point storage: one point per row.
template <typename Scalar>
using PointMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class MetricKind { Euclidean, Chebyshev, Cityblock, Minkowski, Parabolic };

/**
 * Selects one of the five distances and carries its parameters.
 *
 * `p` is read only for Minkowski and `alphas` only for Parabolic, where
 * coordinate l contributes |a_l - b_l|^alphas[l] to a max.
 */
struct MetricSpec {
    MetricKind kind = MetricKind::Euclidean;
    double p = 3.0;
    Eigen::VectorXd alphas;

    static MetricSpec euclidean() { return {MetricKind::Euclidean, 3.0, {}}; }
    static MetricSpec chebyshev() { return {MetricKind::Chebyshev, 3.0, {}}; }
    static MetricSpec cityblock() { return {MetricKind::Cityblock, 3.0, {}}; }
    static MetricSpec minkowski(double p = 3.0) { return {MetricKind::Minkowski, p, {}}; }
    static MetricSpec parabolic(Eigen::VectorXd alphas = default_alphas()) {
        return {MetricKind::Parabolic, 3.0, std::move(alphas)};
    }
    static Eigen::VectorXd default_alphas() { return Eigen::Vector3d(1.0, 0.5, 0.5); }

    /// Throws std::invalid_argument if parameters are out of range for points of `dim` coordinates.
    void validate(Eigen::Index dim) const;

    /// Short identifier used in file names, e.g. `euclidean`, `minkowski_p4`.
    std::string name() const;
};

std::string_view kind_name(MetricKind kind);
MetricKind parse_metric_kind(std::string_view name);

/// Parses `euclidean`, `minkowski`, `minkowski:4`, `parabolic:1,0.5,0.5`.
MetricSpec parse_metric(std::string_view text);

namespace detail {

template <typename Scalar>
inline Scalar snowflake(Scalar diff, double alpha) {
    return alpha == 1.0 ? diff : static_cast<Scalar>(std::pow(diff, static_cast<Scalar>(alpha)));
}

}  // namespace detail

/**
 * Distance between two points under `spec`.
 *
 * Parameters are assumed valid (see MetricSpec::validate); only the
 * dimension agreement is checked here.
 */
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar distance(const Eigen::MatrixBase<DerivedA>& a,
                                   const Eigen::MatrixBase<DerivedB>& b,
                                   const MetricSpec& spec) {
    using Scalar = typename DerivedA::Scalar;
    if (a.size() != b.size()) {
        throw std::invalid_argument("distance: dimension mismatch (" + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()) + ")");
    }
    const auto diff = (a.derived().reshaped() - b.derived().reshaped()).array().abs();
    switch (spec.kind) {
        case MetricKind::Euclidean:
            return std::sqrt(diff.square().sum());
        case MetricKind::Chebyshev:
            return a.size() == 0 ? Scalar(0) : diff.maxCoeff();
        case MetricKind::Cityblock:
            return diff.sum();
        case MetricKind::Minkowski: {
            const auto p = static_cast<Scalar>(spec.p);
            return std::pow(diff.pow(p).sum(), Scalar(1) / p);
        }
        case MetricKind::Parabolic: {
            if (spec.alphas.size() != a.size()) {
                throw std::invalid_argument("distance: parabolic alphas length " +
                                            std::to_string(spec.alphas.size()) +
                                            " does not match dimension " + std::to_string(a.size()));
            }
            Scalar out(0);
            for (Eigen::Index l = 0; l < diff.size(); ++l) {
                out = std::max(out, detail::snowflake(diff(l), spec.alphas(l)));
            }
            return out;
        }
    }
    throw std::logic_error("distance: unknown metric kind");
}

/// Square matrix of pairwise (proto)distances; entry (i, j) is delta(x_i, x_j).
template <typename Scalar>
struct BasicDistanceMatrix {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> entries;
    bool normalized = false;

    Eigen::Index size() const { return entries.rows(); }
    Scalar operator()(Eigen::Index i, Eigen::Index j) const { return entries(i, j); }
};

using DistanceMatrix = BasicDistanceMatrix<double>;

/**
 * All pairwise distances of the rows of `points`.
 *
 * Only the upper triangle is evaluated and then mirrored, so the result is
 * exactly symmetric. Rows are processed in parallel blocks.
 */
template <typename Derived>
BasicDistanceMatrix<typename Derived::Scalar> pairwise_matrix(const Eigen::MatrixBase<Derived>& points,
                                                               const MetricSpec& spec) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = points.rows();
    if (n == 0) {
        throw std::invalid_argument("pairwise_matrix: empty point cloud");
    }
    spec.validate(points.cols());

    const PointMatrix<Scalar> pts = points;
    BasicDistanceMatrix<Scalar> out;
    out.entries.setZero(n, n);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
        const auto i = static_cast<Eigen::Index>(row);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            out.entries(i, j) = distance(pts.row(i), pts.row(j), spec);
        }
    });
    out.entries.template triangularView<Eigen::StrictlyLower>() = out.entries.transpose();
    return out;
}

/// Divides every entry by the largest one. Throws if all entries are zero.
template <typename Scalar>
BasicDistanceMatrix<Scalar> normalize(const BasicDistanceMatrix<Scalar>& d) {
    const Scalar peak = d.entries.size() == 0 ? Scalar(0) : d.entries.maxCoeff();
    if (!(peak > Scalar(0))) {
        throw std::invalid_argument("normalize: distance matrix has no positive entry (all points coincide)");
    }
    BasicDistanceMatrix<Scalar> out{d.entries / peak, true};
    return out;
}

}  // namespace hyperfilt
