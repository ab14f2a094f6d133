#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperfilt/metrics.hpp"

namespace hyperfilt {

/// Fixed-width bit vector over the vertex set.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    void set(std::size_t j) { words_[j >> 6] |= std::uint64_t{1} << (j & 63); }
    bool test(std::size_t j) const { return (words_[j >> 6] >> (j & 63)) & 1u; }
    std::size_t count() const;
    bool is_subset_of(const BitRow& other) const;
    std::uint64_t hash() const;
    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const BitRow&, const BitRow&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Membership of a ball e_i(r): bit j is set iff delta(x_center, x_j) < r. The center bit is always set.
struct Hyperedge {
    Eigen::Index center = 0;
    BitRow members;
};

/// The distinct hyperedges at one radius. Edges keep the order of their first center.
struct IncidenceMatrix {
    Eigen::Index n = 0;
    double radius = 0.0;
    std::vector<Hyperedge> edges;

    /// n x m(r) 0/1 matrix, one column per distinct hyperedge.
    Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> dense() const;
};

/// Strictly increasing positive radii.
class RadiusGrid {
public:
    RadiusGrid() = default;
    explicit RadiusGrid(std::vector<double> radii);

    /// start, start+step, ... up to stop (inclusive within 1e-9 steps), each rounded to 12 decimals.
    static RadiusGrid uniform(double start, double step, double stop);
    static RadiusGrid defaults() { return uniform(0.01, 0.01, 1.01); }

    std::size_t size() const { return radii_.size(); }
    double operator[](std::size_t k) const { return radii_[k]; }
    const std::vector<double>& radii() const { return radii_; }
    Eigen::Map<const Eigen::VectorXd> as_vector() const {
        return {radii_.data(), static_cast<Eigen::Index>(radii_.size())};
    }

    friend bool operator==(const RadiusGrid&, const RadiusGrid&) = default;

private:
    std::vector<double> radii_;
};

/// Degree of hyperedges sampled on a radius grid.
struct FiltrationCurve {
    RadiusGrid grid;
    Eigen::VectorXi degrees;

    friend bool operator==(const FiltrationCurve& a, const FiltrationCurve& b) {
        return a.grid == b.grid && a.degrees.size() == b.degrees.size() && a.degrees == b.degrees;
    }
};

/// Number of distinct hyperedges m(r).
inline Eigen::Index degree(const IncidenceMatrix& incidence) {
    return static_cast<Eigen::Index>(incidence.edges.size());
}

namespace detail {

inline void require_radius(double r, const char* who) {
    if (!(r > 0.0)) throw std::invalid_argument(std::string(who) + ": radius must be > 0");
}

/// Hash-set deduplication of membership rows.
IncidenceMatrix dedup_rows(std::vector<BitRow> rows, double radius);

/// A directed membership event: bit `col` of row `row` switches on.
struct Event {
    std::uint32_t row;
    std::uint32_t col;
};

/**
 * Sweeps the grid given events bucketed by the first grid index at which
 * they hold. `offsets` has grid.size() + 1 entries delimiting each bucket.
 */
Eigen::VectorXi sweep_buckets(Eigen::Index n, const RadiusGrid& grid, std::span<const Event> events,
                              std::span<const std::size_t> offsets);

}  // namespace detail

/// Hyperedges e_i(r) for every center, deduplicated into the incidence matrix I(r).
template <typename Scalar>
IncidenceMatrix hyperedges_at(const BasicDistanceMatrix<Scalar>& d, double r) {
    detail::require_radius(r, "hyperedges_at");
    const Eigen::Index n = d.size();
    std::vector<BitRow> rows(static_cast<std::size_t>(n), BitRow(static_cast<std::size_t>(n)));
    for (Eigen::Index i = 0; i < n; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        row.set(static_cast<std::size_t>(i));
        for (Eigen::Index j = 0; j < n; ++j) {
            if (static_cast<double>(d(i, j)) < r) row.set(static_cast<std::size_t>(j));
        }
    }
    return detail::dedup_rows(std::move(rows), r);
}

/// A(r)_{ij} = 1 iff x_i belongs to e_j(r); unit diagonal.
template <typename Scalar>
Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> adjacency_at(const BasicDistanceMatrix<Scalar>& d,
                                                                          double r) {
    detail::require_radius(r, "adjacency_at");
    const Eigen::Index n = d.size();
    Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> a(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) a(i, j) = (i == j || static_cast<double>(d(j, i)) < r) ? 1 : 0;
    return a;
}

/// Per-radius recomputation; the reference route for filtration_curve.
template <typename Scalar>
FiltrationCurve filtration_curve_direct(const BasicDistanceMatrix<Scalar>& d, const RadiusGrid& grid) {
    if (grid.size() == 0) throw std::invalid_argument("filtration_curve: empty radius grid");
    FiltrationCurve curve{grid, Eigen::VectorXi(static_cast<Eigen::Index>(grid.size()))};
    for (std::size_t k = 0; k < grid.size(); ++k)
        curve.degrees(static_cast<Eigen::Index>(k)) = static_cast<int>(degree(hyperedges_at(d, grid[k])));
    return curve;
}

/**
 * Degree of hyperedges at every grid radius.
 *
 * Each off-diagonal entry is bucketed by the first radius that strictly
 * exceeds it; the sweep then switches membership bits on bucket by bucket
 * and recounts distinct rows only when a bucket is non-empty. For an exactly
 * symmetric matrix each unordered pair is visited once.
 */
template <typename Scalar>
FiltrationCurve filtration_curve(const BasicDistanceMatrix<Scalar>& d, const RadiusGrid& grid) {
    if (grid.size() == 0) throw std::invalid_argument("filtration_curve: empty radius grid");
    const Eigen::Index n = d.size();
    if (n > Eigen::Index{UINT32_MAX}) throw std::invalid_argument("filtration_curve: too many points");
    const bool symmetric = d.entries == d.entries.transpose();
    const auto& radii = grid.radii();
    const auto bucket_of = [&](Scalar value) {
        return static_cast<std::size_t>(
            std::upper_bound(radii.begin(), radii.end(), static_cast<double>(value)) - radii.begin());
    };

    // Counting sort of events by bucket; bucket grid.size() means "never inside a ball".
    std::vector<std::size_t> offsets(grid.size() + 2, 0);
    const auto visit = [&](auto&& fn) {
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = symmetric ? i + 1 : 0; j < n; ++j) {
                if (j != i) fn(i, j, bucket_of(d(i, j)));
            }
        }
    };
    visit([&](Eigen::Index, Eigen::Index, std::size_t b) { ++offsets[b + 1]; });
    for (std::size_t b = 1; b < offsets.size(); ++b) offsets[b] += offsets[b - 1];

    const std::size_t live = offsets[grid.size()];
    std::vector<detail::Event> events(live * (symmetric ? 2 : 1));
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    const std::size_t stride = symmetric ? 2 : 1;
    visit([&](Eigen::Index i, Eigen::Index j, std::size_t b) {
        if (b == grid.size()) return;
        const std::size_t slot = cursor[b]++ * stride;
        events[slot] = {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
        if (symmetric) events[slot + 1] = {static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(i)};
    });
    std::vector<std::size_t> scaled(grid.size() + 1);
    for (std::size_t b = 0; b <= grid.size(); ++b) scaled[b] = offsets[b] * stride;

    return {grid, detail::sweep_buckets(n, grid, events, scaled)};
}

}  // namespace hyperfilt
