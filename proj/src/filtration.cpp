#include "hyperfilt/filtration.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace hyperfilt {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct BitRowHash {
    std::size_t operator()(const BitRow& row) const { return static_cast<std::size_t>(row.hash()); }
};

}  // namespace

std::size_t BitRow::count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitRow::is_subset_of(const BitRow& other) const {
    if (bits_ != other.bits_) return false;
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w]) return false;
    return true;
}

std::uint64_t BitRow::hash() const {
    std::uint64_t h = splitmix64(bits_);
    for (auto w : words_) h = splitmix64(h ^ w);
    return h;
}

Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> IncidenceMatrix::dense() const {
    Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> out(n, static_cast<Eigen::Index>(edges.size()));
    for (Eigen::Index e = 0; e < out.cols(); ++e)
        for (Eigen::Index i = 0; i < n; ++i)
            out(i, e) = edges[static_cast<std::size_t>(e)].members.test(static_cast<std::size_t>(i)) ? 1 : 0;
    return out;
}

RadiusGrid::RadiusGrid(std::vector<double> radii) : radii_(std::move(radii)) {
    if (radii_.empty()) throw std::invalid_argument("radius grid is empty");
    for (std::size_t k = 0; k < radii_.size(); ++k) {
        if (!std::isfinite(radii_[k]) || !(radii_[k] > 0.0))
            throw std::invalid_argument("radius grid entries must be finite and > 0");
        if (k > 0 && !(radii_[k] > radii_[k - 1]))
            throw std::invalid_argument("radius grid must be strictly increasing");
    }
}

RadiusGrid RadiusGrid::uniform(double start, double step, double stop) {
    if (!(start > 0.0) || !(step > 0.0) || !(stop >= start))
        throw std::invalid_argument("radius grid requires start > 0, step > 0, stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> radii(count);
    for (std::size_t k = 0; k < count; ++k)
        radii[k] = std::round((start + static_cast<double>(k) * step) * 1e12) / 1e12;
    return RadiusGrid(std::move(radii));
}

namespace detail {

IncidenceMatrix dedup_rows(std::vector<BitRow> rows, double radius) {
    IncidenceMatrix out{static_cast<Eigen::Index>(rows.size()), radius, {}};
    std::unordered_set<BitRow, BitRowHash> seen;
    seen.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (seen.insert(rows[i]).second) out.edges.push_back({static_cast<Eigen::Index>(i), std::move(rows[i])});
    }
    return out;
}

Eigen::VectorXi sweep_buckets(Eigen::Index n, const RadiusGrid& grid, std::span<const Event> events,
                              std::span<const std::size_t> offsets) {
    const auto count = static_cast<std::size_t>(n);
    // Row fingerprints are XORs of per-column keys, so each new bit updates them in O(1).
    std::vector<std::uint64_t> keys(count);
    for (std::size_t j = 0; j < count; ++j) keys[j] = splitmix64(j + 0x5eed);

    std::vector<BitRow> rows(count, BitRow(count));
    std::vector<std::uint64_t> fingerprint(count);
    for (std::size_t i = 0; i < count; ++i) {
        rows[i].set(i);
        fingerprint[i] = keys[i];
    }

    std::vector<std::uint32_t> order(count);
    std::vector<std::uint32_t> reps;
    const auto count_distinct = [&] {
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return fingerprint[a] < fingerprint[b]; });
        int distinct = 0;
        for (std::size_t start = 0; start < count;) {
            std::size_t stop = start + 1;
            while (stop < count && fingerprint[order[stop]] == fingerprint[order[start]]) ++stop;
            // Equal fingerprints are confirmed by full comparison.
            reps.clear();
            for (std::size_t k = start; k < stop; ++k) {
                const auto& row = rows[order[k]];
                if (std::none_of(reps.begin(), reps.end(), [&](auto r) { return rows[r] == row; }))
                    reps.push_back(order[k]);
            }
            distinct += static_cast<int>(reps.size());
            start = stop;
        }
        return distinct;
    };

    Eigen::VectorXi degrees(static_cast<Eigen::Index>(grid.size()));
    int current = static_cast<int>(count);
    bool stale = true;
    for (std::size_t b = 0; b < grid.size(); ++b) {
        for (std::size_t e = offsets[b]; e < offsets[b + 1]; ++e) {
            const auto [row, col] = events[e];
            if (!rows[row].test(col)) {
                rows[row].set(col);
                fingerprint[row] ^= keys[col];
                stale = true;
            }
        }
        if (stale) {
            current = count_distinct();
            stale = false;
        }
        degrees(static_cast<Eigen::Index>(b)) = current;
    }
    return degrees;
}

}  // namespace detail

}  // namespace hyperfilt
