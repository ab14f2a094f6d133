#pragma once

// Reference implementations used only by the tests. They deliberately avoid
// the library's code paths: plain loops, std::vector, no Eigen expressions.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Vec3 = std::array<double, 3>;
using Matrix = std::vector<std::vector<double>>;

inline double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t l = 0; l < a.size(); ++l) s += (a[l] - b[l]) * (a[l] - b[l]);
    return std::sqrt(s);
}

inline double chebyshev(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t l = 0; l < a.size(); ++l) m = std::max(m, std::fabs(a[l] - b[l]));
    return m;
}

inline double cityblock(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t l = 0; l < a.size(); ++l) s += std::fabs(a[l] - b[l]);
    return s;
}

inline double minkowski(const std::vector<double>& a, const std::vector<double>& b, double p) {
    double s = 0.0;
    for (std::size_t l = 0; l < a.size(); ++l) s += std::pow(std::fabs(a[l] - b[l]), p);
    return std::pow(s, 1.0 / p);
}

inline double parabolic(const std::vector<double>& a, const std::vector<double>& b, const std::vector<double>& alpha) {
    double m = 0.0;
    for (std::size_t l = 0; l < a.size(); ++l) m = std::max(m, std::pow(std::fabs(a[l] - b[l]), alpha[l]));
    return m;
}

/// Membership row of center i: j is in iff d[i][j] < r, plus i itself.
inline std::vector<bool> ball(const Matrix& d, std::size_t i, double r) {
    std::vector<bool> row(d.size(), false);
    for (std::size_t j = 0; j < d.size(); ++j) row[j] = (j == i) || d[i][j] < r;
    return row;
}

/// Quadratic count of distinct membership rows: row i is new unless it equals an earlier row.
inline int distinct_rows(const Matrix& d, double r) {
    const std::size_t n = d.size();
    std::vector<std::vector<bool>> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(ball(d, i, r));
    int count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bool seen = false;
        for (std::size_t k = 0; k < i && !seen; ++k) seen = rows[k] == rows[i];
        if (!seen) ++count;
    }
    return count;
}

inline int distinct_points(const std::vector<std::vector<double>>& pts) {
    return static_cast<int>(std::set<std::vector<double>>(pts.begin(), pts.end()).size());
}

// Fixed-step RK4 written out component by component.

inline Vec3 lorenz(const Vec3& s, double sigma, double rho, double beta) {
    return {sigma * (s[1] - s[0]), s[0] * (rho - s[2]) - s[1], s[0] * s[1] - beta * s[2]};
}

inline Vec3 rossler(const Vec3& s, double a, double b, double c) {
    return {-s[1] - s[2], s[0] + a * s[1], b + s[2] * (s[0] - c)};
}

inline Vec3 butterfly(const Vec3& s, double a) {
    const double sign = s[0] > 0 ? 1.0 : (s[0] < 0 ? -1.0 : 0.0);
    return {a * (s[1] - s[2]), -s[2] * sign, std::fabs(s[0]) - 1.0};
}

template <typename F>
Vec3 rk4(F f, Vec3 s, double h, int steps) {
    for (int step = 0; step < steps; ++step) {
        const Vec3 k1 = f(s);
        Vec3 t;
        for (int c = 0; c < 3; ++c) t[c] = s[c] + 0.5 * h * k1[c];
        const Vec3 k2 = f(t);
        for (int c = 0; c < 3; ++c) t[c] = s[c] + 0.5 * h * k2[c];
        const Vec3 k3 = f(t);
        for (int c = 0; c < 3; ++c) t[c] = s[c] + h * k3[c];
        const Vec3 k4 = f(t);
        for (int c = 0; c < 3; ++c) s[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    }
    return s;
}

/// Random symmetric matrix with zero diagonal, entries in (0, 1], some ties.
inline Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> coarse(1, 8);
    Matrix d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            // Mix continuous values with a few repeated levels so rows collide.
            const double v = (rng() % 3 == 0) ? coarse(rng) / 8.0 : u(rng) + 1e-6;
            d[i][j] = d[j][i] = v;
        }
    return d;
}

}  // namespace oracle
