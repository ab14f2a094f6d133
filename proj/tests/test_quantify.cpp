#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace hyperfilt;

namespace {

FiltrationCurve curve_of(const RadiusGrid& grid, std::vector<int> values) {
    return {grid, Eigen::Map<Eigen::VectorXi>(values.data(), static_cast<Eigen::Index>(values.size()))};
}

}  // namespace

TEST_CASE("l1 norm") {
    CHECK(l1_norm(Eigen::Vector2i(2, 1)) == 3.0);
    CHECK(l1_norm(Eigen::VectorXi::Constant(100, 1000)) == 100000.0);
    CHECK(l1_norm(Eigen::Vector3d(-1, 2, -3)) == 6.0);
}

TEST_CASE("sobolev seminorm") {
    const RadiusGrid two({0.01, 0.02});
    CHECK(sobolev_seminorm(Eigen::Vector2i(3, 1), two, SpacingMode::Grid) == doctest::Approx(200.0).epsilon(1e-12));
    CHECK(sobolev_seminorm(Eigen::Vector2i(3, 1), two, SpacingMode::Index) == 2.0);
    CHECK(sobolev_seminorm(Eigen::Vector2i(4, 4), two, SpacingMode::Grid) == 0.0);
    CHECK(sobolev_seminorm(Eigen::Vector2i(4, 4), two, SpacingMode::Index) == 0.0);

    const auto grid = RadiusGrid::uniform(0.01, 0.01, 1.0);
    Eigen::VectorXi down(100);
    for (int k = 0; k < 100; ++k) down(k) = k == 99 ? 1 : 1000 - 10 * k;
    CHECK(sobolev_seminorm(down, grid, SpacingMode::Index) == 999.0);

    CHECK_THROWS_AS(sobolev_seminorm(Eigen::VectorXi::Ones(1), RadiusGrid({0.5}), SpacingMode::Index),
                    std::invalid_argument);
    CHECK_THROWS_AS(sobolev_seminorm(Eigen::VectorXi::Ones(3), two, SpacingMode::Index), std::invalid_argument);
    CHECK(parse_spacing("grid") == SpacingMode::Grid);
    CHECK_THROWS_AS(parse_spacing("log"), std::invalid_argument);
}

TEST_CASE("property: norms") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> v(1, 1000);
    for (int trial = 0; trial < 200; ++trial) {
        Eigen::VectorXi a(30), b(20);
        for (auto& x : a) x = v(rng);
        for (auto& x : b) x = v(rng);
        Eigen::VectorXi ab(50);
        ab << a, b;
        REQUIRE(l1_norm(ab) == l1_norm(a) + l1_norm(b));
        const Eigen::VectorXi bigger = a.array() + v(rng);
        REQUIRE(l1_norm(bigger) >= l1_norm(a));

        const auto grid = RadiusGrid::uniform(0.01, 0.01, 0.3);
        double tv = 0.0;
        for (int k = 1; k < 30; ++k) tv += std::abs(a(k) - a(k - 1));
        REQUIRE(sobolev_seminorm(a, grid, SpacingMode::Index) == tv);

        Eigen::VectorXi sorted = a;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        REQUIRE(sobolev_seminorm(sorted, grid, SpacingMode::Index) == sorted(0) - sorted(29));
    }
}

TEST_CASE("ensemble statistics") {
    const RadiusGrid g({0.1, 0.2});
    const std::vector<FiltrationCurve> one{curve_of(g, {5, 2})};
    const auto e1 = ensemble_stats(one);
    CHECK(e1.mean == Eigen::Vector2d(5, 2));
    CHECK(e1.stddev.isZero(0.0));

    const std::vector<FiltrationCurve> two{curve_of(g, {1, 3}), curve_of(g, {3, 1})};
    const auto e2 = ensemble_stats(two);
    CHECK(e2.mean == Eigen::Vector2d(2, 2));
    CHECK(e2.stddev == Eigen::Vector2d(1, 1));
    const auto sample = ensemble_stats(two, StdConvention::Sample);
    CHECK(sample.stddev(0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(e2.count() == 2);
    CHECK(e2.curve(1) == two[1]);

    CHECK_THROWS_AS(ensemble_stats({}), std::invalid_argument);
    const std::vector<FiltrationCurve> mixed{curve_of(g, {1, 3}), curve_of(RadiusGrid({0.1, 0.3}), {1, 3})};
    CHECK_THROWS_AS(ensemble_stats(mixed), std::invalid_argument);

    const auto report = quantifier_report(e2);
    CHECK(report.l_mean == 4.0);
    CHECK(report.l_std == 0.0);
    CHECK(report.s_mean == 2.0);
    CHECK(report.s_std == 0.0);
}

TEST_CASE("band distance") {
    const RadiusGrid g({0.5});
    const auto a = support::constant_band(g, 10, 1), b = support::constant_band(g, 5, 1);
    CHECK(band_distance(a, b)(0) == 3.0);
    CHECK(band_distance(b, a)(0) == 3.0);
    CHECK(band_distance(a, a)(0) == 0.0);
    CHECK(band_distance(support::constant_band(g, 6, 2), b)(0) == 0.0);
    CHECK_THROWS_AS(band_distance(a, support::constant_band(RadiusGrid({0.6}), 5, 1)), std::invalid_argument);
}

TEST_CASE("system distance on constant bands") {
    const auto grid = RadiusGrid::uniform(0.01, 0.01, 1.0);
    const auto a = support::constant_band(grid, 10, 1), b = support::constant_band(grid, 5, 1);
    CHECK(system_distance(a, b, Quantifier::L1) == 300.0);
    CHECK(system_distance(a, b, Quantifier::Sobolev) == 0.0);
    CHECK(system_distance(a, a, Quantifier::L1) == 0.0);
    CHECK(system_distance(a, a, Quantifier::Sobolev) == 0.0);
}

TEST_CASE("distance matrix") {
    const auto grid = RadiusGrid::uniform(0.01, 0.01, 1.0);
    const std::vector<CurveEnsemble> one{support::constant_band(grid, 3, 0)};
    CHECK(distance_matrix(one, Quantifier::L1) == Eigen::MatrixXd::Zero(1, 1));

    const std::vector<CurveEnsemble> dup{one[0], one[0]};
    CHECK(distance_matrix(dup, Quantifier::L1).isZero(0.0));

    // Bands [9,11], [4,6], [0,2]: gaps 3, 7 and 2.
    const std::vector<CurveEnsemble> three{support::constant_band(grid, 10, 1), support::constant_band(grid, 5, 1),
                                           support::constant_band(grid, 1, 1)};
    const auto m = distance_matrix(three, Quantifier::L1);
    const Eigen::Matrix3d expect = (Eigen::Matrix3d() << 0, 300, 700, 300, 0, 200, 700, 200, 0).finished();
    CHECK(m == expect);
}

TEST_CASE("property: band distance symmetry and overlap") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(0.0, 100.0);
    const auto grid = RadiusGrid::uniform(0.1, 0.1, 1.0);
    std::vector<CurveEnsemble> list;
    for (int trial = 0; trial < 100; ++trial) {
        auto a = support::constant_band(grid, 0, 0), b = a;
        for (Eigen::Index k = 0; k < 10; ++k) {
            a.mean(k) = u(rng);
            a.stddev(k) = u(rng) / 10;
            b.mean(k) = u(rng);
            b.stddev(k) = u(rng) / 10;
        }
        REQUIRE(band_distance(a, b) == band_distance(b, a));
        // Centering b's band inside a's forces overlap everywhere.
        auto inside = b;
        inside.mean = a.mean;
        REQUIRE(band_distance(a, inside).isZero(0.0));
        list.push_back(a);
    }
    for (auto q : {Quantifier::L1, Quantifier::Sobolev}) {
        const auto m = distance_matrix(list, q);
        REQUIRE(m == m.transpose());
        REQUIRE(m.diagonal().isZero(0.0));
    }
}

TEST_CASE("property: pipeline scale invariance") {
    std::mt19937_64 rng(3);
    const auto pts = support::random_points(rng, 150, 3);
    const PointMatrix<double> scaled = pts * 7.3;
    const auto grid = RadiusGrid::defaults();
    for (const auto& m : {MetricSpec::euclidean(), MetricSpec::chebyshev(), MetricSpec::cityblock(),
                          MetricSpec::minkowski()}) {
        const auto a = filtration_curve(normalize(pairwise_matrix(pts, m)), grid);
        const auto b = filtration_curve(normalize(pairwise_matrix(scaled, m)), grid);
        CHECK(a == b);
        CHECK(l1_norm(a) == l1_norm(b));
        CHECK(sobolev_seminorm(a) == sobolev_seminorm(b));
    }
}
