#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace hyperfilt;

namespace {

// Points 0, 1, 2 on a line, normalized: d(x1,x2) = d(x2,x3) = 0.5, d(x1,x3) = 1.
DistanceMatrix collinear() {
    PointMatrix<double> p(3, 1);
    p << 0, 1, 2;
    return normalize(pairwise_matrix(p, MetricSpec::euclidean()));
}

BitRow bits(std::size_t n, std::initializer_list<std::size_t> on) {
    BitRow row(n);
    for (auto j : on) row.set(j);
    return row;
}

}  // namespace

TEST_CASE("bit rows") {
    BitRow a(130);
    a.set(0);
    a.set(64);
    a.set(129);
    CHECK(a.count() == 3);
    CHECK(a.test(129));
    CHECK_FALSE(a.test(128));
    BitRow b = a;
    b.set(100);
    CHECK(a.is_subset_of(b));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK(a.hash() != b.hash());
    CHECK(a == BitRow(a));
}

TEST_CASE("three collinear points") {
    const auto d = collinear();
    const auto at06 = hyperedges_at(d, 0.6);
    CHECK(degree(at06) == 3);
    CHECK(at06.edges[0].members == bits(3, {0, 1}));
    CHECK(at06.edges[1].members == bits(3, {0, 1, 2}));
    CHECK(at06.edges[2].members == bits(3, {1, 2}));

    const auto at04 = hyperedges_at(d, 0.4);
    CHECK(degree(at04) == 3);
    for (const auto& e : at04.edges) CHECK(e.members.count() == 1);

    const auto at101 = hyperedges_at(d, 1.01);
    REQUIRE(degree(at101) == 1);
    CHECK(at101.edges[0].members == bits(3, {0, 1, 2}));

    const auto dense = at06.dense();
    CHECK(dense.rows() == 3);
    CHECK(dense.cols() == 3);
    CHECK(dense.col(1).cast<int>().sum() == 3);

    CHECK_THROWS_AS(hyperedges_at(d, 0.0), std::invalid_argument);
}

TEST_CASE("degree counts hyperedges") {
    // Six vertices, four hyperedges, as in the small illustrative hypergraph.
    IncidenceMatrix fig{6, 1.0, {}};
    fig.edges.push_back({0, bits(6, {0, 1, 2})});
    fig.edges.push_back({1, bits(6, {1, 2})});
    fig.edges.push_back({3, bits(6, {2, 3, 4})});
    fig.edges.push_back({5, bits(6, {5})});
    CHECK(degree(fig) == 4);

    DistanceMatrix single{Eigen::MatrixXd::Zero(1, 1), false};
    CHECK(degree(hyperedges_at(single, 0.5)) == 1);

    std::mt19937_64 rng(1);
    const auto pts = support::random_points(rng, 25, 3);
    const auto d = normalize(pairwise_matrix(pts, MetricSpec::euclidean()));
    const double tiny = (d.entries.array() + Eigen::MatrixXd::Identity(25, 25).array()).minCoeff();
    CHECK(degree(hyperedges_at(d, tiny)) == 25);
}

TEST_CASE("filtration curve examples") {
    PointMatrix<double> two(2, 1);
    two << 0, 1;
    const auto d2 = normalize(pairwise_matrix(two, MetricSpec::euclidean()));
    const RadiusGrid g({0.5, 1.0, 1.01});
    CHECK(filtration_curve(d2, g).degrees == Eigen::Vector3i(2, 2, 1));

    const RadiusGrid g3({0.4, 0.6, 1.01});
    CHECK(filtration_curve(collinear(), g3).degrees == Eigen::Vector3i(3, 3, 1));
    CHECK(filtration_curve_direct(collinear(), g3).degrees == Eigen::Vector3i(3, 3, 1));

    DistanceMatrix same{Eigen::MatrixXd::Zero(7, 7), false};
    CHECK((filtration_curve(same, RadiusGrid::defaults()).degrees.array() == 1).all());
}

TEST_CASE("adjacency") {
    PointMatrix<double> two(2, 1);
    two << 0, 1;
    const auto d = pairwise_matrix(two, MetricSpec::euclidean());
    CHECK(adjacency_at(d, 0.5).cast<int>() == Eigen::Matrix2i::Identity());
    CHECK(adjacency_at(d, 1.5).cast<int>() == Eigen::Matrix2i::Ones());

    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto dm = support::to_matrix(oracle::random_symmetric(rng, 20));
        const auto a = adjacency_at(dm, u(rng));
        REQUIRE(a == a.transpose());
    }
}

TEST_CASE("radius grid") {
    const auto g = RadiusGrid::defaults();
    CHECK(g.size() == 101);
    CHECK(g[0] == 0.01);
    CHECK(g[99] == 1.0);
    CHECK(g[100] == 1.01);
    CHECK(RadiusGrid::uniform(0.1, 0.1, 1.0).size() == 10);
    CHECK_THROWS_AS(RadiusGrid(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(RadiusGrid({0.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(RadiusGrid({0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(RadiusGrid({0.5, 0.2}), std::invalid_argument);
}

TEST_CASE("property: oracle equivalence on random matrices") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.001, 1.05);
    std::uniform_int_distribution<std::size_t> size(1, 32);
    for (int trial = 0; trial < 200; ++trial) {
        const auto raw = oracle::random_symmetric(rng, size(rng));
        const auto d = support::to_matrix(raw);
        for (int k = 0; k < 5; ++k) {
            const double r = u(rng);
            REQUIRE(degree(hyperedges_at(d, r)) == oracle::distinct_rows(raw, r));
        }
    }
}

TEST_CASE("property: monotone growth") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> u(0.001, 1.05);
    for (int trial = 0; trial < 50; ++trial) {
        const auto d = support::to_matrix(oracle::random_symmetric(rng, 24));
        double r1 = u(rng), r2 = u(rng);
        if (r1 > r2) std::swap(r1, r2);
        const auto a1 = adjacency_at(d, r1), a2 = adjacency_at(d, r2);
        REQUIRE(((a1.array() <= a2.array())).all());
    }
}

TEST_CASE("property: incremental equals direct") {
    std::mt19937_64 rng(314);
    std::uniform_int_distribution<std::size_t> size(1, 60);
    const auto grid = RadiusGrid::uniform(0.02, 0.02, 1.04);
    for (int trial = 0; trial < 100; ++trial) {
        auto d = support::to_matrix(oracle::random_symmetric(rng, size(rng)));
        if (trial % 4 == 0 && d.size() > 1) d.entries(0, 1) += 0.3;  // asymmetric protometric route
        REQUIRE(filtration_curve(d, grid) == filtration_curve_direct(d, grid));
    }
}

TEST_CASE("property: coarse grid is a subsample of a fine grid") {
    std::mt19937_64 rng(8);
    const auto fine = RadiusGrid::uniform(0.01, 0.01, 1.01);
    const auto coarse = RadiusGrid::uniform(0.05, 0.05, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = support::random_points(rng, 80, 3);
        const auto d = normalize(pairwise_matrix(pts, MetricSpec::cityblock()));
        const auto f = filtration_curve(d, fine), c = filtration_curve(d, coarse);
        for (std::size_t k = 0; k < coarse.size(); ++k)
            REQUIRE(c.degrees(static_cast<Eigen::Index>(k)) == f.degrees(static_cast<Eigen::Index>(5 * k + 4)));
    }
}

TEST_CASE("property: curve values lie in [1, n]") {
    std::mt19937_64 rng(12);
    const auto pts = support::random_points(rng, 200, 3);
    const auto curve = filtration_curve(normalize(pairwise_matrix(pts, MetricSpec::minkowski())),
                                        RadiusGrid::defaults());
    CHECK(curve.degrees.minCoeff() >= 1);
    CHECK(curve.degrees.maxCoeff() <= 200);
    CHECK(curve.degrees(100) == 1);
}
