#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "hyperfilt/metrics.hpp"

namespace hyperfilt {

/// A finite sample of points, one per row of `points`.
struct PointCloud {
    PointMatrix<double> points;
    std::string label;
    std::uint64_t seed = 0;

    Eigen::Index size() const { return points.rows(); }
    Eigen::Index dim() const { return points.cols(); }
};

// Point distributions. All generators are pure functions of their arguments.

PointCloud gen_normal(Eigen::Index n, double mu, double sigma, std::uint64_t seed);
PointCloud gen_poisson(Eigen::Index n, double lambda, std::uint64_t seed);
PointCloud gen_uniform(Eigen::Index n, double a, double b, std::uint64_t seed);

/// k x k x k grid filling [0,1]^3 with spacing 1/(k-1); n must equal k^3.
PointCloud gen_lattice(Eigen::Index n);

/// Each coordinate is sum_{i=1..terms} d_i / 4^i with digits d_i drawn uniformly from {0, 3},
/// truncated (never rounded) to the 26 leading base-4 digits a double holds exactly.
PointCloud gen_fractal(Eigen::Index n, int terms, std::uint64_t seed);

/// I.i.d. standard normal 3D points; same stream as gen_normal(n, 0, 1, seed).
PointCloud gen_white_noise(Eigen::Index n, std::uint64_t seed);

enum class OdeSystem { Lorenz, Rossler, ComplexButterfly };

/// `Printed` uses dx/dt = a(y - z); `Canonical` uses the usual a(y - x).
enum class ButterflyForm { Printed, Canonical };

std::string_view system_name(OdeSystem system);
OdeSystem parse_system(std::string_view name);

struct OdeSpec {
    OdeSystem system = OdeSystem::Lorenz;
    /// Lorenz: sigma, rho, beta. Rossler: a, b, c. Butterfly: a.
    std::map<std::string, double> params;
    Eigen::Vector3d initial = Eigen::Vector3d::Zero();
    double dt = 0.01;
    long steps = 10000;
    long subsample_stride = 10;
    long burn_in = 0;
    ButterflyForm butterfly_form = ButterflyForm::Printed;

    /// Parameters, initial condition and step settings used for the published runs.
    static OdeSpec defaults(OdeSystem system);

    void validate() const;
    double param(const std::string& key) const;
};

Eigen::Vector3d vector_field(const OdeSpec& spec, const Eigen::Vector3d& state);

/// One classical RK4 step of size spec.dt.
Eigen::Vector3d rk4_step(const OdeSpec& spec, const Eigen::Vector3d& state);

/**
 * Fixed-step RK4 trajectory.
 *
 * The full trajectory has `steps` states, state 0 being `initial` (after an
 * optional burn-in of `burn_in` steps). Every `subsample_stride`-th state is
 * kept, giving floor(steps / stride) rows. Throws std::runtime_error naming
 * the step if the state becomes non-finite.
 */
PointCloud integrate(const OdeSpec& spec);

/// Copy of `spec` with each initial coordinate shifted by a seed-derived offset in [-magnitude, magnitude].
OdeSpec perturb_initial(OdeSpec spec, std::uint64_t seed, double magnitude = 1e-3);

}  // namespace hyperfilt
