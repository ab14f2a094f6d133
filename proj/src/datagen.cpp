#include "hyperfilt/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace hyperfilt {

namespace {

constexpr Eigen::Index kDim = 3;

void require_count(Eigen::Index n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
}

template <typename Draw>
PointCloud fill(Eigen::Index n, std::string label, std::uint64_t seed, Draw&& draw) {
    PointCloud cloud{PointMatrix<double>(n, kDim), std::move(label), seed};
    std::mt19937_64 rng(seed);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index l = 0; l < kDim; ++l) cloud.points(i, l) = draw(rng);
    return cloud;
}

}  // namespace

PointCloud gen_normal(Eigen::Index n, double mu, double sigma, std::uint64_t seed) {
    require_count(n, "gen_normal");
    if (!(sigma > 0.0)) throw std::invalid_argument("gen_normal: sigma must be > 0");
    std::normal_distribution<double> dist(mu, sigma);
    return fill(n, "normal", seed, [&](auto& rng) { return dist(rng); });
}

PointCloud gen_poisson(Eigen::Index n, double lambda, std::uint64_t seed) {
    require_count(n, "gen_poisson");
    if (!(lambda > 0.0)) throw std::invalid_argument("gen_poisson: lambda must be > 0");
    std::poisson_distribution<long> dist(lambda);
    return fill(n, "poisson", seed, [&](auto& rng) { return static_cast<double>(dist(rng)); });
}

PointCloud gen_uniform(Eigen::Index n, double a, double b, std::uint64_t seed) {
    require_count(n, "gen_uniform");
    if (!(a < b)) throw std::invalid_argument("gen_uniform: requires a < b");
    std::uniform_real_distribution<double> dist(a, b);
    return fill(n, "uniform", seed, [&](auto& rng) { return dist(rng); });
}

PointCloud gen_lattice(Eigen::Index n) {
    require_count(n, "gen_lattice");
    const auto side = static_cast<Eigen::Index>(std::llround(std::cbrt(static_cast<double>(n))));
    if (side * side * side != n) {
        Eigen::Index lo = side;
        while (lo * lo * lo > n) --lo;
        const Eigen::Index hi = lo + 1;
        throw std::invalid_argument("gen_lattice: n=" + std::to_string(n) + " is not a perfect cube (nearest: " +
                                    std::to_string(lo * lo * lo) + ", " + std::to_string(hi * hi * hi) + ")");
    }
    PointCloud cloud{PointMatrix<double>(n, kDim), "lattice", 0};
    const double spacing = side > 1 ? 1.0 / static_cast<double>(side - 1) : 0.0;
    Eigen::Index row = 0;
    for (Eigen::Index i = 0; i < side; ++i)
        for (Eigen::Index j = 0; j < side; ++j)
            for (Eigen::Index k = 0; k < side; ++k, ++row)
                cloud.points.row(row) << i * spacing, j * spacing, k * spacing;
    return cloud;
}

PointCloud gen_fractal(Eigen::Index n, int terms, std::uint64_t seed) {
    require_count(n, "gen_fractal");
    if (terms < 1) throw std::invalid_argument("gen_fractal: terms must be >= 1");
    std::bernoulli_distribution coin(0.5);
    std::vector<int> digits(static_cast<std::size_t>(terms));
    return fill(n, "fractal", seed, [&](auto& rng) {
        for (auto& d : digits) d = coin(rng) ? 3 : 0;
        // Summing in floating point would round the tail, and a carry out of a run of 3s
        // can plant a digit 1 in the expansion. Instead keep the first 26 digits after
        // the leading zeros in an exact integer mantissa and truncate the rest.
        const auto lead = std::find(digits.begin(), digits.end(), 3);
        std::uint64_t mantissa = 0;
        int kept = 0;
        for (auto it = lead; it != digits.end() && kept < 26; ++it, ++kept)
            mantissa = (mantissa << 2) | static_cast<std::uint64_t>(*it);
        const auto zeros = static_cast<int>(lead - digits.begin());
        return std::ldexp(static_cast<double>(mantissa), -2 * (zeros + kept));
    });
}

PointCloud gen_white_noise(Eigen::Index n, std::uint64_t seed) {
    auto cloud = gen_normal(n, 0.0, 1.0, seed);
    cloud.label = "white_noise";
    return cloud;
}

std::string_view system_name(OdeSystem system) {
    switch (system) {
        case OdeSystem::Lorenz: return "lorenz";
        case OdeSystem::Rossler: return "rossler";
        case OdeSystem::ComplexButterfly: return "complex_butterfly";
    }
    return "unknown";
}

OdeSystem parse_system(std::string_view name) {
    for (auto s : {OdeSystem::Lorenz, OdeSystem::Rossler, OdeSystem::ComplexButterfly}) {
        if (system_name(s) == name) return s;
    }
    throw std::invalid_argument("unknown dynamical system '" + std::string(name) + "'");
}

OdeSpec OdeSpec::defaults(OdeSystem system) {
    OdeSpec spec;
    spec.system = system;
    switch (system) {
        case OdeSystem::Lorenz:
            spec.params = {{"sigma", 10.0}, {"rho", 28.0}, {"beta", 8.0 / 3.0}};
            spec.initial = {0.0, -0.01, 9.0};
            break;
        case OdeSystem::Rossler:
            spec.params = {{"a", 0.2}, {"b", 0.2}, {"c", 5.7}};
            spec.initial = {-9.0, 0.0, 0.0};
            break;
        case OdeSystem::ComplexButterfly:
            spec.params = {{"a", 0.55}};
            spec.initial = {0.2, 0.0, 0.0};
            break;
    }
    return spec;
}

void OdeSpec::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("ode: dt must be > 0");
    if (subsample_stride < 1) throw std::invalid_argument("ode: subsample_stride must be >= 1");
    if (steps < subsample_stride) throw std::invalid_argument("ode: steps must be >= subsample_stride");
    if (burn_in < 0) throw std::invalid_argument("ode: burn_in must be >= 0");
    if (!initial.allFinite()) throw std::invalid_argument("ode: initial condition is not finite");
}

double OdeSpec::param(const std::string& key) const {
    if (auto it = params.find(key); it != params.end()) return it->second;
    const auto fallback = defaults(system).params;
    if (auto it = fallback.find(key); it != fallback.end()) return it->second;
    throw std::invalid_argument("ode: unknown parameter '" + key + "' for " + std::string(system_name(system)));
}

Eigen::Vector3d vector_field(const OdeSpec& spec, const Eigen::Vector3d& s) {
    const double x = s.x(), y = s.y(), z = s.z();
    switch (spec.system) {
        case OdeSystem::Lorenz: {
            const double sigma = spec.param("sigma"), rho = spec.param("rho"), beta = spec.param("beta");
            return {sigma * (y - x), -x * z + rho * x - y, x * y - beta * z};
        }
        case OdeSystem::Rossler: {
            const double a = spec.param("a"), b = spec.param("b"), c = spec.param("c");
            return {-y - z, x + a * y, b + z * (x - c)};
        }
        case OdeSystem::ComplexButterfly: {
            const double a = spec.param("a");
            const double sgn = (x > 0.0) - (x < 0.0);
            const double coupled = spec.butterfly_form == ButterflyForm::Printed ? z : x;
            return {a * (y - coupled), -z * sgn, std::abs(x) - 1.0};
        }
    }
    throw std::logic_error("vector_field: unknown system");
}

Eigen::Vector3d rk4_step(const OdeSpec& spec, const Eigen::Vector3d& s) {
    const double h = spec.dt;
    const Eigen::Vector3d k1 = vector_field(spec, s);
    const Eigen::Vector3d k2 = vector_field(spec, s + 0.5 * h * k1);
    const Eigen::Vector3d k3 = vector_field(spec, s + 0.5 * h * k2);
    const Eigen::Vector3d k4 = vector_field(spec, s + h * k3);
    return s + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

PointCloud integrate(const OdeSpec& spec) {
    spec.validate();
    const long kept = spec.steps / spec.subsample_stride;
    PointCloud cloud{PointMatrix<double>(kept, kDim), std::string(system_name(spec.system)), 0};

    Eigen::Vector3d state = spec.initial;
    for (long k = 1; k <= spec.burn_in; ++k) {
        state = rk4_step(spec, state);
        if (!state.allFinite())
            throw std::runtime_error("integrate: non-finite state at burn-in step " + std::to_string(k));
    }
    const long last = (kept - 1) * spec.subsample_stride;
    for (long k = 0;; ++k) {
        if (k % spec.subsample_stride == 0) cloud.points.row(k / spec.subsample_stride) = state.transpose();
        if (k == last) break;
        state = rk4_step(spec, state);
        if (!state.allFinite())
            throw std::runtime_error("integrate: non-finite state at step " + std::to_string(k + 1));
    }
    return cloud;
}

OdeSpec perturb_initial(OdeSpec spec, std::uint64_t seed, double magnitude) {
    if (!(magnitude > 0.0)) throw std::invalid_argument("perturb_initial: magnitude must be > 0");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> offset(-magnitude, magnitude);
    for (Eigen::Index l = 0; l < 3; ++l) spec.initial(l) += offset(rng);
    return spec;
}

}  // namespace hyperfilt
