#include "hyperfilt/metrics.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace hyperfilt {

namespace {

double parse_double(std::string_view text, std::string_view what) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
    }
    return value;
}

std::string compact(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

std::string_view kind_name(MetricKind kind) {
    switch (kind) {
        case MetricKind::Euclidean: return "euclidean";
        case MetricKind::Chebyshev: return "chebyshev";
        case MetricKind::Cityblock: return "cityblock";
        case MetricKind::Minkowski: return "minkowski";
        case MetricKind::Parabolic: return "parabolic";
    }
    return "unknown";
}

MetricKind parse_metric_kind(std::string_view name) {
    for (auto kind : {MetricKind::Euclidean, MetricKind::Chebyshev, MetricKind::Cityblock,
                      MetricKind::Minkowski, MetricKind::Parabolic}) {
        if (kind_name(kind) == name) return kind;
    }
    throw std::invalid_argument("unknown metric '" + std::string(name) +
                                "' (expected euclidean, chebyshev, cityblock, minkowski or parabolic)");
}

MetricSpec parse_metric(std::string_view text) {
    const auto colon = text.find(':');
    MetricSpec spec;
    spec.kind = parse_metric_kind(text.substr(0, colon));
    if (spec.kind == MetricKind::Parabolic) spec.alphas = MetricSpec::default_alphas();
    if (colon == std::string_view::npos) return spec;

    const auto args = text.substr(colon + 1);
    if (spec.kind == MetricKind::Minkowski) {
        spec.p = parse_double(args, "minkowski p");
    } else if (spec.kind == MetricKind::Parabolic) {
        std::vector<double> alphas;
        std::size_t start = 0;
        while (start <= args.size()) {
            const auto comma = args.find(',', start);
            const auto piece = args.substr(start, comma == std::string_view::npos ? args.npos : comma - start);
            alphas.push_back(parse_double(piece, "parabolic alpha"));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        spec.alphas = Eigen::Map<const Eigen::VectorXd>(alphas.data(), static_cast<Eigen::Index>(alphas.size()));
    } else {
        throw std::invalid_argument("metric '" + std::string(kind_name(spec.kind)) + "' takes no parameters");
    }
    return spec;
}

void MetricSpec::validate(Eigen::Index dim) const {
    if (kind == MetricKind::Minkowski && !(p >= 1.0 && std::isfinite(p))) {
        throw std::invalid_argument("minkowski requires finite p >= 1, got " + compact(p));
    }
    if (kind == MetricKind::Parabolic) {
        if (alphas.size() != dim) {
            throw std::invalid_argument("parabolic alphas length " + std::to_string(alphas.size()) +
                                        " does not match point dimension " + std::to_string(dim));
        }
        for (Eigen::Index l = 0; l < alphas.size(); ++l) {
            if (!(alphas(l) > 0.0 && alphas(l) <= 1.0)) {
                throw std::invalid_argument("parabolic alpha " + compact(alphas(l)) + " outside (0, 1]");
            }
        }
    }
}

std::string MetricSpec::name() const {
    std::string out(kind_name(kind));
    if (kind == MetricKind::Minkowski && p != 3.0) {
        out += "_p" + compact(p);
    } else if (kind == MetricKind::Parabolic &&
               (alphas.size() != default_alphas().size() || alphas != default_alphas())) {
        out += "_a";
        for (Eigen::Index l = 0; l < alphas.size(); ++l) out += (l ? "-" : "") + compact(alphas(l));
    }
    return out;
}

}  // namespace hyperfilt
