#include "neq/synth.hpp"

#include "neq/errors.hpp"
#include "neq/rng.hpp"

#include <cmath>
#include <vector>

namespace neq {

NormProfile norm_profile_from_name(const std::string& name) {
    if (name == "constant") return NormProfile::constant;
    if (name == "gaussian") return NormProfile::gaussian;
    if (name == "longtail") return NormProfile::longtail;
    if (name == "topheavy") return NormProfile::topheavy;
    throw ConfigError("unknown norm profile '" + name + "'");
}

std::string norm_profile_name(NormProfile p) {
    switch (p) {
        case NormProfile::constant: return "constant";
        case NormProfile::gaussian: return "gaussian";
        case NormProfile::longtail: return "longtail";
        case NormProfile::topheavy: return "topheavy";
    }
    return "constant";
}

namespace {

double draw_norm(Rng& rng, NormProfile profile) {
    switch (profile) {
        case NormProfile::constant:
            return 1.0;
        case NormProfile::gaussian:
            return std::fabs(rng.normal(1.0, 0.1));
        case NormProfile::longtail:
            return rng.pareto(1.0, 2.0);
        case NormProfile::topheavy: {
            const double v = 1.0 - std::fabs(rng.normal(0.0, 0.15));
            return v > 0.0 ? v : 1e-6;
        }
    }
    return 1.0;
}

} // namespace

Dataset synthesize(std::size_t n, std::size_t d, NormProfile profile,
                   std::uint64_t seed) {
    if (n < 1 || d < 1) throw ConfigError("synthesize requires n >= 1 and d >= 1");

    Rng rng(seed);
    std::vector<float> values(n * d);
    std::vector<double> direction(d);
    for (std::size_t i = 0; i < n; ++i) {
        double sq = 0.0;
        do {
            sq = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                direction[j] = rng.normal();
                sq += direction[j] * direction[j];
            }
        } while (sq == 0.0);
        const double scale = draw_norm(rng, profile) / std::sqrt(sq);
        for (std::size_t j = 0; j < d; ++j) {
            values[i * d + j] = static_cast<float>(direction[j] * scale);
        }
    }
    return Dataset(n, d, std::move(values));
}

} // namespace neq
