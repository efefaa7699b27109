#pragma once

#include "neq/dataset.hpp"

#include <cstdint>
#include <string>

namespace neq {

/// Norm profiles for synthetic data. Directions are always uniform on the
/// unit sphere; the profile controls the row norms:
///   constant  all 1
///   gaussian  |N(1, 0.1)|
///   longtail  Pareto(x_m=1, shape=2)
///   topheavy  1 - |N(0, 0.15)|, clipped into (0, 1]
enum class NormProfile { constant, gaussian, longtail, topheavy };

NormProfile norm_profile_from_name(const std::string& name);
std::string norm_profile_name(NormProfile p);

/// Pure function of its arguments: the same (n, d, profile, seed) always
/// produces a bit-identical dataset.
Dataset synthesize(std::size_t n, std::size_t d, NormProfile profile,
                   std::uint64_t seed);

} // namespace neq
