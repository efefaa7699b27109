#pragma once

#include "neq/dataset.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace neq {

struct KMeansParams {
    std::size_t max_iters = 25;
    double tol = 1e-4; // stop when the relative objective improvement drops below this
    std::uint64_t seed = 0;
};

/// Result of any of the k-means variants. Centroids are kept in double
/// precision so per-iteration objectives are monotone to ~1e-12; callers
/// that persist codebooks round to float32 themselves.
struct KMeansResult {
    std::size_t k = 0;
    std::size_t dim = 0;
    std::vector<double> centroids; // k x dim, row-major
    std::vector<std::uint32_t> assignments;
    double objective = 0.0; // sum of squared distances to assigned centroids
    std::size_t iterations_run = 0;
    std::vector<double> objective_history; // objective after each assignment pass
    std::size_t surplus_centroids = 0;     // K > n duplicates (flagged, not an error)

    std::span<const double> centroid(std::size_t i) const {
        return {centroids.data() + i * dim, dim};
    }
};

/// Lloyd iterations with k-means++ seeding. Deterministic for a fixed seed:
/// ties in nearest-centroid assignment break to the lowest centroid index,
/// empty clusters are re-seeded from the point farthest from its centroid.
KMeansResult lloyd_kmeans(const float* data, std::size_t n, std::size_t d,
                          std::size_t k, const KMeansParams& params);

KMeansResult lloyd_kmeans(const Dataset& points, std::size_t k,
                          const KMeansParams& params);

/// lloyd_kmeans specialized to scalars (d = 1).
KMeansResult scalar_kmeans(std::span<const double> values, std::size_t k,
                           const KMeansParams& params);

/// K-means over unit vectors with unit-norm centroids (normalized cluster
/// means). Assignment maximizes cosine similarity; the reported objective is
/// the equivalent sum of squared distances. Rows must be unit within 1e-5.
KMeansResult spherical_kmeans(const Dataset& points, std::size_t k,
                              const KMeansParams& params);

/// Canonical nearest-centroid pass (ties to lowest index) used by the
/// trainers and by convergence checks.
void assign_to_centroids(const float* data, std::size_t n, std::size_t d,
                         const double* centroids, std::size_t k,
                         std::uint32_t* assignments_out, double* objective_out);

} // namespace neq
