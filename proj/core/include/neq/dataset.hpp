#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace neq {

/// One item or query: a dense row of d real values.
using Vector = std::vector<float>;

/// Immutable n x d row-major collection of finite float rows with cached
/// Euclidean row norms. Safe to share across threads after construction.
class Dataset {
public:
    Dataset() = default;

    /// Takes ownership of row-major values (size must be n*d). Rejects
    /// NaN/Inf entries with FormatError.
    Dataset(std::size_t n, std::size_t d, std::vector<float> values);

    std::size_t size() const { return n_; }
    std::size_t dim() const { return d_; }
    bool empty() const { return n_ == 0; }

    std::span<const float> row(std::size_t i) const {
        return {values_.data() + i * d_, d_};
    }
    const std::vector<float>& values() const { return values_; }

    /// Exact Euclidean norm of each row, computed once at construction.
    const std::vector<double>& norms() const { return norms_; }

private:
    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<float> values_;
    std::vector<double> norms_;
};

/// Summary of the row-norm distribution: B equal-width buckets over
/// [0, max]; bucket counts sum to n.
struct NormStats {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double stddev = 0.0;
    std::vector<std::size_t> histogram;
};

/// Throws std::domain_error on an empty dataset or buckets == 0.
NormStats norm_stats(const Dataset& ds, std::size_t buckets);

/// norm/direction split of a dataset. Zero-norm rows keep a zero direction
/// and are listed in zero_rows; they can never win a MIPS query against
/// positive inner products.
struct Decomposition {
    std::vector<double> norms;
    Dataset directions;
    std::vector<std::size_t> zero_rows;
};

Decomposition decompose(const Dataset& ds);

double dot(std::span<const float> a, std::span<const float> b);
double norm(std::span<const float> v);

} // namespace neq
