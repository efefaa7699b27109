#include "neq/dataset.hpp"

#include "neq/errors.hpp"
#include "neq/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace neq {

double dot(std::span<const float> a, std::span<const float> b) {
    double acc = 0.0;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) acc += static_cast<double>(a[i]) * b[i];
    return acc;
}

double norm(std::span<const float> v) {
    return std::sqrt(dot(v, v));
}

Dataset::Dataset(std::size_t n, std::size_t d, std::vector<float> values)
    : n_(n), d_(d), values_(std::move(values)) {
    if (values_.size() != n_ * d_) {
        throw FormatError("dataset value buffer size " + std::to_string(values_.size()) +
                          " does not match n*d = " + std::to_string(n_ * d_));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw FormatError("non-finite value at row " + std::to_string(i / std::max<std::size_t>(d_, 1)) +
                              ", column " + std::to_string(d_ ? i % d_ : 0));
        }
    }
    norms_.resize(n_);
    parallel_for(n_, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) norms_[i] = norm(row(i));
    });
}

NormStats norm_stats(const Dataset& ds, std::size_t buckets) {
    if (ds.empty()) throw std::domain_error("norm_stats: empty dataset");
    if (buckets == 0) throw std::domain_error("norm_stats: buckets must be positive");

    const auto& norms = ds.norms();
    NormStats s;
    s.min = norms[0];
    s.max = norms[0];
    double sum = 0.0;
    for (double v : norms) {
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
        sum += v;
    }
    s.mean = sum / static_cast<double>(ds.size());
    double sq = 0.0;
    for (double v : norms) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(ds.size()));

    s.histogram.assign(buckets, 0);
    for (double v : norms) {
        std::size_t b = 0;
        if (s.max > 0.0) {
            b = static_cast<std::size_t>(v / s.max * static_cast<double>(buckets));
            b = std::min(b, buckets - 1); // v == max lands in the last bucket
        }
        ++s.histogram[b];
    }
    return s;
}

Decomposition decompose(const Dataset& ds) {
    Decomposition out;
    out.norms = ds.norms();
    std::vector<float> dir(ds.size() * ds.dim(), 0.0f);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const double n = out.norms[i];
        if (n == 0.0) {
            out.zero_rows.push_back(i);
            continue;
        }
        const auto r = ds.row(i);
        for (std::size_t j = 0; j < ds.dim(); ++j) {
            dir[i * ds.dim() + j] = static_cast<float>(r[j] / n);
        }
    }
    out.directions = Dataset(ds.size(), ds.dim(), std::move(dir));
    return out;
}

} // namespace neq
