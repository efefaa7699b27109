#pragma once

#include "neq/dataset.hpp"

#include <string>

namespace neq {

/// TEXMEX-style vector files: per record a little-endian int32 dimension
/// header followed by d entries (float32 / uint8 / int32).
enum class VecsFormat { fvecs, bvecs, ivecs };

VecsFormat vecs_format_from_name(const std::string& name);

/// All records must share one dimension; bvecs/ivecs entries are widened to
/// float. Throws IoError on truncation, FormatError on a bad header.
Dataset read_vecs(const std::string& path, VecsFormat format);

/// fvecs round-trips bit-exactly. bvecs requires integral entries in
/// [0, 255]; ivecs requires exactly representable int32 values
/// (FormatError otherwise).
void write_vecs(const Dataset& ds, const std::string& path, VecsFormat format);

/// Convenience: pick the format from the file extension.
Dataset read_vecs_auto(const std::string& path);

} // namespace neq
