#include "neq/vecs_io.hpp"

#include "neq/errors.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <vector>

namespace neq {

namespace {

std::size_t element_size(VecsFormat f) {
    switch (f) {
        case VecsFormat::fvecs: return 4;
        case VecsFormat::bvecs: return 1;
        case VecsFormat::ivecs: return 4;
    }
    return 4;
}

} // namespace

VecsFormat vecs_format_from_name(const std::string& name) {
    if (name == "fvecs") return VecsFormat::fvecs;
    if (name == "bvecs") return VecsFormat::bvecs;
    if (name == "ivecs") return VecsFormat::ivecs;
    throw ConfigError("unknown vecs format '" + name + "' (expected fvecs, bvecs or ivecs)");
}

Dataset read_vecs(const std::string& path, VecsFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);

    std::vector<float> values;
    std::size_t n = 0;
    std::int32_t d = 0;
    std::vector<char> buf;

    for (;;) {
        std::int32_t rec_d = 0;
        in.read(reinterpret_cast<char*>(&rec_d), sizeof(rec_d));
        if (in.gcount() == 0 && in.eof()) break;
        if (in.gcount() != sizeof(rec_d)) {
            throw IoError(path + ": truncated dimension header at record " + std::to_string(n));
        }
        if (rec_d <= 0 || rec_d > (1 << 28)) {
            throw FormatError(path + ": record " + std::to_string(n) +
                              " declares dimension " + std::to_string(rec_d));
        }
        if (n == 0) {
            d = rec_d;
        } else if (rec_d != d) {
            throw FormatError(path + ": record " + std::to_string(n) + " declares d=" +
                              std::to_string(rec_d) + " after d=" + std::to_string(d));
        }
        const std::size_t bytes = static_cast<std::size_t>(d) * element_size(format);
        buf.resize(bytes);
        in.read(buf.data(), static_cast<std::streamsize>(bytes));
        if (static_cast<std::size_t>(in.gcount()) != bytes) {
            throw IoError(path + ": truncated record " + std::to_string(n));
        }
        const std::size_t base = values.size();
        values.resize(base + static_cast<std::size_t>(d));
        switch (format) {
            case VecsFormat::fvecs:
                std::memcpy(values.data() + base, buf.data(), bytes);
                break;
            case VecsFormat::bvecs:
                for (std::int32_t j = 0; j < d; ++j) {
                    values[base + j] = static_cast<float>(static_cast<std::uint8_t>(buf[j]));
                }
                break;
            case VecsFormat::ivecs:
                for (std::int32_t j = 0; j < d; ++j) {
                    std::int32_t v;
                    std::memcpy(&v, buf.data() + 4 * j, 4);
                    values[base + j] = static_cast<float>(v);
                }
                break;
        }
        ++n;
    }
    return Dataset(n, static_cast<std::size_t>(d), std::move(values));
}

void write_vecs(const Dataset& ds, const std::string& path, VecsFormat format) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");

    const std::int32_t d = static_cast<std::int32_t>(ds.dim());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto row = ds.row(i);
        out.write(reinterpret_cast<const char*>(&d), sizeof(d));
        switch (format) {
            case VecsFormat::fvecs:
                out.write(reinterpret_cast<const char*>(row.data()),
                          static_cast<std::streamsize>(row.size() * 4));
                break;
            case VecsFormat::bvecs: {
                std::vector<std::uint8_t> bytes(row.size());
                for (std::size_t j = 0; j < row.size(); ++j) {
                    const float v = row[j];
                    if (v < 0.0f || v > 255.0f || v != std::floor(v)) {
                        throw FormatError("value " + std::to_string(v) + " at row " +
                                          std::to_string(i) + " is out of range for bvecs");
                    }
                    bytes[j] = static_cast<std::uint8_t>(v);
                }
                out.write(reinterpret_cast<const char*>(bytes.data()),
                          static_cast<std::streamsize>(bytes.size()));
                break;
            }
            case VecsFormat::ivecs: {
                std::vector<std::int32_t> ints(row.size());
                for (std::size_t j = 0; j < row.size(); ++j) {
                    const float v = row[j];
                    if (v != std::floor(v) || v < -2147483648.0f || v > 2147483520.0f) {
                        throw FormatError("value " + std::to_string(v) + " at row " +
                                          std::to_string(i) + " is not an int32 for ivecs");
                    }
                    ints[j] = static_cast<std::int32_t>(v);
                }
                out.write(reinterpret_cast<const char*>(ints.data()),
                          static_cast<std::streamsize>(ints.size() * 4));
                break;
            }
        }
    }
    if (!out) throw IoError("write failed for " + path);
}

Dataset read_vecs_auto(const std::string& path) {
    const auto pos = path.find_last_of('.');
    if (pos == std::string::npos) throw ConfigError("cannot infer vecs format from " + path);
    return read_vecs(path, vecs_format_from_name(path.substr(pos + 1)));
}

} // namespace neq
