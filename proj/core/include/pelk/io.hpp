#pragma once

#include <string>

#include "pelk/tensor.hpp"

namespace pelk {

// PTNS tensor container: magic "PTNS", u16 version (1), u16 ndim,
// ndim x u32 dims, then f32 data; little-endian, row-major.

void write_ptns(const std::string& path, const Tensor& t);
Tensor read_ptns(const std::string& path);

/// Plain comma-separated rows of floats; rows must have equal length.
Tensor read_csv_2d(const std::string& path);

/// Reads .csv as a 2-D tensor, anything else as PTNS.
Tensor read_tensor(const std::string& path);

}  // namespace pelk
