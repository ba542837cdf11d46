#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "xdom/tensor.hpp"

namespace xdom::raster {

// Binary netpbm: P5 for single-channel 8-bit, P6 for 3-channel 8-bit.

void write_pgm(const std::filesystem::path& path, const Grid<std::uint8_t>& pixels);
Grid<std::uint8_t> read_pgm(const std::filesystem::path& path);

/// Expects a 1x3xHxW tensor with values in [0,1]; stored as round(v * 255).
void write_ppm(const std::filesystem::path& path, const Tensor& image);
Tensor read_ppm(const std::filesystem::path& path);

std::uint8_t to_byte(double v);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace xdom::raster
