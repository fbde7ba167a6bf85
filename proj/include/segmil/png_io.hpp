// Minimal PNG I/O for 8-bit grayscale frames/masks and RGB overlays.
#pragma once

#include <string>

#include "segmil/image.hpp"

namespace segmil {

// Fixed compression settings so identical pixels give identical bytes.
void write_png_gray8(const std::string& path, const Image8& img);
void write_png_rgb8(const std::string& path, const ImageRGB& img);

// Any grayscale-convertible PNG is accepted; non-8-bit depths are scaled.
Image8 read_png_gray8(const std::string& path);

}  // namespace segmil
