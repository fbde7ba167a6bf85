// 8-bit grayscale images and the few raster operations the pipeline needs.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "segmil/common.hpp"

namespace segmil {

// Row-major 8-bit grayscale image. Doubles as a binary mask (values 0/1).
struct Image8 {
    int h = 0, w = 0;
    std::vector<std::uint8_t> px;

    Image8() = default;
    Image8(int h_, int w_, std::uint8_t fill = 0) : h(h_), w(w_), px(static_cast<std::size_t>(h_) * w_, fill) {}

    std::uint8_t& at(int y, int x) { return px[static_cast<std::size_t>(y) * w + x]; }
    std::uint8_t at(int y, int x) const { return px[static_cast<std::size_t>(y) * w + x]; }
    std::size_t size() const { return px.size(); }
    bool same_shape(const Image8& o) const { return h == o.h && w == o.w; }
};

// Interleaved RGB, used only for overlay output.
struct ImageRGB {
    int h = 0, w = 0;
    std::vector<std::uint8_t> px;

    ImageRGB() = default;
    ImageRGB(int h_, int w_) : h(h_), w(w_), px(static_cast<std::size_t>(h_) * w_ * 3, 0) {}

    void set(int y, int x, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
        auto* p = &px[(static_cast<std::size_t>(y) * w + x) * 3];
        p[0] = r;
        p[1] = g;
        p[2] = b;
    }
};

using ArrayF = Eigen::ArrayXXf;  // h x w float raster

Image8 to_image8(const ArrayF& a);            // clamps to [0,255]
ArrayF to_float(const Image8& img);           // values in [0,255]
ArrayF to_unit_float(const Image8& img);      // values in [0,1]

// Box blur with clamped borders, kernel side 2*radius+1. Integral-image based.
ArrayF box_blur(const ArrayF& img, int radius);

// Median and median absolute deviation of all values.
float median_of(std::vector<float> values);
float mad_of(const std::vector<float>& values, float med);

// Bilinear upsample of a small grid to (out_h, out_w), align-corners style.
ArrayF bilinear_resize(const ArrayF& src, int out_h, int out_w);

std::size_t count_nonzero(const Image8& mask);

}  // namespace segmil
