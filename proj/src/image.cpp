#include "segmil/image.hpp"

#include <algorithm>
#include <cmath>

namespace segmil {

Image8 to_image8(const ArrayF& a) {
    Image8 out(static_cast<int>(a.rows()), static_cast<int>(a.cols()));
    for (int y = 0; y < out.h; ++y)
        for (int x = 0; x < out.w; ++x) {
            const float v = std::round(a(y, x));
            out.at(y, x) = static_cast<std::uint8_t>(std::clamp(v, 0.0f, 255.0f));
        }
    return out;
}

ArrayF to_float(const Image8& img) {
    ArrayF out(img.h, img.w);
    for (int y = 0; y < img.h; ++y)
        for (int x = 0; x < img.w; ++x) out(y, x) = static_cast<float>(img.at(y, x));
    return out;
}

ArrayF to_unit_float(const Image8& img) { return to_float(img) / 255.0f; }

ArrayF box_blur(const ArrayF& img, int radius) {
    const int h = static_cast<int>(img.rows());
    const int w = static_cast<int>(img.cols());
    if (radius <= 0) return img;
    // integral image with a zero row/col in front
    Eigen::ArrayXXd integral = Eigen::ArrayXXd::Zero(h + 1, w + 1);
    for (int y = 0; y < h; ++y) {
        double rowsum = 0.0;
        for (int x = 0; x < w; ++x) {
            rowsum += img(y, x);
            integral(y + 1, x + 1) = integral(y, x + 1) + rowsum;
        }
    }
    ArrayF out(h, w);
    for (int y = 0; y < h; ++y) {
        const int y0 = std::max(0, y - radius), y1 = std::min(h - 1, y + radius);
        for (int x = 0; x < w; ++x) {
            const int x0 = std::max(0, x - radius), x1 = std::min(w - 1, x + radius);
            const double s = integral(y1 + 1, x1 + 1) - integral(y0, x1 + 1) - integral(y1 + 1, x0) + integral(y0, x0);
            out(y, x) = static_cast<float>(s / ((y1 - y0 + 1) * (x1 - x0 + 1)));
        }
    }
    return out;
}

float median_of(std::vector<float> values) {
    if (values.empty()) throw InputError("median_of: empty input");
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + mid, values.end());
    float m = values[mid];
    if (values.size() % 2 == 0) {
        std::nth_element(values.begin(), values.begin() + mid - 1, values.begin() + mid);
        m = 0.5f * (m + values[mid - 1]);
    }
    return m;
}

float mad_of(const std::vector<float>& values, float med) {
    std::vector<float> dev(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) dev[i] = std::abs(values[i] - med);
    return median_of(std::move(dev));
}

ArrayF bilinear_resize(const ArrayF& src, int out_h, int out_w) {
    const int sh = static_cast<int>(src.rows());
    const int sw = static_cast<int>(src.cols());
    if (sh < 1 || sw < 1 || out_h < 1 || out_w < 1) throw InputError("bilinear_resize: empty image");
    ArrayF out(out_h, out_w);
    const float sy = out_h > 1 ? static_cast<float>(sh - 1) / (out_h - 1) : 0.0f;
    const float sx = out_w > 1 ? static_cast<float>(sw - 1) / (out_w - 1) : 0.0f;
    for (int y = 0; y < out_h; ++y) {
        const float fy = y * sy;
        const int y0 = std::min(static_cast<int>(fy), sh - 1);
        const int y1 = std::min(y0 + 1, sh - 1);
        const float wy = fy - y0;
        for (int x = 0; x < out_w; ++x) {
            const float fx = x * sx;
            const int x0 = std::min(static_cast<int>(fx), sw - 1);
            const int x1 = std::min(x0 + 1, sw - 1);
            const float wx = fx - x0;
            out(y, x) = (1 - wy) * ((1 - wx) * src(y0, x0) + wx * src(y0, x1)) +
                        wy * ((1 - wx) * src(y1, x0) + wx * src(y1, x1));
        }
    }
    return out;
}

std::size_t count_nonzero(const Image8& mask) {
    std::size_t n = 0;
    for (auto v : mask.px) n += v != 0;
    return n;
}

}  // namespace segmil
