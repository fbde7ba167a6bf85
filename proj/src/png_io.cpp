#include "segmil/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <memory>

namespace segmil {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

void write_png_impl(const std::string& path, int h, int w, int color_type, const std::uint8_t* data,
                    std::size_t row_bytes) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw IoError("cannot open for writing: " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("png write failed: " + path);
    }
    png_init_io(png, fp.get());
    png_set_compression_level(png, 4);
    png_set_filter(png, 0, PNG_FILTER_NONE);
    png_set_IHDR(png, info, w, h, 8, color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_bytep> rows(h);
    for (int y = 0; y < h; ++y) rows[y] = const_cast<png_bytep>(data + y * row_bytes);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

}  // namespace

void write_png_gray8(const std::string& path, const Image8& img) {
    if (img.h <= 0 || img.w <= 0) throw InputError("write_png_gray8: empty image");
    write_png_impl(path, img.h, img.w, PNG_COLOR_TYPE_GRAY, img.px.data(), static_cast<std::size_t>(img.w));
}

void write_png_rgb8(const std::string& path, const ImageRGB& img) {
    if (img.h <= 0 || img.w <= 0) throw InputError("write_png_rgb8: empty image");
    write_png_impl(path, img.h, img.w, PNG_COLOR_TYPE_RGB, img.px.data(), static_cast<std::size_t>(img.w) * 3);
}

Image8 read_png_gray8(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("cannot open for reading: " + path);

    png_byte header[8];
    if (std::fread(header, 1, 8, fp.get()) != 8 || png_sig_cmp(header, 0, 8))
        throw IoError("not a PNG file: " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("png read failed: " + path);
    }
    png_init_io(png, fp.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    png_set_strip_16(png);
    png_set_strip_alpha(png);
    const auto color = png_get_color_type(png, info);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_RGB || color == PNG_COLOR_TYPE_RGB_ALPHA || color == PNG_COLOR_TYPE_PALETTE)
        png_set_rgb_to_gray(png, PNG_ERROR_ACTION_NONE, -1, -1);
    if (color == PNG_COLOR_TYPE_GRAY && png_get_bit_depth(png, info) < 8) png_set_expand_gray_1_2_4_to_8(png);
    png_read_update_info(png, info);

    Image8 img(static_cast<int>(png_get_image_height(png, info)), static_cast<int>(png_get_image_width(png, info)));
    std::vector<png_bytep> rows(img.h);
    for (int y = 0; y < img.h; ++y) rows[y] = img.px.data() + static_cast<std::size_t>(y) * img.w;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

}  // namespace segmil
