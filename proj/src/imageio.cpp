#include "fastce/imageio.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>

namespace fastce {

namespace {

// Reads one whitespace-separated header token, skipping '#' comments.
std::string next_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (std::isspace(c))
            continue;
        tok.push_back(static_cast<char>(c));
        while ((c = in.get()) != EOF && !std::isspace(c) && c != '#')
            tok.push_back(static_cast<char>(c));
        if (c == '#')
            in.unget();
        return tok;
    }
    throw parse_error("pnm: unexpected end of header");
}

int parse_dim(const std::string& tok, const char* field) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw parse_error(std::string("pnm: invalid ") + field + " '" + tok + "'");
    }
    if (pos != tok.size() || v <= 0)
        throw parse_error(std::string("pnm: invalid ") + field + " '" + tok + "'");
    return v;
}

void read_payload(std::istream& in, std::vector<std::uint8_t>& out) {
    in.read(reinterpret_cast<char*>(out.data()),
            static_cast<std::streamsize>(out.size()));
    if (static_cast<std::size_t>(in.gcount()) != out.size())
        throw parse_error("pnm: truncated payload");
}

}  // namespace

AnyImage read_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open '" + path + "' for reading");

    const std::string magic = next_token(in);
    if (magic != "P5" && magic != "P6")
        throw parse_error("pnm: unsupported magic '" + magic + "' (expect P5 or P6)");

    const int width = parse_dim(next_token(in), "width");
    const int height = parse_dim(next_token(in), "height");
    const int maxval = parse_dim(next_token(in), "maxval");
    if (maxval != 255)
        throw parse_error("pnm: unsupported maxval " + std::to_string(maxval) +
                          " (only 255)");
    // Exactly one whitespace byte separates the header from the raster.

    if (magic == "P5") {
        GrayImage img(width, height);
        read_payload(in, img.data);
        return img;
    }
    ColorImage img(width, height);
    read_payload(in, img.data);
    return img;
}

namespace {

void write_pnm(const char* magic, int width, int height,
               const std::vector<std::uint8_t>& payload, const std::string& path) {
    if (width <= 0 || height <= 0 || payload.empty())
        throw param_error("write_image: empty image");
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot open '" + path + "' for writing");
    out << magic << '\n' << width << ' ' << height << '\n' << 255 << '\n';
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size()));
    if (!out)
        throw io_error("write failed for '" + path + "'");
}

}  // namespace

void write_image(const GrayImage& img, const std::string& path) {
    if (img.bit_depth != 8)
        throw param_error("write_image: file I/O requires 8-bit images");
    write_pnm("P5", img.width, img.height, img.data, path);
}

void write_image(const ColorImage& img, const std::string& path) {
    write_pnm("P6", img.width, img.height, img.data, path);
}

void write_image(const AnyImage& img, const std::string& path) {
    std::visit([&](const auto& i) { write_image(i, path); }, img);
}

GrayImage extract_luminance(const ColorImage& img) {
    GrayImage v(img.width, img.height);
    const std::size_t n = img.pixel_count();
    for (std::size_t p = 0; p < n; ++p) {
        const std::uint8_t r = img.data[3 * p];
        const std::uint8_t g = img.data[3 * p + 1];
        const std::uint8_t b = img.data[3 * p + 2];
        v.data[p] = std::max(r, std::max(g, b));
    }
    return v;
}

ColorImage recombine_luminance(const ColorImage& img, const GrayImage& new_v) {
    if (new_v.width != img.width || new_v.height != img.height)
        throw param_error("recombine_luminance: dimension mismatch");
    ColorImage out(img.width, img.height);
    const std::size_t n = img.pixel_count();
    for (std::size_t p = 0; p < n; ++p) {
        const std::uint8_t r = img.data[3 * p];
        const std::uint8_t g = img.data[3 * p + 1];
        const std::uint8_t b = img.data[3 * p + 2];
        const int v = std::max(r, std::max(g, b));
        const int nv = new_v.data[p];
        if (v == 0) {
            out.data[3 * p] = out.data[3 * p + 1] = out.data[3 * p + 2] =
                static_cast<std::uint8_t>(nv);
            continue;
        }
        const double scale = static_cast<double>(nv) / v;
        for (int c = 0; c < 3; ++c) {
            const double scaled = img.data[3 * p + c] * scale;
            const long rounded = static_cast<long>(std::floor(scaled + 0.5));
            out.data[3 * p + c] =
                static_cast<std::uint8_t>(std::clamp(rounded, 0L, 255L));
        }
    }
    return out;
}

}  // namespace fastce
