#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fastce/bench.hpp"
#include "fastce/he.hpp"
#include "fastce/imageio.hpp"
#include "fastce/sampling.hpp"
#include "fastce/smirank.hpp"
#include "fastce/synthetic.hpp"

namespace py = pybind11;
using namespace fastce;

namespace {

GrayImage gray_from_array(const py::array_t<std::uint8_t>& arr) {
    if (arr.ndim() != 2)
        throw py::value_error("expected a 2D uint8 array");
    const auto buf = arr.unchecked<2>();
    GrayImage img(static_cast<int>(buf.shape(1)), static_cast<int>(buf.shape(0)));
    for (py::ssize_t i = 0; i < buf.shape(0); ++i)
        for (py::ssize_t j = 0; j < buf.shape(1); ++j)
            img.at(static_cast<int>(i), static_cast<int>(j)) = buf(i, j);
    return img;
}

py::array_t<std::uint8_t> array_from_gray(const GrayImage& img) {
    py::array_t<std::uint8_t> arr({img.height, img.width});
    auto buf = arr.mutable_unchecked<2>();
    for (int i = 0; i < img.height; ++i)
        for (int j = 0; j < img.width; ++j)
            buf(i, j) = img.at(i, j);
    return arr;
}

ColorImage color_from_array(const py::array_t<std::uint8_t>& arr) {
    if (arr.ndim() != 3 || arr.shape(2) != 3)
        throw py::value_error("expected an H x W x 3 uint8 array");
    const auto buf = arr.unchecked<3>();
    ColorImage img(static_cast<int>(buf.shape(1)), static_cast<int>(buf.shape(0)));
    for (py::ssize_t i = 0; i < buf.shape(0); ++i)
        for (py::ssize_t j = 0; j < buf.shape(1); ++j)
            for (int c = 0; c < 3; ++c)
                img.data[3 * (static_cast<std::size_t>(i) * img.width + j) + c] =
                    buf(i, j, c);
    return img;
}

py::array_t<std::uint8_t> array_from_color(const ColorImage& img) {
    py::array_t<std::uint8_t> arr({img.height, img.width, 3});
    auto buf = arr.mutable_unchecked<3>();
    for (int i = 0; i < img.height; ++i)
        for (int j = 0; j < img.width; ++j)
            for (int c = 0; c < 3; ++c)
                buf(i, j, c) =
                    img.data[3 * (static_cast<std::size_t>(i) * img.width + j) + c];
    return arr;
}

}  // namespace

PYBIND11_MODULE(_fastce, m) {
    m.doc() = "histogram-based contrast enhancement accelerated by selective "
              "spatial and gray-level downsampling";

    py::register_exception<param_error>(m, "ParamError", PyExc_ValueError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<io_error>(m, "IoError", PyExc_IOError);

    m.def(
        "he", [](const py::array_t<std::uint8_t>& x) {
            return array_from_gray(he(gray_from_array(x)));
        },
        py::arg("image"), "Naive histogram equalization.");

    m.def(
        "fhe",
        [](const py::array_t<std::uint8_t>& x, int s, int n_g) {
            return array_from_gray(fhe(gray_from_array(x), s, n_g));
        },
        py::arg("image"), py::arg("s") = 8, py::arg("ng") = 64,
        "Accelerated HE with spatial step s and ng histogram bins.");

    m.def(
        "smirank",
        [](const py::array_t<std::uint8_t>& x, double alpha, int blocks_y,
           int blocks_x) {
            return array_from_gray(
                smirank(gray_from_array(x), alpha, blocks_y, blocks_x));
        },
        py::arg("image"), py::arg("alpha") = 0.9, py::arg("blocks_y") = 8,
        py::arg("blocks_x") = 8, "Naive SMIRANK contrast enhancement.");

    m.def(
        "fsmirank",
        [](const py::array_t<std::uint8_t>& x, int s, int n_g, double alpha,
           int blocks_y, int blocks_x) {
            return array_from_gray(fsmirank(gray_from_array(x), s, n_g, alpha,
                                            blocks_y, blocks_x));
        },
        py::arg("image"), py::arg("s") = 8, py::arg("ng") = 64,
        py::arg("alpha") = 0.9, py::arg("blocks_y") = 8, py::arg("blocks_x") = 8,
        "Accelerated SMIRANK.");

    m.def(
        "spatial_downsample",
        [](const py::array_t<std::uint8_t>& x, int s) {
            return array_from_gray(spatial_downsample(gray_from_array(x), s));
        },
        py::arg("image"), py::arg("s"));

    m.def(
        "histogram",
        [](const py::array_t<std::uint8_t>& x, int n_g) {
            const Histogram h = histogram(gray_from_array(x), n_g);
            return py::make_tuple(h.bins, h.delta);
        },
        py::arg("image"), py::arg("ng") = 256,
        "Quantized histogram; returns (bins, delta).");

    m.def(
        "extract_luminance",
        [](const py::array_t<std::uint8_t>& rgb) {
            return array_from_gray(extract_luminance(color_from_array(rgb)));
        },
        py::arg("image"));

    m.def(
        "recombine_luminance",
        [](const py::array_t<std::uint8_t>& rgb,
           const py::array_t<std::uint8_t>& v) {
            return array_from_color(
                recombine_luminance(color_from_array(rgb), gray_from_array(v)));
        },
        py::arg("image"), py::arg("new_v"));

    m.def(
        "generate",
        [](const std::string& kind, int width, int height, std::uint64_t seed) {
            return array_from_gray(generate_synthetic(
                synthetic_kind_from_name(kind), width, height, seed));
        },
        py::arg("kind"), py::arg("width"), py::arg("height"), py::arg("seed") = 0,
        "Synthetic test image: uniform-noise, two-peak, smooth-gradient or "
        "hdr-peaky.");

    m.def(
        "read_image",
        [](const std::string& path) -> py::object {
            const AnyImage img = read_image(path);
            if (std::holds_alternative<GrayImage>(img))
                return array_from_gray(std::get<GrayImage>(img));
            return array_from_color(std::get<ColorImage>(img));
        },
        py::arg("path"), "Read a binary PGM/PPM file as a numpy array.");

    m.def(
        "write_image",
        [](const py::array_t<std::uint8_t>& arr, const std::string& path) {
            if (arr.ndim() == 2)
                write_image(gray_from_array(arr), path);
            else
                write_image(color_from_array(arr), path);
        },
        py::arg("image"), py::arg("path"));
}
