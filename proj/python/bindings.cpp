#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qfe/enhance.hpp"
#include "qfe/hsv.hpp"
#include "qfe/image.hpp"
#include "qfe/image_io.hpp"
#include "qfe/measures.hpp"
#include "qfe/pipeline.hpp"
#include "qfe/qdft.hpp"
#include "qfe/quaternion.hpp"

namespace py = pybind11;
using darray = py::array_t<double, py::array::c_style | py::array::forcecast>;

namespace {

qfe::Plane to_plane(const darray& arr) {
    if (arr.ndim() != 2) throw std::invalid_argument("expected a 2-D array");
    qfe::Plane p(static_cast<int>(arr.shape(0)), static_cast<int>(arr.shape(1)));
    std::copy(arr.data(), arr.data() + p.size(), p.v.begin());
    return p;
}

darray from_plane(const qfe::Plane& p) {
    darray arr({static_cast<py::ssize_t>(p.rows), static_cast<py::ssize_t>(p.cols)});
    std::copy(p.v.begin(), p.v.end(), arr.mutable_data());
    return arr;
}

qfe::RgbImage to_rgb(const darray& arr) {
    if (arr.ndim() != 3 || arr.shape(2) != 3) {
        throw std::invalid_argument("expected an (H, W, 3) array");
    }
    const int rows = static_cast<int>(arr.shape(0));
    const int cols = static_cast<int>(arr.shape(1));
    qfe::RgbImage img;
    img.r = qfe::Plane(rows, cols);
    img.g = qfe::Plane(rows, cols);
    img.b = qfe::Plane(rows, cols);
    const double* src = arr.data();
    for (size_t i = 0; i < img.r.v.size(); ++i) {
        img.r.v[i] = src[3 * i];
        img.g.v[i] = src[3 * i + 1];
        img.b.v[i] = src[3 * i + 2];
    }
    return img;
}

darray from_rgb(const qfe::RgbImage& img) {
    darray arr({static_cast<py::ssize_t>(img.rows()), static_cast<py::ssize_t>(img.cols()),
                static_cast<py::ssize_t>(3)});
    double* dst = arr.mutable_data();
    for (size_t i = 0; i < img.r.v.size(); ++i) {
        dst[3 * i] = img.r.v[i];
        dst[3 * i + 1] = img.g.v[i];
        dst[3 * i + 2] = img.b.v[i];
    }
    return arr;
}

qfe::QuaternionImage to_qimage(const darray& arr) {
    if (arr.ndim() != 3 || arr.shape(2) != 4) {
        throw std::invalid_argument("expected an (H, W, 4) array");
    }
    qfe::QuaternionImage img(static_cast<int>(arr.shape(0)), static_cast<int>(arr.shape(1)));
    const double* src = arr.data();
    for (size_t i = 0; i < img.pix.size(); ++i) {
        img.pix[i] = {src[4 * i], src[4 * i + 1], src[4 * i + 2], src[4 * i + 3]};
    }
    return img;
}

darray from_quaternions(const std::vector<qfe::Quaternion>& pix, int rows, int cols) {
    darray arr({static_cast<py::ssize_t>(rows), static_cast<py::ssize_t>(cols),
                static_cast<py::ssize_t>(4)});
    double* dst = arr.mutable_data();
    for (size_t i = 0; i < pix.size(); ++i) {
        dst[4 * i] = pix[i].a;
        dst[4 * i + 1] = pix[i].b;
        dst[4 * i + 2] = pix[i].c;
        dst[4 * i + 3] = pix[i].d;
    }
    return arr;
}

darray from_qimage(const qfe::QuaternionImage& img) {
    return from_quaternions(img.pix, img.rows, img.cols);
}

darray from_spectrum(const qfe::QSpectrum& spec) {
    return from_quaternions(spec.coeff, spec.rows, spec.cols);
}

qfe::QSpectrum to_spectrum(const darray& arr) {
    if (arr.ndim() != 3 || arr.shape(2) != 4) {
        throw std::invalid_argument("expected an (H, W, 4) array");
    }
    qfe::QSpectrum spec;
    spec.rows = static_cast<int>(arr.shape(0));
    spec.cols = static_cast<int>(arr.shape(1));
    spec.coeff.resize(static_cast<size_t>(spec.rows) * spec.cols);
    const double* src = arr.data();
    for (size_t i = 0; i < spec.coeff.size(); ++i) {
        spec.coeff[i] = {src[4 * i], src[4 * i + 1], src[4 * i + 2], src[4 * i + 3]};
    }
    return spec;
}

qfe::ScalarPolicy policy_from(const std::string& name) {
    if (name == "zero") return qfe::ScalarPolicy::Zero;
    if (name == "gray_mean") return qfe::ScalarPolicy::GrayMean;
    throw std::invalid_argument("scalar_policy must be 'zero' or 'gray_mean'");
}

py::dict sweep_to_dict(const qfe::SweepResult& s) {
    py::dict d;
    d["alphas"] = s.alphas;
    d["values"] = s.values;
    d["best_alpha"] = s.best_alpha;
    d["best_value"] = s.best_value;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quaternion spectral color image enhancement";

    py::class_<qfe::Quaternion>(m, "Quaternion")
        .def(py::init<>())
        .def(py::init<double, double, double, double>(), py::arg("a"), py::arg("b"),
             py::arg("c"), py::arg("d"))
        .def_readwrite("a", &qfe::Quaternion::a)
        .def_readwrite("b", &qfe::Quaternion::b)
        .def_readwrite("c", &qfe::Quaternion::c)
        .def_readwrite("d", &qfe::Quaternion::d)
        .def("conjugate", &qfe::Quaternion::conjugate)
        .def("norm", &qfe::Quaternion::norm)
        .def("magnitude", &qfe::Quaternion::magnitude)
        .def("is_pure", &qfe::Quaternion::is_pure)
        .def("__add__", [](const qfe::Quaternion& x, const qfe::Quaternion& y) { return x + y; })
        .def("__sub__", [](const qfe::Quaternion& x, const qfe::Quaternion& y) { return x - y; })
        .def("__mul__", [](const qfe::Quaternion& x, const qfe::Quaternion& y) { return x * y; })
        .def("__rmul__", [](const qfe::Quaternion& x, double s) { return x * s; })
        .def("__eq__", [](const qfe::Quaternion& x, const qfe::Quaternion& y) { return x == y; })
        .def("__repr__", [](const qfe::Quaternion& q) {
            std::ostringstream os;
            os << "Quaternion(" << q.a << ", " << q.b << ", " << q.c << ", " << q.d << ")";
            return os.str();
        });

    m.def(
        "qdft",
        [](const darray& arr, bool fast) {
            const qfe::QuaternionImage img = to_qimage(arr);
            return from_spectrum(fast ? qfe::qdft_two_sided_fast(img)
                                      : qfe::qdft_two_sided_naive(img));
        },
        py::arg("image"), py::arg("fast") = true,
        "Two-sided quaternion DFT of an (H, W, 4) array");
    m.def(
        "iqdft",
        [](const darray& arr, bool fast) {
            const qfe::QSpectrum spec = to_spectrum(arr);
            return from_qimage(fast ? qfe::iqdft_two_sided(spec)
                                    : qfe::iqdft_two_sided_naive(spec));
        },
        py::arg("spectrum"), py::arg("fast") = true, "Inverse two-sided quaternion DFT");

    m.def(
        "alpha_root",
        [](const darray& arr, double alpha, bool preserve_dc) {
            qfe::QSpectrum spec = to_spectrum(arr);
            qfe::alpha_root_spectrum(spec, alpha, preserve_dc);
            return from_spectrum(spec);
        },
        py::arg("spectrum"), py::arg("alpha"), py::arg("preserve_dc") = false);

    m.def(
        "enhance_qdft",
        [](const darray& arr, double alpha, const std::string& policy, bool preserve_dc) {
            const qfe::QuaternionEnhanceResult res =
                qfe::enhance_qdft(to_rgb(arr), alpha, policy_from(policy), preserve_dc);
            return py::make_tuple(from_rgb(res.rgb), from_plane(res.scalar_part));
        },
        py::arg("image"), py::arg("alpha"), py::arg("scalar_policy") = "zero",
        py::arg("preserve_dc") = false,
        "Returns (enhanced_rgb, scalar_residue) for an (H, W, 3) array");
    m.def(
        "enhance_dft",
        [](const darray& arr, double ar, double ag, double ab, bool preserve_dc) {
            return from_rgb(qfe::enhance_dft_channelwise(
                to_rgb(arr), qfe::AlphaParams::channels(ar, ag, ab), preserve_dc));
        },
        py::arg("image"), py::arg("alpha_r"), py::arg("alpha_g"), py::arg("alpha_b"),
        py::arg("preserve_dc") = false);

    m.def(
        "eme",
        [](const darray& arr, int L1, int L2, double eps) {
            return qfe::eme(to_plane(arr), L1, L2, eps).value;
        },
        py::arg("channel"), py::arg("L1") = 8, py::arg("L2") = 8, py::arg("eps") = 1.0);
    m.def(
        "ceme",
        [](const std::vector<darray>& planes, int L1, int L2, double eps,
           bool include_zero_scalar) {
            std::vector<qfe::Plane> owned;
            owned.reserve(planes.size());
            for (const darray& p : planes) owned.push_back(to_plane(p));
            std::vector<const qfe::Plane*> ptrs;
            for (const qfe::Plane& p : owned) ptrs.push_back(&p);
            return qfe::ceme(ptrs, L1, L2, eps, include_zero_scalar).value;
        },
        py::arg("planes"), py::arg("L1") = 8, py::arg("L2") = 8, py::arg("eps") = 1.0,
        py::arg("include_zero_scalar") = false, "Joint blockwise measure over 2-D planes");
    m.def(
        "ceme_rgb",
        [](const darray& arr, int L1, int L2, double eps) {
            return qfe::ceme_rgb(to_rgb(arr), L1, L2, eps).value;
        },
        py::arg("image"), py::arg("L1") = 8, py::arg("L2") = 8, py::arg("eps") = 1.0);

    m.def(
        "rgb_to_hsv",
        [](const darray& arr) {
            const qfe::HsvImage hsv = qfe::rgb_to_hsv(to_rgb(arr));
            return py::make_tuple(from_plane(hsv.h), from_plane(hsv.s), from_plane(hsv.v));
        },
        py::arg("image"));
    m.def(
        "hsv_to_rgb",
        [](const darray& h, const darray& s, const darray& v, double value_scale) {
            qfe::HsvImage hsv;
            hsv.h = to_plane(h);
            hsv.s = to_plane(s);
            hsv.v = to_plane(v);
            hsv.value_scale = value_scale;
            return from_rgb(qfe::hsv_to_rgb(hsv));
        },
        py::arg("h"), py::arg("s"), py::arg("v"), py::arg("value_scale") = 255.0);
    m.def(
        "hist_eq_v",
        [](const darray& arr, int bins) { return from_rgb(qfe::hist_eq_v(to_rgb(arr), bins)); },
        py::arg("image"), py::arg("bins") = 256);

    m.def(
        "sweep_qdft",
        [](const darray& arr, double amin, double amax, double astep, int L1, int L2,
           double eps, const std::string& policy, bool preserve_dc) {
            return sweep_to_dict(qfe::sweep_qdft(to_rgb(arr), {amin, amax, astep},
                                                 {L1, L2, eps}, policy_from(policy),
                                                 preserve_dc));
        },
        py::arg("image"), py::arg("alpha_min") = 0.80, py::arg("alpha_max") = 1.00,
        py::arg("alpha_step") = 0.01, py::arg("L1") = 8, py::arg("L2") = 8,
        py::arg("eps") = 1.0, py::arg("scalar_policy") = "zero",
        py::arg("preserve_dc") = false);
    m.def(
        "sweep_dft",
        [](const darray& arr, double amin, double amax, double astep, int L1, int L2,
           double eps, bool preserve_dc) {
            const std::array<qfe::SweepResult, 3> sweeps = qfe::sweep_dft_channelwise(
                to_rgb(arr), {amin, amax, astep}, {L1, L2, eps}, preserve_dc);
            return py::make_tuple(sweep_to_dict(sweeps[0]), sweep_to_dict(sweeps[1]),
                                  sweep_to_dict(sweeps[2]));
        },
        py::arg("image"), py::arg("alpha_min") = 0.80, py::arg("alpha_max") = 1.00,
        py::arg("alpha_step") = 0.01, py::arg("L1") = 8, py::arg("L2") = 8,
        py::arg("eps") = 1.0, py::arg("preserve_dc") = false);

    m.def(
        "compare",
        [](const darray& arr, double amin, double amax, double astep, int L1, int L2,
           double eps, bool hist_eq) {
            qfe::CompareConfig cfg;
            cfg.grid = {amin, amax, astep};
            cfg.measure = {L1, L2, eps};
            cfg.hist_eq = hist_eq;
            py::list rows;
            for (const qfe::ComparisonRow& row : qfe::run_comparison(to_rgb(arr), cfg)) {
                py::dict d;
                d["method"] = row.method;
                d["ceme"] = row.ceme;
                d["alphas"] = row.alphas;
                d["emes"] = row.emes;
                rows.append(d);
            }
            return rows;
        },
        py::arg("image"), py::arg("alpha_min") = 0.80, py::arg("alpha_max") = 1.00,
        py::arg("alpha_step") = 0.01, py::arg("L1") = 8, py::arg("L2") = 8,
        py::arg("eps") = 1.0, py::arg("hist_eq") = true);

    m.def(
        "load_image", [](const std::string& path) { return from_rgb(qfe::load_image(path)); },
        py::arg("path"));
    m.def(
        "save_image",
        [](const darray& arr, const std::string& path) { qfe::save_image(to_rgb(arr), path); },
        py::arg("image"), py::arg("path"));
}
