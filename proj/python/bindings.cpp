#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rieszcheck/cli.hpp"
#include "rieszcheck/error.hpp"
#include "rieszcheck/grid.hpp"
#include "rieszcheck/maximal.hpp"
#include "rieszcheck/morrey.hpp"
#include "rieszcheck/oracle.hpp"
#include "rieszcheck/params.hpp"
#include "rieszcheck/quadrature.hpp"
#include "rieszcheck/riesz.hpp"
#include "rieszcheck/spectral.hpp"

namespace py = pybind11;
namespace rc = rieszcheck;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

rc::Field to_field(const Array& values, double extent) {
  const auto d = values.ndim();
  if (d < 1 || d > 3) throw rc::Error(rc::ErrorCode::UnsupportedDimension, "array must have 1 to 3 axes");
  const auto n = static_cast<std::size_t>(values.shape(0));
  for (py::ssize_t a = 1; a < d; ++a) {
    if (static_cast<std::size_t>(values.shape(a)) != n) {
      throw rc::Error(rc::ErrorCode::UnsupportedShape, "array must have equal axis lengths");
    }
  }
  const rc::GridSpec spec = rc::centered_grid(static_cast<int>(d), n, extent);
  return rc::Field(spec, std::vector<double>(values.data(), values.data() + values.size()));
}

Array to_array(const rc::Field& f) {
  std::vector<py::ssize_t> shape(static_cast<std::size_t>(f.spec().d), static_cast<py::ssize_t>(f.spec().n));
  Array out(shape);
  std::copy(f.values().begin(), f.values().end(), out.mutable_data());
  return out;
}

py::dict params_dict(const rc::ExponentParams& P) {
  py::dict out;
  out["d"] = P.d;
  out["alpha"] = P.alpha;
  out["r"] = P.r;
  out["p"] = P.p;
  out["q"] = P.q;
  out["gamma"] = P.gamma;
  out["r_conj"] = P.r_conj;
  out["p0"] = P.p0;
  out["p1"] = P.p1;
  out["warnings"] = P.warnings.messages();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Riesz potentials, maximal operator, Morrey constants and fractional Laplacian on grids";

  py::register_exception<rc::Error>(m, "RieszcheckError", PyExc_ValueError);

  m.def(
      "validate_params",
      [](int d, double alpha, double r, double p, std::optional<double> q) {
        return params_dict(rc::validate_params(d, alpha, r, p, q));
      },
      py::arg("d"), py::arg("alpha"), py::arg("r"), py::arg("p"), py::arg("q") = py::none());

  m.def("lattice_zeta", &rc::quadrature::lattice_zeta, py::arg("d"), py::arg("s"));

  m.def(
      "riesz",
      [](const Array& values, double extent, double alpha, const std::string& kernel,
         const std::string& method) {
        const rc::Field f = to_field(values, extent);
        const rc::CentralWeight central = rc::parse_central_weight(kernel);
        if (method == "fft") return to_array(rc::riesz_fft(f, alpha, central));
        if (method == "direct") return to_array(rc::riesz_direct(f, alpha, central));
        throw rc::Error(rc::ErrorCode::InvalidArgument, "method must be fft or direct");
      },
      py::arg("values"), py::arg("extent"), py::arg("alpha"), py::arg("kernel") = "zeta",
      py::arg("method") = "fft");

  m.def(
      "maximal",
      [](const Array& values, double extent, const std::string& ladder) {
        return to_array(rc::maximal(to_field(values, extent), rc::parse_ladder_kind(ladder)));
      },
      py::arg("values"), py::arg("extent"), py::arg("ladder") = "standard");

  m.def(
      "morrey",
      [](const Array& values, double extent, double p, double alpha, const std::string& convention,
         std::size_t stride) {
        const rc::Field b = to_field(values, extent);
        rc::MorreyOptions options;
        options.convention = rc::parse_morrey_convention(convention);
        options.stride = stride;
        options.keep_scan = false;
        const rc::MorreyReport r = rc::morrey_constant(b, p, alpha, options);
        py::dict out;
        out["A"] = r.A;
        out["center"] = std::vector<double>(r.argmax_ball.center.begin(),
                                            r.argmax_ball.center.begin() + b.spec().d);
        out["radius"] = r.argmax_ball.radius;
        return out;
      },
      py::arg("values"), py::arg("extent"), py::arg("p"), py::arg("alpha"),
      py::arg("convention") = "avg", py::arg("stride") = 4);

  m.def(
      "frac_laplacian",
      [](const Array& values, double extent, double alpha, int pad) {
        return to_array(rc::frac_laplacian(to_field(values, extent), alpha, pad));
      },
      py::arg("values"), py::arg("extent"), py::arg("alpha"), py::arg("pad") = 2);

  m.def(
      "oracle_gate",
      [](std::size_t n1, std::size_t n2, int seeds, int points) {
        rc::OracleGateOptions options;
        options.n1 = n1;
        options.n2 = n2;
        options.seeds = seeds;
        options.maximal_points = points;
        const rc::OracleGateReport r = rc::run_oracle_gate(options);
        py::list entries;
        for (const auto& e : r.entries) {
          py::dict item;
          item["name"] = e.name;
          item["d"] = e.d;
          item["n"] = e.n;
          item["max_deviation"] = e.max_deviation;
          item["tolerance"] = e.tolerance;
          item["pass"] = e.pass;
          entries.append(item);
        }
        py::dict out;
        out["pass"] = r.pass;
        out["entries"] = entries;
        return out;
      },
      py::arg("n1") = 256, py::arg("n2") = 48, py::arg("seeds") = 10, py::arg("points") = 20);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"rieszcheck"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out;
        std::ostringstream err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = rc::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
