#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lottery/distribution.hpp"
#include "lottery/errors.hpp"
#include "lottery/evalbench.hpp"
#include "lottery/io.hpp"
#include "lottery/parallel.hpp"
#include "lottery/pipeline.hpp"
#include "lottery/subset_sum.hpp"
#include "lottery/tensor.hpp"

namespace py = pybind11;
using namespace lottery;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;
using BitArray = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

DenseMatrix to_matrix(const Array& a) {
  if (a.ndim() != 2) throw ShapeError("layer arrays must be 2-D");
  const auto rows = static_cast<std::size_t>(a.shape(0));
  const auto cols = static_cast<std::size_t>(a.shape(1));
  return DenseMatrix(rows, cols, std::vector<double>(a.data(), a.data() + rows * cols));
}

Array to_array(const DenseMatrix& m) {
  Array out({m.rows(), m.cols()});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

MaskSet to_masks(const std::vector<BitArray>& arrays) {
  MaskSet masks;
  for (const auto& a : arrays) {
    if (a.ndim() != 2) throw ShapeError("mask arrays must be 2-D");
    const auto rows = static_cast<std::size_t>(a.shape(0));
    const auto cols = static_cast<std::size_t>(a.shape(1));
    masks.emplace_back(rows, cols, std::vector<std::uint8_t>(a.data(), a.data() + rows * cols));
  }
  return masks;
}

std::vector<BitArray> from_masks(const MaskSet& masks) {
  std::vector<BitArray> out;
  for (const auto& m : masks) {
    BitArray a({m.rows(), m.cols()});
    std::copy(m.entries().begin(), m.entries().end(), a.mutable_data());
    out.push_back(std::move(a));
  }
  return out;
}

py::dict estimate_dict(const CoverageEstimate& e) {
  py::dict d;
  d["prob"] = e.prob;
  d["ci_lo"] = e.ci95.lo;
  d["ci_hi"] = e.ci95.hi;
  d["successes"] = e.successes;
  d["trials"] = e.trials;
  return d;
}

py::dict sweep_row_dict(const SweepRow& r) {
  py::dict d = estimate_dict(r.estimate);
  d["epsilon"] = r.epsilon;
  d["delta"] = r.delta;
  d["n"] = r.minimal_n;
  d["dist"] = r.dist_tag;
  d["seed"] = r.seed;
  d["saturated"] = r.saturated;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pruning random ReLU networks by subset sum";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ShapeError>(m, "ShapeError", error);
  py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<CapacityError>(m, "CapacityError", error);
  py::register_exception<ValidationError>(m, "ValidationError", error);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", error);

  m.def("set_threads", &set_thread_count, py::arg("n"), "0 selects the hardware count.");
  m.def("threads", &thread_count);

  py::class_<Distribution>(m, "Distribution")
      .def(py::init(&Distribution::parse), py::arg("tag"))
      .def_property_readonly("tag", &Distribution::tag)
      .def("pdf", &Distribution::pdf)
      .def("cdf", &Distribution::cdf)
      .def("uniform_certificate", &Distribution::uniform_certificate)
      .def("sample",
           [](const Distribution& d, std::size_t n, std::uint64_t seed) {
             Rng rng = make_rng(seed, "python.sample");
             std::vector<double> out(n);
             for (double& x : out) x = d.sample(rng);
             return out;
           },
           py::arg("n"), py::arg("seed"))
      .def("__repr__", [](const Distribution& d) { return "Distribution('" + d.tag() + "')"; });

  py::class_<DenseNetwork>(m, "Network")
      .def(py::init([](const std::vector<Array>& layers) {
             std::vector<DenseMatrix> ms;
             for (const auto& a : layers) ms.push_back(to_matrix(a));
             return DenseNetwork(std::move(ms));
           }),
           py::arg("layers"))
      .def_property_readonly("widths", &DenseNetwork::widths)
      .def_property_readonly("depth", &DenseNetwork::depth)
      .def_property_readonly("layers",
                             [](const DenseNetwork& n) {
                               std::vector<Array> out;
                               for (const auto& l : n.layers()) out.push_back(to_array(l));
                               return out;
                             })
      .def("__call__",
           [](const DenseNetwork& n, const std::vector<double>& x) { return forward(n, x); })
      .def("masked", [](const DenseNetwork& n, const std::vector<BitArray>& masks,
                        const std::vector<double>& x) { return masked_forward(n, to_masks(masks), x); })
      .def("to_json", [](const DenseNetwork& n) { return io::network_to_json(n); })
      .def_static("from_json", &io::network_from_json)
      .def(py::self == py::self);

  m.def("random_network",
        [](const std::vector<std::size_t>& widths, const Distribution& d, std::uint64_t seed) {
          return random_network(widths, d, seed);
        },
        py::arg("widths"), py::arg("dist"), py::arg("seed"));
  m.def("normalize", [](const DenseNetwork& n) {
    auto r = normalize_network(n);
    return py::make_tuple(r.network, r.scales);
  });
  m.def("spectral_norm", [](const Array& a) { return spectral_norm(to_matrix(a)); });

  m.def("solve_subset_sum",
        [](const std::vector<double>& values, double target, double tolerance) {
          const auto s = solve_subset_sum({values, target, tolerance});
          py::dict d;
          d["indices"] = s.indices;
          d["achieved_sum"] = s.achieved_sum;
          d["abs_error"] = s.abs_error;
          d["feasible"] = s.feasible;
          return d;
        },
        py::arg("values"), py::arg("target"), py::arg("tolerance"));
  m.def("coverage_check",
        [](const std::vector<double>& values, double lo, double hi, double eps) {
          const auto r = coverage_check(values, lo, hi, eps);
          return py::make_tuple(r.covered, r.max_distance());
        },
        py::arg("values"), py::arg("lo"), py::arg("hi"), py::arg("eps"));
  m.def("coverage_probability",
        [](const Distribution& d, std::size_t n, double eps, double lo, double hi,
           std::size_t trials, std::uint64_t seed) {
          return estimate_dict(estimate_coverage_probability(d, n, eps, lo, hi, trials, seed));
        },
        py::arg("dist"), py::arg("n"), py::arg("eps"), py::arg("lo") = -0.5, py::arg("hi") = 0.5,
        py::arg("trials") = 200, py::arg("seed") = 1);
  m.def("sweep",
        [](const std::vector<double>& eps, double delta, const Distribution& d, std::size_t trials,
           std::uint64_t seed, std::size_t max_n) {
          const auto r = lueker_sweep(eps, delta, d, trials, seed, {-0.5, 0.5, max_n});
          py::list rows;
          for (const auto& row : r.rows) rows.append(sweep_row_dict(row));
          py::dict out;
          out["rows"] = rows;
          out["slope"] = r.fit.slope;
          out["intercept"] = r.fit.intercept;
          out["r2"] = r.fit.r_squared;
          return out;
        },
        py::arg("eps"), py::arg("delta"), py::arg("dist"), py::arg("trials") = 200,
        py::arg("seed") = 1, py::arg("max_n") = 26);

  m.def("width_plan",
        [](const std::vector<std::size_t>& widths, double eps, double delta, double c) {
          const auto p = width_plan(widths, eps, delta, c);
          py::dict d;
          d["random_widths"] = p.random_widths;
          d["block_sizes"] = p.block_sizes;
          d["per_layer_eps"] = p.per_layer_eps;
          return d;
        },
        py::arg("widths"), py::arg("eps"), py::arg("delta"), py::arg("c") = kDefaultWidthConstant);
  m.def("composition_error_bound",
        py::overload_cast<double, std::size_t>(&composition_error_bound));
  m.def("lower_bound_min_width", &lower_bound_min_width, py::arg("d"), py::arg("eps"));
  m.def("lower_bound_min_params", &lower_bound_min_params, py::arg("d"), py::arg("eps"));

  m.def("prune",
        [](const DenseNetwork& target, double eps, double delta, double c, std::uint64_t seed,
           std::size_t samples) {
          auto p = prune_to_approximate(target, eps, delta, c, seed, samples);
          py::dict report;
          report["per_layer_errors"] = p.report.per_layer_errors;
          report["theoretical_budget"] = p.report.theoretical_budget;
          report["achieved_bound"] = p.report.achieved_bound;
          report["measured_sup_error"] = p.report.measured_sup_error;
          report["infeasible_count"] = p.report.infeasible_count;
          return py::make_tuple(p.random_net, from_masks(p.masks), report);
        },
        py::arg("target"), py::arg("eps"), py::arg("delta"), py::arg("c") = kDefaultWidthConstant,
        py::arg("seed") = 1, py::arg("samples") = kDefaultSupSamples);
  m.def("sup_error",
        [](const DenseNetwork& f, const DenseNetwork& g, const std::vector<BitArray>& masks,
           std::size_t samples, std::uint64_t seed) {
          return sup_error_estimate(f, g, to_masks(masks), samples, seed);
        },
        py::arg("target"), py::arg("random"), py::arg("masks"), py::arg("samples") = 10000,
        py::arg("seed") = 1);
}
