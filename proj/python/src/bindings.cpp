#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <span>
#include <sstream>

#include "tropvis/assignment.hpp"
#include "tropvis/cli.hpp"
#include "tropvis/cones.hpp"
#include "tropvis/io.hpp"

namespace py = pybind11;
using namespace tropvis;

namespace {

py::object scalar(const Exact& v) { return py::str(v.to_string()); }
py::object scalar(const LogReal& v) { return py::float_(v.is_zero() ? 0.0 : std::exp(v.log())); }

template <MaxScalar T>
py::list vector(std::span<const T> v) {
  py::list out;
  for (const auto& x : v) out.append(scalar(x));
  return out;
}

template <MaxScalar T>
py::list vector(const std::vector<T>& v) {
  return vector(std::span<const T>(v));
}

template <MaxScalar T>
py::list matrix(const Matrix<T>& m) {
  py::list out;
  for (std::size_t i = 0; i < m.size(); ++i) out.append(vector(m.row(i)));
  return out;
}

py::list edges(const std::vector<Edge>& es) {
  py::list out;
  for (const auto& [i, j] : es) out.append(py::make_tuple(i, j));
  return out;
}

ModeRequest request(const std::string& mode) {
  if (mode == "auto") return ModeRequest::automatic;
  if (mode == "exact") return ModeRequest::exact;
  if (mode == "float") return ModeRequest::floating;
  throw UsageError("mode must be auto, exact or float");
}

// Parses the matrix text and applies f to the matrix of the resulting backend.
template <class F>
py::object with_matrix(const std::string& text, const std::string& mode, F&& f) {
  AnyMatrix a = parse_matrix(text, request(mode));
  return std::visit([&](const auto& m) -> py::object { return f(m); }, a);
}

template <MaxScalar T>
Vector<T> convert_vector(const Matrix<T>&, const std::vector<std::string>& xs) {
  std::ostringstream body;
  body << xs.size() << '\n';
  for (const auto& x : xs) body << x << ' ';
  auto parsed = parse_vector(body.str(), scalar_traits<T>::exact ? ModeRequest::exact : ModeRequest::floating);
  return std::get<Vector<T>>(std::move(parsed));
}

const char* level_name(VisualizationLevel l) {
  switch (l) {
    case VisualizationLevel::not_visualized: return "not_visualized";
    case VisualizationLevel::visualized: return "visualized";
    case VisualizationLevel::strictly_visualized: return "strictly_visualized";
  }
  return "";
}

const char* witness_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::exceeds_lambda: return "exceeds_lambda";
    case WitnessKind::lambda_off_critical: return "lambda_off_critical";
    case WitnessKind::critical_not_lambda: return "critical_not_lambda";
  }
  return "";
}

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::outside: return "outside";
    case Membership::subeigen_only: return "subeigen_only";
    case Membership::eigen: return "eigen";
  }
  return "";
}

VisualizerMethod method_of(const std::string& m) {
  if (m == "sum") return VisualizerMethod::column_sum;
  if (m == "logconvex") return VisualizerMethod::log_convex;
  if (m == "perron") return VisualizerMethod::perron;
  throw UsageError("method must be sum, logconvex or perron");
}

}  // namespace

PYBIND11_MODULE(_tropvis, m) {
  m.doc() = "Max-times spectral theory and diagonal scaling (C++ core)";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);

  m.def("max_cycle_geometric_mean", [](const std::string& text, const std::string& mode) {
    return with_matrix(text, mode, [](const auto& a) { return scalar(max_cycle_geometric_mean(a)); });
  }, py::arg("text"), py::arg("mode") = "auto");

  m.def("kleene_star", [](const std::string& text, const std::string& mode) {
    return with_matrix(text, mode, [](const auto& a) { return py::object(matrix(kleene_star(a).star)); });
  }, py::arg("text"), py::arg("mode") = "auto");

  m.def("critical_structure", [](const std::string& text, const std::string& mode) {
    return with_matrix(text, mode, [](const auto& a) {
      auto sd = critical_structure(a);
      py::dict d;
      d["lambda"] = scalar(sd.lambda);
      d["star"] = matrix(sd.star);
      d["critical_nodes"] = sd.critical_nodes;
      d["critical_edges"] = edges(sd.critical_edges);
      d["components"] = sd.components;
      d["representatives"] = sd.representatives;
      d["non_critical"] = sd.non_critical;
      return py::object(d);
    });
  }, py::arg("text"), py::arg("mode") = "auto");

  m.def("cone_basis", [](const std::string& text, bool eigen, const std::string& mode) {
    return with_matrix(text, mode, [eigen](const auto& a) {
      auto b = cone_basis(critical_structure(a), eigen ? ConeKind::eigencone : ConeKind::subeigencone);
      py::list gens;
      for (const auto& g : b.generators) gens.append(vector(g));
      return py::object(py::make_tuple(gens, b.source_columns));
    });
  }, py::arg("text"), py::arg("eigen"), py::arg("mode") = "auto");

  m.def("membership", [](const std::string& text, const std::vector<std::string>& x, const std::string& mode) {
    return with_matrix(text, mode, [&x](const auto& a) {
      return py::object(py::str(membership_name(membership(a, convert_vector(a, x)))));
    });
  }, py::arg("text"), py::arg("x"), py::arg("mode") = "auto");

  m.def("dimensions", [](const std::string& text, const std::string& mode) {
    return with_matrix(text, mode, [](const auto& a) {
      DimensionReport r = dimensions(a);
      py::dict d;
      d["maxdim_eigencone"] = r.maxdim_eigencone;
      d["maxdim_subeigencone"] = r.maxdim_subeigencone;
      d["linear_hull_dim"] = r.linear_hull_dim;
      d["linear_rank_star"] = r.linear_rank_star ? py::object(py::int_(*r.linear_rank_star)) : py::object(py::none());
      return py::object(d);
    });
  }, py::arg("text"), py::arg("mode") = "auto");

  m.def("linear_rank", [](const std::string& text) {
    return linear_rank(std::get<Matrix<Exact>>(parse_matrix(text, ModeRequest::exact)));
  }, py::arg("text"));

  m.def("check_visualization", [](const std::string& text, const std::string& mode) {
    return with_matrix(text, mode, [](const auto& a) {
      auto st = check_visualization(a);
      py::list ws;
      for (const auto& w : st.witnesses) ws.append(py::make_tuple(w.i, w.j, scalar(w.value), witness_name(w.kind)));
      py::dict d;
      d["status"] = level_name(st.status);
      d["lambda"] = scalar(st.lambda);
      d["witnesses"] = ws;
      d["margin"] = st.margin ? scalar(*st.margin) : py::object(py::none());
      return py::object(d);
    });
  }, py::arg("text"), py::arg("mode") = "auto");

  m.def("strict_visualizer", [](const std::string& text, const std::string& method,
                                const std::vector<double>& weights, const std::string& mode) {
    VisualizerMethod vm = method_of(method);
    return with_matrix(text, mode, [&](const auto& a) {
      auto x = strict_visualizer(a, vm, weights);
      return py::object(py::make_tuple(vector(x.values()), matrix(diag_similarity(a, x))));
    });
  }, py::arg("text"), py::arg("method") = "sum", py::arg("weights") = std::vector<double>{},
     py::arg("mode") = "auto");

  m.def("quotient_matrix", [](const std::string& text, const std::string& mode) {
    return with_matrix(text, mode, [](const auto& a) {
      auto q = quotient_matrix(a);
      py::dict d;
      d["m"] = q.m;
      d["alpha"] = matrix(q.alpha);
      d["node_to_component"] = q.node_to_component;
      d["component_nodes"] = q.component_nodes;
      return py::object(d);
    });
  }, py::arg("text"), py::arg("mode") = "auto");

  m.def("maximal_permutation", [](const std::string& text, const std::string& mode) {
    return with_matrix(text, mode, [](const auto& a) {
      auto p = maximal_permutation(a);
      return py::object(py::make_tuple(p.map, scalar(p.weight)));
    });
  }, py::arg("text"), py::arg("mode") = "auto");

  m.def("visualize_assignment", [](const std::string& text, const std::string& mode) {
    return with_matrix(text, mode, [](const auto& a) {
      auto v = visualize_assignment(a);
      py::dict d;
      d["permutation"] = v.pi.map;
      d["weight"] = scalar(v.pi.weight);
      d["strongly_definite_form"] = matrix(v.strongly_definite_form);
      d["scaling"] = vector(v.x.values());
      d["left"] = vector(v.left);
      d["right"] = vector(v.right);
      d["result"] = matrix(v.result);
      return py::object(d);
    });
  }, py::arg("text"), py::arg("mode") = "auto");

  m.def("run_cli", [](const std::vector<std::string>& args, const std::string& stdin_text) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err, stdin_text);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "");
}
