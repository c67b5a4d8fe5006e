#include "tropvis/cli.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropvis/assignment.hpp"
#include "tropvis/io.hpp"

namespace tropvis {
namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string command;
  std::string input;
  double tolerance = 1e-9;
  std::string mode = "auto";
  std::uint64_t seed = 0;
  bool timing = false;
  bool eigen = false;
  bool subeigen = false;
  std::string method = "sum";
  std::vector<double> weights;
  std::string scaling;
  std::string stage;
};

template <MaxScalar T>
json to_json(const T& v) {
  return to_string(v);
}

template <MaxScalar T>
json to_json(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

template <MaxScalar T>
json to_json(const Matrix<T>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (const auto& x : m.row(i)) row.push_back(to_string(x));
    out.push_back(std::move(row));
  }
  return out;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& [i, j] : edges) out.push_back({i, j});
  return out;
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

const char* verdict_name(PreservationVerdict v) {
  switch (v) {
    case PreservationVerdict::breaks: return "breaks";
    case PreservationVerdict::preserves_visualized: return "preserves_visualized";
    case PreservationVerdict::makes_strict: return "makes_strict";
  }
  return "";
}

template <MaxScalar T>
json status_json(const VisualizationStatus<T>& st) {
  json w = json::array();
  for (const auto& x : st.witnesses)
    w.push_back({{"i", x.i}, {"j", x.j}, {"value", to_string(x.value)}, {"kind", witness_name(x.kind)}});
  json out = {{"status", level_name(st.status)}, {"lambda", to_string(st.lambda)}, {"witnesses", w}};
  out["margin"] = st.margin ? json(to_string(*st.margin)) : json(nullptr);
  return out;
}

template <MaxScalar T>
json spectral_json(const SpectralData<T>& sd) {
  return {{"lambda", to_string(sd.lambda)},
          {"critical_nodes", sd.critical_nodes},
          {"critical_edges", edges_json(sd.critical_edges)},
          {"components", sd.components},
          {"representatives", sd.representatives},
          {"non_critical", sd.non_critical},
          {"n_critical_components", sd.n_critical_components}};
}

ModeRequest mode_request(const std::string& mode) {
  if (mode == "exact") return ModeRequest::exact;
  if (mode == "float") return ModeRequest::floating;
  return ModeRequest::automatic;
}

template <MaxScalar T>
Vector<T> read_scaling(const Options& o) {
  auto parsed = parse_vector(read_file(o.scaling), scalar_traits<T>::exact ? ModeRequest::exact
                                                                            : ModeRequest::floating);
  return std::get<Vector<T>>(std::move(parsed));
}

template <MaxScalar T>
json oracle_report(const Options& o, const Matrix<T>& a, Tolerance tol) {
  json r = {{"stage", o.stage}};
  bool agree = false;
  if (o.stage == "lambda") {
    T fast = max_cycle_geometric_mean(a);
    T slow = brute_force_lambda(a).value();
    r["lambda"] = to_string(fast);
    r["oracle"] = to_string(slow);
    agree = approx_equal(fast, slow, tol);
  } else if (o.stage == "star") {
    Matrix<T> fast = kleene_star(a, tol).star;
    Matrix<T> slow = kleene_series_oracle(a, tol);
    r["star"] = to_json(fast);
    r["oracle"] = to_json(slow);
    agree = approx_equal(fast, slow, tol);
  } else if (o.stage == "critical") {
    std::vector<Edge> fast = critical_structure(a, tol).critical_edges;
    std::vector<Edge> slow = brute_force_critical_edges(a, tol);
    r["critical_edges"] = edges_json(fast);
    r["oracle"] = edges_json(slow);
    agree = fast == slow;
  } else if (o.stage == "assign") {
    Permutation<T> fast = maximal_permutation(a);
    Permutation<T> slow = brute_force_assignment(a);
    r["weight"] = to_string(fast.weight);
    r["oracle"] = to_string(slow.weight);
    agree = approx_equal(fast.weight, slow.weight, tol);
  } else {
    throw UsageError("unknown oracle stage '" + o.stage + "' (lambda, star, critical, assign)");
  }
  r["agree"] = agree;
  return r;
}

template <MaxScalar T>
json visualize_report(const Options& o, const Matrix<T>& a, Tolerance tol) {
  static const std::map<std::string, VisualizerMethod> methods = {
      {"sum", VisualizerMethod::column_sum},
      {"logconvex", VisualizerMethod::log_convex},
      {"perron", VisualizerMethod::perron}};
  VisualizerMethod method = methods.at(o.method);
  SpectralData<T> sd = critical_structure(a, tol);
  ScalingVector<T> x = strict_visualizer(a, method, o.weights, tol);
  Matrix<T> scaled = diag_similarity(a, x);
  json r = {{"method", o.method}, {"provenance", to_string(x.provenance())}, {"scaling", to_json(x.values())}};
  r["scaled"] = to_json(scaled);
  r["check"] = status_json(check_visualization(scaled, sd, tol));
  return r;
}

template <MaxScalar T>
json run_command(const Options& o, const Matrix<T>& a, Tolerance tol) {
  const std::string& c = o.command;
  if (c == "lambda") return {{"lambda", to_string(max_cycle_geometric_mean(a))}};
  if (c == "star") {
    KleeneStar<T> k = kleene_star(a, tol);
    return {{"star", to_json(k.star)}};
  }
  if (c == "critical") return spectral_json(critical_structure(a, tol));
  if (c == "basis") {
    ConeKind kind = o.eigen ? ConeKind::eigencone : ConeKind::subeigencone;
    ConeBasis<T> b = cone_basis(critical_structure(a, tol), kind, tol);
    json gens = json::array();
    for (const auto& g : b.generators) gens.push_back(to_json(g));
    return {{"kind", o.eigen ? "eigencone" : "subeigencone"},
            {"generators", gens},
            {"source_columns", b.source_columns}};
  }
  if (c == "dims") {
    DimensionReport d = dimensions(a, tol);
    json r = {{"maxdim_eigencone", d.maxdim_eigencone},
              {"maxdim_subeigencone", d.maxdim_subeigencone},
              {"linear_hull_dim", d.linear_hull_dim}};
    r["linear_rank_star"] = d.linear_rank_star ? json(*d.linear_rank_star) : json(nullptr);
    return r;
  }
  if (c == "rank") {
    if constexpr (scalar_traits<T>::exact) {
      return {{"linear_rank", linear_rank(a)}};
    } else {
      throw ModeMismatch("linear rank needs exact arithmetic; rerun with --mode exact");
    }
  }
  if (c == "check") return status_json(check_visualization(a, tol));
  if (c == "visualize") return visualize_report(o, a, tol);
  if (c == "preserve") {
    ScalingVector<T> x(read_scaling<T>(o), Provenance::user);
    QuotientMatrix<T> q = quotient_matrix(a, tol);
    PreservationVerdict v = preserving_scaling_check(q, x, tol);
    return {{"verdict", verdict_name(v)},
            {"scaling", to_json(x.values())},
            {"check", status_json(check_visualization(diag_similarity(a, x), tol))}};
  }
  if (c == "quotient") {
    QuotientMatrix<T> q = quotient_matrix(a, tol);
    return {{"m", q.m},
            {"alpha", to_json(q.alpha)},
            {"node_to_component", q.node_to_component},
            {"component_nodes", q.component_nodes}};
  }
  if (c == "assign") {
    AssignmentVisualization<T> v = visualize_assignment(a, tol);
    return {{"permutation", v.pi.map},
            {"weight", to_string(v.pi.weight)},
            {"strongly_definite_form", to_json(v.strongly_definite_form)},
            {"scaling", to_json(v.x.values())},
            {"left", to_json(v.left)},
            {"right", to_json(v.right)},
            {"result", to_json(v.result)}};
  }
  return oracle_report(o, a, tol);
}

// Log-convex and Perron scalings are irrational, so exact input read in
// automatic mode runs them in float mode.
bool needs_float(const Options& o) {
  return o.mode == "auto" && o.command == "visualize" && o.method != "sum";
}

int execute(const Options& o, const std::string& stdin_text, std::ostream& out) {
  if (o.command == "basis" && !o.eigen && !o.subeigen) throw UsageError("basis needs --eigen or --subeigen");
  const std::string text = o.input == "-" ? stdin_text : read_file(o.input);
  AnyMatrix parsed = parse_matrix(text, needs_float(o) ? ModeRequest::floating : mode_request(o.mode));
  const Tolerance tol{o.tolerance};
  const auto start = std::chrono::steady_clock::now();
  json body = std::visit([&](const auto& a) { return run_command(o, a, tol); }, parsed);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json report;
  report["command"] = o.command;
  report["mode"] = std::holds_alternative<Matrix<Exact>>(parsed) ? "exact" : "float";
  report["n"] = std::visit([](const auto& a) { return a.size(); }, parsed);
  report["seed"] = o.seed;
  report.update(body);
  if (o.timing) report["timing"] = {{"seconds", seconds}};
  out << report.dump(2) << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::string& stdin_text) {
  Options o;
  CLI::App app{"Max-times spectral theory and diagonal scaling", "tropvis"};
  app.require_subcommand(1);
  app.add_option("--tolerance", o.tolerance, "relative tolerance on log differences (float mode)")
      ->check(CLI::PositiveNumber);
  app.add_option("--mode", o.mode, "numeric backend")->check(CLI::IsMember({"auto", "exact", "float"}));
  app.add_option("--seed", o.seed, "seed recorded in the report");
  app.add_flag("--timing", o.timing, "add wall-clock timing to the report");

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    if (std::string(name) == "oracle") {
      s->add_option("stage", o.stage, "lambda, star, critical or assign")
          ->required()
          ->check(CLI::IsMember({"lambda", "star", "critical", "assign"}));
    }
    s->add_option("matrix", o.input, "matrix file, or - for standard input")->required();
    s->fallthrough();
    s->callback([&o, name] { o.command = name; });
    return s;
  };
  sub("lambda", "maximum cycle geometric mean");
  sub("star", "Kleene star of A (requires lambda(A) <= 1)");
  sub("critical", "critical digraph and components of C*(A)");
  CLI::App* basis = sub("basis", "scaled extremals of the eigencone or subeigencone");
  auto* eg = basis->add_flag("--eigen", o.eigen, "eigencone V(A)");
  auto* sg = basis->add_flag("--subeigen", o.subeigen, "subeigencone V*(A)");
  eg->excludes(sg);
  sub("dims", "max-algebraic and linear dimensions");
  sub("rank", "linear rank of A (exact mode)");
  sub("check", "visualization status of A");
  CLI::App* vis = sub("visualize", "strictly visualizing diagonal scaling");
  vis->add_option("--method", o.method)->check(CLI::IsMember({"sum", "logconvex", "perron"}));
  vis->add_option("--weights", o.weights, "log-convex weights, positive, summing to 1")->delimiter(',');
  CLI::App* pres = sub("preserve", "classify a scaling of a definite visualized matrix");
  pres->add_option("--scaling", o.scaling, "scaling vector file")->required()->check(CLI::ExistingFile);
  sub("quotient", "quotient matrix over the components of C*(A)");
  sub("assign", "maximal permutation and the scaling visualizing it");
  sub("oracle", "cross-check a stage against exhaustive enumeration");

  std::vector<const char*> argv{"tropvis"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    return execute(o, stdin_text, out);
  } catch (const UsageError& e) {
    err << "tropvis: error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "tropvis: domain error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "tropvis: error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace tropvis
