// Copyright 2026 The torus-harmonics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "torus/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "torus/acceptance.hpp"
#include "torus/analysis.hpp"
#include "torus/convolution.hpp"
#include "torus/core.hpp"
#include "torus/inequalities.hpp"
#include "torus/json_io.hpp"
#include "torus/kernels.hpp"
#include "torus/l1algebra.hpp"
#include "torus/lattice.hpp"
#include "torus/measures.hpp"
#include "torus/summability.hpp"

namespace torus::cli {
namespace {

using ojson = nlohmann::ordered_json;

struct RunConfig {
  int grid_size = 4096;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  std::string output;    // "json" | "csv" | "" (per-command default)
  std::string out_path;  // empty: stdout
};

// Output destination; binary mode keeps the RFC-4180 CRLF literal.
struct Sink {
  std::ofstream file;
  std::ostream* os = nullptr;

  explicit Sink(const RunConfig& cfg) {
    if (cfg.out_path.empty()) {
      os = &std::cout;
      return;
    }
    file.open(cfg.out_path, std::ios::binary);
    if (!file)
      throw std::invalid_argument("cannot open output file: " + cfg.out_path);
    os = &file;
  }
};

// Uniform table: cells carry their JSON type; the CSV rendering derives
// from it (floats in %.16e, integers plain, everything else dumped).
class Table {
 public:
  explicit Table(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}

  void row(std::initializer_list<ojson> cells) {
    ojson r = ojson::array();
    for (const auto& c : cells) r.push_back(c);
    rows_.push_back(std::move(r));
  }

  void row_vector(ojson cells) { rows_.push_back(std::move(cells)); }

  void emit_csv(std::ostream& os) const {
    CsvWriter w(os);
    w.row(columns_);
    for (const auto& r : rows_) {
      std::vector<std::string> fields;
      fields.reserve(r.size());
      for (const auto& c : r) fields.push_back(cell_text(c));
      w.row(fields);
    }
  }

  ojson to_json(const std::string& command) const {
    ojson j;
    j["schema_version"] = 1;
    j["command"] = command;
    j["columns"] = columns_;
    j["rows"] = rows_;
    return j;
  }

 private:
  static std::string cell_text(const ojson& c) {
    if (c.is_number_float()) return format_double(c.get<double>());
    if (c.is_number_integer()) return std::to_string(c.get<long long>());
    if (c.is_number_unsigned())
      return std::to_string(c.get<unsigned long long>());
    if (c.is_boolean()) return c.get<bool>() ? "true" : "false";
    if (c.is_string()) return c.get<std::string>();
    return c.dump();
  }

  std::vector<std::string> columns_;
  std::vector<ojson> rows_;
};

std::string pick_format(const RunConfig& cfg, const char* fallback) {
  return cfg.output.empty() ? fallback : cfg.output;
}

void emit_table(const RunConfig& cfg, const char* fallback,
                const std::string& command, const Table& t,
                const std::vector<std::pair<std::string, ojson>>& extra = {}) {
  Sink sink(cfg);
  if (pick_format(cfg, fallback) == "csv") {
    t.emit_csv(*sink.os);
    return;
  }
  ojson j = t.to_json(command);
  for (const auto& [k, v] : extra) j[k] = v;
  *sink.os << j.dump(2) << "\n";
}

// Flat result object; the CSV form is a one-row table over the same keys.
void emit_object(const RunConfig& cfg, const char* fallback,
                 const std::string& command, const ojson& fields) {
  Sink sink(cfg);
  if (pick_format(cfg, fallback) == "csv") {
    std::vector<std::string> columns;
    for (const auto& [k, v] : fields.items()) columns.push_back(k);
    std::vector<std::string> cells;
    CsvWriter w(*sink.os);
    w.row(columns);
    for (const auto& [k, v] : fields.items()) {
      if (v.is_number_float())
        cells.push_back(format_double(v.get<double>()));
      else if (v.is_number_integer())
        cells.push_back(std::to_string(v.get<long long>()));
      else if (v.is_number_unsigned())
        cells.push_back(std::to_string(v.get<unsigned long long>()));
      else if (v.is_boolean())
        cells.push_back(v.get<bool>() ? "true" : "false");
      else if (v.is_string())
        cells.push_back(v.get<std::string>());
      else
        cells.push_back(v.dump());
    }
    w.row(cells);
    return;
  }
  ojson j;
  j["schema_version"] = 1;
  j["command"] = command;
  for (const auto& [k, v] : fields.items()) j[k] = v;
  *sink.os << j.dump(2) << "\n";
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw std::invalid_argument("empty list entry");
    out.push_back(std::stod(token));
  }
  if (out.empty()) throw std::invalid_argument("empty schedule");
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (double v : parse_double_list(s)) {
    const int k = static_cast<int>(std::llround(v));
    if (std::abs(v - k) > 0)
      throw std::invalid_argument("expected integer list");
    out.push_back(k);
  }
  return out;
}

KernelSpec parse_kernel(const std::string& s) {
  const auto pos = s.find(':');
  if (pos == std::string::npos)
    throw std::invalid_argument(
        "kernel spec: expected family:param, e.g. fejer:8");
  const std::string family = s.substr(0, pos);
  const std::string param = s.substr(pos + 1);
  if (family == "dirichlet") return KernelSpec::dirichlet(std::stoi(param));
  if (family == "fejer") return KernelSpec::fejer(std::stoi(param));
  if (family == "poisson") return KernelSpec::poisson(std::stod(param));
  if (family == "tailed") return KernelSpec::tailed(std::stoi(param));
  throw std::invalid_argument("unknown kernel family: " + family);
}

double parse_alpha(const std::string& s) {
  if (s == "pi") return pi;
  if (s == "e") return std::exp(1.0);
  if (s == "sqrt2") return std::sqrt(2.0);
  return std::stod(s);
}

CoefficientSequence hermitian_sequence(const std::string& spec, int order) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open spec file: " + spec);
    return coefficients_from_json(nlohmann::json::parse(in));
  }
  const auto pos = spec.find(':');
  const std::string head =
      pos == std::string::npos ? spec : spec.substr(0, pos);
  const std::string payload =
      pos == std::string::npos ? "" : spec.substr(pos + 1);
  std::vector<cplx> values(2 * order + 1);
  if (head == "ones") {
    for (auto& v : values) v = 1.0;
  } else if (head == "geometric") {
    const double r = std::stod(payload);
    for (int n = -order; n <= order; ++n)
      values[n + order] = std::pow(r, std::abs(n));
  } else if (head == "cos") {
    const double alpha = std::stod(payload);
    for (int n = -order; n <= order; ++n)
      values[n + order] = std::cos(n * alpha);
  } else {
    throw std::invalid_argument("unknown sequence spec: " + spec);
  }
  return CoefficientSequence(order, std::move(values));
}

CoefficientSequence dual_coefficients(const std::string& spec) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open spec file: " + spec);
    return coefficients_from_json(nlohmann::json::parse(in));
  }
  const auto pos = spec.find(':');
  const std::string head =
      pos == std::string::npos ? spec : spec.substr(0, pos);
  const std::string payload =
      pos == std::string::npos ? "" : spec.substr(pos + 1);
  if (head == "delta") return CoefficientSequence(0, {cplx(1.0, 0.0)});
  if (head == "zeta") {
    const int K = std::stoi(payload);
    if (K < 1) throw std::invalid_argument("zeta: expected K >= 1");
    std::vector<cplx> values(2 * K + 1);
    for (int k = 1; k <= K; ++k) values[K + k] = 1.0 / k;
    return CoefficientSequence(K, std::move(values));
  }
  if (head == "power") {
    const auto comma = payload.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("power: expected s,K");
    const double s = std::stod(payload.substr(0, comma));
    const int K = std::stoi(payload.substr(comma + 1));
    if (K < 1) throw std::invalid_argument("power: expected K >= 1");
    std::vector<cplx> values(2 * K + 1);
    for (int k = 1; k <= K; ++k) values[K + k] = std::pow(k, -s);
    return CoefficientSequence(K, std::move(values));
  }
  throw std::invalid_argument("unknown coefficient spec: " + spec);
}

ConvexBody2D parse_body(const std::string& s, bool closed) {
  if (s.size() > 5 && s.substr(s.size() - 5) == ".json") {
    std::ifstream in(s);
    if (!in) throw std::invalid_argument("cannot open body file: " + s);
    const auto j = nlohmann::json::parse(in);
    std::vector<std::pair<double, double>> v;
    for (const auto& p : j.at("vertices"))
      v.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    return ConvexBody2D::polygon(v);
  }
  const auto pos = s.find(':');
  if (pos == std::string::npos)
    throw std::invalid_argument("body spec: expected shape:params");
  const std::string shape = s.substr(0, pos);
  const auto params = parse_double_list(s.substr(pos + 1));
  if (shape == "ellipse") {
    if (params.size() != 2)
      throw std::invalid_argument("ellipse: expected a,b");
    return ConvexBody2D::ellipse(params[0], params[1], closed);
  }
  if (shape == "rect") {
    if (params.size() != 2) throw std::invalid_argument("rect: expected w,h");
    return ConvexBody2D::rectangle(params[0] / 2, params[1] / 2, closed);
  }
  if (shape == "square") {
    if (params.size() != 1) throw std::invalid_argument("square: expected s");
    return ConvexBody2D::rectangle(params[0] / 2, params[0] / 2, closed);
  }
  if (shape == "parallelogram") {
    if (params.size() != 4)
      throw std::invalid_argument("parallelogram: expected p,q,s,t");
    return ConvexBody2D::parallelogram(params[0], params[1], params[2],
                                       params[3], closed);
  }
  throw std::invalid_argument("unknown body shape: " + shape);
}

ojson cplx_json(const cplx& z) { return ojson::array({z.real(), z.imag()}); }

const char* path_name(ConvolutionPath p) {
  switch (p) {
    case ConvolutionPath::coefficient_multiplication:
      return "coefficient_multiplication";
    case ConvolutionPath::direct_quadrature:
      return "direct_quadrature";
    case ConvolutionPath::atomic_exact:
      return "atomic_exact";
  }
  return "unknown";
}

const char* verdict_name(PowerVerdict v) {
  switch (v) {
    case PowerVerdict::characterized:
      return "characterized";
    case PowerVerdict::unbounded:
      return "unbounded";
    case PowerVerdict::not_invertible:
      return "not_invertible";
  }
  return "unknown";
}

// Per-subcommand option bundle; only the parsed subcommand reads it.
struct Opts {
  std::string fn;
  std::string g;
  std::string mu;
  std::string u;
  std::string c;
  std::string body;
  std::string alpha;
  std::string kernel;
  std::string family;
  std::string schedule;
  std::string deltas;
  std::string method = "cesaro";
  std::string norm = "lp";
  std::string suite = "all";
  int N = 8;
  int inv_half_width = 64;
  int order = 64;
  int n_max = 4096;
  int sweep_n_max = 32;
  int points = 0;
  int count = 5;
  int radius_bound = 64;
  int pgram_radius = 0;
  double x = 0.0;
  double p = 2.0;
  double limit = 0.0;
  bool has_limit = false;
  double K = 2.0;
  double pa = 0.0, pb = 0.0, pc = 0.0, pd = 0.0, pk = 1.0;
  bool cross_check = false;
  bool closed = false;
  bool forbid_range = false;
};

int cmd_coeffs(const RunConfig& cfg, const Opts& o) {
  const TorusGrid grid(cfg.grid_size);
  const auto f = resolve_function(o.fn);
  const auto c = fourier_coefficients(f, o.N, grid);
  Table t({"n", "re", "im"});
  for (int n = -o.N; n <= o.N; ++n)
    t.row({n, c.at(n).real(), c.at(n).imag()});
  emit_table(cfg, "csv", "coeffs", t);
  return 0;
}

int cmd_partial_sums(const RunConfig& cfg, const Opts& o) {
  const TorusGrid grid(cfg.grid_size);
  const auto f = resolve_function(o.fn);
  const auto c = fourier_coefficients(f, o.N, grid);
  Table t({"n", "re", "im"});
  for (int n = 0; n <= o.N; ++n) {
    const cplx s = symmetric_partial_sum(c, n, o.x);
    t.row({n, s.real(), s.imag()});
  }
  emit_table(cfg, "csv", "partial-sums", t, {{"x", o.x}});
  return 0;
}

int cmd_kernel_table(const RunConfig& cfg, const Opts& o) {
  const auto spec = parse_kernel(o.kernel);
  const TorusGrid grid(o.points > 0 ? o.points : cfg.grid_size);
  Table t({"x", "value"});
  for (int j = 0; j < grid.size(); ++j) {
    const double x = grid.node(j);
    t.row({x, kernel_value(spec, x)});
  }
  emit_table(cfg, "csv", "kernel-table", t, {{"kernel", spec.name()}});
  return 0;
}

int cmd_lebesgue(const RunConfig& cfg, const Opts& o) {
  if (o.n_max < 1) throw std::invalid_argument("--n-max must be >= 1");
  Table t({"n", "L_n", "ln_n"});
  for (int n = 1; n <= o.n_max; n *= 2)
    t.row({n, lebesgue_constant(n), std::log(static_cast<double>(n))});
  emit_table(cfg, "csv", "lebesgue", t);
  return 0;
}

int cmd_approx_identity(const RunConfig& cfg, const Opts& o) {
  const TorusGrid grid(cfg.grid_size);
  const bool poisson = o.family == "poisson";
  std::string schedule = o.schedule;
  if (schedule.empty())
    schedule = poisson ? "0.5,0.75,0.875,0.9375,0.96875,0.984375"
                       : "1,2,4,8,16,32,64";
  const auto deltas =
      parse_double_list(o.deltas.empty() ? "0.1,0.5,1.0" : o.deltas);
  std::vector<KernelSpec> specs;
  if (poisson) {
    for (double r : parse_double_list(schedule))
      specs.push_back(KernelSpec::poisson(r));
  } else {
    for (int n : parse_int_list(schedule)) {
      if (o.family == "dirichlet")
        specs.push_back(KernelSpec::dirichlet(n));
      else if (o.family == "fejer")
        specs.push_back(KernelSpec::fejer(n));
      else if (o.family == "tailed")
        specs.push_back(KernelSpec::tailed(n));
      else
        throw std::invalid_argument("unknown kernel family: " + o.family);
    }
  }
  const auto reports = approximate_identity_report(specs, deltas, grid);
  std::vector<std::string> columns = {"param", "nonnegativity_violation",
                                      "mass_defect", "l1_norm"};
  for (std::size_t i = 0; i < deltas.size(); ++i)
    columns.push_back("tail_" + std::to_string(i + 1));
  Table t(columns);
  for (const auto& rep : reports) {
    ojson r = ojson::array();
    if (poisson)
      r.push_back(rep.spec.r);
    else
      r.push_back(rep.spec.n);
    r.push_back(rep.nonnegativity_violation);
    r.push_back(rep.mass_defect);
    r.push_back(rep.l1_norm);
    for (double tm : rep.tail_mass) r.push_back(tm);
    t.row_vector(std::move(r));
  }
  ojson dj = ojson::array();
  for (double d : deltas) dj.push_back(d);
  emit_table(cfg, "csv", "approx-identity", t, {{"deltas", dj}});
  return 0;
}

int cmd_convolve(const RunConfig& cfg, const Opts& o) {
  const TorusGrid grid(cfg.grid_size);
  const auto f = resolve_function(o.fn);
  const auto g = resolve_function(o.g);
  const auto res = convolve_functions(f, g, grid, o.cross_check);
  if (pick_format(cfg, "json") == "csv") {
    const auto samples = evaluate_on_grid(res.function, grid);
    Table t({"x", "re", "im"});
    for (int j = 0; j < grid.size(); ++j)
      t.row({grid.node(j), samples[j].real(), samples[j].imag()});
    emit_table(cfg, "csv", "convolve", t);
    return 0;
  }
  ojson fields;
  fields["path"] = path_name(res.path);
  fields["cross_checked"] = res.cross_checked;
  fields["cross_check_deviation"] = res.cross_check_deviation;
  fields["function"] = function_to_json(res.function);
  emit_object(cfg, "json", "convolve", fields);
  return 0;
}

int cmd_summability(const RunConfig& cfg, const Opts& o) {
  const TorusGrid grid(cfg.grid_size);
  const auto f = resolve_function(o.fn);
  SumMethod method;
  if (o.method == "cesaro")
    method = SumMethod::cesaro;
  else if (o.method == "abel")
    method = SumMethod::abel;
  else if (o.method == "raw")
    method = SumMethod::raw_partial_sum;
  else
    throw std::invalid_argument("unknown method: " + o.method);
  NormMode mode;
  if (o.norm == "sup")
    mode = NormMode::sup();
  else if (o.norm == "lp")
    mode = NormMode::lp(o.p);
  else if (o.norm == "pointwise")
    mode = o.has_limit ? NormMode::at(o.x, o.limit) : NormMode::at(o.x);
  else
    throw std::invalid_argument("unknown norm mode: " + o.norm);
  std::string schedule = o.schedule;
  if (schedule.empty())
    schedule = method == SumMethod::abel
                   ? "0.5,0.75,0.875,0.9375,0.96875,0.984375"
                   : "1,2,4,8,16,32,64,128,256";
  const auto report = norm_convergence_report(
      f, mode, method, parse_double_list(schedule), grid);
  Table t({"parameter", "error"});
  for (std::size_t i = 0; i < report.schedule.size(); ++i)
    t.row({report.schedule[i], report.errors[i]});
  emit_table(cfg, "csv", "summability", t);
  return 0;
}

int cmd_wiener(const RunConfig& cfg, const Opts& o) {
  const TorusGrid grid(cfg.grid_size);
  const auto mu = resolve_measure(o.mu);
  const auto schedule =
      parse_int_list(o.schedule.empty() ? "64,128,256,512,1024" : o.schedule);
  const int max_n = *std::max_element(schedule.begin(), schedule.end());
  const auto mu_hat = stieltjes_coefficients(mu, max_n, grid);
  const auto verdict = continuity_test(mu_hat, schedule, cfg.tol);
  if (pick_format(cfg, "json") == "csv") {
    Table t({"N", "estimate"});
    for (std::size_t i = 0; i < schedule.size(); ++i)
      t.row({schedule[i], verdict.trend[i]});
    emit_table(cfg, "csv", "wiener", t);
    return 0;
  }
  ojson fields;
  fields["continuous"] = verdict.continuous;
  fields["atom_mass_sq"] = verdict.atom_mass_sq;
  ojson trend = ojson::array();
  for (double e : verdict.trend) trend.push_back(e);
  fields["trend"] = trend;
  emit_object(cfg, "json", "wiener", fields);
  return 0;
}

int cmd_herglotz(const RunConfig& cfg, const Opts& o) {
  const TorusGrid grid(cfg.grid_size);
  const PositiveDefiniteSequence u(hermitian_sequence(o.u, o.order));
  const auto verdict = positive_definite_check(u, o.order, cfg.tol);
  if (!verdict.positive_semidefinite) {
    ojson fields;
    fields["psd"] = false;
    fields["min_eigenvalue"] = verdict.min_eigenvalue;
    fields["order"] = o.order;
    emit_object(cfg, "json", "herglotz", fields);
    return 0;
  }
  const auto density = herglotz_reconstruct(u, o.order, grid, cfg.tol);
  if (pick_format(cfg, "json") == "csv") {
    const auto samples = evaluate_on_grid(density, grid);
    Table t({"x", "re", "im"});
    for (int j = 0; j < grid.size(); ++j)
      t.row({grid.node(j), samples[j].real(), samples[j].imag()});
    emit_table(cfg, "csv", "herglotz", t);
    return 0;
  }
  const auto mass = fourier_coefficients(density, 0, grid).at(0);
  ojson fields;
  fields["psd"] = true;
  fields["min_eigenvalue"] = verdict.min_eigenvalue;
  fields["order"] = o.order;
  fields["mass"] = cplx_json(mass);
  emit_object(cfg, "json", "herglotz", fields);
  return 0;
}

int cmd_poisson_extend(const RunConfig& cfg, const Opts& o) {
  const TorusGrid grid(cfg.grid_size);
  const auto mu = resolve_measure(o.mu);
  const auto rs =
      parse_double_list(o.schedule.empty() ? "0.5,0.9,0.99,0.999" : o.schedule);
  const auto probes = poisson_extension_probe(mu, rs, grid);
  Table t({"r", "A_r"});
  for (const auto& p : probes) t.row({p.r, p.a_r});
  emit_table(cfg, "csv", "poisson-extend", t);
  return 0;
}

int cmd_hy_check(const RunConfig& cfg, const Opts& o) {
  const TorusGrid grid(cfg.grid_size);
  const auto f = resolve_function(o.fn);
  const HYReport rep = o.forbid_range
                           ? hausdorff_young_reversed_probe(f, o.p, grid)
                           : hausdorff_young_check(f, o.p, grid);
  Table t({"p", "q", "lhs", "rhs", "ratio"});
  t.row({rep.p, rep.q, rep.lhs, rep.rhs, rep.ratio});
  emit_table(cfg, "csv", "hy-check", t,
             {{"reversed_probe", o.forbid_range},
              {"bound_holds", rep.ratio <= 1.0 + 1e-10}});
  return 0;
}

int cmd_dual_synth(const RunConfig& cfg, const Opts& o) {
  const TorusGrid grid(cfg.grid_size);
  const auto c = dual_coefficients(o.c);
  const auto rep = dual_synthesis(c, o.p, grid);
  ojson fields;
  fields["p"] = o.p;
  fields["q"] = rep.q;
  fields["f_norm_q"] = rep.f_norm_q;
  fields["coeff_norm_p"] = rep.coeff_norm_p;
  fields["recovery_error"] = rep.recovery_error;
  fields["bound_holds"] = rep.f_norm_q <= rep.coeff_norm_p + 1e-9;
  emit_object(cfg, "json", "dual-synth", fields);
  return 0;
}

int cmd_minkowski(const RunConfig& cfg, const Opts& o) {
  const auto body = parse_body(o.body, o.closed);
  const auto hit = minkowski_search(body, o.radius_bound);
  ojson fields;
  fields["found"] = hit.has_value();
  if (hit) {
    fields["m"] = hit->first;
    fields["n"] = hit->second;
  }
  fields["area"] = body.area;
  fields["area_exact"] = body.area_exact;
  if (!body.area_exact) fields["area_std_error"] = body.area_std_error;
  emit_object(cfg, "json", "minkowski", fields);
  return 0;
}

int cmd_dioph(const RunConfig& cfg, const Opts& o) {
  const double a = parse_alpha(o.alpha);
  const auto res = diophantine_approx(a, o.count);
  if (pick_format(cfg, "json") == "csv") {
    Table t({"m", "n", "error"});
    for (const auto& [m, n] : res.pairs)
      t.row({m, n,
             std::abs(a - static_cast<double>(n) / static_cast<double>(m))});
    emit_table(cfg, "csv", "dioph", t);
    return 0;
  }
  ojson fields;
  fields["alpha"] = a;
  fields["exact_hit"] = res.exact_hit;
  ojson pairs = ojson::array();
  for (const auto& [m, n] : res.pairs) pairs.push_back(ojson::array({m, n}));
  fields["pairs"] = pairs;
  emit_object(cfg, "json", "dioph", fields);
  return 0;
}

int cmd_parallelogram(const RunConfig& cfg, const Opts& o) {
  const auto [m, n] =
      parallelogram_pair(o.pa, o.pb, o.pc, o.pd, o.pk, o.pgram_radius);
  ojson fields;
  fields["m"] = m;
  fields["n"] = n;
  fields["form1"] = std::abs(o.pa * m + o.pb * n);
  fields["form2"] = std::abs(o.pc * m + o.pd * n);
  fields["bound1"] = o.pk;
  fields["bound2"] = 1.0 / o.pk;
  emit_object(cfg, "json", "parallelogram", fields);
  return 0;
}

int cmd_l1_powers(const RunConfig& cfg, const Opts& o) {
  const auto mu = resolve_sequence(o.mu);
  const auto rep = bounded_powers_test(mu, o.sweep_n_max, o.K);
  if (pick_format(cfg, "csv") == "csv") {
    Table t({"n", "norm"});
    for (std::size_t i = 0; i < rep.positive_norms.size(); ++i)
      t.row({static_cast<int>(i) + 1, rep.positive_norms[i]});
    for (std::size_t i = 0; i < rep.negative_norms.size(); ++i)
      t.row({-(static_cast<int>(i) + 1), rep.negative_norms[i]});
    emit_table(cfg, "csv", "l1-powers", t);
    return 0;
  }
  ojson fields;
  fields["verdict"] = verdict_name(rep.verdict);
  if (rep.verdict == PowerVerdict::characterized) {
    fields["p"] = rep.p;
    fields["w"] = cplx_json(rep.w);
  }
  fields["first_exceedance"] = rep.first_exceedance;
  ojson pos = ojson::array(), neg = ojson::array();
  for (double v : rep.positive_norms) pos.push_back(v);
  for (double v : rep.negative_norms) neg.push_back(v);
  fields["positive_norms"] = pos;
  fields["negative_norms"] = neg;
  fields["note"] = rep.note;
  emit_object(cfg, "json", "l1-powers", fields);
  return 0;
}

int cmd_l1_inverse(const RunConfig& cfg, const Opts& o) {
  const TorusGrid grid(cfg.grid_size);
  const auto mu = resolve_sequence(o.mu);
  const auto nu = wiener_inverse(mu, o.inv_half_width, grid, cfg.tol);
  const auto conv = l1_convolve(mu, nu);
  double residual = 0.0;
  bool saw_zero = false;
  for (int k = conv.lo(); k <= conv.hi(); ++k) {
    cplx v = conv.at(k);
    if (k == 0) {
      v -= 1.0;
      saw_zero = true;
    }
    residual += std::abs(v);
  }
  if (!saw_zero && !conv.is_zero()) residual += 1.0;
  if (conv.is_zero()) residual = 1.0;
  if (pick_format(cfg, "json") == "csv") {
    Table t({"k", "re", "im"});
    for (int k = nu.lo(); k <= nu.hi(); ++k)
      t.row({k, nu.at(k).real(), nu.at(k).imag()});
    emit_table(cfg, "csv", "l1-inverse", t);
    return 0;
  }
  ojson fields;
  fields["residual"] = residual;
  fields["nu"] = sequence_to_json(nu);
  emit_object(cfg, "json", "l1-inverse", fields);
  return 0;
}

int cmd_acceptance(const RunConfig& cfg, const Opts& o) {
  Sink sink(cfg);
  std::vector<acceptance::CriterionResult> results;
  if (o.suite == "all") {
    results = acceptance::run_all(cfg.seed);
  } else {
    const int index = std::stoi(o.suite);
    results.push_back(acceptance::run_one(index, cfg.seed));
  }
  int passed = 0;
  for (const auto& r : results) {
    *sink.os << (r.passed ? "PASS" : "FAIL") << " " << r.index << " " << r.name
             << ": " << r.detail << "\n";
    if (r.passed) ++passed;
  }
  *sink.os << "acceptance: " << passed << "/" << results.size()
           << " criteria passed\n";
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--grid-size", cfg.grid_size,
                  "quadrature grid size (even, >= 4)")
      ->capture_default_str();
  sub->add_option("--tol", cfg.tol, "absolute tolerance")
      ->capture_default_str();
  sub->add_option("--seed", cfg.seed, "seed for randomized sweeps")
      ->capture_default_str();
  sub->add_option("--output", cfg.output, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", cfg.out_path, "output file path (default stdout)");
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"numerical Fourier analysis on the circle group"};
  app.require_subcommand(1);
  RunConfig cfg;
  Opts o;
  int rc = 0;

  auto* coeffs = app.add_subcommand(
      "coeffs", "Fourier coefficients a_n(f) for |n| <= N");
  coeffs->add_option("--fn", o.fn, "function spec")->required();
  coeffs->add_option("--N", o.N, "coefficient half-width")
      ->capture_default_str();
  add_common(coeffs, cfg);
  coeffs->callback([&] { rc = cmd_coeffs(cfg, o); });

  auto* psums = app.add_subcommand(
      "partial-sums", "symmetric partial sums S_n(f)(x) for n = 0..N");
  psums->add_option("--fn", o.fn, "function spec")->required();
  psums->add_option("--N", o.N, "largest order")->capture_default_str();
  psums->add_option("--x", o.x, "evaluation point")->capture_default_str();
  add_common(psums, cfg);
  psums->callback([&] { rc = cmd_partial_sums(cfg, o); });

  auto* ktable = app.add_subcommand("kernel-table",
                                    "kernel values on a uniform grid");
  ktable
      ->add_option("--kernel", o.kernel,
                   "dirichlet:n | fejer:n | poisson:r | tailed:n")
      ->required();
  ktable->add_option("--points", o.points,
                     "table size (default: --grid-size)");
  add_common(ktable, cfg);
  ktable->callback([&] { rc = cmd_kernel_table(cfg, o); });

  auto* lebesgue = app.add_subcommand(
      "lebesgue", "Lebesgue constants L_n over a dyadic range");
  lebesgue->add_option("--n-max", o.n_max, "largest order")
      ->capture_default_str();
  add_common(lebesgue, cfg);
  lebesgue->callback([&] { rc = cmd_lebesgue(cfg, o); });

  auto* approx = app.add_subcommand(
      "approx-identity", "approximate-identity diagnostics per kernel family");
  approx
      ->add_option("--family", o.family,
                   "dirichlet | fejer | poisson | tailed")
      ->required();
  approx->add_option("--schedule", o.schedule,
                     "comma list of n (or r for poisson)");
  approx->add_option("--deltas", o.deltas,
                     "comma list of tail cutoffs (default 0.1,0.5,1.0)");
  add_common(approx, cfg);
  approx->callback([&] { rc = cmd_approx_identity(cfg, o); });

  auto* convolve = app.add_subcommand("convolve", "convolution f * g");
  convolve->add_option("--f", o.fn, "left factor spec")->required();
  convolve->add_option("--g", o.g, "right factor spec")->required();
  convolve->add_flag("--cross-check", o.cross_check,
                     "compare spectral and direct paths");
  add_common(convolve, cfg);
  convolve->callback([&] { rc = cmd_convolve(cfg, o); });

  auto* summability = app.add_subcommand(
      "summability", "Cesaro/Abel/raw convergence error per schedule entry");
  summability->add_option("--fn", o.fn, "function spec")->required();
  summability->add_option("--method", o.method, "cesaro | abel | raw")
      ->capture_default_str();
  summability->add_option("--norm", o.norm, "sup | lp | pointwise")
      ->capture_default_str();
  summability->add_option("--p", o.p, "exponent for lp mode")
      ->capture_default_str();
  summability->add_option("--x", o.x, "point for pointwise mode")
      ->capture_default_str();
  summability->add_option("--limit", o.limit, "pointwise reference value");
  summability->add_option("--schedule", o.schedule,
                          "comma list of n (or r for abel)");
  add_common(summability, cfg);
  summability->callback([&] {
    o.has_limit = summability->count("--limit") > 0;
    rc = cmd_summability(cfg, o);
  });

  auto* wiener = app.add_subcommand(
      "wiener", "Wiener continuity test on Fourier-Stieltjes coefficients");
  wiener->add_option("--mu", o.mu, "measure spec")->required();
  wiener->add_option("--schedule", o.schedule,
                     "comma list of window sizes (default 64..1024 dyadic)");
  add_common(wiener, cfg);
  wiener->callback([&] { rc = cmd_wiener(cfg, o); });

  auto* herglotz = app.add_subcommand(
      "herglotz", "positive-definiteness check and Fejer reconstruction");
  herglotz
      ->add_option("--u", o.u, "sequence spec: ones | geometric:r | cos:alpha")
      ->required();
  herglotz->add_option("--N", o.order, "Toeplitz/reconstruction order")
      ->capture_default_str();
  add_common(herglotz, cfg);
  herglotz->callback([&] { rc = cmd_herglotz(cfg, o); });

  auto* pext = app.add_subcommand("poisson-extend",
                                  "harmonic extension probe A_r per r");
  pext->add_option("--mu", o.mu, "measure spec")->required();
  pext->add_option("--r-schedule", o.schedule,
                   "comma list of radii (default 0.5,0.9,0.99,0.999)");
  add_common(pext, cfg);
  pext->callback([&] { rc = cmd_poisson_extend(cfg, o); });

  auto* hy = app.add_subcommand("hy-check",
                                "Hausdorff-Young ratio ||f_hat||_q / ||f||_p");
  hy->add_option("--fn", o.fn, "function spec")->required();
  hy->add_option("--p", o.p, "exponent in [1,2]")->capture_default_str();
  hy->add_flag("--forbid-range", o.forbid_range,
               "probe the reversed inequality for p > 2");
  add_common(hy, cfg);
  hy->callback([&] { rc = cmd_hy_check(cfg, o); });

  auto* dual = app.add_subcommand(
      "dual-synth", "synthesize f from an l^p coefficient sequence");
  dual->add_option("--c", o.c, "coefficients: delta | zeta:K | power:s,K")
      ->required();
  dual->add_option("--p", o.p, "exponent in (1,2]")->capture_default_str();
  add_common(dual, cfg);
  dual->callback([&] { rc = cmd_dual_synth(cfg, o); });

  auto* minkowski = app.add_subcommand(
      "minkowski", "first nonzero lattice point in a symmetric convex body");
  minkowski
      ->add_option("--body", o.body,
                   "ellipse:a,b | rect:w,h | square:s | "
                   "parallelogram:p,q,s,t | vertices .json file")
      ->required();
  minkowski->add_flag("--closed", o.closed, "include the boundary");
  minkowski->add_option("--radius-bound", o.radius_bound,
                        "largest shell searched")
      ->capture_default_str();
  add_common(minkowski, cfg);
  minkowski->callback([&] { rc = cmd_minkowski(cfg, o); });

  auto* dioph = app.add_subcommand(
      "dioph", "continued-fraction approximations |a - n/m| <= 1/m^2");
  dioph->add_option("--alpha", o.alpha, "float | pi | e | sqrt2")->required();
  dioph->add_option("--count", o.count, "number of pairs")
      ->capture_default_str();
  add_common(dioph, cfg);
  dioph->callback([&] { rc = cmd_dioph(cfg, o); });

  auto* pgram = app.add_subcommand(
      "parallelogram", "lattice point with |am+bn| <= k and |cm+dn| <= 1/k");
  pgram->add_option("--a", o.pa, "form coefficient a")->required();
  pgram->add_option("--b", o.pb, "form coefficient b")->required();
  pgram->add_option("--c", o.pc, "form coefficient c")->required();
  pgram->add_option("--d", o.pd, "form coefficient d")->required();
  pgram->add_option("--k", o.pk, "threshold k > 0")->required();
  pgram->add_option("--radius-bound", o.pgram_radius,
                    "largest shell searched (0: derive from the body)")
      ->capture_default_str();
  add_common(pgram, cfg);
  pgram->callback([&] { rc = cmd_parallelogram(cfg, o); });

  auto* lpowers = app.add_subcommand(
      "l1-powers", "two-sided power-norm sweep of an l^1 sequence");
  lpowers->add_option("--mu", o.mu, "sequence spec")->required();
  lpowers->add_option("--n-max", o.sweep_n_max, "largest |n|")
      ->capture_default_str();
  lpowers->add_option("--K", o.K, "boundedness hypothesis")
      ->capture_default_str();
  add_common(lpowers, cfg);
  lpowers->callback([&] { rc = cmd_l1_powers(cfg, o); });

  auto* linverse = app.add_subcommand(
      "l1-inverse", "Wiener inverse of a nowhere-vanishing symbol");
  linverse->add_option("--mu", o.mu, "sequence spec")->required();
  linverse->add_option("--N", o.inv_half_width, "truncation half-width")
      ->capture_default_str();
  add_common(linverse, cfg);
  linverse->callback([&] { rc = cmd_l1_inverse(cfg, o); });

  auto* accept = app.add_subcommand("acceptance", "run acceptance criteria");
  accept->add_option("--suite", o.suite, "all | criterion index 1..13")
      ->capture_default_str();
  add_common(accept, cfg);
  accept->callback([&] { rc = cmd_acceptance(cfg, o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return 1;
  } catch (const SearchExhausted& e) {
    std::cerr << "search exhausted: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace torus::cli
