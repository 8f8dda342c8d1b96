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

#include "torus/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "torus/kernels.hpp"

namespace torus {

namespace {

using nlohmann::json;

cplx cplx_from(const json& j, const char* re_key = "re",
               const char* im_key = "im") {
  return {j.value(re_key, 0.0), j.value(im_key, 0.0)};
}

cplx cplx_from_pair(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json pair_from_cplx(const cplx& z) { return json::array({z.real(), z.imag()}); }

// "name:payload" split; no colon leaves payload empty.
std::pair<std::string, std::string> split_head(const std::string& s) {
  const auto pos = s.find(':');
  if (pos == std::string::npos) return {s, ""};
  return {s.substr(0, pos), s.substr(pos + 1)};
}

std::vector<double> parse_reals(const std::string& s) {
  std::vector<double> out;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw std::invalid_argument("empty numeric field");
    std::size_t used = 0;
    out.push_back(std::stod(token, &used));
    if (used != token.size())
      throw std::invalid_argument("trailing characters in numeric field");
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  return json::parse(in);
}

bool looks_like_path(const std::string& s) {
  return s.size() > 5 && s.substr(s.size() - 5) == ".json";
}

}  // namespace

TorusFunction function_from_json(const json& j) {
  const std::string kind = j.value("kind", "");
  if (kind == "trig_poly") {
    std::vector<std::pair<int, cplx>> terms;
    for (const auto& t : j.at("coeffs"))
      terms.emplace_back(t.at("n").get<int>(), cplx_from(t));
    return TorusFunction::trig_polynomial(std::move(terms));
  }
  if (kind == "piecewise") {
    std::vector<std::tuple<double, double, cplx>> pieces;
    for (const auto& p : j.at("pieces"))
      pieces.emplace_back(p.at("from").get<double>(), p.at("to").get<double>(),
                          cplx_from(p));
    return TorusFunction::piecewise(pieces);
  }
  if (kind == "named") {
    return TorusFunction::named(j.at("name").get<std::string>(),
                                j.at("params").at("r").get<double>());
  }
  if (kind == "samples") {
    const TorusGrid grid(j.at("grid_size").get<int>());
    std::vector<cplx> samples;
    for (const auto& v : j.at("values")) samples.push_back(cplx_from_pair(v));
    return TorusFunction::sampled(grid, std::move(samples));
  }
  throw std::invalid_argument("function spec: unknown kind '" + kind + "'");
}

json function_to_json(const TorusFunction& f) {
  json j;
  if (auto* tp = f.as<TorusFunction::TrigPolynomial>()) {
    j["kind"] = "trig_poly";
    j["coeffs"] = json::array();
    for (const auto& [n, c] : tp->terms)
      j["coeffs"].push_back({{"n", n}, {"re", c.real()}, {"im", c.imag()}});
    return j;
  }
  if (auto* pc = f.as<TorusFunction::PiecewiseConstant>()) {
    j["kind"] = "piecewise";
    j["pieces"] = json::array();
    for (std::size_t i = 0; i < pc->breaks.size(); ++i) {
      const double hi = (i + 1 < pc->breaks.size()) ? pc->breaks[i + 1] : pi;
      j["pieces"].push_back({{"from", pc->breaks[i]},
                             {"to", hi},
                             {"re", pc->values[i].real()},
                             {"im", pc->values[i].imag()}});
    }
    return j;
  }
  if (auto* nf = f.as<TorusFunction::NamedClosedForm>()) {
    j["kind"] = "named";
    j["name"] = nf->name;
    j["params"] = {{"r", nf->r}};
    return j;
  }
  auto* sg = f.as<TorusFunction::SampledGrid>();
  j["kind"] = "samples";
  j["grid_size"] = sg->grid.size();
  j["values"] = json::array();
  for (const cplx& z : sg->samples) j["values"].push_back(pair_from_cplx(z));
  return j;
}

TorusMeasure measure_from_json(const json& j) {
  std::vector<TorusMeasure::Atom> atoms;
  if (j.contains("atoms"))
    for (const auto& a : j.at("atoms"))
      atoms.push_back({a.at("theta").get<double>(), cplx_from(a)});
  std::optional<TorusFunction> density;
  if (j.contains("density") && !j.at("density").is_null())
    density = function_from_json(j.at("density"));
  return TorusMeasure(std::move(atoms), std::move(density));
}

json measure_to_json(const TorusMeasure& mu) {
  json j;
  j["atoms"] = json::array();
  for (const auto& a : mu.atoms())
    j["atoms"].push_back(
        {{"theta", a.angle}, {"re", a.mass.real()}, {"im", a.mass.imag()}});
  j["density"] = mu.density() ? function_to_json(*mu.density()) : json(nullptr);
  return j;
}

L1Sequence sequence_from_json(const json& j) {
  std::vector<cplx> values;
  for (const auto& v : j.at("values")) values.push_back(cplx_from_pair(v));
  return L1Sequence::from_window(j.at("lo").get<int>(), std::move(values));
}

json sequence_to_json(const L1Sequence& s) {
  json j;
  j["lo"] = s.lo();
  j["values"] = json::array();
  for (const cplx& z : s.values()) j["values"].push_back(pair_from_cplx(z));
  return j;
}

CoefficientSequence coefficients_from_json(const json& j) {
  const int hw = j.at("half_width").get<int>();
  std::vector<cplx> values;
  for (const auto& v : j.at("values")) values.push_back(cplx_from_pair(v));
  return CoefficientSequence(hw, std::move(values));
}

json coefficients_to_json(const CoefficientSequence& c) {
  json j;
  j["half_width"] = c.half_width();
  j["values"] = json::array();
  for (const cplx& z : c.values()) j["values"].push_back(pair_from_cplx(z));
  return j;
}

TorusFunction resolve_function(const std::string& spec) {
  if (looks_like_path(spec)) return function_from_json(load_json_file(spec));
  const auto [head, payload] = split_head(spec);
  if (head == "sign") return TorusFunction::sign_function();
  if (head == "zero") return TorusFunction::constant(cplx(0.0, 0.0));
  if (head == "hy-witness")
    // 1 + e^{ix}: the standard probe for the reversed inequality at p > 2.
    return TorusFunction::trig_polynomial({{0, 1.0}, {1, 1.0}});
  if (head == "const") {
    const auto v = parse_reals(payload);
    if (v.empty() || v.size() > 2)
      throw std::invalid_argument("const: expected re[,im]");
    return TorusFunction::constant({v[0], v.size() > 1 ? v[1] : 0.0});
  }
  if (head == "char") {
    const auto v = parse_reals(payload);
    if (v.size() != 1) throw std::invalid_argument("char: expected n");
    return TorusFunction::character(static_cast<int>(v[0]));
  }
  if (head == "indicator") {
    const auto v = parse_reals(payload);
    if (v.size() != 2) throw std::invalid_argument("indicator: expected a,b");
    return TorusFunction::indicator(v[0], v[1]);
  }
  if (head == "geometric") {
    const auto v = parse_reals(payload);
    if (v.size() != 1) throw std::invalid_argument("geometric: expected r");
    return TorusFunction::named("geometric_pole", v[0]);
  }
  if (head == "poisson") {
    const auto v = parse_reals(payload);
    if (v.size() != 1) throw std::invalid_argument("poisson: expected r");
    return TorusFunction::named("poisson", v[0]);
  }
  if (head == "fejer") {
    const auto v = parse_reals(payload);
    if (v.size() != 1) throw std::invalid_argument("fejer: expected n");
    return kernel_function(KernelSpec::fejer(static_cast<int>(v[0])));
  }
  if (head == "dirichlet") {
    const auto v = parse_reals(payload);
    if (v.size() != 1) throw std::invalid_argument("dirichlet: expected n");
    return kernel_function(KernelSpec::dirichlet(static_cast<int>(v[0])));
  }
  throw std::invalid_argument("unknown function spec: " + spec);
}

TorusMeasure resolve_measure(const std::string& spec) {
  if (looks_like_path(spec)) return measure_from_json(load_json_file(spec));
  const auto [head, payload] = split_head(spec);
  if (head == "delta") {
    double theta = 0.0;
    cplx mass(1.0, 0.0);
    if (!payload.empty()) {
      const auto v = parse_reals(payload);
      if (v.empty() || v.size() > 3)
        throw std::invalid_argument("delta: expected theta[,re[,im]]");
      theta = v[0];
      if (v.size() > 1) mass = {v[1], v.size() > 2 ? v[2] : 0.0};
    }
    return TorusMeasure::point_mass(theta, mass);
  }
  if (head == "two-atom")
    return TorusMeasure({{0.0, cplx(0.5, 0.0)}, {-pi, cplx(0.25, 0.0)}}, {});
  if (head == "dipole")
    return TorusMeasure({{0.0, cplx(0.5, 0.0)}, {-pi, cplx(-0.5, 0.0)}}, {});
  if (head == "poisson-density") {
    const double r = payload.empty() ? 0.5 : parse_reals(payload).at(0);
    return TorusMeasure::from_density(TorusFunction::named("poisson", r));
  }
  if (head == "mixed") {
    // mixed = 0.5 delta_0 + 0.5 P_r dsigma.  The scaled density is spelled
    // out as a trig polynomial because the named form carries no amplitude;
    // r^k drops below double resolution past k ~ 17/log10(1/r).
    const double r = payload.empty() ? 0.5 : parse_reals(payload).at(0);
    const int w = static_cast<int>(
        std::ceil(-17.0 * std::log(10.0) / std::log(std::max(r, 1e-12))));
    std::vector<std::pair<int, cplx>> terms;
    for (int k = -w; k <= w; ++k)
      terms.emplace_back(k, cplx(0.5 * std::pow(r, std::abs(k)), 0.0));
    return TorusMeasure({{0.0, cplx(0.5, 0.0)}},
                        TorusFunction::trig_polynomial(std::move(terms)));
  }
  throw std::invalid_argument("unknown measure spec: " + spec);
}

L1Sequence resolve_sequence(const std::string& spec) {
  if (looks_like_path(spec)) return sequence_from_json(load_json_file(spec));
  const auto [head, payload] = split_head(spec);
  if (head == "delta") return L1Sequence::delta();
  if (head == "basis") {
    const auto v = parse_reals(payload);
    if (v.size() != 1) throw std::invalid_argument("basis: expected n");
    return L1Sequence::basis(static_cast<int>(v[0]));
  }
  if (head == "atom") {
    const auto v = parse_reals(payload);
    if (v.size() != 3) throw std::invalid_argument("atom: expected p,re,im");
    return L1Sequence::from_window(static_cast<int>(v[0]), {{v[1], v[2]}});
  }
  if (head == "binom")
    return L1Sequence::from_window(0, {cplx(0.5, 0.0), cplx(0.5, 0.0)});
  if (head == "two-one")
    return L1Sequence::from_window(0, {cplx(2.0, 0.0), cplx(1.0, 0.0)});
  if (head == "pair") {
    const auto v = parse_reals(payload);
    if (v.size() != 2) throw std::invalid_argument("pair: expected a0,a1");
    return L1Sequence::from_window(0, {cplx(v[0], 0.0), cplx(v[1], 0.0)});
  }
  if (head == "seq") {
    const auto [lo_str, body] = split_head(payload);
    if (body.empty()) throw std::invalid_argument("seq: expected lo:re,im;...");
    const int lo = static_cast<int>(parse_reals(lo_str).at(0));
    std::vector<cplx> values;
    std::string group;
    std::istringstream in(body);
    while (std::getline(in, group, ';')) {
      const auto v = parse_reals(group);
      if (v.empty() || v.size() > 2)
        throw std::invalid_argument("seq: each group is re[,im]");
      values.emplace_back(v[0], v.size() > 1 ? v[1] : 0.0);
    }
    return L1Sequence::from_window(lo, std::move(values));
  }
  throw std::invalid_argument("unknown sequence spec: " + spec);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    const std::string& f = fields[i];
    const bool quote = f.find_first_of(",\"\r\n") != std::string::npos;
    if (!quote) {
      out_ << f;
      continue;
    }
    out_ << '"';
    for (char ch : f) {
      if (ch == '"') out_ << '"';
      out_ << ch;
    }
    out_ << '"';
  }
  out_ << "\r\n";
}

}  // namespace torus
