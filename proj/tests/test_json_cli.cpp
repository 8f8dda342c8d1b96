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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "torus/cli.hpp"
#include "torus/json_io.hpp"

using namespace torus;
namespace fs = std::filesystem;

namespace {

int run_cli(std::initializer_list<std::string> args) {
  std::vector<std::string> owned{"torus-harmonics"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : owned) argv.push_back(s.c_str());
  return cli::run(static_cast<int>(argv.size()), argv.data());
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("torus_test_" + name);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json load(const fs::path& p) {
  return nlohmann::json::parse(slurp(p));
}

}  // namespace

TEST_CASE("function specs round-trip through json") {
  const auto poly = TorusFunction::trig_polynomial(
      {{-2, cplx(0.5, -1)}, {3, cplx(0, 2)}});
  const auto back = function_from_json(function_to_json(poly));
  CHECK(std::abs(evaluate(back, 0.9) - evaluate(poly, 0.9)) <= 1e-15);

  const auto pw = TorusFunction::sign_function();
  const auto pwb = function_from_json(function_to_json(pw));
  CHECK(evaluate(pwb, -0.5) == cplx(-1, 0));
  CHECK(evaluate(pwb, 0.5) == cplx(1, 0));

  const auto named = TorusFunction::named("poisson", 0.25);
  const auto nb = function_from_json(function_to_json(named));
  CHECK(std::abs(evaluate(nb, 1.0) - evaluate(named, 1.0)) <= 1e-15);

  const TorusGrid grid(8);
  const auto samp = TorusFunction::sampled(
      grid, {cplx(1, 0), cplx(2, 0), cplx(3, 0), cplx(4, 0), cplx(5, 0),
             cplx(6, 0), cplx(7, 0), cplx(8, 0)});
  const auto sb = function_from_json(function_to_json(samp));
  CHECK(evaluate(sb, grid.node(3)) == cplx(4, 0));

  CHECK_THROWS(function_from_json(nlohmann::json{{"kind", "unknown"}}));
}

TEST_CASE("measure and sequence specs round-trip through json") {
  const TorusMeasure mu({{0.5, cplx(1, -0.5)}},
                        TorusFunction::named("poisson", 0.5));
  const auto back = measure_from_json(measure_to_json(mu));
  REQUIRE(back.atoms().size() == 1);
  CHECK(std::abs(back.atoms()[0].mass - cplx(1, -0.5)) <= 1e-15);
  CHECK(back.density().has_value());

  const auto seq = L1Sequence::from_window(-2, {cplx(1, 2), cplx(0, 0),
                                                cplx(3, -4)});
  const auto sb = sequence_from_json(sequence_to_json(seq));
  CHECK(sb.lo() == -2);
  CHECK(sb.at(0) == cplx(3, -4));

  CoefficientSequence c(1, {cplx(1, 0), cplx(2, 0), cplx(3, 0)});
  const auto cb = coefficients_from_json(coefficients_to_json(c));
  CHECK(cb.half_width() == 1);
  CHECK(cb.at(-1) == cplx(1, 0));
  CHECK(cb.at(1) == cplx(3, 0));
}

TEST_CASE("string specs resolve to the advertised objects") {
  CHECK(evaluate(resolve_function("sign"), 0.5) == cplx(1, 0));
  CHECK(evaluate(resolve_function("zero"), 0.5) == cplx(0, 0));
  CHECK(std::abs(evaluate(resolve_function("const:2,1"), 0.3) - cplx(2, 1)) <=
        1e-15);
  CHECK(std::abs(evaluate(resolve_function("char:3"), 0.5) -
                 std::polar(1.0, 1.5)) <= 1e-15);
  CHECK(evaluate(resolve_function("indicator:0,1.5"), 1.0) == cplx(1, 0));
  CHECK(std::abs(evaluate(resolve_function("hy-witness"), 0.0) - cplx(2, 0)) <=
        1e-15);
  // fejer:n resolves to the same trig polynomial as the kernel.
  CHECK(std::abs(evaluate(resolve_function("fejer:4"), 0.0) - cplx(4, 0)) <=
        1e-12);
  CHECK_THROWS_AS(resolve_function("no-such-function"), std::invalid_argument);

  const auto two = resolve_measure("two-atom");
  REQUIRE(two.atoms().size() == 2);
  const auto dip = resolve_measure("dipole");
  CHECK(std::abs(dip.atoms()[0].mass + dip.atoms()[1].mass) <= 1e-15);
  const auto pd = resolve_measure("poisson-density:0.5");
  CHECK(pd.atoms().empty());
  CHECK(pd.density().has_value());
  const auto mixed = resolve_measure("mixed:0.5");
  CHECK(!mixed.atoms().empty());
  CHECK(mixed.density().has_value());
  CHECK_THROWS_AS(resolve_measure("no-such-measure"), std::invalid_argument);

  CHECK(resolve_sequence("delta").at(0) == cplx(1, 0));
  CHECK(resolve_sequence("basis:-3").at(-3) == cplx(1, 0));
  CHECK(resolve_sequence("two-one").at(0) == cplx(2, 0));
  CHECK(resolve_sequence("pair:0.5,0.25").at(1) == cplx(0.25, 0));
  const auto sq = resolve_sequence("seq:-1:1,0;2,0;3,0");
  CHECK(sq.lo() == -1);
  CHECK(sq.at(1) == cplx(3, 0));
  CHECK_THROWS_AS(resolve_sequence("no-such-seq"), std::invalid_argument);
}

TEST_CASE("csv writer quotes per rfc 4180") {
  std::ostringstream out;
  CsvWriter w(out);
  w.row({"plain", "with,comma", "with\"quote", "multi\nline"});
  CHECK(out.str() ==
        "plain,\"with,comma\",\"with\"\"quote\",\"multi\nline\"\r\n");
  CHECK(format_double(0.5) == "5.0000000000000000e-01");
}

TEST_CASE("coeffs command emits the sign coefficients") {
  const auto out = temp_file("coeffs.json");
  const int rc = run_cli({"coeffs", "--fn", "sign", "--N", "1", "--output",
                          "json", "--out", out.string()});
  CHECK(rc == 0);
  const auto j = load(out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "coeffs");
  REQUIRE(j["rows"].size() == 3);
  // Row order n = -1, 0, 1; columns n, re, im.
  CHECK(j["rows"][2][0] == 1);
  CHECK(j["rows"][2][1].get<double>() == 0.0);
  CHECK(j["rows"][2][2].get<double>() ==
        doctest::Approx(-2.0 / pi).epsilon(1e-13));
  fs::remove(out);
}

TEST_CASE("csv output is deterministic with crlf endings") {
  const auto a = temp_file("det_a.csv");
  const auto b = temp_file("det_b.csv");
  for (const auto& p : {a, b}) {
    const int rc = run_cli({"coeffs", "--fn", "sign", "--N", "8", "--output",
                            "csv", "--seed", "7", "--out", p.string()});
    CHECK(rc == 0);
  }
  const auto ta = slurp(a);
  CHECK(ta == slurp(b));
  CHECK(ta.find("\r\n") != std::string::npos);
  CHECK(ta.rfind("n,re,im\r\n", 0) == 0);
  fs::remove(a);
  fs::remove(b);
}

TEST_CASE("wiener command reports the extrapolated atom mass") {
  const auto out = temp_file("wiener.json");
  const int rc = run_cli({"wiener", "--mu", "two-atom", "--schedule",
                          "256,1024", "--output", "json", "--out",
                          out.string()});
  CHECK(rc == 0);
  const auto j = load(out);
  CHECK(j["continuous"] == false);
  CHECK(j["atom_mass_sq"].get<double>() ==
        doctest::Approx(0.3125).epsilon(1e-12));
  CHECK(j["trend"][1].get<double>() ==
        doctest::Approx(0.3125 + 0.25 / 2049.0).epsilon(1e-13));
  fs::remove(out);
}

TEST_CASE("herglotz command flags non-psd input without failing") {
  const auto spec = temp_file("bad_u.json");
  {
    std::ofstream f(spec);
    f << R"({"half_width":1,"values":[[1.5,0.0],[1.0,0.0],[1.5,0.0]]})";
  }
  const auto out = temp_file("herglotz.json");
  const int rc = run_cli({"herglotz", "--u", spec.string(), "--N", "1",
                          "--output", "json", "--out", out.string()});
  CHECK(rc == 0);
  const auto j = load(out);
  CHECK(j["psd"] == false);
  CHECK(j["min_eigenvalue"].get<double>() ==
        doctest::Approx(-0.5).epsilon(1e-12));

  const int rc2 = run_cli({"herglotz", "--u", "geometric:0.9", "--N", "16",
                           "--output", "json", "--out", out.string()});
  CHECK(rc2 == 0);
  const auto k = load(out);
  CHECK(k["psd"] == true);
  CHECK(k["mass"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  fs::remove(spec);
  fs::remove(out);
}

TEST_CASE("dioph command lists the pi convergents") {
  const auto out = temp_file("dioph.json");
  const int rc = run_cli({"dioph", "--alpha", "pi", "--count", "3", "--output",
                          "json", "--out", out.string()});
  CHECK(rc == 0);
  const auto j = load(out);
  CHECK(j["exact_hit"] == false);
  REQUIRE(j["pairs"].size() == 3);
  CHECK(j["pairs"][0][0] == 7);
  CHECK(j["pairs"][0][1] == 22);
  CHECK(j["pairs"][2][0] == 113);
  CHECK(j["pairs"][2][1] == 355);
  fs::remove(out);
}

TEST_CASE("minkowski command searches rectangles given full side lengths") {
  const auto out = temp_file("mink.json");
  const int rc = run_cli({"minkowski", "--body", "rect:1,6", "--output",
                          "json", "--out", out.string()});
  CHECK(rc == 0);
  const auto j = load(out);
  CHECK(j["found"] == true);
  CHECK(j["m"] == 0);
  CHECK(j["n"] == 1);
  CHECK(j["area"].get<double>() == doctest::Approx(6.0));
  CHECK(j["area_exact"] == true);

  // Open unit square: no point; closed: boundary hit.
  const int rc2 = run_cli({"minkowski", "--body", "square:2", "--output",
                           "json", "--out", out.string()});
  CHECK(rc2 == 0);
  CHECK(load(out)["found"] == false);
  const int rc3 = run_cli({"minkowski", "--body", "square:2", "--closed",
                           "--output", "json", "--out", out.string()});
  CHECK(rc3 == 0);
  const auto k = load(out);
  CHECK(k["found"] == true);
  CHECK(k["m"] == 1);
  CHECK(k["n"] == 0);
  fs::remove(out);
}

TEST_CASE("hy-check reversed probe reports the witness ratio") {
  const auto out = temp_file("hy.json");
  const int rc = run_cli({"hy-check", "--fn", "hy-witness", "--p", "4",
                          "--forbid-range", "--output", "json", "--out",
                          out.string()});
  CHECK(rc == 0);
  const auto j = load(out);
  CHECK(j["reversed_probe"] == true);
  CHECK(j["bound_holds"] == false);
  CHECK(j["rows"][0][4].get<double>() > 1.07);
  fs::remove(out);
}

TEST_CASE("l1-inverse exit codes separate failure modes") {
  const auto out = temp_file("linv.json");
  // Invertible symbol, wide enough window: success.
  const int ok = run_cli({"l1-inverse", "--mu", "two-one", "--N", "64",
                          "--output", "json", "--out", out.string()});
  CHECK(ok == 0);
  const auto j = load(out);
  CHECK(j["residual"].get<double>() <= 1e-10);
  CHECK(j["nu"]["lo"] == -64);

  // Same symbol, unreachable tolerance: contract violation, exit 1.
  CHECK(run_cli({"l1-inverse", "--mu", "two-one", "--N", "2", "--tol", "1e-30",
                 "--out", out.string()}) == 1);

  // Vanishing symbol: rejected input, exit 2.
  CHECK(run_cli({"l1-inverse", "--mu", "pair:1,1", "--N", "64", "--out",
                 out.string()}) == 2);
  fs::remove(out);
}

TEST_CASE("summability rejects sup mode across a jump with exit 2") {
  const auto out = temp_file("summ.json");
  CHECK(run_cli({"summability", "--fn", "sign", "--method", "raw", "--norm",
                 "sup", "--schedule", "4", "--out", out.string()}) == 2);
  const int ok = run_cli({"summability", "--fn", "sign", "--method", "abel",
                          "--norm", "pointwise", "--x", "1.5707963267948966",
                          "--limit", "1", "--schedule", "0.5,0.99", "--output",
                          "json", "--out", out.string()});
  CHECK(ok == 0);
  const auto j = load(out);
  // |P_r * sign(pi/2) - 1| = 1 - (4/pi) atan(r).
  CHECK(j["rows"][1][1].get<double>() ==
        doctest::Approx(1.0 - 4.0 / pi * std::atan(0.99)).epsilon(1e-10));
  fs::remove(out);
}

TEST_CASE("parse failures and help exit distinctly") {
  CHECK(run_cli({"no-such-command"}) == 2);
  CHECK(run_cli({"coeffs"}) == 2);  // missing required --fn
  CHECK(run_cli({"coeffs", "--fn", "sign", "--output", "yaml"}) == 2);
  CHECK(run_cli({"--help"}) == 0);
}

TEST_CASE("acceptance subcommand runs a single criterion") {
  const auto out = temp_file("acc.txt");
  const int rc = run_cli({"acceptance", "--suite", "2", "--out",
                          out.string()});
  CHECK(rc == 0);
  const auto text = slurp(out);
  CHECK(text.find("PASS 2") != std::string::npos);
  CHECK(text.find("acceptance: 1/1 criteria passed") != std::string::npos);
  CHECK(run_cli({"acceptance", "--suite", "99", "--out", out.string()}) == 2);
  fs::remove(out);
}

TEST_CASE("table commands emit the advertised shapes") {
  const auto out = temp_file("tables.json");

  // kernel-table honors --points.
  CHECK(run_cli({"kernel-table", "--kernel", "fejer:8", "--points", "16",
                 "--output", "json", "--out", out.string()}) == 0);
  auto j = load(out);
  CHECK(j["rows"].size() == 16);
  CHECK(j["kernel"] == "fejer(8)");

  // partial-sums reports S_0..S_N at the probe point.
  CHECK(run_cli({"partial-sums", "--fn", "sign", "--N", "4", "--x", "0.5",
                 "--output", "json", "--out", out.string()}) == 0);
  j = load(out);
  CHECK(j["rows"].size() == 5);
  CHECK(j["x"].get<double>() == doctest::Approx(0.5));

  // lebesgue walks dyadic orders up to --n-max.
  CHECK(run_cli({"lebesgue", "--n-max", "8", "--output", "json", "--out",
                 out.string()}) == 0);
  j = load(out);
  REQUIRE(j["rows"].size() == 4);  // 1, 2, 4, 8
  CHECK(j["rows"][0][1].get<double>() ==
        doctest::Approx(1.4359911241769172).epsilon(1e-12));

  // approx-identity: one row per schedule entry, one tail per delta.
  CHECK(run_cli({"approx-identity", "--family", "fejer", "--schedule", "8,64",
                 "--deltas", "0.5,1.0", "--output", "json", "--out",
                 out.string()}) == 0);
  j = load(out);
  CHECK(j["rows"].size() == 2);
  CHECK(j["columns"].size() == 6);  // param, violation, defect, l1, 2 tails

  // poisson-extend: positive atoms keep A_r at the total mass.
  CHECK(run_cli({"poisson-extend", "--mu", "two-atom", "--r-schedule",
                 "0.5,0.9", "--output", "json", "--out", out.string()}) == 0);
  j = load(out);
  for (const auto& row : j["rows"])
    CHECK(row[1].get<double>() == doctest::Approx(0.75).epsilon(1e-6));
  fs::remove(out);
}

TEST_CASE("dual-synth and parallelogram report their bounds") {
  const auto out = temp_file("dual.json");
  CHECK(run_cli({"dual-synth", "--c", "zeta:8", "--p", "1.5", "--output",
                 "json", "--out", out.string()}) == 0);
  auto j = load(out);
  CHECK(j["bound_holds"] == true);
  CHECK(j["recovery_error"].get<double>() <= 1e-10);
  CHECK(j["f_norm_q"].get<double>() <= j["coeff_norm_p"].get<double>() + 1e-9);

  CHECK(run_cli({"parallelogram", "--a", "1", "--b",
                 "1.4142135623730951", "--c", "0", "--d", "1", "--k", "0.25",
                 "--output", "json", "--out", out.string()}) == 0);
  j = load(out);
  CHECK(j["m"] == -3);
  CHECK(j["n"] == 2);
  CHECK(j["form1"].get<double>() <= j["bound1"].get<double>());
  CHECK(j["form2"].get<double>() <= j["bound2"].get<double>());
  fs::remove(out);
}

TEST_CASE("l1-powers characterizes a unimodular atom") {
  const auto out = temp_file("lpowers.json");
  CHECK(run_cli({"l1-powers", "--mu", "atom:3,0,1", "--n-max", "4", "--K",
                 "2", "--output", "json", "--out", out.string()}) == 0);
  const auto j = load(out);
  CHECK(j["verdict"] == "characterized");
  CHECK(j["p"] == 3);
  CHECK(j["w"][1].get<double>() == doctest::Approx(1.0));
  CHECK(j["first_exceedance"] == 0);
  fs::remove(out);
}

TEST_CASE("convolve cross check stays small on band-limited factors") {
  const auto out = temp_file("conv.json");
  const int rc = run_cli({"convolve", "--f", "fejer:6", "--g", "dirichlet:4",
                          "--cross-check", "--output", "json", "--out",
                          out.string()});
  CHECK(rc == 0);
  const auto j = load(out);
  CHECK(j["cross_checked"] == true);
  CHECK(j["cross_check_deviation"].get<double>() <= 1e-9);
  CHECK(j["path"] == "coefficient_multiplication");
  fs::remove(out);
}
