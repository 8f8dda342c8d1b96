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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "torus/core.hpp"
#include "torus/l1algebra.hpp"

namespace torus {

// Function specs:
//   {"kind":"trig_poly","coeffs":[{"n":-1,"re":0.0,"im":0.5}, ...]}
//   {"kind":"piecewise","pieces":[{"from":-pi,"to":0.0,"re":-1.0,"im":0.0},..]}
//   {"kind":"named","name":"geometric_pole","params":{"r":0.5}}
//   {"kind":"samples","grid_size":1024,"values":[[re,im], ...]}
TorusFunction function_from_json(const nlohmann::json& j);
nlohmann::json function_to_json(const TorusFunction& f);

// {"atoms":[{"theta":0.0,"re":0.5,"im":0.0},...],"density":<spec or null>}
TorusMeasure measure_from_json(const nlohmann::json& j);
nlohmann::json measure_to_json(const TorusMeasure& mu);

// {"lo":-2,"values":[[re,im],...]}
L1Sequence sequence_from_json(const nlohmann::json& j);
nlohmann::json sequence_to_json(const L1Sequence& s);

// {"half_width":N,"values":[[re,im],...]} ordered n = -N..N.
CoefficientSequence coefficients_from_json(const nlohmann::json& j);
nlohmann::json coefficients_to_json(const CoefficientSequence& c);

// Named shortcuts so common inputs need no fixture files. Accepts a path to
// a JSON spec (anything ending in .json) or one of:
//   sign | zero | hy-witness | const:re[,im] | char:n | indicator:a,b |
//   geometric:r | poisson:r | fejer:n | dirichlet:n
TorusFunction resolve_function(const std::string& spec);

// File path or: delta[:theta[,re[,im]]] | two-atom | dipole |
// poisson-density[:r] | mixed[:r]
TorusMeasure resolve_measure(const std::string& spec);

// File path or: delta | basis:n | atom:p,re,im | binom | two-one |
// pair:a0,a1 | seq:lo:re,im;re,im;...
L1Sequence resolve_sequence(const std::string& spec);

// Fixed-width scientific form, 17 significant digits.
std::string format_double(double v);

// RFC 4180: CRLF line endings, fields quoted only when needed.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

}  // namespace torus
