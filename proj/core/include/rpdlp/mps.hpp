// Copyright 2026 The rpdlp authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RPDLP_MPS_HPP_
#define RPDLP_MPS_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rpdlp/lp_problem.hpp"

namespace rpdlp {

class MpsParseError : public std::runtime_error {
 public:
  MpsParseError(int line, const std::string& message)
      : std::runtime_error("mps parse error at line " + std::to_string(line) +
                           ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct MpsOptions {
  // When set, data fields are read from the fixed column positions of the
  // original MPS layout instead of whitespace tokenization.
  bool fixed_format = false;
};

// Normalizations applied while reading:
//  - E rows go to A/b, G rows to G/h, L rows are negated into G/h;
//  - a RANGES entry turns its row into two G rows (lb side, then -ub side);
//  - secondary N rows are dropped; MARKER integrality is discarded;
//  - OBJSENSE MAX negates c and the offset and sets negated_objective;
//  - the RHS entry on the objective row becomes objective_offset = -value.
LpProblem ParseMps(std::istream& in, const MpsOptions& options = {});
LpProblem ParseMpsString(const std::string& text, const MpsOptions& = {});
// Accepts plain and gzip-compressed files, sniffed by a .gz extension.
LpProblem ParseMpsFile(const std::string& path, const MpsOptions& = {});

void WriteMps(const LpProblem& problem, std::ostream& out);
void WriteMpsFile(const LpProblem& problem, const std::string& path);

}  // namespace rpdlp

#endif  // RPDLP_MPS_HPP_
