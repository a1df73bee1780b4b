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

#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "rpdlp/mps.hpp"

namespace rpdlp {
namespace {

enum class Section {
  kNone,
  kName,
  kObjsense,
  kRows,
  kColumns,
  kRhs,
  kRanges,
  kBounds,
  kEndata,
};

int SectionRank(Section s) {
  switch (s) {
    case Section::kNone:
    case Section::kName:
    case Section::kObjsense:
      return 0;
    case Section::kRows:
      return 1;
    case Section::kColumns:
      return 2;
    case Section::kRhs:
    case Section::kRanges:
    case Section::kBounds:
      return 3;
    case Section::kEndata:
      return 4;
  }
  return 0;
}

std::string Upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

std::string Trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> SplitWhitespace(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

// Fixed MPS field positions, 1-based: 2-3, 5-12, 15-22, 25-36, 40-47, 50-61.
std::vector<std::string> SplitFixed(const std::string& line) {
  static constexpr int kStarts[] = {1, 4, 14, 24, 39, 49};
  static constexpr int kEnds[] = {3, 12, 22, 36, 47, 61};
  std::vector<std::string> out;
  for (int f = 0; f < 6; ++f) {
    if (static_cast<size_t>(kStarts[f]) >= line.size()) break;
    std::string field = Trim(line.substr(
        kStarts[f], std::min<size_t>(kEnds[f], line.size()) - kStarts[f]));
    if (!field.empty()) out.push_back(field);
  }
  return out;
}

struct RowRecord {
  char type;  // 'E', 'G', 'L', or 'N' (secondary objective rows, dropped)
  std::string name;
  double rhs = 0.0;
  bool has_range = false;
  double range = 0.0;
  std::vector<Triplet> entries;  // row field unused; col = variable index
};

class Parser {
 public:
  explicit Parser(const MpsOptions& options) : options_(options) {}

  void ConsumeLine(const std::string& raw) {
    ++line_no_;
    if (raw.empty() || raw[0] == '*') return;
    const std::string trimmed = Trim(raw);
    if (trimmed.empty()) return;
    if (!std::isspace(static_cast<unsigned char>(raw[0]))) {
      StartSection(trimmed);
      return;
    }
    switch (section_) {
      case Section::kObjsense:
        HandleObjsenseToken(Upper(trimmed));
        break;
      case Section::kRows:
        HandleRowLine(SplitWhitespace(trimmed));
        break;
      case Section::kColumns:
        HandleColumnLine(Fields(raw));
        break;
      case Section::kRhs:
        HandleRhsLine(Fields(raw), /*is_range=*/false);
        break;
      case Section::kRanges:
        HandleRhsLine(Fields(raw), /*is_range=*/true);
        break;
      case Section::kBounds:
        HandleBoundLine(Fields(raw));
        break;
      case Section::kEndata:
        break;
      default:
        Fail("data line outside of any section");
    }
  }

  LpProblem Finish() {
    if (SectionRank(section_) < SectionRank(Section::kColumns)) {
      Fail("missing COLUMNS section");
    }
    if (n_vars_ == 0) Fail("no variables");
    return Assemble();
  }

 private:
  [[noreturn]] void Fail(const std::string& msg) const {
    throw MpsParseError(line_no_, msg);
  }

  std::vector<std::string> Fields(const std::string& raw) const {
    return options_.fixed_format ? SplitFixed(raw)
                                 : SplitWhitespace(Trim(raw));
  }

  void StartSection(const std::string& header) {
    std::vector<std::string> toks = SplitWhitespace(header);
    const std::string key = Upper(toks[0]);
    Section next;
    if (key == "NAME") {
      next = Section::kName;
      if (toks.size() > 1) name_ = toks[1];
    } else if (key == "OBJSENSE") {
      next = Section::kObjsense;
      if (toks.size() > 1) HandleObjsenseToken(Upper(toks[1]));
    } else if (key == "ROWS") {
      next = Section::kRows;
    } else if (key == "COLUMNS") {
      next = Section::kColumns;
    } else if (key == "RHS") {
      next = Section::kRhs;
    } else if (key == "RANGES") {
      next = Section::kRanges;
    } else if (key == "BOUNDS") {
      next = Section::kBounds;
    } else if (key == "ENDATA") {
      next = Section::kEndata;
    } else {
      Fail("unknown section '" + toks[0] + "'");
    }
    if (SectionRank(next) < SectionRank(section_)) {
      Fail("section " + key + " out of order");
    }
    if (next == Section::kRows && SectionRank(section_) >= 1) {
      Fail("duplicate ROWS section");
    }
    section_ = next;
  }

  void HandleObjsenseToken(const std::string& tok) {
    if (tok == "MAX" || tok == "MAXIMIZE") {
      maximize_ = true;
    } else if (tok == "MIN" || tok == "MINIMIZE") {
      maximize_ = false;
    } else {
      Fail("unknown OBJSENSE '" + tok + "'");
    }
  }

  void HandleRowLine(const std::vector<std::string>& toks) {
    if (toks.size() != 2) Fail("ROWS line needs a type and a name");
    const std::string type = Upper(toks[0]);
    const std::string& name = toks[1];
    if (row_index_.count(name)) Fail("duplicate row '" + name + "'");
    if (type == "N") {
      if (objective_row_.empty()) {
        objective_row_ = name;
        row_index_[name] = kObjectiveRow;
      } else {
        // Secondary free rows: remembered so references resolve, dropped.
        row_index_[name] = kFreeRow;
      }
      return;
    }
    if (type != "E" && type != "G" && type != "L") {
      Fail("unknown row type '" + toks[0] + "'");
    }
    row_index_[name] = static_cast<Index>(rows_.size());
    rows_.push_back({type[0], name, 0.0, false, 0.0, {}});
  }

  Index VarIndex(const std::string& name) {
    auto [it, inserted] = col_index_.try_emplace(name, n_vars_);
    if (inserted) {
      ++n_vars_;
      col_names_.push_back(name);
      obj_.push_back(0.0);
      lower_.push_back(0.0);
      upper_.push_back(kInf);
    }
    return it->second;
  }

  Index LookupRow(const std::string& name) {
    auto it = row_index_.find(name);
    if (it == row_index_.end()) Fail("unknown row '" + name + "'");
    return it->second;
  }

  void AddCoefficient(Index row, Index var, double value) {
    if (row == kFreeRow) return;
    if (row == kObjectiveRow) {
      obj_[var] += value;
    } else if (value != 0.0) {
      rows_[row].entries.push_back({0, var, value});
    }
  }

  void HandleColumnLine(const std::vector<std::string>& toks) {
    if (toks.size() >= 3 && toks[1] == "'MARKER'") {
      // INTORG/INTEND integrality markers: parsed, integrality discarded.
      return;
    }
    if (toks.size() < 3 || toks.size() % 2 == 0) {
      Fail("COLUMNS line needs a column name and (row, value) pairs");
    }
    const Index var = VarIndex(toks[0]);
    for (size_t i = 1; i + 1 < toks.size(); i += 2) {
      AddCoefficient(LookupRow(toks[i]), var, ParseValue(toks[i + 1]));
    }
  }

  void HandleRhsLine(std::vector<std::string> toks, bool is_range) {
    if (toks.empty()) Fail("empty data line");
    // The leading set name is optional in the wild; drop it unless the first
    // token resolves to a row.
    if (toks.size() % 2 == 1 && !row_index_.count(toks[0])) {
      toks.erase(toks.begin());
    }
    if (toks.empty() || toks.size() % 2 != 0) {
      Fail(is_range ? "malformed RANGES line" : "malformed RHS line");
    }
    for (size_t i = 0; i + 1 < toks.size(); i += 2) {
      const Index row = LookupRow(toks[i]);
      const double value = ParseValue(toks[i + 1]);
      if (row == kFreeRow) continue;
      if (row == kObjectiveRow) {
        if (is_range) Fail("RANGES entry on objective row");
        objective_rhs_ = value;
        continue;
      }
      if (is_range) {
        rows_[row].has_range = true;
        rows_[row].range = value;
      } else {
        rows_[row].rhs = value;
      }
    }
  }

  void HandleBoundLine(std::vector<std::string> toks) {
    if (toks.size() < 2) Fail("malformed BOUNDS line");
    const std::string type = Upper(toks[0]);
    const bool needs_value = type == "LO" || type == "UP" || type == "FX" ||
                             type == "LI" || type == "UI";
    const bool is_flag = type == "FR" || type == "MI" || type == "PL" ||
                         type == "BV";
    if (!needs_value && !is_flag) Fail("unknown bound type '" + toks[0] + "'");
    // Optional bound set name in field 2.
    const size_t expected = needs_value ? 3 : 2;
    if (toks.size() == expected + 1 && !col_index_.count(toks[1])) {
      toks.erase(toks.begin() + 1);
    }
    if (toks.size() != expected) Fail("malformed BOUNDS line");
    auto it = col_index_.find(toks[1]);
    if (it == col_index_.end()) Fail("unknown column '" + toks[1] + "'");
    const Index var = it->second;
    const double value = needs_value ? ParseValue(toks[2]) : 0.0;

    if (type == "LO" || type == "LI") {
      lower_[var] = value;
    } else if (type == "UP" || type == "UI") {
      upper_[var] = value;
    } else if (type == "FX") {
      lower_[var] = value;
      upper_[var] = value;
    } else if (type == "FR") {
      lower_[var] = -kInf;
      upper_[var] = kInf;
    } else if (type == "MI") {
      lower_[var] = -kInf;
    } else if (type == "PL") {
      upper_[var] = kInf;
    } else if (type == "BV") {
      lower_[var] = 0.0;
      upper_[var] = 1.0;
    }
    if (lower_[var] > upper_[var]) {
      Fail("conflicting bounds for column '" + toks[1] + "'");
    }
  }

  double ParseValue(const std::string& tok) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + tok.size()) Fail("bad numeric value '" + tok + "'");
    if (std::isnan(v)) Fail("NaN value");
    return v;
  }

  LpProblem Assemble() {
    std::vector<Triplet> eq, ineq;
    std::vector<double> b, h;
    for (const RowRecord& row : rows_) {
      if (!row.has_range) {
        if (row.type == 'E') {
          const Index r = static_cast<Index>(b.size());
          for (Triplet t : row.entries) eq.push_back({r, t.col, t.value});
          b.push_back(row.rhs);
        } else {
          const double sign = row.type == 'G' ? 1.0 : -1.0;
          const Index r = static_cast<Index>(h.size());
          for (Triplet t : row.entries) {
            ineq.push_back({r, t.col, sign * t.value});
          }
          h.push_back(sign * row.rhs);
        }
        continue;
      }
      // Ranged row: both sides of lb <= ax <= ub, realized as two G rows.
      double lb, ub;
      const double r = row.range;
      switch (row.type) {
        case 'G':
          lb = row.rhs;
          ub = row.rhs + std::abs(r);
          break;
        case 'L':
          ub = row.rhs;
          lb = row.rhs - std::abs(r);
          break;
        default:  // 'E'
          lb = r >= 0 ? row.rhs : row.rhs + r;
          ub = r >= 0 ? row.rhs + r : row.rhs;
          break;
      }
      const Index lo_row = static_cast<Index>(h.size());
      for (Triplet t : row.entries) {
        ineq.push_back({lo_row, t.col, t.value});
        ineq.push_back({lo_row + 1, t.col, -t.value});
      }
      h.push_back(lb);
      h.push_back(-ub);
    }

    LpProblem p;
    p.name = name_;
    p.a = SparseMatrix::FromTriplets(static_cast<Index>(b.size()), n_vars_,
                                     std::move(eq));
    p.g = SparseMatrix::FromTriplets(static_cast<Index>(h.size()), n_vars_,
                                     std::move(ineq));
    p.b = std::move(b);
    p.h = std::move(h);
    p.c = std::move(obj_);
    p.l = std::move(lower_);
    p.u = std::move(upper_);
    p.objective_offset = -objective_rhs_;
    if (maximize_) {
      for (double& v : p.c) v = -v;
      p.objective_offset = -p.objective_offset;
      p.negated_objective = true;
    }
    p.Validate();
    return p;
  }

  static constexpr Index kObjectiveRow = -1;
  static constexpr Index kFreeRow = -2;

  MpsOptions options_;
  int line_no_ = 0;
  Section section_ = Section::kNone;
  std::string name_;
  bool maximize_ = false;
  std::string objective_row_;
  double objective_rhs_ = 0.0;
  std::unordered_map<std::string, Index> row_index_;
  std::vector<RowRecord> rows_;
  std::unordered_map<std::string, Index> col_index_;
  std::vector<std::string> col_names_;
  Index n_vars_ = 0;
  std::vector<double> obj_, lower_, upper_;
};

std::string GunzipFile(const std::string& path) {
  gzFile f = gzopen(path.c_str(), "rb");
  if (f == nullptr) {
    throw std::runtime_error("cannot open " + path);
  }
  std::string out;
  char buf[1 << 16];
  int n;
  while ((n = gzread(f, buf, sizeof(buf))) > 0) {
    out.append(buf, static_cast<size_t>(n));
  }
  const bool bad = n < 0;
  gzclose(f);
  if (bad) throw std::runtime_error("gzip read error in " + path);
  return out;
}

}  // namespace

LpProblem ParseMps(std::istream& in, const MpsOptions& options) {
  Parser parser(options);
  std::string line;
  while (std::getline(in, line)) parser.ConsumeLine(line);
  return parser.Finish();
}

LpProblem ParseMpsString(const std::string& text, const MpsOptions& options) {
  std::istringstream in(text);
  return ParseMps(in, options);
}

LpProblem ParseMpsFile(const std::string& path, const MpsOptions& options) {
  if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
    const std::string text = GunzipFile(path);
    return ParseMpsString(text, options);
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ParseMps(in, options);
}

}  // namespace rpdlp
