// Copyright 2026 The Authors.
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

#include "fairsc/io.h"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "fairsc/status.h"
#include "json.hpp"

namespace fairsc {
namespace {

using nlohmann::json;

[[noreturn]] void ParseFail(int line, int column, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) +
                                          ", column " + std::to_string(column) +
                                          ": " + what);
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string Trim(const std::string& s) {
  const size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

InstanceFormat ParseInstanceFormat(const std::string& name) {
  if (name == "json") return InstanceFormat::kJson;
  if (name == "csv" || name == "csv_binary_matrix") {
    return InstanceFormat::kCsvBinaryMatrix;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown instance format " + name);
}

SetSystem ParseJsonInstance(const std::string& text, InstanceLabels* labels) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line/column
    const size_t at = std::min<size_t>(e.byte, text.size());
    int line = 1, column = 1;
    for (size_t i = 0; i + 1 < at; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    ParseFail(line, column, "malformed JSON");
  }
  SetSystem sys;
  try {
    if (!doc.is_object()) ParseFail(1, 1, "top level must be an object");
    sys.n = doc.at("n").get<int>();
    sys.sets = doc.at("sets").get<std::vector<std::vector<ElementId>>>();
    sys.colors = doc.at("colors").get<std::vector<Color>>();
    if (doc.contains("weights") && !doc["weights"].is_null()) {
      sys.weights = doc["weights"].get<std::vector<double>>();
    }
    if (labels) {
      *labels = {};
      if (doc.contains("names") && doc["names"].is_object()) {
        const json& names = doc["names"];
        if (names.contains("groups")) {
          labels->groups = names["groups"].get<std::vector<std::string>>();
        }
        if (names.contains("elements")) {
          labels->elements = names["elements"].get<std::vector<std::string>>();
        }
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("instance document: ") + e.what());
  }
  return sys;
}

std::string FormatJsonInstance(const SetSystem& sys,
                               const InstanceLabels* labels) {
  json doc;
  doc["n"] = sys.n;
  doc["sets"] = sys.sets;
  doc["colors"] = sys.colors;
  doc["weights"] = sys.weights ? json(*sys.weights) : json(nullptr);
  if (labels && (!labels->groups.empty() || !labels->elements.empty())) {
    doc["names"] = {{"groups", labels->groups},
                    {"elements", labels->elements}};
  } else {
    doc["names"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

SetSystem ParseCsvMatrix(const std::string& text, InstanceLabels* labels) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<std::string> header;
  bool has_weight = false;
  SetSystem sys;
  std::map<std::string, Color> label_ids;
  std::vector<std::string> group_names;
  std::vector<double> weights;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    std::vector<std::string> cells = SplitCsvLine(line);
    if (header.empty()) {
      header = cells;
      if (header.size() >= 2 && Trim(header[1]) == "weight") has_weight = true;
      const int first_element = has_weight ? 2 : 1;
      sys.n = static_cast<int>(header.size()) - first_element;
      if (sys.n < 0) ParseFail(line_no, 1, "header needs a group column");
      continue;
    }
    if (cells.size() != header.size()) {
      ParseFail(line_no, static_cast<int>(std::min(cells.size(), header.size())) + 1,
                "expected " + std::to_string(header.size()) + " cells, got " +
                    std::to_string(cells.size()));
    }
    const std::string label = Trim(cells[0]);
    if (label.empty()) ParseFail(line_no, 1, "empty group label");
    auto [it, inserted] =
        label_ids.emplace(label, static_cast<Color>(group_names.size()));
    if (inserted) group_names.push_back(label);
    sys.colors.push_back(it->second);
    int col = 1;
    if (has_weight) {
      const std::string cell = Trim(cells[1]);
      char* end = nullptr;
      errno = 0;
      const double w = std::strtod(cell.c_str(), &end);
      if (cell.empty() || *end != '\0' || errno == ERANGE) {
        ParseFail(line_no, 2, "bad weight '" + cell + "'");
      }
      weights.push_back(w);
      col = 2;
    }
    std::vector<ElementId> set;
    for (int e = 0; e < sys.n; ++e) {
      const std::string cell = Trim(cells[col + e]);
      if (cell == "1") {
        set.push_back(e);
      } else if (cell != "0") {
        throw Error(ErrorCode::kInvalidMatrix,
                    "line " + std::to_string(line_no) + ", column " +
                        std::to_string(col + e + 1) + ": cell '" + cell +
                        "' is not 0 or 1");
      }
    }
    sys.sets.push_back(std::move(set));
  }
  if (header.empty()) ParseFail(1, 1, "missing header row");
  if (has_weight) sys.weights = std::move(weights);
  if (labels) {
    labels->groups = group_names;
    labels->elements.clear();
    for (size_t c = has_weight ? 2 : 1; c < header.size(); ++c) {
      labels->elements.push_back(Trim(header[c]));
    }
  }
  return sys;
}

std::string FormatCsvMatrix(const SetSystem& sys, const InstanceLabels* labels) {
  const auto group_name = [&](Color h) {
    if (labels && h < static_cast<int>(labels->groups.size())) {
      return labels->groups[h];
    }
    return std::to_string(h);
  };
  std::string out = "group";
  if (sys.weighted()) out += ",weight";
  for (ElementId e = 0; e < sys.n; ++e) {
    out += ',';
    if (labels && e < static_cast<int>(labels->elements.size())) {
      out += labels->elements[e];
    } else {
      out += "e" + std::to_string(e);
    }
  }
  out += '\n';
  std::vector<char> row(sys.n);
  for (SetId s = 0; s < sys.num_sets(); ++s) {
    out += group_name(sys.colors[s]);
    if (sys.weighted()) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.12g", sys.weight(s));
      out += ',';
      out += buf;
    }
    std::fill(row.begin(), row.end(), 0);
    for (ElementId e : sys.sets[s]) row[e] = 1;
    for (ElementId e = 0; e < sys.n; ++e) out += row[e] ? ",1" : ",0";
    out += '\n';
  }
  return out;
}

SetSystem LoadInstance(const std::string& path, InstanceFormat format,
                       InstanceLabels* labels) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "cannot read " + path);
  return format == InstanceFormat::kJson ? ParseJsonInstance(buffer.str(), labels)
                                         : ParseCsvMatrix(buffer.str(), labels);
}

void SaveInstance(const SetSystem& sys, const std::string& path,
                  InstanceFormat format, const InstanceLabels* labels) {
  const std::string text = format == InstanceFormat::kJson
                               ? FormatJsonInstance(sys, labels)
                               : FormatCsvMatrix(sys, labels);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
}

}  // namespace fairsc
