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

// Instance serialization.
//
// JSON: {"n": int, "sets": [[int]], "colors": [int], "weights": [float]|null,
//        "names": {"groups": [str], "elements": [str]}|null}
//
// CSV binary matrix (comma separated, no quoting): a header row, then one row
// per set. Column 1 is the group label; when the header's second cell is
// "weight" column 2 holds the set weight; the remaining columns are 0/1
// membership cells, one per element, named by the header. Group labels are
// numbered in order of first appearance.

#ifndef FAIRSC_IO_H_
#define FAIRSC_IO_H_

#include <string>
#include <vector>

#include "fairsc/instance.h"

namespace fairsc {

enum class InstanceFormat { kJson, kCsvBinaryMatrix };

// Throws kInvalidArgument for anything but "json" or "csv".
InstanceFormat ParseInstanceFormat(const std::string& name);

// Optional human-readable names. Empty vectors mean "use indices".
struct InstanceLabels {
  std::vector<std::string> groups;
  std::vector<std::string> elements;
};

// Parsers over in-memory text. Throw kParseError (with line and column) or
// kInvalidMatrix (a membership cell other than 0/1).
SetSystem ParseJsonInstance(const std::string& text,
                            InstanceLabels* labels = nullptr);
SetSystem ParseCsvMatrix(const std::string& text,
                         InstanceLabels* labels = nullptr);

std::string FormatJsonInstance(const SetSystem& sys,
                               const InstanceLabels* labels = nullptr);
// Weights are written with 12 significant digits.
std::string FormatCsvMatrix(const SetSystem& sys,
                            const InstanceLabels* labels = nullptr);

// File wrappers; kIoError when the file cannot be read or written.
SetSystem LoadInstance(const std::string& path, InstanceFormat format,
                       InstanceLabels* labels = nullptr);
void SaveInstance(const SetSystem& sys, const std::string& path,
                  InstanceFormat format,
                  const InstanceLabels* labels = nullptr);

}  // namespace fairsc

#endif  // FAIRSC_IO_H_
