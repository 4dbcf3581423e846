// Copyright 2026 The purecliff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PURECLIFF_CIRCUIT_IO_H
#define PURECLIFF_CIRCUIT_IO_H

#include <stdexcept>
#include <string>

#include "purecliff/circuit.h"

namespace purecliff {

inline constexpr const char *kCircuitFormat = "purecliff-circuit/1";

struct ParseError : std::runtime_error {
    ParseError(const std::string &what, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line(line),
          column(column) {
    }
    int line;
    int column;
};

/// YAML document with fixed key order:
///   format, registers, initial_states, target, discarded, ops.
std::string serialize(const Circuit &circuit);
/// Throws ParseError (1-based line and column) on malformed input.
Circuit deserialize(const std::string &text);

}  // namespace purecliff

#endif
