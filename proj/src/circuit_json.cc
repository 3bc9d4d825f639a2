// Copyright 2026 The Expander Rewire Authors
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

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "expander/errors.h"
#include "expander/info_contraction.h"

namespace expander {

NoisyCircuit parse_circuit_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("circuit JSON: ") + e.what(), 0);
  }
  try {
    const int inputs = doc.at("inputs").get<int>();
    std::vector<Gate> gates;
    for (const auto& entry : doc.at("gates")) {
      Gate gate;
      gate.wires = entry.at("wires").get<std::vector<int>>();
      for (char c : entry.at("truth_table").get<std::string>()) {
        if (c != '0' && c != '1') throw ParseError("truth_table must be a string of 0/1", 0);
        gate.truth_table.push_back(static_cast<std::uint8_t>(c - '0'));
      }
      gates.push_back(std::move(gate));
    }
    std::optional<int> fanin_bound;
    if (doc.contains("fanin_bound")) fanin_bound = doc["fanin_bound"].get<int>();
    NoisyCircuit circuit(inputs, std::move(gates), fanin_bound);
    if (doc.contains("output") && doc["output"].get<int>() != circuit.output_wire()) {
      throw ParseError("output must be the last gate (wire " + std::to_string(circuit.output_wire()) + ")", 0);
    }
    return circuit;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("circuit JSON: ") + e.what(), 0);
  } catch (const ParameterError& e) {
    throw ParseError(std::string("circuit JSON: ") + e.what(), 0);
  }
}

NoisyCircuit read_circuit_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_circuit_json(buffer.str());
}

std::string circuit_to_json(const NoisyCircuit& circuit) {
  nlohmann::ordered_json doc;
  doc["inputs"] = circuit.input_count();
  doc["gates"] = nlohmann::ordered_json::array();
  for (const Gate& gate : circuit.gates()) {
    std::string table;
    for (std::uint8_t bit : gate.truth_table) table.push_back(static_cast<char>('0' + bit));
    doc["gates"].push_back({{"wires", gate.wires}, {"truth_table", table}});
  }
  doc["output"] = circuit.output_wire();
  doc["fanin_bound"] = circuit.fanin_bound();
  return doc.dump(2) + "\n";
}

}  // namespace expander
