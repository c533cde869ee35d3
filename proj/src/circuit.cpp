// Copyright 2026 The swapbound Authors
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

#include "swapbound/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "swapbound/errors.hpp"

namespace swapbound {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // byte is 1-based and points one past the offending character.
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, column] = line_column(text, offset);
    throw ParseError(std::string("malformed ") + what + " JSON", line,
                     column);
  }
}

std::size_t require_count(const json& doc, const char* key, const char* what) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ParseError(std::string(what) + " JSON is missing \"" + key + "\"");
  }
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ValidationError(std::string("\"") + key +
                          "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::pair<long long, long long>> read_pairs(const json& doc,
                                                        const char* key) {
  std::vector<std::pair<long long, long long>> pairs;
  if (!doc.contains(key)) return pairs;
  const json& list = doc.at(key);
  if (!list.is_array()) {
    throw ParseError(std::string("\"") + key + "\" must be an array");
  }
  for (const json& item : list) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw ParseError(std::string("entries of \"") + key +
                       "\" must be integer pairs, got " + item.dump());
    }
    pairs.emplace_back(item[0].get<long long>(), item[1].get<long long>());
  }
  return pairs;
}

Edge checked_pair(long long a, long long b, std::size_t n, const char* what) {
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n ||
      static_cast<std::size_t>(b) >= n) {
    throw ValidationError(std::string(what) + " [" + std::to_string(a) + "," +
                          std::to_string(b) + "] out of range for " +
                          std::to_string(n) + " qubits");
  }
  if (a == b) {
    throw ValidationError(std::string(what) + " [" + std::to_string(a) + "," +
                          std::to_string(b) + "] repeats a qubit");
  }
  return Edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---- QASM subset -------------------------------------------------------

struct Statement {
  std::string text;  // whitespace-collapsed
  std::size_t line;
};

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> statements;
  std::string current;
  std::size_t line = 1;
  std::size_t start_line = 1;
  int brace_depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      if (i < text.size()) ++line;
      continue;
    }
    if (c == '\n') ++line;
    if (current.find_first_not_of(" \t\r\n") == std::string::npos &&
        !std::isspace(static_cast<unsigned char>(c))) {
      start_line = line;
    }
    // Gate bodies are skipped wholesale; their inner ';' do not end the
    // enclosing statement.
    if (c == '{') ++brace_depth;
    if (c == '}') {
      --brace_depth;
      if (brace_depth == 0) {
        current.clear();
        continue;
      }
    }
    if (brace_depth > 0) continue;
    if (c == ';') {
      statements.push_back({collapse_whitespace(current), start_line});
      current.clear();
      continue;
    }
    current.push_back(c);
  }
  if (!collapse_whitespace(current).empty()) {
    throw ParseError("statement not terminated by ';'", start_line, 1);
  }
  return statements;
}

std::string leading_word(const std::string& s) {
  std::size_t end = 0;
  while (end < s.size() &&
         (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_')) {
    ++end;
  }
  return s.substr(0, end);
}

struct QubitRef {
  std::string reg;
  long long index;
};

std::optional<QubitRef> parse_ref(std::string_view s) {
  std::string t = collapse_whitespace(s);
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  auto open = t.find('[');
  if (open == std::string::npos || open == 0 || t.back() != ']') {
    return std::nullopt;
  }
  std::string digits = t.substr(open + 1, t.size() - open - 2);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return std::nullopt;
  }
  return QubitRef{t.substr(0, open), std::stoll(digits)};
}

}  // namespace

std::size_t InteractionGraph::gate_count() const {
  std::size_t total = 0;
  for (const auto& [edge, count] : multiplicity) total += count;
  return total;
}

Circuit parse_circuit_json(std::string_view text) {
  json doc = parse_json(text, "circuit");
  if (!doc.is_object()) throw ParseError("circuit JSON must be an object");
  Circuit circuit;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
    circuit.name = doc["name"].get<std::string>();
  }
  circuit.num_qubits = require_count(doc, "qubits", "circuit");
  if (!doc.contains("gates")) {
    throw ParseError("circuit JSON is missing \"gates\"");
  }
  for (auto [a, b] : read_pairs(doc, "gates")) {
    circuit.two_qubit_gates.push_back(
        checked_pair(a, b, circuit.num_qubits, "gate"));
  }
  return circuit;
}

Circuit parse_circuit_qasm_subset(std::string_view text) {
  Circuit circuit;
  std::optional<std::string> qreg;
  for (const Statement& st : split_statements(text)) {
    if (st.text.empty()) continue;
    const std::string word = leading_word(st.text);
    if (word == "qreg") {
      if (qreg) {
        throw UnsupportedError("multiple qreg declarations (line " +
                               std::to_string(st.line) + ")");
      }
      auto ref = parse_ref(std::string_view(st.text).substr(4));
      if (!ref) throw ParseError("malformed qreg declaration", st.line, 1);
      qreg = ref->reg;
      circuit.num_qubits = static_cast<std::size_t>(ref->index);
      continue;
    }
    if (word != "cx" && word != "CX" && word != "cz" && word != "swap") {
      continue;  // single-qubit gates, creg, measure, barrier, include, ...
    }
    if (!qreg) {
      throw ParseError("gate '" + word + "' before any qreg declaration",
                       st.line, 1);
    }
    std::string operands = st.text.substr(word.size());
    auto comma = operands.find(',');
    if (comma == std::string::npos ||
        operands.find(',', comma + 1) != std::string::npos) {
      throw ParseError("'" + word + "' expects two qubit operands", st.line, 1);
    }
    auto a = parse_ref(std::string_view(operands).substr(0, comma));
    auto b = parse_ref(std::string_view(operands).substr(comma + 1));
    if (!a || !b) {
      throw ParseError("malformed operands for '" + word + "'", st.line, 1);
    }
    if (a->reg != *qreg || b->reg != *qreg) {
      throw ValidationError("unknown register in '" + st.text + "' (line " +
                            std::to_string(st.line) + ")");
    }
    circuit.two_qubit_gates.push_back(
        checked_pair(a->index, b->index, circuit.num_qubits, "gate"));
  }
  return circuit;
}

DeviceSpec parse_device(std::string_view text) {
  json doc = parse_json(text, "device");
  if (!doc.is_object()) throw ParseError("device JSON must be an object");
  DeviceSpec device;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
    device.name = doc["name"].get<std::string>();
  }
  device.num_qubits = require_count(doc, "num_qubits", "device");
  std::vector<Edge> edges;
  for (auto [a, b] : read_pairs(doc, "edges")) {
    edges.push_back(checked_pair(a, b, device.num_qubits, "coupling"));
  }
  device.coupling = Graph(device.num_qubits, edges);
  auto components = connected_components(device.coupling);
  if (components.size() > 1) {
    std::string msg = "device coupling graph is disconnected; components:";
    for (const auto& comp : components) {
      msg += " {";
      for (std::size_t i = 0; i < comp.size(); ++i) {
        if (i) msg += ",";
        msg += std::to_string(comp[i]);
      }
      msg += "}";
    }
    throw ValidationError(msg);
  }
  return device;
}

std::string serialize_device(const DeviceSpec& device) {
  json edges = json::array();
  for (const Edge& e : device.coupling.edges()) edges.push_back({e.u, e.v});
  json doc = {{"name", device.name},
              {"num_qubits", device.num_qubits},
              {"edges", edges}};
  return doc.dump(2) + "\n";
}

std::string serialize_circuit_json(const Circuit& circuit) {
  json gates = json::array();
  for (const Edge& e : circuit.two_qubit_gates) gates.push_back({e.u, e.v});
  json doc = {{"name", circuit.name},
              {"qubits", circuit.num_qubits},
              {"gates", gates}};
  return doc.dump() + "\n";
}

InteractionGraph interaction_graph(const Circuit& circuit) {
  InteractionGraph ig;
  for (const Edge& gate : circuit.two_qubit_gates) ++ig.multiplicity[gate];
  std::vector<Edge> edges;
  edges.reserve(ig.multiplicity.size());
  for (const auto& [edge, count] : ig.multiplicity) edges.push_back(edge);
  ig.graph = Graph(circuit.num_qubits, edges);
  return ig;
}

InteractionGraph interaction_graph(const Graph& g) {
  InteractionGraph ig;
  ig.graph = g;
  for (const Edge& e : g.edges()) ig.multiplicity[e] = 1;
  return ig;
}

Circuit load_circuit(const std::string& path) {
  std::string text = read_file(path);
  const bool qasm =
      path.size() >= 5 && path.compare(path.size() - 5, 5, ".qasm") == 0;
  Circuit circuit = qasm ? parse_circuit_qasm_subset(text)
                         : parse_circuit_json(text);
  if (circuit.name.empty()) {
    auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    circuit.name = base.substr(0, base.find_last_of('.'));
  }
  return circuit;
}

DeviceSpec load_device(const std::string& path) {
  return parse_device(read_file(path));
}

}  // namespace swapbound
