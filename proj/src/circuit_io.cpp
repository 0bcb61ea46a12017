// Copyright 2026 The gbts Authors
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

#include "gbts/circuit_io.hpp"

#include <fstream>
#include <initializer_list>
#include <nlohmann/json.hpp>
#include <sstream>

#include "gbts/errors.hpp"

namespace gbts {
namespace {

using json = nlohmann::json;

void require_keys(const json& obj, std::string_view where, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ParseError("circuit: " + std::string(where) + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw ParseError("circuit: unknown field '" + key + "' in " + std::string(where));
  }
}

const json& field(const json& obj, const char* key, std::string_view where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("circuit: missing field '" + std::string(key) + "' in " + std::string(where));
  return *it;
}

double number(const json& v, std::string_view what) {
  if (!v.is_number()) throw ParseError("circuit: " + std::string(what) + " must be a number");
  return v.get<double>();
}

std::size_t mode_index(const json& v, std::size_t modes, std::string_view what) {
  if (!v.is_number_integer()) throw ParseError("circuit: " + std::string(what) + " must be an integer");
  const auto j = v.get<long long>();
  if (j < 1 || static_cast<unsigned long long>(j) > modes) {
    throw ParseError("circuit: " + std::string(what) + " " + std::to_string(j) + " outside 1.." +
                     std::to_string(modes));
  }
  return static_cast<std::size_t>(j - 1);
}

Gate parse_gate(const json& g, std::size_t modes, const std::string& where) {
  if (!g.is_object()) throw ParseError("circuit: " + where + " must be an object");
  const json& type = field(g, "type", where);
  if (!type.is_string()) throw ParseError("circuit: gate type must be a string in " + where);
  const auto name = type.get<std::string>();
  if (name == "beamsplitter") {
    require_keys(g, where, {"type", "modes", "theta", "phi"});
    const json& m = field(g, "modes", where);
    if (!m.is_array() || m.size() != 2) throw ParseError("circuit: beamsplitter modes must be a pair in " + where);
    Beamsplitter bs;
    bs.mode1 = mode_index(m[0], modes, "beamsplitter mode");
    bs.mode2 = mode_index(m[1], modes, "beamsplitter mode");
    bs.theta = number(field(g, "theta", where), "theta");
    bs.phi = g.contains("phi") ? number(g["phi"], "phi") : 0.0;
    return bs;
  }
  if (name == "phase") {
    require_keys(g, where, {"type", "mode", "delta"});
    PhaseShift ph;
    ph.mode = mode_index(field(g, "mode", where), modes, "phase mode");
    ph.delta = number(field(g, "delta", where), "delta");
    return ph;
  }
  throw ParseError("circuit: unknown gate type '" + name + "' in " + where);
}

}  // namespace

CircuitSpec parse_circuit(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("circuit: invalid JSON: ") + e.what());
  }
  require_keys(doc, "circuit", {"format_version", "modes", "eta", "squeezing", "displacement", "layers"});
  const json& version = field(doc, "format_version", "circuit");
  if (!version.is_number_integer() || version.get<long long>() != kCircuitFormatVersion) {
    throw ParseError("circuit: unsupported format_version (expected " + std::to_string(kCircuitFormatVersion) + ")");
  }
  const json& modes = field(doc, "modes", "circuit");
  if (!modes.is_number_integer() || modes.get<long long>() < 1) {
    throw ParseError("circuit: modes must be a positive integer");
  }

  CircuitSpec c = CircuitSpec::vacuum(static_cast<std::size_t>(modes.get<long long>()));
  if (doc.contains("eta")) c.eta = number(doc["eta"], "eta");

  if (doc.contains("squeezing")) {
    const json& sq = doc["squeezing"];
    if (!sq.is_array()) throw ParseError("circuit: squeezing must be a list");
    c.squeezing.clear();
    for (std::size_t j = 0; j < sq.size(); ++j) {
      const std::string where = "squeezing[" + std::to_string(j) + "]";
      require_keys(sq[j], where, {"r", "phase"});
      Squeezer s;
      s.r = number(field(sq[j], "r", where), "r");
      s.phase = sq[j].contains("phase") ? number(sq[j]["phase"], "phase") : 0.0;
      c.squeezing.push_back(s);
    }
  }

  if (doc.contains("displacement")) {
    const json& d = doc["displacement"];
    if (!d.is_array()) throw ParseError("circuit: displacement must be a list");
    c.displacement.clear();
    for (const json& v : d) {
      if (v.is_number()) {
        c.displacement.emplace_back(v.get<double>(), 0.0);
      } else if (v.is_array() && v.size() == 2) {
        c.displacement.emplace_back(number(v[0], "displacement"), number(v[1], "displacement"));
      } else {
        throw ParseError("circuit: displacement entries must be numbers or [re, im] pairs");
      }
    }
  }

  if (doc.contains("layers")) {
    const json& layers = doc["layers"];
    if (!layers.is_array()) throw ParseError("circuit: layers must be a list");
    for (std::size_t l = 0; l < layers.size(); ++l) {
      if (!layers[l].is_array()) throw ParseError("circuit: each layer must be a list of gates");
      Layer layer;
      for (std::size_t g = 0; g < layers[l].size(); ++g) {
        layer.push_back(parse_gate(layers[l][g], c.modes,
                                   "layers[" + std::to_string(l) + "][" + std::to_string(g) + "]"));
      }
      c.layers.push_back(std::move(layer));
    }
  }

  c.validate();
  return c;
}

std::string format_circuit(const CircuitSpec& c) {
  json doc;
  doc["format_version"] = kCircuitFormatVersion;
  doc["modes"] = c.modes;
  doc["eta"] = c.eta;
  doc["squeezing"] = json::array();
  for (const auto& s : c.squeezing) doc["squeezing"].push_back({{"r", s.r}, {"phase", s.phase}});
  doc["displacement"] = json::array();
  for (const auto& b : c.displacement) doc["displacement"].push_back({b.real(), b.imag()});
  doc["layers"] = json::array();
  for (const Layer& layer : c.layers) {
    json gates = json::array();
    for (const Gate& g : layer) {
      if (const auto* bs = std::get_if<Beamsplitter>(&g)) {
        gates.push_back({{"type", "beamsplitter"},
                         {"modes", {bs->mode1 + 1, bs->mode2 + 1}},
                         {"theta", bs->theta},
                         {"phi", bs->phi}});
      } else {
        const auto& ph = std::get<PhaseShift>(g);
        gates.push_back({{"type", "phase"}, {"mode", ph.mode + 1}, {"delta", ph.delta}});
      }
    }
    doc["layers"].push_back(std::move(gates));
  }
  return doc.dump(2) + "\n";
}

CircuitSpec read_circuit_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("circuit: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_circuit(buf.str());
}

void write_circuit_file(const std::filesystem::path& path, const CircuitSpec& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("circuit: cannot write " + path.string());
  out << format_circuit(c);
}

}  // namespace gbts
