// Copyright 2026 The cqchan authors
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

#include "cqchan/channel_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cqchan {

namespace {

using Json = nlohmann::ordered_json;

Matrix parse_complex_matrix(const Json& node, int rows, int cols, const std::string& path) {
  if (!node.is_array() || node.size() != static_cast<std::size_t>(rows) * cols) {
    throw InputError(path + ": expected " + std::to_string(rows * cols) +
                     " [re, im] entries in row major order");
  }
  Matrix m(rows, cols);
  for (std::size_t k = 0; k < node.size(); ++k) {
    const Json& e = node[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw InputError(path + "[" + std::to_string(k) + "]: expected [re, im]");
    }
    m(static_cast<Eigen::Index>(k) / cols, static_cast<Eigen::Index>(k) % cols) =
        Complex(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

}  // namespace

ChannelFile parse_channel_file(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw InputError("top level value must be an object");

  ChannelFile out;

  bool has_channels = root.contains("channels");
  bool has_kraus = root.contains("kraus");
  if (!has_channels && !has_kraus) {
    throw InputError("need at least one of \"channels\" and \"kraus\"");
  }

  if (root.contains("alphabet")) {
    if (!root["alphabet"].is_array() || root["alphabet"].empty()) {
      throw InputError("alphabet: expected a nonempty array of strings");
    }
    for (const auto& letter : root["alphabet"]) {
      if (!letter.is_string()) {
        throw InputError("alphabet: expected a nonempty array of strings");
      }
      out.alphabet.push_back(letter.get<std::string>());
    }
  } else if (has_channels) {
    throw InputError("alphabet: required when \"channels\" is present");
  }

  if (has_channels) {
    if (!root.contains("dim") || !root["dim"].is_number_integer() ||
        root["dim"].get<int>() < 1) {
      throw InputError("dim: expected a positive integer");
    }
    out.dim = root["dim"].get<int>();
    const Json& chans = root["channels"];
    if (!chans.is_object() || chans.empty()) {
      throw InputError("channels: expected a nonempty object");
    }
    for (auto it = chans.begin(); it != chans.end(); ++it) {
      const std::string path = "channels." + it.key();
      const Json& states = it.value();
      if (!states.is_array() || states.size() != out.alphabet.size()) {
        throw InputError(path + ": expected one output state per alphabet letter");
      }
      std::vector<DensityMatrix> outputs;
      for (std::size_t x = 0; x < states.size(); ++x) {
        const std::string entry = path + "." + out.alphabet[x];
        try {
          outputs.emplace_back(
              HermitianOperator(parse_complex_matrix(states[x], out.dim, out.dim, entry)));
        } catch (const InputError& e) {
          throw InputError(entry + ": " + e.what());
        }
      }
      out.state_names.push_back(it.key());
      out.channels.emplace_back(out.alphabet, std::move(outputs));
    }
  }

  if (has_kraus) {
    const Json& kr = root["kraus"];
    if (!kr.is_object() || !kr.contains("dim_in") || !kr.contains("dim_out") ||
        !kr.contains("operators")) {
      throw InputError("kraus: expected an object with dim_in, dim_out and operators");
    }
    if (!kr["dim_in"].is_number_integer() || !kr["dim_out"].is_number_integer() ||
        kr["dim_in"].get<int>() < 1 || kr["dim_out"].get<int>() < 1) {
      throw InputError("kraus: dim_in and dim_out must be positive integers");
    }
    int din = kr["dim_in"].get<int>();
    int dout = kr["dim_out"].get<int>();
    if (!kr["operators"].is_array() || kr["operators"].empty()) {
      throw InputError("kraus.operators: expected a nonempty array");
    }
    std::vector<Matrix> ops;
    for (std::size_t k = 0; k < kr["operators"].size(); ++k) {
      ops.push_back(parse_complex_matrix(kr["operators"][k], dout, din,
                                         "kraus.operators[" + std::to_string(k) + "]"));
    }
    try {
      out.kraus.emplace(std::move(ops));
    } catch (const InputError& e) {
      throw InputError(std::string("kraus: ") + e.what());
    }
  }

  return out;
}

ChannelFile load_channel_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_channel_file(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Avcq ChannelFile::to_avcq() const {
  if (channels.empty()) throw InputError("the file defines no cq channels");
  return Avcq(state_names, channels);
}

CompoundSet ChannelFile::to_compound() const {
  if (channels.empty()) throw InputError("the file defines no cq channels");
  return CompoundSet(channels);
}

const CqChannel& ChannelFile::single() const {
  if (channels.size() != 1) {
    throw InputError("the file does not define exactly one cq channel");
  }
  return channels.front();
}

}  // namespace cqchan
