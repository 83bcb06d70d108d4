// Copyright 2026 The entshare Authors
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

#include "entshare/channel_io.h"

#include <cmath>
#include <set>

namespace entshare {
namespace {

using nlohmann::json;

double require_param(const KrausChannel::Params& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw SpecError("missing parameter '" + key + "'");
  return it->second;
}

void require_only(const KrausChannel::Params& params, const std::set<std::string>& allowed,
                  const std::string& name) {
  for (const auto& [key, value] : params) {
    if (!allowed.contains(key)) {
      throw SpecError("unknown parameter '" + key + "' for channel '" + name + "'");
    }
  }
}

std::uint64_t as_seed(double value) {
  if (value < 0 || value != std::floor(value)) throw SpecError("seed must be a nonnegative integer");
  return static_cast<std::uint64_t>(value);
}

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw SpecError("complex entries must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Mat2 matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw SpecError("Kraus operators must be 2x2 matrices");
  Mat2 m;
  for (int r = 0; r < 2; ++r) {
    if (!j[r].is_array() || j[r].size() != 2) throw SpecError("Kraus operators must be 2x2 matrices");
    for (int c = 0; c < 2; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

}  // namespace

const std::vector<std::string>& channel_names() {
  static const std::vector<std::string> names = {
      "identity",  "depolarizing",   "amplitude_damping",   "phase_damping",
      "bit_flip",  "random_channel", "random_pauli_channel"};
  return names;
}

KrausChannel make_named_channel(const std::string& name, const KrausChannel::Params& params) {
  try {
    if (name == "identity") {
      require_only(params, {}, name);
      return identity_channel();
    }
    if (name == "depolarizing" || name == "amplitude_damping" || name == "phase_damping" ||
        name == "bit_flip") {
      require_only(params, {"p"}, name);
      const double p = require_param(params, "p");
      if (name == "depolarizing") return depolarizing(p);
      if (name == "amplitude_damping") return amplitude_damping(p);
      if (name == "phase_damping") return phase_damping(p);
      return bit_flip(p);
    }
    if (name == "random_channel") {
      require_only(params, {"seed", "rank"}, name);
      const double rank = require_param(params, "rank");
      if (rank != std::floor(rank)) throw SpecError("rank must be an integer");
      return random_channel(as_seed(require_param(params, "seed")), static_cast<int>(rank));
    }
    if (name == "random_pauli_channel") {
      require_only(params, {"seed"}, name);
      return random_pauli_channel(as_seed(require_param(params, "seed")));
    }
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  throw SpecError("unknown channel name '" + name + "'");
}

KrausChannel channel_from_json(const json& spec) {
  if (!spec.is_object()) throw SpecError("channel spec must be a JSON object");
  // Reproduction files wrap the channel together with audit metadata.
  if (spec.contains("channel") && !spec.contains("kraus") && !spec.contains("name")) {
    return channel_from_json(spec["channel"]);
  }
  if (spec.contains("kraus")) {
    const json& list = spec["kraus"];
    if (!list.is_array() || list.empty()) throw SpecError("'kraus' must be a non-empty array");
    std::vector<Mat2> kraus;
    for (const json& m : list) kraus.push_back(matrix_from_json(m));
    std::string label = spec.value("label", std::string("kraus"));
    return KrausChannel(std::move(kraus), std::move(label));
  }
  if (spec.contains("name")) {
    if (!spec["name"].is_string()) throw SpecError("'name' must be a string");
    KrausChannel::Params params;
    if (spec.contains("params")) {
      if (!spec["params"].is_object()) throw SpecError("'params' must be an object");
      for (const auto& [key, value] : spec["params"].items()) {
        if (!value.is_number()) throw SpecError("parameter '" + key + "' must be a number");
        params[key] = value.get<double>();
      }
    }
    return make_named_channel(spec["name"].get<std::string>(), params);
  }
  throw SpecError("channel spec needs either 'kraus' or 'name'");
}

KrausChannel channel_from_json_text(const std::string& text) {
  json spec;
  try {
    spec = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
  return channel_from_json(spec);
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json vector_to_json(const Vec4& v) {
  json out = json::array();
  for (int i = 0; i < 4; ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

json channel_to_json(const KrausChannel& c) {
  json kraus = json::array();
  for (const Mat2& m : c.kraus()) {
    json rows = json::array();
    for (int r = 0; r < 2; ++r) {
      rows.push_back(json::array({complex_to_json(m(r, 0)), complex_to_json(m(r, 1))}));
    }
    kraus.push_back(rows);
  }
  json out = {{"kraus", kraus}};
  if (!c.label().empty()) out["label"] = c.label();
  if (!c.params().empty()) out["params"] = c.params();
  return out;
}

}  // namespace entshare
