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

#ifndef ENTSHARE_CHANNEL_IO_H_
#define ENTSHARE_CHANNEL_IO_H_

// Channel specifications as JSON:
//
//   {"name": "amplitude_damping", "params": {"p": 0.5}}
//   {"kraus": [[[[1,0],[0,0]],[[0,0],[0.5,0]]], ...]}
//
// Each Kraus operator is a 2x2 array of [re, im] pairs, row-major.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "entshare/channel.h"

namespace entshare {

/// Malformed specification: bad JSON shape, unknown constructor or
/// parameter, out-of-range parameter.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

KrausChannel make_named_channel(const std::string& name, const KrausChannel::Params& params);

/// Names accepted by make_named_channel().
const std::vector<std::string>& channel_names();

KrausChannel channel_from_json(const nlohmann::json& spec);
KrausChannel channel_from_json_text(const std::string& text);

/// {"kraus": [...], "label": ..., "params": {...}}; reals are written with
/// shortest round-trip precision, so parsing the result gives back the same
/// bits.
nlohmann::json channel_to_json(const KrausChannel& c);

nlohmann::json complex_to_json(cplx z);
nlohmann::json vector_to_json(const Vec4& v);

}  // namespace entshare

#endif  // ENTSHARE_CHANNEL_IO_H_
