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

#ifndef CQCHAN_CHANNEL_FILE_HPP_
#define CQCHAN_CHANNEL_FILE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cqchan/avcq.hpp"
#include "cqchan/compound_capacity.hpp"
#include "cqchan/errors.hpp"
#include "cqchan/info_measures.hpp"
#include "cqchan/zero_error.hpp"

namespace cqchan {

// Channel family description loaded from JSON:
//
//   {
//     "alphabet": ["0", "1"],
//     "dim": 2,
//     "channels": {
//       "clean": [ [[1,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]] ]
//     },
//     "kraus": { "dim_in": 2, "dim_out": 2, "operators": [ ... ] }
//   }
//
// Each channel maps every alphabet letter to a density matrix given as
// dim*dim entries [re, im] in row major order; Kraus operators are
// dim_out*dim_in entries in row major order. "channels" may be omitted
// when "kraus" is present, and vice versa.
struct ChannelFile {
  std::vector<std::string> alphabet;
  int dim = 0;
  std::vector<std::string> state_names;
  std::vector<CqChannel> channels;
  std::optional<KrausChannel> kraus;

  Avcq to_avcq() const;
  CompoundSet to_compound() const;
  const CqChannel& single() const;
};

ChannelFile parse_channel_file(const std::string& text);
ChannelFile load_channel_file(const std::string& path);

}  // namespace cqchan

#endif  // CQCHAN_CHANNEL_FILE_HPP_
