// Copyright 2026 The ptqa Authors.
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

#ifndef PTQA_KB_INDEX_IO_HPP_
#define PTQA_KB_INDEX_IO_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ptqa/kb/semantic_network.hpp"

namespace ptqa {

// On-disk layout, all integers little endian:
//
//   magic    8 bytes  "PTQAIDX\0"
//   version  u16
//   relations   u32 count, then (u32 length, bytes) per label
//   concepts    u32 count, then (u32 length, bytes) per uri
//   adjacency   u64 entry count, u64 offsets[concepts + 1],
//               entries of (u32 neighbor, u16 relation, u8 direction,
//               u8 reserved, f32 weight)
//   vocabulary  u32 count, then (u32 length, bytes, u32 concept)
//   edge count  u64
//   checksum    u64 FNV-1a over every preceding byte
inline constexpr char kIndexMagic[8] = {'P', 'T', 'Q', 'A', 'I', 'D', 'X', '\0'};
inline constexpr std::uint16_t kIndexVersion = 1;

std::vector<std::uint8_t> SerializeIndex(const SemanticNetwork& network);
SemanticNetwork LoadIndexFromBytes(std::span<const std::uint8_t> bytes);

// Writes the index and records its checksum on the network.
void PersistIndex(SemanticNetwork& network, const std::string& path);
void PersistIndex(const SemanticNetwork& network, const std::string& path);
SemanticNetwork LoadIndex(const std::string& path);

std::uint64_t Fnv1a64(std::span<const std::uint8_t> bytes);

}  // namespace ptqa

#endif  // PTQA_KB_INDEX_IO_HPP_
