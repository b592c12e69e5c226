//
// Copyright 2026 The Mintlab Authors
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
//

#ifndef MINT_SHA256_HPP_
#define MINT_SHA256_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace mint {

using Digest = std::array<unsigned char, 32>;

Digest sha256(std::span<const unsigned char> data);
Digest sha256_str(const std::string& data);
Digest sha256_file(const std::string& path);
std::string hex(const Digest& digest);

}  // namespace mint

#endif  // MINT_SHA256_HPP_
