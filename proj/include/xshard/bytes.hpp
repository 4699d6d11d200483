// Copyright 2026 The xshard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace xshard {

/// Broken preconditions, malformed inputs and arithmetic overflow. Domain
/// outcomes (failed receipts, rejected blocks, invalid proofs) are values,
/// never exceptions.
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

using Hash32 = std::array<std::uint8_t, 32>;
using TxId = std::array<std::uint8_t, 32>;
using UserAddress = std::array<std::uint8_t, 20>;

std::string to_hex(ByteView bytes);

template <std::size_t N>
std::string to_hex(const std::array<std::uint8_t, N>& a)
{
    return to_hex(ByteView{a.data(), a.size()});
}

Bytes from_hex(const std::string& hex);

template <std::size_t N>
std::array<std::uint8_t, N> array_from_hex(const std::string& hex)
{
    const Bytes raw = from_hex(hex);
    if (raw.size() != N)
        throw StructuralError("hex string decodes to " + std::to_string(raw.size()) +
                              " bytes, expected " + std::to_string(N));
    std::array<std::uint8_t, N> out{};
    std::copy(raw.begin(), raw.end(), out.begin());
    return out;
}

} // namespace xshard
