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

// Canonical byte encoding shared by state hashing, Merkle leaves and the
// signature scheme. Fixed field order, big-endian fixed-width integers,
// u32-length-prefixed collections iterated in canonical order.

#include "xshard/types.hpp"

namespace xshard {

class Encoder {
public:
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u32(std::uint32_t v);
    void u64(std::uint64_t v);
    void u128(Amount v);
    void s128(SignedAmount v);
    void raw(ByteView bytes) { buf_.insert(buf_.end(), bytes.begin(), bytes.end()); }

    template <std::size_t N>
    void fixed(const std::array<std::uint8_t, N>& a)
    {
        raw(ByteView{a.data(), a.size()});
    }

    void var_bytes(ByteView bytes);

    const Bytes& bytes() const { return buf_; }
    Bytes take() { return std::move(buf_); }

private:
    Bytes buf_;
};

class Decoder {
public:
    explicit Decoder(ByteView data) : data_(data) {}

    std::uint8_t u8();
    std::uint32_t u32();
    std::uint64_t u64();
    Amount u128();
    SignedAmount s128();

    template <std::size_t N>
    std::array<std::uint8_t, N> fixed()
    {
        std::array<std::uint8_t, N> out{};
        const ByteView v = take(N);
        std::copy(v.begin(), v.end(), out.begin());
        return out;
    }

    Bytes var_bytes();

    bool done() const { return pos_ == data_.size(); }
    void expect_done() const;

private:
    ByteView take(std::size_t n);

    ByteView data_;
    std::size_t pos_ = 0;
};

void encode(Encoder& e, const Endpoint& v);
void encode(Encoder& e, const ToCreditEvent& v);
void encode(Encoder& e, const RevertRecord& v);
void encode(Encoder& e, const DebitTx& v);
void encode(Encoder& e, const PartStateCell& v);
void encode(Encoder& e, const ShardState& v);

Endpoint decode_endpoint(Decoder& d);
ToCreditEvent decode_event(Decoder& d);
RevertRecord decode_revert(Decoder& d);
DebitTx decode_debit(Decoder& d);
PartStateCell decode_cell(Decoder& d);
ShardState decode_state(Decoder& d);

template <typename T>
Bytes encoded(const T& v)
{
    Encoder e;
    encode(e, v);
    return e.take();
}

} // namespace xshard
