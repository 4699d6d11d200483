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

#include "xshard/encode.hpp"

#include <algorithm>
#include <limits>

namespace xshard {

// --- hex / decimal helpers (declared in bytes.hpp / amount.hpp) ---

std::string to_hex(ByteView bytes)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (const std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

namespace {

int hex_nibble(char c)
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

} // namespace

Bytes from_hex(const std::string& hex)
{
    std::size_t start = 0;
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X'))
        start = 2;
    if ((hex.size() - start) % 2 != 0)
        throw StructuralError("hex string has odd length: " + hex);
    Bytes out;
    out.reserve((hex.size() - start) / 2);
    for (std::size_t i = start; i < hex.size(); i += 2) {
        const int hi = hex_nibble(hex[i]);
        const int lo = hex_nibble(hex[i + 1]);
        if (hi < 0 || lo < 0)
            throw StructuralError("invalid hex digit in: " + hex);
        out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    return out;
}

std::string amount_to_string(Amount a)
{
    if (a == 0)
        return "0";
    std::string out;
    while (a > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(a % 10)));
        a /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string signed_amount_to_string(SignedAmount a)
{
    if (a >= 0)
        return amount_to_string(static_cast<Amount>(a));
    // The most negative value negates cleanly in the unsigned domain.
    const Amount mag = static_cast<Amount>(0) - static_cast<Amount>(a);
    return "-" + amount_to_string(mag);
}

Amount amount_from_string(const std::string& s)
{
    if (s.empty())
        throw StructuralError("empty amount string");
    constexpr Amount max = ~static_cast<Amount>(0);
    Amount out = 0;
    for (const char c : s) {
        if (c < '0' || c > '9')
            throw StructuralError("invalid amount string: " + s);
        const Amount digit = static_cast<Amount>(c - '0');
        if (out > (max - digit) / 10)
            throw StructuralError("amount string overflows 128 bits: " + s);
        out = out * 10 + digit;
    }
    return out;
}

SignedAmount signed_amount_from_string(const std::string& s)
{
    if (!s.empty() && s[0] == '-') {
        const Amount mag = amount_from_string(s.substr(1));
        constexpr Amount min_mag = static_cast<Amount>(1) << 127;
        if (mag > min_mag)
            throw StructuralError("signed amount string overflows: " + s);
        return static_cast<SignedAmount>(static_cast<Amount>(0) - mag);
    }
    return to_signed(amount_from_string(s));
}

// --- Encoder / Decoder ---

void Encoder::u32(std::uint32_t v)
{
    for (int shift = 24; shift >= 0; shift -= 8)
        buf_.push_back(static_cast<std::uint8_t>(v >> shift));
}

void Encoder::u64(std::uint64_t v)
{
    for (int shift = 56; shift >= 0; shift -= 8)
        buf_.push_back(static_cast<std::uint8_t>(v >> shift));
}

void Encoder::u128(Amount v)
{
    for (int shift = 120; shift >= 0; shift -= 8)
        buf_.push_back(static_cast<std::uint8_t>(v >> shift));
}

void Encoder::s128(SignedAmount v)
{
    u128(static_cast<Amount>(v)); // two's complement
}

void Encoder::var_bytes(ByteView bytes)
{
    if (bytes.size() > std::numeric_limits<std::uint32_t>::max())
        throw StructuralError("byte string too long to encode");
    u32(static_cast<std::uint32_t>(bytes.size()));
    raw(bytes);
}

ByteView Decoder::take(std::size_t n)
{
    if (pos_ + n > data_.size())
        throw StructuralError("decode past end of buffer");
    const ByteView out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
}

std::uint8_t Decoder::u8()
{
    return take(1)[0];
}

std::uint32_t Decoder::u32()
{
    const ByteView v = take(4);
    std::uint32_t out = 0;
    for (const std::uint8_t b : v)
        out = (out << 8) | b;
    return out;
}

std::uint64_t Decoder::u64()
{
    const ByteView v = take(8);
    std::uint64_t out = 0;
    for (const std::uint8_t b : v)
        out = (out << 8) | b;
    return out;
}

Amount Decoder::u128()
{
    const ByteView v = take(16);
    Amount out = 0;
    for (const std::uint8_t b : v)
        out = (out << 8) | b;
    return out;
}

SignedAmount Decoder::s128()
{
    return static_cast<SignedAmount>(u128());
}

Bytes Decoder::var_bytes()
{
    const std::uint32_t n = u32();
    const ByteView v = take(n);
    return Bytes{v.begin(), v.end()};
}

void Decoder::expect_done() const
{
    if (!done())
        throw StructuralError("trailing bytes after decode");
}

// --- canonical encodings, field order as documented ---

void encode(Encoder& e, const Endpoint& v)
{
    e.u32(v.shard);
    e.u32(v.ee);
    e.fixed(v.user);
}

Endpoint decode_endpoint(Decoder& d)
{
    Endpoint out;
    out.shard = d.u32();
    out.ee = d.u32();
    out.user = d.fixed<20>();
    return out;
}

void encode(Encoder& e, const ToCreditEvent& v)
{
    encode(e, v.sender);
    encode(e, v.recipient);
    e.u128(v.amount);
    e.u64(v.block_number);
    e.u32(v.index);
    e.fixed(v.tx_id);
}

ToCreditEvent decode_event(Decoder& d)
{
    ToCreditEvent out;
    out.sender = decode_endpoint(d);
    out.recipient = decode_endpoint(d);
    out.amount = d.u128();
    out.block_number = d.u64();
    out.index = d.u32();
    out.tx_id = d.fixed<32>();
    return out;
}

void encode(Encoder& e, const RevertRecord& v)
{
    encode(e, v.original_sender);
    e.u128(v.amount);
    encode(e, v.original_recipient);
    e.fixed(v.tx_id);
}

RevertRecord decode_revert(Decoder& d)
{
    RevertRecord out;
    out.original_sender = decode_endpoint(d);
    out.amount = d.u128();
    out.original_recipient = decode_endpoint(d);
    out.tx_id = d.fixed<32>();
    return out;
}

void encode(Encoder& e, const DebitTx& v)
{
    e.fixed(v.id);
    encode(e, v.sender);
    encode(e, v.recipient);
    e.u128(v.amount);
    e.var_bytes(v.signature);
}

DebitTx decode_debit(Decoder& d)
{
    DebitTx out;
    out.id = d.fixed<32>();
    out.sender = decode_endpoint(d);
    out.recipient = decode_endpoint(d);
    out.amount = d.u128();
    out.signature = d.var_bytes();
    return out;
}

void encode(Encoder& e, const PartStateCell& v)
{
    e.s128(v.balance);
    e.u32(static_cast<std::uint32_t>(v.credits.size()));
    for (const ToCreditEvent& ev : v.credits)
        encode(e, ev);
    e.u32(static_cast<std::uint32_t>(v.reverts.size()));
    for (const RevertRecord& r : v.reverts)
        encode(e, r);
}

PartStateCell decode_cell(Decoder& d)
{
    PartStateCell out;
    out.balance = d.s128();
    const std::uint32_t nc = d.u32();
    for (std::uint32_t i = 0; i < nc; ++i)
        out.credits.insert(decode_event(d));
    const std::uint32_t nr = d.u32();
    for (std::uint32_t i = 0; i < nr; ++i)
        out.reverts.insert(decode_revert(d));
    return out;
}

void encode(Encoder& e, const ShardState& v)
{
    e.u32(v.shard_id);
    e.u64(v.block_number);
    e.u32(static_cast<std::uint32_t>(v.part_state.size()));
    e.u32(v.part_state.empty() ? 0 : static_cast<std::uint32_t>(v.part_state[0].size()));
    for (const auto& row : v.part_state)
        for (const PartStateCell& cell : row)
            encode(e, cell);
    e.u32(static_cast<std::uint32_t>(v.outstanding_credits.size()));
    for (const auto& [key, events] : v.outstanding_credits) {
        e.u32(key.src_shard);
        e.u32(key.src_ee);
        e.u64(key.src_block);
        e.u32(static_cast<std::uint32_t>(events.size()));
        for (const ToCreditEvent& ev : events)
            encode(e, ev);
    }
    e.u32(static_cast<std::uint32_t>(v.user_balance.size()));
    for (const auto& [key, balance] : v.user_balance) {
        e.u32(key.ee);
        e.fixed(key.user);
        e.u128(balance);
    }
    e.u32(static_cast<std::uint32_t>(v.recent_tx_ids.size()));
    for (const auto& [id, block] : v.recent_tx_ids) {
        e.fixed(id);
        e.u64(block);
    }
}

ShardState decode_state(Decoder& d)
{
    ShardState out;
    out.shard_id = d.u32();
    out.block_number = d.u64();
    const std::uint32_t shards = d.u32();
    const std::uint32_t ees = d.u32();
    out.part_state.resize(shards);
    for (std::uint32_t s = 0; s < shards; ++s) {
        out.part_state[s].reserve(ees);
        for (std::uint32_t e = 0; e < ees; ++e)
            out.part_state[s].push_back(decode_cell(d));
    }
    const std::uint32_t noc = d.u32();
    for (std::uint32_t i = 0; i < noc; ++i) {
        OutstandingKey key;
        key.src_shard = d.u32();
        key.src_ee = d.u32();
        key.src_block = d.u64();
        EventSet events;
        const std::uint32_t ne = d.u32();
        for (std::uint32_t j = 0; j < ne; ++j)
            events.insert(decode_event(d));
        out.outstanding_credits.emplace(key, std::move(events));
    }
    const std::uint32_t nub = d.u32();
    for (std::uint32_t i = 0; i < nub; ++i) {
        UserKey key;
        key.ee = d.u32();
        key.user = d.fixed<20>();
        const Amount balance = d.u128();
        out.user_balance.emplace(key, balance);
    }
    const std::uint32_t nids = d.u32();
    for (std::uint32_t i = 0; i < nids; ++i) {
        const TxId id = d.fixed<32>();
        const BlockNumber block = d.u64();
        out.recent_tx_ids.emplace(id, block);
    }
    return out;
}

} // namespace xshard
