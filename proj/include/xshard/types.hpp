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

#include "xshard/amount.hpp"
#include "xshard/bytes.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace xshard {

using ShardId = std::uint32_t;
using EEId = std::uint32_t;
using BlockNumber = std::uint64_t;
using Slot = std::uint64_t;

/// Genesis-fixed dimensions: shard ids live in [0, shards), EE ids in [0, ees).
struct Topology {
    std::uint32_t shards = 0;
    std::uint32_t ees = 0;

    bool valid_shard(ShardId s) const { return s < shards; }
    bool valid_ee(EEId e) const { return e < ees; }
};

struct Endpoint {
    ShardId shard = 0;
    EEId ee = 0;
    UserAddress user{};

    auto operator<=>(const Endpoint&) const = default;
};

/// The user-submitted half of a cross-shard transfer: deducts on the source
/// shard and, on success, emits the ToCredit event that authorises the credit.
struct DebitTx {
    TxId id{};
    Endpoint sender;
    Endpoint recipient;
    Amount amount = 0;
    Bytes signature;

    bool operator==(const DebitTx&) const = default;
};

/// Unforgeable system event recording a successful debit. The (sender shard,
/// block number, index) triple locates it in exactly one event tree.
struct ToCreditEvent {
    Endpoint sender;
    Endpoint recipient;
    Amount amount = 0;
    BlockNumber block_number = 0;
    std::uint32_t index = 0;
    TxId tx_id{};

    bool operator==(const ToCreditEvent&) const = default;
};

/// Canonical set order for event collections: (txId, blockNumber, index).
struct EventLess {
    bool operator()(const ToCreditEvent& a, const ToCreditEvent& b) const
    {
        return std::tie(a.tx_id, a.block_number, a.index) <
               std::tie(b.tx_id, b.block_number, b.index);
    }
};

using EventSet = std::set<ToCreditEvent, EventLess>;

/// Refund instruction for a failed or expired credit. original_sender is the
/// user debited on the source shard; original_recipient the user that was
/// never credited.
struct RevertRecord {
    Endpoint original_sender;
    Amount amount = 0;
    Endpoint original_recipient;
    TxId tx_id{};

    bool operator==(const RevertRecord&) const = default;
};

struct RevertLess {
    bool operator()(const RevertRecord& a, const RevertRecord& b) const
    {
        return std::tie(a.tx_id, a.original_sender, a.original_recipient, a.amount) <
               std::tie(b.tx_id, b.original_sender, b.original_recipient, b.amount);
    }
};

using RevertSet = std::set<RevertRecord, RevertLess>;

/// One cell of the netted matrix. credits and reverts are transient: they
/// hold only records written by the owning shard's most recent block and are
/// cleared when the next block starts.
struct PartStateCell {
    SignedAmount balance = 0;
    EventSet credits;
    RevertSet reverts;

    bool operator==(const PartStateCell&) const = default;
};

/// Key of a pending-credit ledger entry: where the matching debits ran.
struct OutstandingKey {
    ShardId src_shard = 0;
    EEId src_ee = 0;
    BlockNumber src_block = 0;

    auto operator<=>(const OutstandingKey&) const = default;
};

using OutstandingCredits = std::map<OutstandingKey, EventSet>;

struct UserKey {
    EEId ee = 0;
    UserAddress user{};

    auto operator<=>(const UserKey&) const = default;
};

using UserBalances = std::map<UserKey, Amount>;

/// Per-shard committed state. All containers iterate in canonical order, so
/// hashing and wire encoding are deterministic regardless of insertion order.
struct ShardState {
    ShardId shard_id = 0;
    BlockNumber block_number = 0;
    // part_state[s][e] is this shard's record of EE e's balance on shard s.
    std::vector<std::vector<PartStateCell>> part_state;
    OutstandingCredits outstanding_credits;
    UserBalances user_balance;
    // Debit replay filter: txId -> block of inclusion. Entries older than the
    // time-out window are pruned; not part of the state commitment.
    std::map<TxId, BlockNumber> recent_tx_ids;

    static ShardState empty(ShardId shard, const Topology& topo);

    PartStateCell& cell(ShardId s, EEId e) { return part_state.at(s).at(e); }
    const PartStateCell& cell(ShardId s, EEId e) const { return part_state.at(s).at(e); }

    bool operator==(const ShardState&) const = default;
};

/// Per-block accumulator of EE-level outflow: how much each local EE owes
/// each (shard, EE) pair by the end of the block. Reset at block start,
/// consumed by the settlement step.
class TransferScratch {
public:
    struct FlowKey {
        EEId src_ee = 0;
        ShardId dest_shard = 0;
        EEId dest_ee = 0;

        auto operator<=>(const FlowKey&) const = default;
    };

    void reset() { flows_.clear(); totals_.clear(); }

    void add(EEId src_ee, ShardId dest_shard, EEId dest_ee, Amount x)
    {
        FlowKey key{src_ee, dest_shard, dest_ee};
        flows_[key] = checked_add(flows_[key], x);
        totals_[src_ee] = checked_add(totals_[src_ee], x);
    }

    /// Total outflow of one local EE across every destination pair.
    Amount total_outflow(EEId src_ee) const
    {
        const auto it = totals_.find(src_ee);
        return it == totals_.end() ? 0 : it->second;
    }

    /// Outflow of one local EE towards one destination pair (the literal
    /// per-pair quantity of the pair-gate compatibility mode).
    Amount pair_outflow(EEId src_ee, ShardId dest_shard, EEId dest_ee) const
    {
        const auto it = flows_.find(FlowKey{src_ee, dest_shard, dest_ee});
        return it == flows_.end() ? 0 : it->second;
    }

    const std::map<FlowKey, Amount>& flows() const { return flows_; }

    bool empty() const { return flows_.empty(); }

private:
    std::map<FlowKey, Amount> flows_;
    std::map<EEId, Amount> totals_;
};

/// A revert whose target account no longer exists: value stays at EE level.
struct LossRecord {
    RevertRecord revert;
    Slot slot = 0;

    bool operator==(const LossRecord&) const = default;
};

} // namespace xshard
