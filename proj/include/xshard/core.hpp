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

#include "xshard/signature.hpp"
#include "xshard/types.hpp"

#include <span>

namespace xshard {

using PartStateMatrix = std::vector<std::vector<PartStateCell>>;

/// The real balance of EE `ee` on shard `shard`: the sum of that cell's
/// part-balance over every shard's matrix. One matrix per shard, all of
/// genesis dimensions.
SignedAmount real_balance(std::span<const PartStateMatrix> part_states,
                          ShardId shard, EEId ee);

/// EE-level transfer inside one shard's matrix: move x from the local cell
/// [local_shard][src_ee] to [dest_shard][dest_ee]. Both writes touch only
/// this matrix; part-balances may go negative, solvency is gated elsewhere.
void netted_transfer(PartStateMatrix& part_state, ShardId local_shard, EEId src_ee,
                     ShardId dest_shard, EEId dest_ee, Amount x);

/// True iff the signature binds (id, sender, recipient, amount) to the
/// sender under the given scheme. Malformed bytes are a false, not an error.
bool verify_signature(const DebitTx& tx, const SignatureScheme& scheme);

} // namespace xshard
