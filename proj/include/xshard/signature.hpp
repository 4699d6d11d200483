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

#include "xshard/types.hpp"

namespace xshard {

/// Bytes a debit signature binds: (id, sender, recipient, amount).
Bytes debit_signing_message(const DebitTx& tx);

/// Pluggable authentication for debit transactions. Signatures are pure
/// plumbing here, so the default scheme is a keyed hash, not real ECDSA.
class SignatureScheme {
public:
    virtual ~SignatureScheme() = default;
    virtual Bytes sign(const DebitTx& tx) const = 0;
    virtual bool verify(const DebitTx& tx) const = 0;
};

/// Deterministic test scheme: signature = SHA-256(message || per-user secret),
/// with the secret derived from the sender address. Malformed bytes verify
/// as false, never as an error.
class HashSignatureScheme final : public SignatureScheme {
public:
    Bytes sign(const DebitTx& tx) const override;
    bool verify(const DebitTx& tx) const override;

    static Hash32 user_secret(const UserAddress& user);
};

} // namespace xshard
