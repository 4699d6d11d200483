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

#include "xshard/signature.hpp"

#include "xshard/encode.hpp"
#include "xshard/sha256.hpp"

namespace xshard {

Bytes debit_signing_message(const DebitTx& tx)
{
    Encoder e;
    e.fixed(tx.id);
    encode(e, tx.sender);
    encode(e, tx.recipient);
    e.u128(tx.amount);
    return e.take();
}

Hash32 HashSignatureScheme::user_secret(const UserAddress& user)
{
    static constexpr std::uint8_t tag[] = {'k', 'e', 'y', ':'};
    return sha256({ByteView{tag, sizeof(tag)}, ByteView{user.data(), user.size()}});
}

Bytes HashSignatureScheme::sign(const DebitTx& tx) const
{
    const Bytes msg = debit_signing_message(tx);
    const Hash32 secret = user_secret(tx.sender.user);
    const Hash32 sig = sha256({ByteView{msg}, ByteView{secret.data(), secret.size()}});
    return Bytes{sig.begin(), sig.end()};
}

bool HashSignatureScheme::verify(const DebitTx& tx) const
{
    if (tx.signature.size() != 32)
        return false;
    const Bytes expected = sign(tx);
    return tx.signature == expected;
}

} // namespace xshard
