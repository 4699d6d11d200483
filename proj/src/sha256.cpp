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

#include "xshard/sha256.hpp"

#include <openssl/evp.h>

namespace xshard {

namespace {

struct DigestCtx {
    EVP_MD_CTX* ctx;
    DigestCtx() : ctx(EVP_MD_CTX_new())
    {
        if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1)
            throw StructuralError("sha256 init failed");
    }
    ~DigestCtx() { EVP_MD_CTX_free(ctx); }
    DigestCtx(const DigestCtx&) = delete;
    DigestCtx& operator=(const DigestCtx&) = delete;
};

} // namespace

Hash32 sha256(ByteView data)
{
    return sha256({data});
}

Hash32 sha256(std::initializer_list<ByteView> parts)
{
    DigestCtx d;
    for (const ByteView part : parts) {
        if (!part.empty() && EVP_DigestUpdate(d.ctx, part.data(), part.size()) != 1)
            throw StructuralError("sha256 update failed");
    }
    Hash32 out{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(d.ctx, out.data(), &len) != 1 || len != out.size())
        throw StructuralError("sha256 final failed");
    return out;
}

} // namespace xshard
