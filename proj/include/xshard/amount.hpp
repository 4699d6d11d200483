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

#include "xshard/bytes.hpp"

#include <cstdint>
#include <string>

namespace xshard {

// Wei-denominated values. 128 bits keeps overflow unreachable for any
// simulation we run, but every arithmetic step is still checked.
using Amount = unsigned __int128;
using SignedAmount = __int128;

inline Amount checked_add(Amount a, Amount b)
{
    const Amount r = a + b;
    if (r < a)
        throw StructuralError("amount addition overflow");
    return r;
}

inline Amount checked_sub(Amount a, Amount b)
{
    if (b > a)
        throw StructuralError("amount subtraction underflow");
    return a - b;
}

inline SignedAmount checked_add(SignedAmount a, SignedAmount b)
{
    SignedAmount r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw StructuralError("signed amount addition overflow");
    return r;
}

inline SignedAmount checked_sub(SignedAmount a, SignedAmount b)
{
    SignedAmount r = 0;
    if (__builtin_sub_overflow(a, b, &r))
        throw StructuralError("signed amount subtraction overflow");
    return r;
}

inline SignedAmount to_signed(Amount a)
{
    if (a > static_cast<Amount>(~(static_cast<Amount>(1) << 127)))
        throw StructuralError("amount does not fit a signed 128-bit value");
    return static_cast<SignedAmount>(a);
}

std::string amount_to_string(Amount a);
std::string signed_amount_to_string(SignedAmount a);
Amount amount_from_string(const std::string& s);
SignedAmount signed_amount_from_string(const std::string& s);

} // namespace xshard
