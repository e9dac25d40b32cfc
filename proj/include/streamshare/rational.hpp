// Copyright 2026 The streamshare Authors
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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace streamshare {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

Rational makeRational(std::int64_t num, std::int64_t den = 1);

/// "3/2", "2", "0". Canonical form, so equal values render identically.
std::string toFractionString(const Rational& value);

/// Fixed-point rendering rounded half away from zero, e.g. toDecimalString(2/3, 6) == "0.666667".
std::string toDecimalString(const Rational& value, int places = 6);

/// Accepts "7", "-3", "3/2", "0.25". Throws Error(ParseError) otherwise.
Rational parseRational(std::string_view text);

Rational sum(std::span<const Rational> values);

}  // namespace streamshare
