// Copyright 2026 The ulab Authors
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

#include <string>

namespace ulab {

/// Value rounded to `digits` significant decimal digits (as printed by %.*g).
double round_significant(double value, int digits);
/// %.*g text with `digits` significant digits.
std::string format_significant(double value, int digits);

inline constexpr int kJsonDigits = 9;
inline constexpr int kCsvDigits = 6;

}  // namespace ulab
