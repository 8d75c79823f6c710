// Copyright 2026 The sgclone Authors
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

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace sgclone {

/// Exact value type for closed-form variances and fidelities with finite N, M.
using Rational = boost::rational<std::int64_t>;

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return boost::rational_cast<double>(v); }

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& v) {
    if (v.denominator() == 1) {
        return std::to_string(v.numerator());
    }
    return std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
}

template <class T>
inline constexpr bool is_exact_v = false;
template <>
inline constexpr bool is_exact_v<Rational> = true;

}  // namespace sgclone
