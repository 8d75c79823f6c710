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

#include <stdexcept>
#include <string>

namespace sgclone {

/// Requested cloner is not an N -> M map with M >= N >= 1.
struct invalid_cloner : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two cloners cannot be chained (copy counts or quadrature frames differ).
struct composition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A caller broke an operation's precondition (e.g. anisotropic noise on a coherent input).
struct contract_violation : std::logic_error {
    using std::logic_error::logic_error;
};

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Fock-space cutoff too small for the requested accuracy.
struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace sgclone
