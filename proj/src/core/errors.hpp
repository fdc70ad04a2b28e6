// gfra - link-level simulation and solvers for grant-free random access
// Copyright (C) 2026 the gfra authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace gfra {

// Invalid arguments raise std::invalid_argument directly; the types below
// distinguish the remaining error classes at the C boundary.

struct OutOfRangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CalibrationError : std::runtime_error {
    explicit CalibrationError(const std::string &what, int k)
        : std::runtime_error(what), k_failed(k) {}
    int k_failed;
};

struct UndefinedMetricError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gfra
