// Copyright 2026 The steadychain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace steadychain {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct InvalidSite : Error {
    using Error::Error;
};

struct InvalidModeIndex : Error {
    using Error::Error;
};

struct NonSymmetric : Error {
    using Error::Error;
};

struct NonHermitian : Error {
    using Error::Error;
};

struct NegativeRate : Error {
    using Error::Error;
};

struct DuplicateMode : Error {
    using Error::Error;
};

struct NonUniqueSteadyState : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct StepSizeUnderflow : Error {
    using Error::Error;
};

struct NegativeExpectation : Error {
    using Error::Error;
};

struct MemoryBudgetExceeded : Error {
    using Error::Error;
};

// Malformed parameter sets (inconsistent rates, out-of-range fields).
struct InvalidSpec : Error {
    using Error::Error;
};

// Malformed experiment configuration files.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace steadychain
