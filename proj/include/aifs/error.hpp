// ----------------------------------------------------------------------------
// Copyright 2026 The aifs-spatial Authors
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
// ----------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aifs {

enum class ErrorKind {
    EmptyInput,
    IndexError,
    LengthMismatch,
    NotFuzzy,
    InvalidPartition,
    InvalidParams,
    InvalidElement,
    Parse,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::IndexError: return "IndexError";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotFuzzy: return "NotFuzzy";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

/// Single exception type for the library; `kind()` carries the category.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace aifs
