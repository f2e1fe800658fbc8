/*
   Copyright 2026 The abcover Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ABCOVER_ERROR_HPP
#define ABCOVER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace abcover {

enum class ErrorKind {
    NotPrimePower,
    MalformedInput,
    InexactDivision,
    NonPositiveClassNumber,
    FunctionalEquation,
    InconsistentOrders,
    NoRationalPoint,
    InvalidWeil,
    Network,
    ResponseShape,
    Internal,
};

const char* to_string(ErrorKind kind) noexcept;

/// Domain error raised by library operations. The kind is stable and
/// intended for programmatic dispatch; the message is for humans.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace abcover

#endif
