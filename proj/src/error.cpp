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

#include "abcover/error.hpp"

namespace abcover {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrimePower: return "not a prime power";
        case ErrorKind::MalformedInput: return "malformed input";
        case ErrorKind::InexactDivision: return "inexact division";
        case ErrorKind::NonPositiveClassNumber: return "non-positive class number";
        case ErrorKind::FunctionalEquation: return "functional equation violated";
        case ErrorKind::InconsistentOrders: return "inconsistent group orders";
        case ErrorKind::NoRationalPoint: return "no rational point";
        case ErrorKind::InvalidWeil: return "invalid Weil polynomial";
        case ErrorKind::Network: return "network failure";
        case ErrorKind::ResponseShape: return "unexpected response shape";
        case ErrorKind::Internal: return "internal error";
    }
    return "unknown";
}

}  // namespace abcover
