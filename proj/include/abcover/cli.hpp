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

#ifndef ABCOVER_CLI_HPP
#define ABCOVER_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abcover/search.hpp"

namespace abcover {

enum class OutputFormat { Human, Csv, Json };

std::optional<OutputFormat> parse_output_format(std::string_view name);

/// Human tables follow the published layout: label, |G|, g_Y, #Y(F_q), old record.
std::string render_report(const SearchReport& report, OutputFormat format);
std::string render_report(const VerificationReport& report, OutputFormat format);

/// Entry point behind the abcover executable. args excludes the program
/// name. Results go to out and diagnostics to err. Returns 0 on success, 1 on
/// domain errors (invalid input, failed verification), 2 on usage errors.
/// Without --format, output is human-readable when out_is_terminal and JSON
/// otherwise.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            bool out_is_terminal = false);

}  // namespace abcover

#endif
