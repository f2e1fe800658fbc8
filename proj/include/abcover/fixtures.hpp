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

#ifndef ABCOVER_FIXTURES_HPP
#define ABCOVER_FIXTURES_HPP

#include <string_view>

namespace abcover::fixtures {

// Copies of data/*.csv and data/*.jsonl compiled into the library.
std::string_view published_tables_csv() noexcept;
std::string_view old_records_csv() noexcept;
std::string_view published_candidates_jsonl() noexcept;

}  // namespace abcover::fixtures

#endif
