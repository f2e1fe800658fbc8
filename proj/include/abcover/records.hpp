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

#ifndef ABCOVER_RECORDS_HPP
#define ABCOVER_RECORDS_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abcover/lpoly.hpp"

namespace abcover {

/// Best known bounds on the number of rational points of a genus-g curve over F_q.
struct RecordsEntry {
    Integer q;
    Integer genus;
    std::optional<Integer> best_lower;
    std::optional<Integer> best_upper;

    friend bool operator==(const RecordsEntry&, const RecordsEntry&) = default;
};

enum class Classification { Improves, Ties, Below, NewEntry, ExceedsUpperBound };

const char* to_string(Classification c) noexcept;

class RecordsTable {
   public:
    /// Throws Error(MalformedInput) on a duplicate (q, genus) key or lower > upper.
    void insert(RecordsEntry entry);

    const RecordsEntry* find(const Integer& q, const Integer& genus) const;
    std::vector<RecordsEntry> entries() const;  // ordered by (q, genus)
    std::size_t size() const noexcept { return entries_.size(); }

   private:
    std::map<std::pair<Integer, Integer>, RecordsEntry> entries_;
};

/// CSV with header "q,genus,lower,upper"; an empty cell is an unknown bound.
RecordsTable load_records(std::istream& in);
RecordsTable load_records(std::string_view csv);
std::string save_records(const RecordsTable& table);

/// ExceedsUpperBound takes precedence: it means the candidate or the table is wrong.
Classification classify_candidate(const RecordsTable& table, const Integer& q, const Integer& genus,
                                  const Integer& n_points);

/// q + 1 + g floor(2 sqrt q).
Integer serre_weil_upper(const Integer& q, const Integer& genus);

}  // namespace abcover

#endif
