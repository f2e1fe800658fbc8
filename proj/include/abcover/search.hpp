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

#ifndef ABCOVER_SEARCH_HPP
#define ABCOVER_SEARCH_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "abcover/cover.hpp"
#include "abcover/lmfdb.hpp"
#include "abcover/records.hpp"

namespace abcover {

struct SearchConfig {
    int max_cover_genus = 50;
    int min_base_genus = 2;
    /// Drop classes the data says contain no curve. Classes without any
    /// evidence are always kept and tagged unverified.
    bool require_curve_evidence = true;
    /// Allowed base fields r (targets are r^2); nullopt allows all.
    std::optional<std::set<Integer>> base_fields = std::set<Integer>{2, 3, 4, 5};
    /// Emit Below/Ties rows as well.
    bool include_all_rows = false;
    /// Worker threads for candidate evaluation; 0 uses the hardware count.
    unsigned threads = 0;
};

enum class Evidence { Verified, Unverified, NoCurve };

const char* to_string(Evidence e) noexcept;

struct SearchRow {
    std::string label;
    FieldSize base_field;
    FieldSize target_field;
    CoverInvariants invariants;
    Classification classification;
    std::optional<Integer> old_lower;
    Evidence evidence;
};

enum class RejectionReason {
    BaseFieldNotAllowed,
    BaseGenusBelowMinimum,
    NoRationalPoint,
    InvalidWeil,
    CoverGenusAboveCap,
    NoCurveInClass,
};
inline constexpr std::size_t kRejectionReasonCount = 6;
inline constexpr std::size_t kClassificationCount = 5;

const char* to_string(RejectionReason r) noexcept;

struct Rejection {
    std::string label;
    RejectionReason reason;
    std::string detail;
};

using Evaluation = std::variant<SearchRow, Rejection>;

/// Runs the constant field extension construction on one class and compares
/// the resulting cover against the records table.
Evaluation evaluate_candidate(const CandidateRecord& candidate, const RecordsTable& records,
                              const SearchConfig& config);

struct SearchSummary {
    std::size_t candidates = 0;
    std::array<std::size_t, kClassificationCount> classified{};  // before filtering
    std::array<std::size_t, kRejectionReasonCount> rejected{};
    std::size_t filtered_out = 0;
    std::size_t deduplicated = 0;
    std::size_t emitted = 0;
};

struct SearchReport {
    std::vector<SearchRow> rows;  // sorted by (target q, g_Y, label)
    SearchSummary summary;
};

/// Evaluation runs in parallel; filtering, deduplication per (target q, g_Y)
/// and sorting are sequential, so the report does not depend on threads.
SearchReport run_search(std::span<const CandidateRecord> candidates, const RecordsTable& records,
                        const SearchConfig& config);

/// One expected row of a published record table.
struct TableRow {
    std::string label;
    Integer target_q;
    Integer group_order;
    Integer cover_genus;
    Integer cover_points;
    std::optional<Integer> old_record;  // nullopt: no previous entry
};

/// CSV "label,target_q,group_order,cover_genus,cover_points,old_record".
std::vector<TableRow> load_table_fixture(std::istream& in);
std::vector<TableRow> load_table_fixture(std::string_view csv);

struct VerificationRow {
    TableRow expected;
    std::optional<ConstantFieldCover> computed;
    std::optional<Classification> classification;
    std::optional<Integer> records_lower;
    std::vector<std::string> mismatches;

    bool passed() const noexcept { return mismatches.empty(); }
};

struct VerificationReport {
    std::vector<VerificationRow> rows;
    std::size_t passed = 0;

    bool all_passed() const noexcept { return passed == rows.size(); }
};

/// Recomputes every row from its label alone. A row passes when the target
/// field, |G|, g_Y and #Y agree, the records table holds the expected old
/// record at (target q, g_Y), and the cover improves on it (or is a new entry).
VerificationReport verify_published_tables(std::span<const TableRow> fixture, const RecordsTable& records);

}  // namespace abcover

#endif
