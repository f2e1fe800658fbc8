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

#include "abcover/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <istream>
#include <map>
#include <sstream>
#include <thread>

#include "abcover/error.hpp"

namespace abcover {

const char* to_string(Evidence e) noexcept {
    switch (e) {
        case Evidence::Verified: return "verified";
        case Evidence::Unverified: return "existence_unverified";
        case Evidence::NoCurve: return "no_curve";
    }
    return "unknown";
}

const char* to_string(RejectionReason r) noexcept {
    switch (r) {
        case RejectionReason::BaseFieldNotAllowed: return "base field not allowed";
        case RejectionReason::BaseGenusBelowMinimum: return "base genus below minimum";
        case RejectionReason::NoRationalPoint: return "no rational point";
        case RejectionReason::InvalidWeil: return "invalid Weil polynomial";
        case RejectionReason::CoverGenusAboveCap: return "cover genus above cap";
        case RejectionReason::NoCurveInClass: return "no curve in class";
    }
    return "unknown";
}

Evaluation evaluate_candidate(const CandidateRecord& candidate, const RecordsTable& records,
                              const SearchConfig& config) {
    const LPolynomial& L = candidate.lpoly;
    auto reject = [&](RejectionReason reason, std::string detail) {
        return Rejection{candidate.label, reason, std::move(detail)};
    };

    if (config.base_fields && !config.base_fields->contains(L.field().q()))
        return reject(RejectionReason::BaseFieldNotAllowed, "q = " + L.field().to_string());
    if (L.genus() < config.min_base_genus)
        return reject(RejectionReason::BaseGenusBelowMinimum, "g = " + std::to_string(L.genus()));
    const Integer n1 = L.field().q() + 1 + L[1];
    if (n1 < 1) return reject(RejectionReason::NoRationalPoint, "N_1 = " + n1.get_str());

    Evidence evidence = Evidence::Unverified;
    if (candidate.curve_evidence) evidence = *candidate.curve_evidence > 0 ? Evidence::Verified : Evidence::NoCurve;
    if (evidence == Evidence::NoCurve && config.require_curve_evidence)
        return reject(RejectionReason::NoCurveInClass, "curve_count = 0");

    std::optional<ConstantFieldCover> cover;
    try {
        cover = constant_field_cover(L);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidWeil) return reject(RejectionReason::InvalidWeil, e.what());
        if (e.kind() == ErrorKind::NoRationalPoint) return reject(RejectionReason::NoRationalPoint, e.what());
        throw;
    }
    const CoverInvariants& inv = cover->invariants;
    if (inv.cover_genus > config.max_cover_genus)
        return reject(RejectionReason::CoverGenusAboveCap, "g_Y = " + inv.cover_genus.get_str());

    const Integer& target = cover->target_field.q();
    const RecordsEntry* entry = records.find(target, inv.cover_genus);
    return SearchRow{candidate.label,
                     cover->base_field,
                     cover->target_field,
                     inv,
                     classify_candidate(records, target, inv.cover_genus, inv.cover_points),
                     entry ? entry->best_lower : std::nullopt,
                     evidence};
}

SearchReport run_search(std::span<const CandidateRecord> candidates, const RecordsTable& records,
                        const SearchConfig& config) {
    SearchReport report;
    report.summary.candidates = candidates.size();

    std::vector<std::optional<Evaluation>> results(candidates.size());
    unsigned workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, candidates.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i; (i = next.fetch_add(1)) < candidates.size();)
                        results[i] = evaluate_candidate(candidates[i], records, config);
                } catch (...) {
                    failures[w] = std::current_exception();
                    next = candidates.size();
                }
            });
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);

    using Key = std::pair<Integer, Integer>;
    std::map<Key, SearchRow> best;
    std::size_t kept = 0;
    for (auto& r : results) {
        if (auto* rej = std::get_if<Rejection>(&*r)) {
            ++report.summary.rejected[static_cast<std::size_t>(rej->reason)];
            continue;
        }
        auto& row = std::get<SearchRow>(*r);
        ++report.summary.classified[static_cast<std::size_t>(row.classification)];
        const bool beaten = row.classification == Classification::Below || row.classification == Classification::Ties;
        if (beaten && !config.include_all_rows) {
            ++report.summary.filtered_out;
            continue;
        }
        ++kept;
        Key key{row.target_field.q(), row.invariants.cover_genus};
        auto it = best.find(key);
        if (it == best.end()) {
            best.emplace(std::move(key), std::move(row));
            continue;
        }
        const auto& cur = it->second;
        const int c = cmp(row.invariants.cover_points, cur.invariants.cover_points);
        if (c > 0 || (c == 0 && row.label < cur.label)) it->second = std::move(row);
    }

    // Map order is (target q, g_Y); each key holds one row.
    for (auto& [key, row] : best) report.rows.push_back(std::move(row));
    report.summary.deduplicated = kept - report.rows.size();
    report.summary.emitted = report.rows.size();
    return report;
}

namespace {

Integer parse_integer(const std::string& cell, std::size_t lineno, const char* column) {
    Integer v;
    if (cell.empty() || cell.find_first_not_of("0123456789") != std::string::npos || v.set_str(cell, 10) != 0)
        throw Error(ErrorKind::MalformedInput,
                    "table fixture line " + std::to_string(lineno) + ": bad " + column + " '" + cell + "'");
    return v;
}

}  // namespace

std::vector<TableRow> load_table_fixture(std::istream& in) {
    std::vector<TableRow> rows;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!header) {
            if (line != "label,target_q,group_order,cover_genus,cover_points,old_record")
                throw Error(ErrorKind::MalformedInput, "unexpected table fixture header");
            header = true;
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
        if (line.back() == ',') cells.emplace_back();
        if (cells.size() != 6)
            throw Error(ErrorKind::MalformedInput, "table fixture line " + std::to_string(lineno) + ": expected 6 cells");
        TableRow row{cells[0],
                     parse_integer(cells[1], lineno, "target_q"),
                     parse_integer(cells[2], lineno, "group_order"),
                     parse_integer(cells[3], lineno, "cover_genus"),
                     parse_integer(cells[4], lineno, "cover_points"),
                     std::nullopt};
        if (!cells[5].empty()) row.old_record = parse_integer(cells[5], lineno, "old_record");
        rows.push_back(std::move(row));
    }
    if (!header) throw Error(ErrorKind::MalformedInput, "table fixture is missing its header");
    return rows;
}

std::vector<TableRow> load_table_fixture(std::string_view csv) {
    std::istringstream in{std::string(csv)};
    return load_table_fixture(in);
}

VerificationReport verify_published_tables(std::span<const TableRow> fixture, const RecordsTable& records) {
    VerificationReport report;
    for (const auto& expected : fixture) {
        VerificationRow row{expected, std::nullopt, std::nullopt, std::nullopt, {}};
        try {
            row.computed = constant_field_cover(lpoly_from_label(expected.label));
        } catch (const Error& e) {
            row.mismatches.push_back(e.what());
        }
        if (row.computed) {
            const auto& c = *row.computed;
            const auto& inv = c.invariants;
            auto check = [&](const char* what, const Integer& want, const Integer& got) {
                if (want != got)
                    row.mismatches.push_back(std::string(what) + ": expected " + want.get_str() + ", computed " +
                                             got.get_str());
            };
            check("target field", expected.target_q, c.target_field.q());
            check("|G|", expected.group_order, inv.quotient_order);
            check("g_Y", expected.cover_genus, inv.cover_genus);
            check("#Y", expected.cover_points, inv.cover_points);

            const RecordsEntry* entry = records.find(c.target_field.q(), inv.cover_genus);
            if (entry) row.records_lower = entry->best_lower;
            if (row.records_lower != expected.old_record)
                row.mismatches.push_back(
                    "old record: expected " + (expected.old_record ? expected.old_record->get_str() : "none") +
                    ", records table has " + (row.records_lower ? row.records_lower->get_str() : "none"));
            row.classification = classify_candidate(records, c.target_field.q(), inv.cover_genus, inv.cover_points);
            const auto want = expected.old_record ? Classification::Improves : Classification::NewEntry;
            if (*row.classification != want)
                row.mismatches.push_back(std::string("classification: expected ") + to_string(want) + ", got " +
                                         to_string(*row.classification));
        }
        if (row.passed()) ++report.passed;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace abcover
