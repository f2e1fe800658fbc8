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

#include "abcover/records.hpp"

#include <istream>
#include <sstream>

#include "abcover/error.hpp"

namespace abcover {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::optional<Integer> parse_cell(const std::string& cell, bool allow_zero, std::size_t lineno, const char* column) {
    if (cell.empty()) return std::nullopt;
    Integer v;
    if (cell.find_first_not_of("0123456789") != std::string::npos || v.set_str(cell, 10) != 0 ||
        (v == 0 && !allow_zero))
        throw Error(ErrorKind::MalformedInput,
                    "records line " + std::to_string(lineno) + ": bad " + column + " '" + cell + "'");
    return v;
}

}  // namespace

const char* to_string(Classification c) noexcept {
    switch (c) {
        case Classification::Improves: return "improves";
        case Classification::Ties: return "ties";
        case Classification::Below: return "below";
        case Classification::NewEntry: return "new_entry";
        case Classification::ExceedsUpperBound: return "exceeds_upper_bound";
    }
    return "unknown";
}

void RecordsTable::insert(RecordsEntry entry) {
    if (entry.best_lower && entry.best_upper && *entry.best_lower > *entry.best_upper)
        throw Error(ErrorKind::MalformedInput, "records entry (" + entry.q.get_str() + ", " + entry.genus.get_str() +
                                                   ") has lower bound above upper bound");
    auto key = std::make_pair(entry.q, entry.genus);
    if (!entries_.emplace(key, std::move(entry)).second)
        throw Error(ErrorKind::MalformedInput,
                    "duplicate records entry (" + key.first.get_str() + ", " + key.second.get_str() + ")");
}

const RecordsEntry* RecordsTable::find(const Integer& q, const Integer& genus) const {
    const auto it = entries_.find({q, genus});
    return it == entries_.end() ? nullptr : &it->second;
}

std::vector<RecordsEntry> RecordsTable::entries() const {
    std::vector<RecordsEntry> out;
    out.reserve(entries_.size());
    for (const auto& [key, e] : entries_) out.push_back(e);
    return out;
}

RecordsTable load_records(std::istream& in) {
    RecordsTable table;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!header) {
            if (line != "q,genus,lower,upper")
                throw Error(ErrorKind::MalformedInput, "records header must be 'q,genus,lower,upper'");
            header = true;
            continue;
        }
        const auto cells = split_csv(line);
        if (cells.size() != 4)
            throw Error(ErrorKind::MalformedInput, "records line " + std::to_string(lineno) + ": expected 4 cells");
        const auto q = parse_cell(cells[0], false, lineno, "q");
        const auto g = parse_cell(cells[1], true, lineno, "genus");
        if (!q || !g)
            throw Error(ErrorKind::MalformedInput, "records line " + std::to_string(lineno) + ": q and genus are required");
        FieldSize::from_cardinality(*q);
        table.insert({*q, *g, parse_cell(cells[2], false, lineno, "lower"), parse_cell(cells[3], false, lineno, "upper")});
    }
    if (!header) throw Error(ErrorKind::MalformedInput, "records CSV is missing its header");
    return table;
}

RecordsTable load_records(std::string_view csv) {
    std::istringstream in{std::string(csv)};
    return load_records(in);
}

std::string save_records(const RecordsTable& table) {
    std::ostringstream os;
    os << "q,genus,lower,upper\n";
    for (const auto& e : table.entries()) {
        os << e.q << ',' << e.genus << ',';
        if (e.best_lower) os << *e.best_lower;
        os << ',';
        if (e.best_upper) os << *e.best_upper;
        os << '\n';
    }
    return os.str();
}

Classification classify_candidate(const RecordsTable& table, const Integer& q, const Integer& genus,
                                  const Integer& n_points) {
    const RecordsEntry* e = table.find(q, genus);
    if (e && e->best_upper && n_points > *e->best_upper) return Classification::ExceedsUpperBound;
    if (!e || !e->best_lower) return Classification::NewEntry;
    const int c = cmp(n_points, *e->best_lower);
    return c > 0 ? Classification::Improves : (c == 0 ? Classification::Ties : Classification::Below);
}

Integer serre_weil_upper(const Integer& q, const Integer& genus) {
    Integer root;
    const Integer four_q = 4 * q;
    mpz_sqrt(root.get_mpz_t(), four_q.get_mpz_t());
    return q + 1 + genus * root;
}

}  // namespace abcover
