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

#ifndef ABCOVER_LMFDB_HPP
#define ABCOVER_LMFDB_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "abcover/lpoly.hpp"

namespace abcover {

/// LMFDB isogeny-class label "g.q.c1_c2_..._cg". Each code is a base-26
/// numeral over a..z, most significant digit first; a code of two or more
/// letters with a leading 'a' is the negation of the remaining code.
struct IsogenyClassLabel {
    int genus = 0;
    Integer q;
    std::vector<std::string> codes;

    /// Throws Error(MalformedInput) on bad grammar, arity or non-canonical
    /// codes and Error(NotPrimePower) when q is not a prime power.
    static IsogenyClassLabel parse(std::string_view text);

    std::vector<Integer> coefficients() const;
    std::string to_string() const;

    friend bool operator==(const IsogenyClassLabel&, const IsogenyClassLabel&) = default;
};

struct DecodedLabel {
    int genus;
    FieldSize field;
    std::vector<Integer> half;  // a_1..a_g
};

std::string encode_coefficient(const Integer& value);
Integer decode_coefficient(std::string_view code);

DecodedLabel decode_label(std::string_view text);
std::string encode_label(int genus, const FieldSize& field, std::span<const Integer> half);

/// decode_label followed by complete_from_half.
LPolynomial lpoly_from_label(std::string_view text);

/// One isogeny class from a dataset, with the number of curves (or
/// Jacobians) known to lie in it when the source provides that.
struct CandidateRecord {
    std::string label;
    LPolynomial lpoly;
    std::optional<std::uint64_t> curve_evidence;
    std::string source;
};

CandidateRecord make_candidate(std::string_view label, std::optional<std::uint64_t> curve_evidence = {},
                               std::string source = {});

struct DatasetOptions {
    bool fail_fast = false;
    std::string source = "<stream>";
};

struct DatasetError {
    std::size_t line;
    std::string message;
};

struct DatasetParseResult {
    std::vector<CandidateRecord> records;
    std::vector<DatasetError> errors;
    std::size_t skipped_lines = 0;  // blank and '#' comment lines
};

/// Line-delimited JSON: one object per line with required "label" and
/// optional nonnegative integer "curve_count"; other keys are ignored.
/// In fail-fast mode the first bad line throws Error(MalformedInput).
DatasetParseResult parse_dataset(std::istream& in, const DatasetOptions& options = {});

/// Serializes records in the dataset format (label and curve_count only).
std::string to_jsonl(std::span<const CandidateRecord> records);

}  // namespace abcover

#endif
