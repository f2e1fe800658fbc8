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

#include "abcover/lmfdb.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "json.hpp"

#include "abcover/error.hpp"

namespace abcover {

namespace {

[[noreturn]] void malformed(std::string_view text, const std::string& why) {
    throw Error(ErrorKind::MalformedInput, "bad label '" + std::string(text) + "': " + why);
}

bool is_code(std::string_view code) {
    if (code.empty()) return false;
    for (char c : code)
        if (c < 'a' || c > 'z') return false;
    // canonical: "a" is zero; otherwise a leading 'a' marks a negative value
    // whose magnitude code is itself canonical and nonzero.
    if (code.size() >= 2 && code[0] == 'a') return code[1] != 'a';
    return true;
}

Integer decode_magnitude(std::string_view code) {
    Integer v = 0;
    for (char c : code) v = v * 26 + (c - 'a');
    return v;
}

std::string encode_magnitude(Integer v) {
    if (v == 0) return "a";
    std::string out;
    while (v > 0) {
        const unsigned long digit = mpz_fdiv_ui(v.get_mpz_t(), 26);
        out.push_back(static_cast<char>('a' + digit));
        v /= 26;
    }
    return {out.rbegin(), out.rend()};
}

int parse_positive_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1 || s.front() == '0') return -1;
    return v;
}

}  // namespace

std::string encode_coefficient(const Integer& value) {
    if (value < 0) return "a" + encode_magnitude(-value);
    return encode_magnitude(value);
}

Integer decode_coefficient(std::string_view code) {
    if (!is_code(code))
        throw Error(ErrorKind::MalformedInput, "bad coefficient code '" + std::string(code) + "'");
    if (code.size() >= 2 && code[0] == 'a') return -decode_magnitude(code.substr(1));
    return decode_magnitude(code);
}

IsogenyClassLabel IsogenyClassLabel::parse(std::string_view text) {
    const auto dot1 = text.find('.');
    const auto dot2 = dot1 == std::string_view::npos ? dot1 : text.find('.', dot1 + 1);
    if (dot2 == std::string_view::npos) malformed(text, "expected <g>.<q>.<codes>");

    IsogenyClassLabel label;
    label.genus = parse_positive_int(text.substr(0, dot1));
    if (label.genus < 1) malformed(text, "genus must be a positive integer");
    const std::string_view qtext = text.substr(dot1 + 1, dot2 - dot1 - 1);
    if (qtext.empty() || qtext.front() == '0' || qtext.find_first_not_of("0123456789") != std::string_view::npos)
        malformed(text, "field size must be a positive integer");
    label.q = Integer(std::string(qtext));
    FieldSize::from_cardinality(label.q);

    std::string_view rest = text.substr(dot2 + 1);
    while (true) {
        const auto us = rest.find('_');
        const std::string_view code = rest.substr(0, us);
        if (code.empty()) malformed(text, "empty coefficient code");
        if (!is_code(code)) malformed(text, "invalid coefficient code '" + std::string(code) + "'");
        label.codes.emplace_back(code);
        if (us == std::string_view::npos) break;
        rest = rest.substr(us + 1);
    }
    if (label.codes.size() != static_cast<std::size_t>(label.genus))
        malformed(text, "coefficient count mismatch: genus " + std::to_string(label.genus) + " needs " +
                            std::to_string(label.genus) + " codes, got " + std::to_string(label.codes.size()));
    return label;
}

std::vector<Integer> IsogenyClassLabel::coefficients() const {
    std::vector<Integer> out;
    out.reserve(codes.size());
    for (const auto& c : codes) out.push_back(decode_coefficient(c));
    return out;
}

std::string IsogenyClassLabel::to_string() const {
    std::string out = std::to_string(genus) + "." + q.get_str() + ".";
    for (std::size_t i = 0; i < codes.size(); ++i) out += (i ? "_" : "") + codes[i];
    return out;
}

DecodedLabel decode_label(std::string_view text) {
    const auto label = IsogenyClassLabel::parse(text);
    return {label.genus, FieldSize::from_cardinality(label.q), label.coefficients()};
}

std::string encode_label(int genus, const FieldSize& field, std::span<const Integer> half) {
    if (genus < 1 || half.size() != static_cast<std::size_t>(genus))
        throw Error(ErrorKind::MalformedInput, "label needs exactly g >= 1 coefficients");
    IsogenyClassLabel label{genus, field.q(), {}};
    for (const auto& a : half) label.codes.push_back(encode_coefficient(a));
    return label.to_string();
}

LPolynomial lpoly_from_label(std::string_view text) {
    const auto d = decode_label(text);
    return complete_from_half(d.field, d.genus, d.half);
}

CandidateRecord make_candidate(std::string_view label, std::optional<std::uint64_t> curve_evidence,
                               std::string source) {
    auto lpoly = lpoly_from_label(label);
    return {std::string(label), std::move(lpoly), curve_evidence, std::move(source)};
}

DatasetParseResult parse_dataset(std::istream& in, const DatasetOptions& options) {
    DatasetParseResult result;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            ++result.skipped_lines;
            continue;
        }
        try {
            const auto obj = nlohmann::json::parse(line);
            if (!obj.is_object()) throw Error(ErrorKind::MalformedInput, "expected a JSON object");
            const auto label = obj.find("label");
            if (label == obj.end() || !label->is_string())
                throw Error(ErrorKind::MalformedInput, "missing string field \"label\"");
            std::optional<std::uint64_t> evidence;
            if (const auto cc = obj.find("curve_count"); cc != obj.end() && !cc->is_null()) {
                if (!cc->is_number_unsigned())
                    throw Error(ErrorKind::MalformedInput, "\"curve_count\" must be a nonnegative integer");
                evidence = cc->get<std::uint64_t>();
            }
            result.records.push_back(make_candidate(label->get<std::string>(), evidence,
                                                    options.source + ":" + std::to_string(lineno)));
        } catch (const std::exception& e) {
            if (options.fail_fast)
                throw Error(ErrorKind::MalformedInput,
                            options.source + ":" + std::to_string(lineno) + ": " + e.what());
            result.errors.push_back({lineno, e.what()});
        }
    }
    return result;
}

std::string to_jsonl(std::span<const CandidateRecord> records) {
    std::ostringstream os;
    for (const auto& r : records) {
        nlohmann::ordered_json obj;
        obj["label"] = r.label;
        if (r.curve_evidence) obj["curve_count"] = *r.curve_evidence;
        os << obj.dump() << '\n';
    }
    return os.str();
}

}  // namespace abcover
