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

#include "abcover/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "abcover/error.hpp"
#include "abcover/fetch.hpp"
#include "abcover/fixtures.hpp"
#include "json.hpp"

namespace abcover {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Integer& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) return v.get_si();
    return v.get_str();
}

json to_json(std::span<const Integer> values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(to_json(v));
    return arr;
}

json to_json(const std::optional<Integer>& v) { return v ? to_json(*v) : json(nullptr); }

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string join(const std::vector<std::string>& cells, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? sep : "") + cells[i];
    return out;
}

std::string text_of(const std::optional<Integer>& v, const char* none) { return v ? v->get_str() : none; }

/// Fixed-width table: numbers right-aligned, first and last (text) columns left-aligned.
std::string render_table(const std::vector<std::string>& headers, const std::vector<std::vector<std::string>>& rows) {
    // Width in code points so that UTF-8 glyphs line up.
    auto width = [](const std::string& s) {
        return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
    };
    std::vector<std::size_t> w(headers.size());
    for (std::size_t i = 0; i < headers.size(); ++i) w[i] = width(headers[i]);
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], width(r[i]));
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const std::string pad(w[i] - width(cells[i]), ' ');
            if (i) os << "  ";
            if (i + 1 == cells.size())
                os << cells[i];
            else
                os << (i == 0 ? cells[i] + pad : pad + cells[i]);
        }
        os << '\n';
    };
    line(headers);
    std::size_t total = 2 * (w.size() - 1);
    for (auto x : w) total += x;
    os << std::string(total, '-') << '\n';
    for (const auto& r : rows) line(r);
    return os.str();
}

std::string field_name(const Integer& q) { return "F_" + q.get_str(); }

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
    if (name == "human" || name == "table") return OutputFormat::Human;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    return std::nullopt;
}

std::string render_report(const SearchReport& report, OutputFormat format) {
    const auto& s = report.summary;
    switch (format) {
        case OutputFormat::Json: {
            json rows = json::array();
            for (const auto& r : report.rows)
                rows.push_back({{"label", r.label},
                                {"base_q", to_json(r.base_field.q())},
                                {"target_q", to_json(r.target_field.q())},
                                {"group_order", to_json(r.invariants.quotient_order)},
                                {"base_genus", r.invariants.base_genus},
                                {"cover_genus", to_json(r.invariants.cover_genus)},
                                {"split_count", to_json(r.invariants.split_count)},
                                {"cover_points", to_json(r.invariants.cover_points)},
                                {"old_record", to_json(r.old_lower)},
                                {"classification", to_string(r.classification)},
                                {"evidence", to_string(r.evidence)}});
            json classified = json::object(), rejected = json::object();
            for (std::size_t i = 0; i < kClassificationCount; ++i)
                classified[to_string(static_cast<Classification>(i))] = s.classified[i];
            for (std::size_t i = 0; i < kRejectionReasonCount; ++i)
                rejected[to_string(static_cast<RejectionReason>(i))] = s.rejected[i];
            json doc{{"rows", rows},
                     {"summary",
                      {{"candidates", s.candidates},
                       {"classified", classified},
                       {"rejected", rejected},
                       {"filtered_out", s.filtered_out},
                       {"deduplicated", s.deduplicated},
                       {"emitted", s.emitted}}}};
            return doc.dump(2) + '\n';
        }
        case OutputFormat::Csv: {
            std::string out = "label,base_q,target_q,group_order,cover_genus,cover_points,old_record,classification,evidence\n";
            for (const auto& r : report.rows)
                out += join({r.label, r.base_field.to_string(), r.target_field.to_string(),
                             r.invariants.quotient_order.get_str(), r.invariants.cover_genus.get_str(),
                             r.invariants.cover_points.get_str(), text_of(r.old_lower, ""), to_string(r.classification),
                             to_string(r.evidence)},
                            ",") +
                       '\n';
            return out;
        }
        case OutputFormat::Human: {
            std::ostringstream os;
            std::map<Integer, std::vector<const SearchRow*>> by_field;
            for (const auto& r : report.rows) by_field[r.target_field.q()].push_back(&r);
            for (const auto& [q, rows] : by_field) {
                std::vector<std::vector<std::string>> cells;
                for (const auto* r : rows) {
                    std::string notes = to_string(r->classification);
                    if (r->evidence != Evidence::Verified) notes += std::string(", ") + to_string(r->evidence);
                    cells.push_back({r->label, r->invariants.quotient_order.get_str(), r->invariants.cover_genus.get_str(),
                                     r->invariants.cover_points.get_str(), text_of(r->old_lower, "∅"), notes});
                }
                os << "Covers over " << field_name(q) << "\n"
                   << render_table({"label", "|G|", "g_Y", "#Y(" + field_name(q) + ")", "old record", "status"}, cells)
                   << '\n';
            }
            std::vector<std::string> parts;
            for (std::size_t i = 0; i < kClassificationCount; ++i)
                if (s.classified[i]) parts.push_back(std::string(to_string(static_cast<Classification>(i))) + " " +
                                                     std::to_string(s.classified[i]));
            std::size_t rejected = 0;
            for (auto n : s.rejected) rejected += n;
            os << s.candidates << " candidates, " << s.emitted << " rows emitted";
            if (!parts.empty()) os << " (evaluated: " << join(parts, ", ") << ")";
            os << ", " << rejected << " rejected, " << s.filtered_out << " below or tied, " << s.deduplicated
               << " duplicates\n";
            return os.str();
        }
    }
    return {};
}

std::string render_report(const VerificationReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: {
            json rows = json::array();
            for (const auto& r : report.rows) {
                const auto& e = r.expected;
                json computed = nullptr;
                if (r.computed)
                    computed = {{"target_q", to_json(r.computed->target_field.q())},
                                {"group_order", to_json(r.computed->invariants.quotient_order)},
                                {"cover_genus", to_json(r.computed->invariants.cover_genus)},
                                {"cover_points", to_json(r.computed->invariants.cover_points)}};
                rows.push_back({{"label", e.label},
                                {"expected",
                                 {{"target_q", to_json(e.target_q)},
                                  {"group_order", to_json(e.group_order)},
                                  {"cover_genus", to_json(e.cover_genus)},
                                  {"cover_points", to_json(e.cover_points)},
                                  {"old_record", to_json(e.old_record)}}},
                                {"computed", computed},
                                {"records_lower", to_json(r.records_lower)},
                                {"classification", r.classification ? json(to_string(*r.classification)) : json(nullptr)},
                                {"passed", r.passed()},
                                {"mismatches", r.mismatches}});
            }
            json doc{{"rows", rows},
                     {"passed", report.passed},
                     {"total", report.rows.size()},
                     {"all_passed", report.all_passed()}};
            return doc.dump(2) + '\n';
        }
        case OutputFormat::Csv: {
            std::string out = "label,target_q,group_order,cover_genus,cover_points,old_record,classification,status,details\n";
            for (const auto& r : report.rows) {
                const auto* c = r.computed ? &*r.computed : nullptr;
                out += join({csv_escape(r.expected.label), c ? c->target_field.to_string() : "",
                             c ? c->invariants.quotient_order.get_str() : "", c ? c->invariants.cover_genus.get_str() : "",
                             c ? c->invariants.cover_points.get_str() : "", text_of(r.records_lower, ""),
                             r.classification ? to_string(*r.classification) : "", r.passed() ? "pass" : "fail",
                             csv_escape(join(r.mismatches, "; "))},
                            ",") +
                       '\n';
            }
            return out;
        }
        case OutputFormat::Human: {
            std::ostringstream os;
            std::map<Integer, std::vector<const VerificationRow*>> by_field;
            for (const auto& r : report.rows) by_field[r.expected.target_q].push_back(&r);
            for (const auto& [q, rows] : by_field) {
                std::vector<std::vector<std::string>> cells;
                for (const auto* r : rows) {
                    const auto* c = r->computed ? &r->computed->invariants : nullptr;
                    cells.push_back({r->expected.label, c ? c->quotient_order.get_str() : "?",
                                     c ? c->cover_genus.get_str() : "?", c ? c->cover_points.get_str() : "?",
                                     text_of(r->expected.old_record, "∅"), r->passed() ? "pass" : "FAIL"});
                }
                os << "Covers over " << field_name(q) << "\n"
                   << render_table({"label", "|G|", "g_Y", "#Y(" + field_name(q) + ")", "old record", "check"}, cells)
                   << '\n';
            }
            for (const auto& r : report.rows)
                for (const auto& m : r.mismatches) os << r.expected.label << ": " << m << '\n';
            os << report.passed << "/" << report.rows.size() << " pass\n";
            return os.str();
        }
    }
    return {};
}

namespace {

/// Ordered key/value output shared by the single-object subcommands.
struct Field {
    std::string key;    // JSON and CSV column name
    std::string label;  // human label
    json value;
};

std::string render_fields(const std::vector<Field>& fields, OutputFormat format) {
    auto plain = [](const json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_null()) return std::string();
        if (v.is_array()) {
            std::vector<std::string> parts;
            for (const auto& x : v) parts.push_back(x.is_string() ? x.get<std::string>() : x.dump());
            return "[" + join(parts, ",") + "]";
        }
        return v.dump();
    };
    std::ostringstream os;
    switch (format) {
        case OutputFormat::Json: {
            json doc = json::object();
            for (const auto& f : fields) doc[f.key] = f.value;
            os << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv: {
            std::vector<std::string> keys, values;
            for (const auto& f : fields) {
                keys.push_back(f.key);
                values.push_back(csv_escape(plain(f.value)));
            }
            os << join(keys, ",") << '\n' << join(values, ",") << '\n';
            break;
        }
        case OutputFormat::Human: {
            std::size_t w = 0;
            for (const auto& f : fields) w = std::max(w, f.label.size());
            for (const auto& f : fields)
                os << f.label << std::string(w - f.label.size(), ' ') << " : " << plain(f.value) << '\n';
            break;
        }
    }
    return os.str();
}

Integer parse_big(const std::string& text, const char* what) {
    Integer v;
    const bool neg = !text.empty() && text[0] == '-';
    const std::string digits = neg ? text.substr(1) : text;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || v.set_str(text, 10) != 0)
        throw Error(ErrorKind::MalformedInput, std::string("bad ") + what + " '" + text + "'");
    return v;
}

/// A label, or a comma-separated full coefficient list a_0,...,a_2g with q given separately.
LPolynomial lpoly_from_argument(const std::string& arg, const std::string& q) {
    if (arg.find('.') != std::string::npos) return lpoly_from_label(arg);
    if (q.empty()) throw Error(ErrorKind::MalformedInput, "a coefficient list needs --q");
    std::vector<Integer> coeffs;
    std::istringstream in(arg);
    for (std::string cell; std::getline(in, cell, ',');) coeffs.push_back(parse_big(cell, "coefficient"));
    return LPolynomial(FieldSize::from_cardinality(parse_big(q, "field size")), std::move(coeffs));
}

std::string label_of(const LPolynomial& L) {
    const auto a = L.coefficients();
    return encode_label(L.genus(), L.field(), a.subspan(1, static_cast<std::size_t>(L.genus())));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::MalformedInput, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool out_is_terminal) {
    CLI::App app{"Invariants of unramified abelian covers of curves over finite fields", "abcover"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "abcover 0.1.0");
    std::string format_name;
    app.add_option("--format", format_name, "Output format: human, csv or json (default: human on a terminal, json otherwise)")
        ->check(CLI::IsMember({"human", "table", "csv", "json"}));

    std::string label_arg, q_arg;
    int count = 0;

    auto* decode = app.add_subcommand("decode", "Decode an isogeny class label");
    decode->add_option("label", label_arg, "Label g.q.c1_..._cg")->required();

    auto* invariants = app.add_subcommand("invariants", "Point counts, class number and Weil validation");
    invariants->add_option("polynomial", label_arg, "Label, or coefficients a0,...,a2g together with --q")->required();
    invariants->add_option("--q", q_arg, "Field size for a coefficient list");
    invariants->add_option("--count", count, "Number of point counts (default 2g)")->check(CLI::PositiveNumber);

    unsigned degree = 2;
    auto* bchange = app.add_subcommand("base-change", "L-polynomial over the degree-d extension");
    bchange->add_option("polynomial", label_arg, "Label, or coefficients a0,...,a2g together with --q")->required();
    bchange->add_option("--q", q_arg, "Field size for a coefficient list");
    bchange->add_option("--degree,-d", degree, "Extension degree")->check(CLI::PositiveNumber);

    std::string j_order, h_order, split;
    int genus = 0;
    auto* cover = app.add_subcommand("cover", "Cover invariants: constant field trick for a label, or the general formula");
    cover->add_option("label", label_arg, "Label of X over F_r (constant field trick)");
    cover->add_option("--j-order", j_order, "|J_X(K)|");
    cover->add_option("--h-order", h_order, "|H|");
    cover->add_option("--genus", genus, "Genus of X");
    cover->add_option("--split", split, "Number of rational points of X totally split in Y");

    std::string dataset_path, records_path;
    SearchConfig config;
    std::vector<std::string> base_fields;
    bool any_base_field = false, allow_unevidenced = false, fail_fast = false;
    auto* search = app.add_subcommand("search", "Search a dataset for record-breaking constant field covers");
    search->add_option("--dataset", dataset_path, "JSONL dataset (default: bundled published labels)");
    search->add_option("--records", records_path, "Records CSV q,genus,lower,upper (default: bundled old records)");
    search->add_option("--max-cover-genus", config.max_cover_genus, "Largest cover genus reported")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    search->add_option("--min-base-genus", config.min_base_genus, "Smallest base genus searched")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    search->add_option("--base-fields", base_fields, "Allowed base field sizes (default 2,3,4,5)")->delimiter(',');
    search->add_flag("--any-base-field", any_base_field, "Allow every base field");
    search->add_flag("--keep-no-curve", allow_unevidenced, "Keep classes whose data reports no curve");
    search->add_flag("--all-rows", config.include_all_rows, "Also emit rows that tie or fall below the record");
    search->add_option("--threads", config.threads, "Evaluation threads (0 = hardware)");
    search->add_flag("--fail-fast", fail_fast, "Abort on the first malformed dataset line");

    std::string fixture_path;
    auto* verify = app.add_subcommand("verify-tables", "Recompute the published record tables from their labels");
    verify->add_option("--fixture", fixture_path, "Table CSV (default: bundled)");
    verify->add_option("--records", records_path, "Records CSV (default: bundled old records)");

    std::uint64_t fetch_q = 0;
    std::string cache_dir, base_url, output_path;
    auto* fetch = app.add_subcommand("fetch", "Download isogeny classes for (g, q) as a JSONL dataset");
    fetch->add_option("--q", fetch_q, "Field size")->required();
    fetch->add_option("--genus", genus, "Genus")->required();
    fetch->add_option("--cache", cache_dir, "Cache directory (default: $ABCOVER_CACHE_DIR)");
    fetch->add_option("--base-url", base_url, "API base URL (default: $ABCOVER_LMFDB_URL or https://www.lmfdb.org)");
    fetch->add_option("--output,-o", output_path, "Output file (default: standard output)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "abcover: " << e.what() << '\n';
        if (auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front()) err << sub->help();
        return 2;
    }

    const OutputFormat format = format_name.empty() ? (out_is_terminal ? OutputFormat::Human : OutputFormat::Json)
                                                    : *parse_output_format(format_name);
    try {
        if (decode->parsed()) {
            const auto label = IsogenyClassLabel::parse(label_arg);
            const auto d = decode_label(label_arg);
            const auto L = complete_from_half(d.field, d.genus, d.half);
            out << render_fields({{"label", "label", label.to_string()},
                                  {"genus", "genus", d.genus},
                                  {"q", "q", to_json(d.field.q())},
                                  {"p", "p", to_json(d.field.p())},
                                  {"f", "f", d.field.f()},
                                  {"codes", "codes", label.codes},
                                  {"half", "a_1..a_g", to_json(d.half)},
                                  {"coefficients", "L(t)", to_json(L.coefficients())}},
                                 format);
            return 0;
        }

        if ((invariants->parsed() || bchange->parsed()) && label_arg.find('.') == std::string::npos && q_arg.empty()) {
            err << "abcover: a coefficient list needs --q\n";
            return 2;
        }

        if (invariants->parsed()) {
            const auto L = lpoly_from_argument(label_arg, q_arg);
            const int m = count > 0 ? count : 2 * L.genus();
            const auto report = validate_weil(L);
            const auto counts = point_counts(L, m);
            std::vector<Field> fields;
            if (L.satisfies_functional_equation()) fields.push_back({"label", "label", label_of(L)});
            fields.push_back({"q", "q", to_json(L.field().q())});
            fields.push_back({"genus", "genus", L.genus()});
            fields.push_back({"coefficients", "L(t)", to_json(L.coefficients())});
            fields.push_back({"point_counts", "N_1..N_m", to_json(counts.values)});
            try {
                fields.push_back({"place_counts", "b_1..b_m", to_json(place_counts(counts))});
            } catch (const Error& e) {
                fields.push_back({"place_counts", "b_1..b_m", e.what()});
            }
            const Integer l1 = evaluate_at(L, 1);
            fields.push_back({"class_number", "L(1) = #J(F_q)", to_json(l1)});
            fields.push_back({"l_at_minus_one", "L(-1)", to_json(evaluate_at(L, -1))});
            if (L.satisfies_functional_equation())
                fields.push_back({"real_weil_polynomial", "real Weil h(x)", to_json(real_weil_polynomial(L))});
            fields.push_back({"functional_equation_ok", "functional equation", report.functional_equation_ok});
            fields.push_back({"root_location_ok", "roots in Weil interval", report.root_location_ok});
            fields.push_back({"plausibility_ok", "place counts plausible", report.plausibility_ok});
            json failures = json::array();
            for (const auto& f : report.failures) failures.push_back(std::string(to_string(f.check)) + ": " + f.reason);
            fields.push_back({"failures", "failures", failures});
            fields.push_back({"valid", "valid", report.valid()});
            out << render_fields(fields, format);
            if (!report.valid()) {
                err << "abcover: not a valid Weil polynomial\n";
                return 1;
            }
            return 0;
        }

        if (bchange->parsed()) {
            const auto L = lpoly_from_argument(label_arg, q_arg);
            const auto lifted = base_change(L, degree);
            std::vector<Field> fields;
            if (lifted.satisfies_functional_equation()) fields.push_back({"label", "label", label_of(lifted)});
            fields.push_back({"q", "q", to_json(lifted.field().q())});
            fields.push_back({"genus", "genus", lifted.genus()});
            fields.push_back({"degree", "degree", degree});
            fields.push_back({"coefficients", "L(t)", to_json(lifted.coefficients())});
            out << render_fields(fields, format);
            return 0;
        }

        if (cover->parsed()) {
            const bool general = !j_order.empty() || !h_order.empty() || genus != 0 || !split.empty();
            if (general == !label_arg.empty() ||
                (general && (j_order.empty() || h_order.empty() || genus == 0 || split.empty()))) {
                err << "abcover: cover takes either a label or all of --j-order --h-order --genus --split\n";
                return 2;
            }
            std::vector<Field> fields;
            CoverInvariants inv;
            if (general) {
                inv = cover_invariants(parse_big(j_order, "--j-order"), parse_big(h_order, "--h-order"), genus,
                                       parse_big(split, "--split"));
                fields.push_back({"j_order", "|J_X(K)|", to_json(parse_big(j_order, "--j-order"))});
                fields.push_back({"h_order", "|H|", to_json(parse_big(h_order, "--h-order"))});
            } else {
                const auto c = constant_field_cover(lpoly_from_label(label_arg));
                inv = c.invariants;
                fields.push_back({"label", "label", label_arg});
                fields.push_back({"base_q", "base field", to_json(c.base_field.q())});
                fields.push_back({"target_q", "target field", to_json(c.target_field.q())});
                fields.push_back({"j_order", "|J_X(K)|", to_json(c.j_order)});
                fields.push_back({"h_order", "|H|", to_json(c.h_order)});
            }
            fields.push_back({"group_order", "|G|", to_json(inv.quotient_order)});
            fields.push_back({"base_genus", "g_X", inv.base_genus});
            fields.push_back({"cover_genus", "g_Y", to_json(inv.cover_genus)});
            fields.push_back({"split_count", "split points", to_json(inv.split_count)});
            fields.push_back({"cover_points", "N_Y", to_json(inv.cover_points)});
            out << render_fields(fields, format);
            return 0;
        }

        if (search->parsed()) {
            const std::string dataset_text =
                dataset_path.empty() ? std::string(fixtures::published_candidates_jsonl()) : read_file(dataset_path);
            const auto records = records_path.empty() ? load_records(fixtures::old_records_csv())
                                                      : load_records(read_file(records_path));
            std::istringstream in(dataset_text);
            const auto parsed =
                parse_dataset(in, {fail_fast, dataset_path.empty() ? std::string("<bundled>") : dataset_path});
            for (const auto& e : parsed.errors) err << "abcover: dataset line " << e.line << ": " << e.message << '\n';
            config.require_curve_evidence = !allow_unevidenced;
            if (any_base_field) {
                config.base_fields.reset();
            } else if (!base_fields.empty()) {
                config.base_fields.emplace();
                for (const auto& b : base_fields) config.base_fields->insert(parse_big(b, "base field"));
            }
            out << render_report(run_search(parsed.records, records, config), format);
            return 0;
        }

        if (verify->parsed()) {
            const auto fixture = fixture_path.empty() ? load_table_fixture(fixtures::published_tables_csv())
                                                      : load_table_fixture(read_file(fixture_path));
            const auto records = records_path.empty() ? load_records(fixtures::old_records_csv())
                                                      : load_records(read_file(records_path));
            const auto report = verify_published_tables(fixture, records);
            out << render_report(report, format);
            if (!report.all_passed()) {
                err << "abcover: " << report.rows.size() - report.passed << " of " << report.rows.size()
                    << " table rows failed verification\n";
                return 1;
            }
            return 0;
        }

        if (fetch->parsed()) {
            FetchConfig fc = FetchConfig::from_environment();
            if (!cache_dir.empty()) fc.cache_dir = cache_dir;
            if (!base_url.empty()) fc.base_url = base_url;
            LmfdbClient client(fc);
            const auto records = client.fetch_candidates(fetch_q, genus);
            const std::string body = to_jsonl(records);
            if (output_path.empty()) {
                out << body;
            } else {
                std::ofstream f(output_path, std::ios::trunc);
                f << body;
                if (!f) throw Error(ErrorKind::MalformedInput, "cannot write " + output_path);
            }
            err << "abcover: " << records.size() << " classes (" << client.requests_made() << " requests)\n";
            return 0;
        }
    } catch (const Error& e) {
        err << "abcover: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace abcover
