#include <map>
#include <set>
#include <sstream>

#include "abcover/error.hpp"
#include "abcover/fixtures.hpp"
#include "abcover/search.hpp"
#include "doctest.h"
#include "support/oracles.hpp"
#include "support/weil_gen.hpp"

using namespace abcover;
namespace oracle = abcover::testing::oracle;
using abcover::testing::WeilGenerator;

namespace {

std::vector<CandidateRecord> published_candidates() {
    std::istringstream in{std::string(fixtures::published_candidates_jsonl())};
    return parse_dataset(in).records;
}

RecordsTable published_records() { return load_records(fixtures::old_records_csv()); }

std::vector<TableRow> published_rows() { return load_table_fixture(fixtures::published_tables_csv()); }

std::string label_of(const LPolynomial& L) {
    const auto c = L.coefficients();
    return encode_label(L.genus(), L.field(), c.subspan(1, L.genus()));
}

/// Mixed candidate pool: curve-like and implausible generated classes with
/// assorted evidence, plus the published labels.
std::vector<CandidateRecord> random_pool(std::uint64_t seed, std::size_t count) {
    WeilGenerator gen(seed, {2, 3, 4, 5, 7}, 5);
    std::vector<CandidateRecord> out = published_candidates();
    while (out.size() < count) {
        const auto w = gen.next();
        std::optional<std::uint64_t> ev;
        switch (gen.pick(0, 3)) {
            case 0: ev = 0; break;
            case 1: ev = static_cast<std::uint64_t>(gen.pick(1, 5)); break;
            default: break;
        }
        out.push_back(make_candidate(label_of(w.lpoly), ev, "gen"));
    }
    return out;
}

std::string fingerprint(const SearchReport& r) {
    std::ostringstream os;
    for (const auto& row : r.rows)
        os << row.label << ',' << row.target_field.q() << ',' << row.invariants.quotient_order << ','
           << row.invariants.cover_genus << ',' << row.invariants.cover_points << ','
           << to_string(row.classification) << ',' << (row.old_lower ? row.old_lower->get_str() : "-") << ','
           << to_string(row.evidence) << '\n';
    const auto& s = r.summary;
    os << s.candidates << ' ' << s.filtered_out << ' ' << s.deduplicated << ' ' << s.emitted;
    for (auto c : s.classified) os << ' ' << c;
    for (auto c : s.rejected) os << ' ' << c;
    return os.str();
}

}  // namespace

TEST_CASE("evaluate_candidate") {
    const auto records = published_records();
    const SearchConfig config;

    SUBCASE("4.2.d_i_o_x") {
        const auto e = evaluate_candidate(make_candidate("4.2.d_i_o_x", 1), records, config);
        REQUIRE(std::holds_alternative<SearchRow>(e));
        const auto& row = std::get<SearchRow>(e);
        CHECK(row.invariants.quotient_order == 11);
        CHECK(row.invariants.cover_genus == 34);
        CHECK(row.invariants.cover_points == 66);
        CHECK(row.classification == Classification::Improves);
        CHECK(row.old_lower == 65);
        CHECK(row.evidence == Evidence::Verified);
        CHECK(row.base_field.q() == 2);
        CHECK(row.target_field.q() == 4);
    }
    auto reason = [&](const CandidateRecord& c, const SearchConfig& cfg) {
        const auto e = evaluate_candidate(c, records, cfg);
        REQUIRE(std::holds_alternative<Rejection>(e));
        CHECK(std::get<Rejection>(e).label == c.label);
        return std::get<Rejection>(e).reason;
    };
    SUBCASE("no rational point") {
        SearchConfig g1 = config;
        g1.min_base_genus = 1;
        // q = 2, a_1 = -3 gives N_1 = 0.
        CHECK(reason(make_candidate("1.2.ad"), g1) == RejectionReason::NoRationalPoint);
        CHECK(reason(make_candidate("2.2.ad_f"), config) == RejectionReason::NoRationalPoint);
    }
    SUBCASE("genus one under the default configuration") {
        CHECK(reason(make_candidate("1.2.c"), config) == RejectionReason::BaseGenusBelowMinimum);
    }
    SUBCASE("other rejections") {
        CHECK(reason(make_candidate("2.7.a_a"), config) == RejectionReason::BaseFieldNotAllowed);
        CHECK(reason(make_candidate("2.2.d_a"), config) == RejectionReason::InvalidWeil);
        CHECK(reason(make_candidate("4.2.d_i_o_x", 0), config) == RejectionReason::NoCurveInClass);
        SearchConfig cap = config;
        cap.max_cover_genus = 33;
        CHECK(reason(make_candidate("4.2.d_i_o_x"), cap) == RejectionReason::CoverGenusAboveCap);
        // Four copies of trace 2 over F_2 have roots on the Weil circle but b_2 < 0.
        const auto implausible = testing::product_of_elliptic_factors(2, {2, 2, 2, 2});
        CHECK(reason(make_candidate(label_of(implausible)), config) == RejectionReason::InvalidWeil);
    }
    SUBCASE("evidence tags") {
        CHECK(std::get<SearchRow>(evaluate_candidate(make_candidate("4.2.d_i_o_x"), records, config)).evidence ==
              Evidence::Unverified);
        SearchConfig loose = config;
        loose.require_curve_evidence = false;
        CHECK(std::get<SearchRow>(evaluate_candidate(make_candidate("4.2.d_i_o_x", 0), records, loose)).evidence ==
              Evidence::NoCurve);
        SearchConfig any = config;
        any.base_fields.reset();
        any.max_cover_genus = 100;  // L(-1) = 50 puts g_Y at 51
        CHECK(std::holds_alternative<SearchRow>(evaluate_candidate(make_candidate("2.7.a_a"), records, any)));
    }
}

TEST_CASE("run_search on the published classes") {
    const auto report = run_search(published_candidates(), published_records(), SearchConfig{});
    const auto rows = published_rows();
    REQUIRE(report.rows.size() == 11);
    CHECK(report.summary.candidates == 11);
    CHECK(report.summary.emitted == 11);
    CHECK(report.summary.deduplicated == 0);
    CHECK(report.summary.filtered_out == 0);
    CHECK(report.summary.classified[static_cast<std::size_t>(Classification::Improves)] == 10);
    CHECK(report.summary.classified[static_cast<std::size_t>(Classification::NewEntry)] == 1);

    std::map<std::string, TableRow> expected;
    for (const auto& r : rows) expected.emplace(r.label, r);
    for (const auto& row : report.rows) {
        CAPTURE(row.label);
        REQUIRE(expected.count(row.label));
        const auto& e = expected.at(row.label);
        CHECK(row.target_field.q() == e.target_q);
        CHECK(row.invariants.quotient_order == e.group_order);
        CHECK(row.invariants.cover_genus == e.cover_genus);
        CHECK(row.invariants.cover_points == e.cover_points);
        CHECK(row.old_lower == e.old_record);
        CHECK(row.classification == (e.old_record ? Classification::Improves : Classification::NewEntry));
        CHECK(row.evidence == Evidence::Unverified);
    }
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        const auto& a = report.rows[i - 1];
        const auto& b = report.rows[i];
        CHECK(std::make_pair(a.target_field.q(), a.invariants.cover_genus) <
              std::make_pair(b.target_field.q(), b.invariants.cover_genus));
    }
}

TEST_CASE("empty candidate list") {
    const auto report = run_search({}, published_records(), SearchConfig{});
    CHECK(report.rows.empty());
    CHECK(fingerprint(report) == "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0");
}

TEST_CASE("decoys are filtered unless all rows are requested") {
    auto candidates = published_candidates();
    std::set<std::pair<Integer, Integer>> taken;
    for (const auto& r : published_rows()) taken.emplace(r.target_q, r.cover_genus);

    // Curve-like classes landing on fresh (target q, g_Y) keys; the records
    // table gets a lower bound at or above each decoy's N_Y.
    std::string csv{fixtures::old_records_csv()};
    std::map<std::string, Classification> decoys;
    WeilGenerator gen(41, {2, 3, 4, 5}, 4);
    while (decoys.size() < 12) {
        const auto w = gen.next(2);
        if (!oracle::curve_like(w.q, w.traces, 2 * w.lpoly.genus(), 1)) continue;
        const auto c = constant_field_cover(w.lpoly);
        if (c.invariants.cover_genus > 50) continue;
        if (!taken.emplace(c.target_field.q(), c.invariants.cover_genus).second) continue;
        const bool tie = decoys.size() % 2 == 0;
        const Integer lower = c.invariants.cover_points + (tie ? 0 : 1);
        csv += c.target_field.q().get_str() + "," + c.invariants.cover_genus.get_str() + "," + lower.get_str() + ",\n";
        const auto label = label_of(w.lpoly);
        decoys.emplace(label, tie ? Classification::Ties : Classification::Below);
        candidates.push_back(make_candidate(label, 1));
    }
    const auto records = load_records(csv);

    const auto report = run_search(candidates, records, SearchConfig{});
    CHECK(report.rows.size() == 11);
    CHECK(report.summary.filtered_out == decoys.size());
    for (const auto& row : report.rows) CHECK_FALSE(decoys.count(row.label));

    SearchConfig all;
    all.include_all_rows = true;
    const auto full = run_search(candidates, records, all);
    CHECK(full.rows.size() == 11 + decoys.size());
    for (const auto& row : full.rows) {
        if (const auto it = decoys.find(row.label); it != decoys.end())
            CHECK(row.classification == it->second);
        else
            CHECK((row.classification == Classification::Improves ||
                   row.classification == Classification::NewEntry));
    }
}

TEST_CASE("deduplication keeps the best row per key") {
    // Same class twice under different labels is impossible, so build
    // collisions from a large random pool and check the survivors.
    const auto pool = random_pool(42, 3000);
    SearchConfig config;
    config.include_all_rows = true;
    config.require_curve_evidence = false;
    config.max_cover_genus = 400;
    const auto report = run_search(pool, RecordsTable{}, config);
    CHECK(report.summary.deduplicated > 0);

    std::map<std::pair<Integer, Integer>, std::pair<Integer, std::string>> best;
    for (const auto& c : pool) {
        const auto e = evaluate_candidate(c, RecordsTable{}, config);
        if (!std::holds_alternative<SearchRow>(e)) continue;
        const auto& row = std::get<SearchRow>(e);
        const std::pair key{row.target_field.q(), row.invariants.cover_genus};
        auto it = best.find(key);
        if (it == best.end() || row.invariants.cover_points > it->second.first ||
            (row.invariants.cover_points == it->second.first && row.label < it->second.second))
            best[key] = {row.invariants.cover_points, row.label};
    }
    REQUIRE(report.rows.size() == best.size());
    for (const auto& row : report.rows) {
        const auto& b = best.at({row.target_field.q(), row.invariants.cover_genus});
        CHECK(row.invariants.cover_points == b.first);
        CHECK(row.label == b.second);
    }
}

TEST_CASE("emitted rows satisfy the cover identities") {
    const auto pool = random_pool(43, 2000);
    SearchConfig config;
    config.require_curve_evidence = false;
    config.include_all_rows = true;
    config.base_fields.reset();
    const auto report = run_search(pool, published_records(), config);
    CHECK(report.rows.size() > 50);
    std::size_t rejected = 0;
    for (auto r : report.summary.rejected) rejected += r;
    std::size_t classified = 0;
    for (auto c : report.summary.classified) classified += c;
    CHECK(rejected + classified == pool.size());
    CHECK(classified == report.summary.emitted + report.summary.deduplicated + report.summary.filtered_out);

    for (const auto& row : report.rows) {
        const auto& inv = row.invariants;
        const auto L = lpoly_from_label(row.label);
        CHECK(inv.cover_genus - 1 == inv.quotient_order * (L.genus() - 1));
        CHECK(inv.cover_points == inv.quotient_order * (L.field().q() + 1 + L[1]));
        CHECK(inv.cover_points <= serre_weil_upper(row.target_field.q(), inv.cover_genus));
        CHECK(row.target_field.q() == row.base_field.q() * row.base_field.q());
        CHECK(inv.cover_genus <= config.max_cover_genus);
    }
}

TEST_CASE("reports do not depend on the thread count") {
    const auto pool = random_pool(44, 2000);
    const auto records = published_records();
    for (bool all : {false, true}) {
        std::string reference;
        for (unsigned threads : {1u, 2u, 3u, 8u}) {
            SearchConfig config;
            config.threads = threads;
            config.include_all_rows = all;
            config.require_curve_evidence = false;
            const auto fp = fingerprint(run_search(pool, records, config));
            if (reference.empty())
                reference = fp;
            else
                CHECK(fp == reference);
        }
    }
}

TEST_CASE("verify_published_tables") {
    const auto rows = published_rows();
    const auto records = published_records();
    const auto report = verify_published_tables(rows, records);
    CHECK(report.rows.size() == 11);
    CHECK(report.passed == 11);
    CHECK(report.all_passed());

    const auto it = std::find_if(report.rows.begin(), report.rows.end(),
                                 [](const auto& r) { return r.expected.label == "3.5.j_bo_eh"; });
    REQUIRE(it != report.rows.end());
    REQUIRE(it->computed);
    CHECK(it->computed->invariants.quotient_order == 21);
    CHECK(it->computed->invariants.cover_genus == 43);
    CHECK(it->computed->invariants.cover_points == 315);

    SUBCASE("one perturbed expectation fails one row") {
        auto bad = rows;
        REQUIRE(bad[0].label == "4.2.d_i_o_x");
        bad[0].cover_points = 67;
        const auto r = verify_published_tables(bad, records);
        CHECK(r.passed == 10);
        CHECK_FALSE(r.rows[0].passed());
        REQUIRE(r.rows[0].mismatches.size() == 1);
        CHECK(r.rows[0].mismatches[0].find("67") != std::string::npos);
        CHECK(r.rows[0].mismatches[0].find("66") != std::string::npos);
    }
    SUBCASE("a wrong old record fails the row") {
        auto bad = rows;
        bad[1].old_record = 80;
        CHECK(verify_published_tables(bad, records).passed == 10);
    }
    SUBCASE("a label that does not decode fails without throwing") {
        auto bad = rows;
        bad[2].label = "4.3.i_bi_ds";
        const auto r = verify_published_tables(bad, records);
        CHECK(r.passed == 10);
        CHECK_FALSE(r.rows[2].computed.has_value());
    }
}

TEST_CASE("table fixture parsing") {
    CHECK(published_rows().size() == 11);
    CHECK_FALSE(published_rows()[6].old_record.has_value());
    for (const char* bad : {"label,target_q\n", "label,target_q,group_order,cover_genus,cover_points,old_record\nx,4,1,2\n",
                            "label,target_q,group_order,cover_genus,cover_points,old_record\nx,4,1,2,z,\n"}) {
        bool threw = false;
        try {
            load_table_fixture(bad);
        } catch (const Error& e) {
            threw = e.kind() == ErrorKind::MalformedInput;
        }
        CHECK_MESSAGE(threw, bad);
    }
}
