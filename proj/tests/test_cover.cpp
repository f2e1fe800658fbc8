#include <sstream>

#include "abcover/cover.hpp"
#include "abcover/error.hpp"
#include "abcover/fixtures.hpp"
#include "abcover/lmfdb.hpp"
#include "abcover/search.hpp"
#include "doctest.h"
#include "support/oracles.hpp"
#include "support/weil_gen.hpp"

using namespace abcover;
namespace oracle = abcover::testing::oracle;
using abcover::testing::WeilGenerator;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an abcover::Error");
    return ErrorKind::Internal;
}

/// Curve-like samples with at least one rational point and genus >= 1.
testing::GeneratedWeil next_curve_like(WeilGenerator& gen) {
    for (;;) {
        auto w = gen.next();
        if (oracle::curve_like(w.q, w.traces, 2 * w.lpoly.genus(), 1)) return w;
    }
}

}  // namespace

TEST_CASE("cover_invariants") {
    const auto c = cover_invariants(1639, 149, 4, 6);
    CHECK(c.quotient_order == 11);
    CHECK(c.base_genus == 4);
    CHECK(c.cover_genus == 34);
    CHECK(c.split_count == 6);
    CHECK(c.cover_points == 66);

    SUBCASE("identity cover") {
        for (int g = 1; g <= 6; ++g) {
            const auto id = cover_invariants(97, 97, g, 5);
            CHECK(id.quotient_order == 1);
            CHECK(id.cover_genus == g);
            CHECK(id.cover_points == 5);
        }
    }
    SUBCASE("trivial subgroup") {
        for (long j : {1, 2, 13, 1639}) {
            const auto mx = cover_invariants(j, 1, 3, 4);
            CHECK(mx.quotient_order == j);
            CHECK(mx.cover_genus == 1 + 2 * j);
            CHECK(mx.cover_points == 4 * j);
        }
    }
    SUBCASE("genus one stays genus one") { CHECK(cover_invariants(20, 4, 1, 3).cover_genus == 1); }
    SUBCASE("no split points") { CHECK(cover_invariants(20, 4, 2, 0).cover_points == 0); }
    SUBCASE("errors") {
        CHECK(kind_of([] { cover_invariants(1639, 150, 4, 6); }) == ErrorKind::InconsistentOrders);
        CHECK(kind_of([] { cover_invariants(0, 1, 4, 6); }) == ErrorKind::MalformedInput);
        CHECK(kind_of([] { cover_invariants(10, -2, 4, 6); }) == ErrorKind::MalformedInput);
        CHECK(kind_of([] { cover_invariants(10, 2, 0, 6); }) == ErrorKind::MalformedInput);
        CHECK(kind_of([] { cover_invariants(10, 2, 2, -1); }) == ErrorKind::MalformedInput);
    }
}

TEST_CASE("constant field cover of the published classes") {
    SUBCASE("4.2.d_i_o_x") {
        const auto c = constant_field_cover(lpoly_from_label("4.2.d_i_o_x"));
        CHECK(c.base_field.q() == 2);
        CHECK(c.target_field.q() == 4);
        CHECK(c.h_order == 149);
        CHECK(c.j_order == 1639);
        CHECK(c.invariants == cover_invariants(1639, 149, 4, 6));
    }
    SUBCASE("3.5.i_bf_dc") {
        const auto c = constant_field_cover(lpoly_from_label("3.5.i_bf_dc"));
        CHECK(c.target_field.q() == 25);
        CHECK(c.invariants.quotient_order == 24);
        CHECK(c.invariants.cover_genus == 49);
        CHECK(c.invariants.cover_points == 336);
    }
    SUBCASE("3.4.f_p_bg") {
        const auto c = constant_field_cover(lpoly_from_label("3.4.f_p_bg"));
        CHECK(c.target_field.q() == 16);
        CHECK(c.invariants.quotient_order == 23);
        CHECK(c.invariants.cover_genus == 47);
        CHECK(c.invariants.cover_points == 230);
    }
    SUBCASE("every fixture row") {
        std::istringstream in{std::string(fixtures::published_tables_csv())};
        const auto rows = load_table_fixture(in);
        REQUIRE(rows.size() == 11);
        for (const auto& row : rows) {
            CAPTURE(row.label);
            const auto c = constant_field_cover(lpoly_from_label(row.label));
            CHECK(c.target_field.q() == row.target_q);
            CHECK(c.invariants.quotient_order == row.group_order);
            CHECK(c.invariants.cover_genus == row.cover_genus);
            CHECK(c.invariants.cover_points == row.cover_points);
        }
    }
}

TEST_CASE("constant field cover preconditions") {
    // Weil-valid, plausible, but N_1 = 2 + 1 - 3 = 0.
    const auto no_points = lpoly_from_label("2.2.ad_f");
    REQUIRE(validate_weil(no_points).valid());
    CHECK(kind_of([&] { constant_field_cover(no_points); }) == ErrorKind::NoRationalPoint);

    CHECK(kind_of([] { constant_field_cover(complete_from_half(FieldSize::from_cardinality(2), 1, std::vector<Integer>{3})); }) ==
          ErrorKind::InvalidWeil);
    CHECK(kind_of([] {
              constant_field_cover(LPolynomial(FieldSize::from_cardinality(2), {1, 0, 3}));
          }) == ErrorKind::InvalidWeil);
}

TEST_CASE("quotient order equals L(-1)") {
    WeilGenerator gen(21);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto w = next_curve_like(gen);
        const auto c = constant_field_cover(w.lpoly);
        const auto& inv = c.invariants;
        CHECK(inv.quotient_order == evaluate_at(w.lpoly, -1));
        CHECK(inv.quotient_order * c.h_order == c.j_order);
        CHECK(inv.cover_genus - 1 == inv.quotient_order * (inv.base_genus - 1));
        CHECK(inv.cover_points == inv.quotient_order * inv.split_count);
        CHECK(inv.split_count == w.q + 1 - oracle::elliptic_power_sums(w.q, w.traces, 1)[0]);
        CHECK(inv.quotient_order >= 1);
        CHECK(c.target_field.q() == w.q * w.q);
    }
}

TEST_CASE("the maximal cover dominates every subgroup choice") {
    WeilGenerator gen(22);
    for (int trial = 0; trial < 200; ++trial) {
        const auto w = next_curve_like(gen);
        const auto c = constant_field_cover(w.lpoly);
        const Integer j = c.j_order;
        const auto maximal = cover_invariants(j, 1, c.invariants.base_genus, c.invariants.split_count);
        for (Integer h = 1; h <= j && h <= 500; ++h) {
            if (j % h != 0) continue;
            const auto sub = cover_invariants(j, h, c.invariants.base_genus, c.invariants.split_count);
            CHECK(sub.cover_genus <= maximal.cover_genus);
            CHECK(sub.cover_points <= maximal.cover_points);
        }
    }
}
