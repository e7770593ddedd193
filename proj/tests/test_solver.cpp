#include <doctest.h>

#include "fpo/solver.hpp"
#include "fpo/verify.hpp"
#include "helpers.hpp"

using namespace fpo;

TEST_CASE("ordering extraction") {
    // D = {(0,1),(0,2),(1,2)} is the transitive tournament for 0,1,2.
    std::vector<PairNode> d = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(extract_ordering(d, 3) == std::vector{0, 1, 2});
    std::vector<PairNode> rev = {{2, 1}, {2, 0}, {1, 0}};
    CHECK(extract_ordering(rev, 3) == std::vector{2, 1, 0});
    CHECK(extract_ordering({}, 1) == std::vector{0});
    CHECK(extract_ordering({}, 0).empty());

    CHECK_THROWS_AS(extract_ordering({{0, 1}, {1, 2}}, 3), InternalError);  // not total
    CHECK_THROWS_AS(extract_ordering({{0, 1}, {1, 2}, {2, 0}}, 3), InternalError);  // cyclic
}

TEST_CASE("acceptance on easy instances") {
    // K3 under the two-edges-one-nonedge member: no occurrence at all.
    Verdict v = solve_ord3(fpo_test::complete_graph(3), preset("chordal"));
    REQUIRE(accepted(v));
    CHECK(std::get<Ordering>(v) == std::vector{0, 1, 2});

    // Empty pattern set: identity ordering.
    Verdict e = solve_ord3(fpo_test::cycle_graph(5), PatternSet{});
    REQUIRE(accepted(e));
    CHECK(std::get<Ordering>(e) == std::vector{0, 1, 2, 3, 4});

    // Claw is interval.
    Verdict claw = solve_ord3(fpo_test::star_graph(3), preset("interval"));
    REQUIRE(accepted(claw));
    CHECK_FALSE(check_ordering_free(fpo_test::star_graph(3), preset("interval"),
                                    std::get<Ordering>(claw))
                    .has_value());

    // P4 is proper interval.
    Verdict p4 = solve_ord3(fpo_test::path_graph(4), preset("proper-interval"));
    CHECK(accepted(p4));
}

TEST_CASE("rejections with circuit certificates") {
    Graph c4 = fpo_test::cycle_graph(4);
    for (const char* name : {"chordal", "interval"}) {
        Verdict v = solve_ord3(c4, preset(name));
        REQUIRE_FALSE(accepted(v));
        const auto* cert = std::get_if<CircuitCertificate>(&v);
        REQUIRE(cert != nullptr);
        PatternSet active = preset(name);  // no order-invariant members in these presets
        ConstraintDigraph g = build_tri(c4, active);
        CHECK(verify_certificate(g, *cert));
    }

    // Claw is not proper interval.
    Verdict claw = solve_ord3(fpo_test::star_graph(3), preset("proper-interval"));
    CHECK_FALSE(accepted(claw));
}

TEST_CASE("order-invariant preprocessing certificates") {
    Graph iso3(3);
    Verdict v = solve_ord3(iso3, parse_pattern_set("empty"));
    REQUIRE_FALSE(accepted(v));
    const auto* cert = std::get_if<InvariantCertificate>(&v);
    REQUIRE(cert != nullptr);
    CHECK(cert->u_vertices == std::vector{0, 1, 2});
    CHECK(verify_invariant_certificate(iso3, *cert));

    // Member not occurring is silently dropped.
    Verdict ok = solve_ord3(fpo_test::complete_graph(3), parse_pattern_set("empty"));
    CHECK(accepted(ok));
    Verdict tri = solve_ord3(fpo_test::complete_graph(3), parse_pattern_set("triangle"));
    REQUIRE_FALSE(accepted(tri));
    CHECK(std::holds_alternative<InvariantCertificate>(tri));
}

TEST_CASE("oracle agreement on random small instances") {
    std::mt19937 rng(101);
    for (int t = 0; t < 300; ++t) {
        Graph h = fpo_test::random_graph(5, 0.5, rng);
        PatternSet f = fpo_test::pattern_set_from_mask(rng() & 0xff);
        Verdict v = solve_ord3(h, f);
        OrdOracleResult oracle = brute_force_ord(h, f);
        CHECK(accepted(v) == oracle.orderable);
        if (accepted(v))
            CHECK_FALSE(check_ordering_free(h, f, std::get<Ordering>(v)).has_value());
    }
}

TEST_CASE("complement duality of acceptance") {
    std::mt19937 rng(151);
    for (int t = 0; t < 100; ++t) {
        Graph h = fpo_test::random_graph(5, 0.5, rng);
        PatternSet f = fpo_test::pattern_set_from_mask(rng() & 0xff);
        CHECK(accepted(solve_ord3(h, f)) ==
              accepted(solve_ord3(complement(h), complement_set(f))));
    }
}

TEST_CASE("reversal duality of freeness") {
    std::mt19937 rng(171);
    for (int t = 0; t < 100; ++t) {
        Graph h = fpo_test::random_graph(6, 0.5, rng);
        PatternSet f = fpo_test::pattern_set_from_mask(rng() & 0xff);
        std::vector<int> order(h.n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> rev(order.rbegin(), order.rend());
        CHECK(check_ordering_free(h, f, order).has_value() ==
              check_ordering_free(h, reverse_set(f), rev).has_value());
    }
}

TEST_CASE("invertible pairs and nice sets") {
    Graph c4 = fpo_test::cycle_graph(4);
    ConstraintDigraph free = build_tri(Graph(4), preset("interval"));
    CHECK_FALSE(find_invertible_pair(free).has_value());
    CHECK(find_invertible_pair(build_tri(c4, preset("interval"))).has_value());

    std::mt19937 rng(191);
    const char* nice_specs[] = {"13", "12,23", "13;13,23", "13;12,13;13,23"};
    for (int t = 0; t < 100; ++t) {
        Graph h = fpo_test::random_graph(5, 0.5, rng);
        for (const char* spec : nice_specs) {
            PatternSet f = parse_pattern_set(spec);
            REQUIRE(is_nice(f));
            ConstraintDigraph g = build_tri(h, f);
            bool inv = find_invertible_pair(g).has_value();
            CHECK(accepted(solve_ord3(h, f)) == !inv);
        }
    }
}
