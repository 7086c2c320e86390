#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "convkit/convspace.hpp"
#include "oracles.hpp"

using namespace convkit;

namespace {

ConvSpace three_point_example() {
    // V_a = {a}, V_b = {a, b}, V_c = {b, c} on carrier {a=0, b=1, c=2}.
    return ConvSpace(3, {PointSet(3, 0b001), PointSet(3, 0b011), PointSet(3, 0b110)});
}

}  // namespace

TEST_CASE("from_raw verify mode accepts a complete declaration") {
    RawConvergence r;
    r.carrier_size = 2;
    r.pairs = {{PointSet(2, 0b01), 0}, {PointSet(2, 0b10), 1},
               {PointSet(2, 0b11), 1}, {PointSet(2, 0b01), 1}, {PointSet(2, 0b10), 1}};
    auto res = from_raw(r, FromRawMode::Verify);
    REQUIRE(res.space.has_value());
    CHECK(!res.violation.has_value());
    CHECK(res.space->V(0) == PointSet(2, 0b01));
    CHECK(res.space->V(1) == PointSet(2, 0b11));
}

TEST_CASE("from_raw verify mode diagnoses each axiom") {
    // F1: the point filter at 1 is not declared to converge to 1.
    RawConvergence f1;
    f1.carrier_size = 2;
    f1.pairs = {{PointSet(2, 0b01), 0}};
    auto r1 = from_raw(f1, FromRawMode::Verify);
    REQUIRE(r1.violation.has_value());
    CHECK(r1.violation->axiom == "F1");
    CHECK(r1.violation->point == 1);

    // F2: {0,1} -> 0 declared without the finer {1} -> 0.
    RawConvergence f2;
    f2.carrier_size = 2;
    f2.pairs = {{PointSet(2, 0b01), 0}, {PointSet(2, 0b10), 1}, {PointSet(2, 0b11), 0}};
    auto r2 = from_raw(f2, FromRawMode::Verify);
    REQUIRE(r2.violation.has_value());
    CHECK(r2.violation->axiom == "F2");
    CHECK(r2.violation->point == 0);
    CHECK(r2.violation->witness == PointSet(2, 0b10));

    // F3: {0} -> 0 and {1} -> 0 without their union.
    RawConvergence f3;
    f3.carrier_size = 2;
    f3.pairs = {{PointSet(2, 0b01), 0}, {PointSet(2, 0b10), 0}, {PointSet(2, 0b10), 1}};
    auto r3 = from_raw(f3, FromRawMode::Verify);
    REQUIRE(r3.violation.has_value());
    CHECK(r3.violation->axiom == "F3");
    CHECK(r3.violation->point == 0);
    CHECK(r3.violation->witness == PointSet(2, 0b11));
}

TEST_CASE("from_raw complete mode closes under the axioms") {
    RawConvergence r;
    r.carrier_size = 3;
    r.pairs = {{PointSet(3, 0b110), 0}};
    auto res = from_raw(r, FromRawMode::Complete);
    REQUIRE(res.space.has_value());
    // Closure adds the point filters and unions; V(0) = {0,1,2}.
    CHECK(res.space->V(0) == PointSet(3, 0b111));
    CHECK(res.space->V(1) == PointSet(3, 0b010));
    CHECK(res.space->V(2) == PointSet(3, 0b100));
    // Verify mode then accepts the completed structure's convergences.
    RawConvergence full;
    full.carrier_size = 3;
    for (int x = 0; x < 3; ++x)
        for (std::uint64_t bits = 1; bits < 8; ++bits)
            if (PointSet(3, bits).subset_of(res.space->V(x)))
                full.pairs.push_back({PointSet(3, bits), x});
    CHECK(from_raw(full, FromRawMode::Verify).space.has_value());
}

TEST_CASE("convergence predicates") {
    ConvSpace s = three_point_example();
    CHECK(converges_filter(s, principal(3, 1), 1));
    CHECK(converges_filter(s, principal(3, 1), 2));
    CHECK(!converges_filter(s, principal(3, 2), 1));
    CHECK(converges_filter(s, PrincipalFilter(3, PointSet(3, 0b011)), 1));
    CHECK(!converges_filter(s, PrincipalFilter(3, PointSet(3, 0b111)), 1));

    Net n(DirectedIndex::chain(3), {2, 1, 0}, 3);  // eventually the point a
    CHECK(converges_net(s, n, 0));
    CHECK(converges_net(s, n, 1));
    CHECK(!converges_net(s, n, 2));
}

TEST_CASE("closure, open and closed sets, density") {
    ConvSpace s = three_point_example();
    CHECK(closure(s, PointSet(3, 0b001)) == PointSet(3, 0b011));  // cl{a} = {a,b}
    CHECK(closure(s, PointSet(3, 0b010)) == PointSet(3, 0b110));  // cl{b} = {b,c}
    CHECK(closure(s, PointSet(3, 0b100)) == PointSet(3, 0b100));  // {c} closed
    // Closure is not idempotent here: cl(cl{a}) = {a,b,c}.
    CHECK(closure(s, closure(s, PointSet(3, 0b001))) == PointSet(3, 0b111));
    CHECK(!is_closed(s, PointSet(3, 0b011)));
    CHECK(is_closed(s, PointSet(3, 0b100)));
    CHECK(is_open(s, PointSet(3, 0b011)));
    CHECK(is_open(s, PointSet(3, 0b001)));   // V_a = {a}, so {a} is open
    CHECK(!is_open(s, PointSet(3, 0b010)));  // b's neighborhoods reach a
    CHECK(is_dense(s, PointSet(3, 0b011)));
    CHECK(!is_dense(s, PointSet(3, 0b100)));
    CHECK(neighborhood_filter(s, 1).kernel == PointSet(3, 0b011));
}

TEST_CASE("topological modification is the reachability closure") {
    ConvSpace s = three_point_example();
    CHECK(!is_topological(s));
    ConvSpace t = topological_modification(s);
    CHECK(is_topological(t));
    CHECK(t.V(0) == PointSet(3, 0b001));
    CHECK(t.V(1) == PointSet(3, 0b011));
    CHECK(t.V(2) == PointSet(3, 0b111));  // a reaches c through b
    // Idempotent, and the identity exactly on topological spaces.
    CHECK(topological_modification(t) == t);
    enumerate_structures(3, [](const ConvSpace& sp) {
        CHECK(is_topological(topological_modification(sp)));
        CHECK((topological_modification(sp) == sp) == is_topological(sp));
    });
}

TEST_CASE("hausdorff and compactness") {
    CHECK(is_hausdorff(ConvSpace::discrete(3)));
    CHECK(!is_hausdorff(ConvSpace::indiscrete(2)));
    CHECK(!is_hausdorff(three_point_example()));
    CHECK(is_compact(three_point_example()));
    CHECK(is_compact_subset(three_point_example(), PointSet(3, 0b011)));
}

TEST_CASE("enumeration counts match a brute-force topology count") {
    EnumerationSummary s1 = enumerate_summary(1);
    CHECK(s1.total == 1);
    EnumerationSummary s2 = enumerate_summary(2);
    CHECK(s2.total == 4);
    CHECK(s2.topological == 4);
    EnumerationSummary s3 = enumerate_summary(3);
    CHECK(s3.total == 64);
    CHECK(s3.topological == 29);
    CHECK(s3.hausdorff == 1);
    EnumerationSummary s4 = enumerate_summary(4);
    CHECK(s4.total == 4096);
    CHECK(s4.topological == 355);

    for (int n = 1; n <= 4; ++n) {
        long expected = oracle::count_topologies(n);
        CHECK(enumerate_summary(n).topological == expected);
    }
}

TEST_CASE("continuity and initial structures") {
    ConvSpace s = three_point_example();
    ConvSpace d = ConvSpace::discrete(2);
    PointMap f{{0, 0, 1}, 2};
    CHECK(is_continuous(f, ConvSpace::discrete(3), d));
    CHECK(!is_continuous(f, ConvSpace::indiscrete(3), d));

    std::vector<std::pair<PointMap, ConvSpace>> maps{{f, d}};
    ConvSpace init = initial_structure(3, maps);
    CHECK(init == oracle::brute_initial_structure(3, maps));
    CHECK(is_continuous(f, init, d));

    std::vector<std::pair<PointMap, ConvSpace>> maps2{{f, d}, {PointMap{{0, 1, 1}, 2}, d}};
    CHECK(initial_structure(3, maps2) == oracle::brute_initial_structure(3, maps2));

    std::vector<std::pair<PointMap, ConvSpace>> none;
    CHECK(initial_structure(2, none) == ConvSpace::indiscrete(2));
}

TEST_CASE("subspace and product") {
    ConvSpace s = three_point_example();
    ConvSpace sub = subspace(s, PointSet(3, 0b110));  // {b, c} -> {0, 1}
    CHECK(sub.size() == 2);
    CHECK(sub.V(0) == PointSet(2, 0b01));  // V_b restricted to {b,c}
    CHECK(sub.V(1) == PointSet(2, 0b11));
    CHECK_THROWS_AS(subspace(s, PointSet::empty(3)), std::domain_error);

    std::vector<ConvSpace> fac{ConvSpace::discrete(2), ConvSpace::indiscrete(2)};
    ConvSpace p = product(fac);
    CHECK(p.size() == 4);
    for (int r = 0; r < 4; ++r) {
        auto tup = product_rank_to_tuple(fac, r);
        // V is the product of coordinate V-sets.
        for (int q = 0; q < 4; ++q) {
            auto tq = product_rank_to_tuple(fac, q);
            bool in = fac[0].V(tup[0]).contains(tq[0]) && fac[1].V(tup[1]).contains(tq[1]);
            CHECK(p.V(r).contains(q) == in);
        }
        // Projections are continuous.
    }
    PointMap proj0{{0, 0, 1, 1}, 2};
    CHECK(is_continuous(proj0, p, fac[0]));
}

TEST_CASE("continuous convergence space") {
    ConvSpace s = ConvSpace::indiscrete(2);
    ConvSpace t = ConvSpace::discrete(2);
    ContinuousConvergence cc = continuous_convergence_space(s, t);
    // Only the constant maps are continuous from indiscrete to discrete.
    REQUIRE(cc.maps.size() == 2);
    CHECK(cc.maps[0] == std::vector<int>{0, 0});
    CHECK(cc.maps[1] == std::vector<int>{1, 1});
    CHECK(cc.space.size() == 2);

    ContinuousConvergence all = continuous_convergence_space(t, t);
    CHECK(all.maps.size() == 4);  // every map is continuous from discrete
}

TEST_CASE("mixing theorem holds on every small space") {
    MixingBounds b{3, 2};
    enumerate_structures(2, [&](const ConvSpace& s) {
        CHECK(verify_mixing_theorem(s, b).passed());
    });
    CHECK(verify_mixing_theorem(three_point_example(), b).passed());
}

TEST_CASE("iterated limit verdict characterizes topological spaces") {
    IteratedLimitBounds b;
    b.samples = 100;
    enumerate_structures(3, [&](const ConvSpace& s) {
        CHECK(verify_iterated_limit(s, b).passed() == is_topological(s));
    });
    // The example space is non-topological and must yield a concrete witness.
    VerifyReport rep = verify_iterated_limit(three_point_example(), b);
    CHECK(!rep.passed());
    CHECK(!rep.witness.empty());
}

TEST_CASE("roundtrip through nets and filters reproduces the structure") {
    enumerate_structures(3, [](const ConvSpace& s) {
        CHECK(roundtrip_check(s, 3).passed());
    });
}
