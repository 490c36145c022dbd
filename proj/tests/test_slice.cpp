#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qvl/errors.hpp"
#include "qvl/slice.hpp"
#include "qvl/weights.hpp"
#include "support/flat_oracle.hpp"

using namespace qvl;

TEST_CASE("slice of a multiplicity-two real summand") {
    Quiver a1 = quiver_preset("A1");
    RepType rt{{0}, {{IntVec{1}, Int(2)}}, true};
    SliceData s = slice_quiver(a1, {5}, rt);
    CHECK(classify(s.slice_quiver).label() == "A1");
    CHECK(s.v_bar == IntVec{2});
    CHECK(s.w_bar == IntVec{5});
    REQUIRE(s.eta.size() == 1);
    CHECK(s.eta[0] == IntVec{1});
    CHECK(eta_apply_row(s, 0, {Rat(7, 2)}) == Rat(7, 2));
}

TEST_CASE("slice of a delta summand is a Jordan quiver") {
    Quiver j = quiver_preset("jordan");
    RepType rt{{0}, {{IntVec{1}, Int(3)}}, true};
    SliceData s = slice_quiver(j, {1}, rt);
    CHECK(classify(s.slice_quiver).label() == "jordan");
    CHECK(s.v_bar == IntVec{3});
    CHECK(s.w_bar == IntVec{1});
}

TEST_CASE("slice of an A2 representation type") {
    Quiver a2 = quiver_preset("A2");
    RepType rt{{0, 1}, {{IntVec{1, 0}, Int(1)}}, true};
    SliceData s = slice_quiver(a2, {1, 1}, rt);
    CHECK(classify(s.slice_quiver).label() == "A1");
    CHECK(s.v_bar == IntVec{1});
    CHECK(s.w_bar == IntVec{2});  // w.v1 = 1 and <v0,v1> = -1
}

TEST_CASE("rank-1 slice data follows the closed formulas") {
    Quiver a1 = quiver_preset("A1");
    SliceData s = rank1_slice(a1, {2}, {5}, {1});
    CHECK(s.v_bar == IntVec{2});
    CHECK(s.w_bar == IntVec{5});  // (5 - 4) + 2*2

    Quiver j = quiver_preset("jordan");
    for (int n = 2; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r) {
            SliceData sj = rank1_slice(j, {n}, {r}, {1});
            CHECK(sj.v_bar == IntVec{n});
            CHECK(sj.w_bar == IntVec{r});
            CHECK(classify(sj.slice_quiver).label() == "jordan");
        }

    CHECK_THROWS_AS(rank1_slice(a1, {1}, {1}, {1}), input_error);  // not dominant
    CHECK_THROWS_AS(rank1_slice(j, {1}, {1}, {1}), input_error);   // not a wall
}

TEST_CASE("rank-1 slice equals the minimal-leaf slice across a sweep") {
    auto check_instance = [](const Quiver& q, const IntVec& v, const IntVec& w) {
        if (!is_dominant(q, {w, v})) return;
        auto cls = classify(q);
        auto roots = positive_roots_upto(q, v);
        for (auto& r : roots) {
            if (r.imaginary && r.coords != delta(q)) continue;
            LeavesResult lr;
            try {
                lr = leaves_on_wall(q, v, w, r.coords);
            } catch (const input_error&) {
                continue;  // affine level gating
            }
            if (!lr.is_wall) continue;
            SliceData direct = rank1_slice(q, v, w, r.coords);
            SliceData via_leaf = slice_quiver(q, w, lr.leaves.back());
            CHECK(direct.v_bar == via_leaf.v_bar);
            CHECK(direct.w_bar == via_leaf.w_bar);
            CHECK(classify(direct.slice_quiver).label() ==
                  classify(via_leaf.slice_quiver).label());
            // type-A closure
            if (cls.type_a() || cls.jordan()) {
                auto scls = classify(direct.slice_quiver);
                CHECK((scls.type_a() || scls.jordan()));
            }
        }
    };
    for (auto& name : {"A1", "A2", "A3"}) {
        Quiver q = quiver_preset(name);
        for (auto& v : qvl_tests::vectors_up_to(q.n, 4))
            for (auto& w : qvl_tests::vectors_up_to(q.n, 3)) check_instance(q, v, w);
    }
    Quiver j = quiver_preset("jordan");
    for (int n = 0; n <= 4; ++n)
        for (int r = 0; r <= 3; ++r) check_instance(j, {n}, {r});
    Quiver a2t{3, {{0, 1}, {1, 2}, {2, 0}}};
    check_instance(a2t, {1, 1, 1}, {1, 0, 0});
    check_instance(a2t, {2, 2, 2}, {1, 0, 0});
    check_instance(a2t, {1, 1, 1}, {1, 1, 0});
    check_instance(a2t, {2, 2, 2}, {1, 1, 0});
}

TEST_CASE("slice loops are 0 on real summands and 1 on delta summands") {
    Quiver a2t{3, {{0, 1}, {1, 2}, {2, 0}}};
    RepType rt{{0, 0, 0}, {{IntVec{1, 1, 1}, Int(2)}}, true};
    SliceData s = slice_quiver(a2t, {1, 1, 0}, rt);
    int loops = 0;
    for (auto [t, h] : s.slice_quiver.arrows)
        if (t == h) ++loops;
    CHECK(loops == 1);

    RepType rt2{{1, 1, 0}, {{IntVec{0, 0, 1}, Int(1)}}, true};
    SliceData s2 = slice_quiver(a2t, {1, 1, 0}, rt2);
    loops = 0;
    for (auto [t, h] : s2.slice_quiver.arrows)
        if (t == h) ++loops;
    CHECK(loops == 0);
}

TEST_CASE("invalid representation types are rejected") {
    Quiver a2 = quiver_preset("A2");
    // two summands with positive mutual pairing force a negative arrow count
    RepType bad{{0, 0}, {{IntVec{1, 0}, Int(1)}, {IntVec{1, 1}, Int(1)}}, false};
    CHECK_THROWS_AS(slice_quiver(a2, {1, 1}, bad), internal_error);
}

TEST_CASE("partition leaves of the level-one wall slice consistently") {
    Quiver j = quiver_preset("jordan");
    auto lr = leaves_on_wall(j, {4}, {1}, {1});
    REQUIRE(lr.is_wall);
    // minimal leaf: one summand (delta, 4) -> Jordan with (v,w) = (4,1)
    SliceData minimal = slice_quiver(j, {1}, lr.leaves.back());
    CHECK(minimal.v_bar == IntVec{4});
    CHECK(minimal.w_bar == IntVec{1});
    // a two-point collision pattern gives two Jordan vertices with no arrows
    // between them
    for (auto& rt : lr.leaves) {
        if (rt.summands.size() != 2) continue;
        SliceData s = slice_quiver(j, {1}, rt);
        CHECK(s.slice_quiver.n == 2);
        for (auto [t, h] : s.slice_quiver.arrows) CHECK(t == h);
        CHECK(s.w_bar == IntVec{1, 1});
    }
}
