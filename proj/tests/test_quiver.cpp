#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qvl/errors.hpp"
#include "qvl/quiver.hpp"

#include <random>

using namespace qvl;

namespace {

Quiver single_vertex() { return Quiver{1, {}}; }

Quiver three_cycle() { return Quiver{3, {{0, 1}, {1, 2}, {2, 0}}}; }

} // namespace

TEST_CASE("classification of small quivers") {
    CHECK(classify(single_vertex()).label() == "A1");
    CHECK(classify(quiver_preset("jordan")).label() == "jordan");
    CHECK(classify(three_cycle()).label() == "A2~");

    Quiver two_loops{1, {{0, 0}, {0, 0}}};
    CHECK(classify(two_loops).kind == Kind::Unsupported);
    Quiver triple{2, {{0, 1}, {0, 1}, {0, 1}}};
    CHECK(classify(triple).kind == Kind::Unsupported);
    Quiver disconnected{2, {}};
    CHECK_THROWS_AS(classify(disconnected), input_error);
}

TEST_CASE("preset catalog classifies as named") {
    for (auto& name : preset_names()) {
        auto cls = classify(quiver_preset(name));
        CHECK(cls.label() == name);
        if (cls.affine() || cls.jordan()) {
            auto d = delta(quiver_preset(name));
            for (auto& x : d) CHECK(x > 0);
            // delta spans the kernel
            Quiver q = quiver_preset(name);
            for (int i = 0; i < q.n; ++i) {
                IntVec e(q.n, 0);
                e[i] = 1;
                CHECK(cartan_pair(q, e, d) == 0);
            }
        }
    }
    CHECK_THROWS_AS(quiver_preset("B2"), input_error);
    CHECK_THROWS_AS(quiver_preset("Z9"), input_error);
}

TEST_CASE("cartan matrices") {
    auto c1 = cartan_matrix(single_vertex());
    CHECK(c1.size() == 1);
    CHECK(c1[0][0] == 2);

    auto c2 = cartan_matrix(quiver_preset("A2"));
    CHECK(c2[0][0] == 2);
    CHECK(c2[0][1] == -1);
    CHECK(c2[1][0] == -1);
    CHECK(c2[1][1] == 2);

    auto cj = cartan_matrix(quiver_preset("jordan"));
    CHECK(cj[0][0] == 0);
}

TEST_CASE("tits form and cartan pairing") {
    Quiver a1 = single_vertex();
    CHECK(tits_form(a1, {1}, {1}) == 1);
    CHECK(cartan_pair(a1, {1}, {1}) == 2);

    Quiver a2 = quiver_preset("A2");
    CHECK(tits_form(a2, {1, 0}, {0, 1}) == Rat(-1, 2));
    CHECK(cartan_pair(a2, {1, 0}, {0, 1}) == -1);
    CHECK(cartan_pair(a2, {0, 0}, {5, 7}) == 0);

    Quiver a2t = three_cycle();
    IntVec d = delta(a2t);
    CHECK(d == IntVec{1, 1, 1});
    CHECK(tits_form(a2t, d, d) == 0);

    CHECK_THROWS_AS(tits_form(a2, {1}, {0, 1}), input_error);
}

TEST_CASE("tits form is half the cartan pairing on random vectors") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (auto& name : {"A3", "D4", "A2~", "D4~", "jordan"}) {
        Quiver q = quiver_preset(name);
        for (int trial = 0; trial < 50; ++trial) {
            IntVec a(q.n), b(q.n);
            for (int i = 0; i < q.n; ++i) {
                a[i] = entry(rng);
                b[i] = entry(rng);
            }
            CHECK(tits_form(q, a, b) * 2 == Rat(cartan_pair(q, a, b)));
        }
    }
}

TEST_CASE("delta vectors") {
    CHECK(delta(quiver_preset("jordan")) == IntVec{1});
    CHECK(delta(three_cycle()) == IntVec{1, 1, 1});
    // D4~ has the branch vertex at index 1 in the preset layout
    CHECK(delta(quiver_preset("D4~")) == IntVec{1, 2, 1, 1, 1});
    CHECK_THROWS_AS(delta(quiver_preset("A3")), input_error);
}

TEST_CASE("positive roots in a box") {
    Quiver a2 = quiver_preset("A2");
    auto roots = positive_roots_upto(a2, {1, 1});
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].coords == IntVec{0, 1});
    CHECK(roots[1].coords == IntVec{1, 0});
    CHECK(roots[2].coords == IntVec{1, 1});
    for (auto& r : roots) CHECK_FALSE(r.imaginary);

    auto a1_roots = positive_roots_upto(single_vertex(), {3});
    REQUIRE(a1_roots.size() == 1);
    CHECK(a1_roots[0].coords == IntVec{1});

    Quiver a2t = three_cycle();
    auto affine = positive_roots_upto(a2t, {1, 1, 1});
    CHECK(affine.size() == 7);
    int imag = 0;
    for (auto& r : affine) {
        if (r.imaginary) {
            ++imag;
            CHECK(r.coords == IntVec{1, 1, 1});
        } else {
            CHECK(tits_form(a2t, r.coords, r.coords) == 1);
        }
    }
    CHECK(imag == 1);

    auto jordan = positive_roots_upto(quiver_preset("jordan"), {3});
    REQUIRE(jordan.size() == 3);
    for (auto& r : jordan) CHECK(r.imaginary);
}

TEST_CASE("root counts match the classical positive root numbers") {
    // bound = highest root, so the box contains every positive root
    CHECK(positive_roots_upto(quiver_preset("A1"), {1}).size() == 1);
    CHECK(positive_roots_upto(quiver_preset("A2"), {1, 1}).size() == 3);
    CHECK(positive_roots_upto(quiver_preset("A3"), {1, 1, 1}).size() == 6);
    CHECK(positive_roots_upto(quiver_preset("D4"), {1, 2, 1, 1}).size() == 12);
}

TEST_CASE("root enumeration is monotone in the bound") {
    Quiver q = quiver_preset("A3");
    auto small = positive_roots_upto(q, {1, 1, 0});
    auto large = positive_roots_upto(q, {1, 1, 1});
    for (auto& r : small) {
        bool found = false;
        for (auto& s : large)
            if (s.coords == r.coords) found = true;
        CHECK(found);
    }
    CHECK(small.size() <= large.size());
}

TEST_CASE("general root test on framed-style quivers") {
    // 2-Kronecker: an affine A1 shape
    Quiver kron{2, {{0, 1}, {0, 1}}};
    CHECK(is_root(kron, {1, 0}));
    CHECK(is_root(kron, {1, 1}));   // delta
    CHECK(is_root(kron, {2, 2}));   // imaginary multiple
    CHECK(is_root(kron, {2, 1}));   // real
    CHECK_FALSE(is_root(kron, {3, 1}));
    CHECK_FALSE(is_root(kron, {0, 0}));
    CHECK_FALSE(is_root(kron, {1, -1}));

    // 3-Kronecker is wild; (3,1) is still in the reflection orbit of a simple
    Quiver k3{2, {{0, 1}, {0, 1}, {0, 1}}};
    CHECK(is_root(k3, {3, 1}));
    CHECK(is_root(k3, {1, 1}));     // norm -1, fundamental region
    CHECK_FALSE(is_root(k3, {2, 0}));

    // disconnected support is never a root
    Quiver a3 = quiver_preset("A3");
    CHECK_FALSE(is_root(a3, {1, 0, 1}));
    CHECK(is_root(a3, {1, 1, 1}));
}

TEST_CASE("framed quiver shape") {
    Quiver f = framed_quiver(quiver_preset("A2"), {2, 1});
    CHECK(f.n == 3);
    CHECK(f.arrows.size() == 1 + 3);
}
