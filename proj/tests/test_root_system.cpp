#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "parahoric/root_system.hpp"
#include "parahoric/verify.hpp"

using namespace parahoric;

namespace {

std::set<IVec> coord_set(const RootSystem& rs) {
    std::set<IVec> out;
    for (const Root& r : rs.roots()) out.insert(r.coords);
    return out;
}

}  // namespace

TEST_CASE("type admissibility and canonical labels") {
    CHECK(DynkinType::parse("A1").str() == "A1");
    CHECK(DynkinType::parse("e8").str() == "E8");
    CHECK(DynkinType::parse("B2").str() == "C2");  // isomorphic diagrams, one label
    CHECK(DynkinType::parse("D3").str() == "A3");
    CHECK(DynkinType::parse("D4").str() == "D4");

    CHECK_THROWS_AS(DynkinType::parse("A0"), validation_error);
    CHECK_THROWS_AS(DynkinType::parse("B1"), validation_error);
    CHECK_THROWS_AS(DynkinType::parse("D2"), validation_error);
    CHECK_THROWS_AS(DynkinType::parse("E9"), validation_error);
    CHECK_THROWS_AS(DynkinType::parse("E5"), validation_error);
    CHECK_THROWS_AS(DynkinType::parse("F5"), validation_error);
    CHECK_THROWS_AS(DynkinType::parse("G3"), validation_error);
    CHECK_THROWS_AS(DynkinType::parse("H2"), validation_error);
    CHECK_THROWS_AS(DynkinType::parse("A"), validation_error);
    CHECK_THROWS_AS(DynkinType::parse("A1x"), validation_error);
}

TEST_CASE("A1 is the smallest system") {
    const RootSystem rs((DynkinType(Family::A, 1)));
    CHECK(rs.num_roots() == 2);
    CHECK(rs.marks() == IVec{1});
    CHECK(coord_set(rs) == std::set<IVec>{{1}, {-1}});
}

TEST_CASE("A2 by reflection closure") {
    const RootSystem rs((DynkinType(Family::A, 2)));
    CHECK(rs.num_roots() == 6);
    CHECK(rs.highest_root().coords == IVec{1, 1});
    CHECK(rs.marks() == IVec{1, 1});
    // Independent enumeration: the six vectors of A2 in the simple basis.
    const std::set<IVec> expected{{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}};
    CHECK(coord_set(rs) == expected);
}

TEST_CASE("G2 by reflection closure") {
    const RootSystem rs((DynkinType(Family::G, 2)));
    CHECK(rs.num_roots() == 12);
    CHECK(rs.marks() == IVec{3, 2});
    // Hand enumeration with alpha_1 short: positives are alpha_1, alpha_2,
    // alpha_1+alpha_2, 2a1+a2, 3a1+a2, 3a1+2a2.
    std::set<IVec> expected;
    for (IVec pos : {IVec{1, 0}, IVec{0, 1}, IVec{1, 1}, IVec{2, 1}, IVec{3, 1}, IVec{3, 2}}) {
        expected.insert(pos);
        expected.insert(IVec{-pos[0], -pos[1]});
    }
    CHECK(coord_set(rs) == expected);
}

TEST_CASE("classical root counts and marks for small ranks") {
    CHECK(RootSystem(DynkinType(Family::C, 2)).num_roots() == 8);
    CHECK(RootSystem(DynkinType(Family::B, 3)).num_roots() == 18);
    CHECK(RootSystem(DynkinType(Family::D, 4)).num_roots() == 24);
    CHECK(RootSystem(DynkinType(Family::F, 4)).num_roots() == 48);
    CHECK(RootSystem(DynkinType(Family::E, 6)).num_roots() == 72);

    CHECK(RootSystem(DynkinType(Family::C, 2)).marks() == IVec{2, 1});
    CHECK(RootSystem(DynkinType(Family::B, 3)).marks() == IVec{1, 2, 2});
    CHECK(RootSystem(DynkinType(Family::C, 3)).marks() == IVec{2, 2, 1});
    CHECK(RootSystem(DynkinType(Family::D, 4)).marks() == IVec{1, 2, 1, 1});
    CHECK(RootSystem(DynkinType(Family::F, 4)).marks() == IVec{2, 3, 4, 2});
    CHECK(RootSystem(DynkinType(Family::E, 6)).marks() == IVec{1, 2, 2, 3, 2, 1});
    CHECK(RootSystem(DynkinType(Family::E, 8)).marks() == IVec{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("structural invariants of the root set") {
    for (const DynkinType t : admissible_types(4)) {
        const RootSystem rs(t);
        CAPTURE(t.str());

        for (int i = 0; i < rs.rank(); ++i) {
            CHECK(rs.cartan()[i][i] == 2);
            for (int j = 0; j < rs.rank(); ++j)
                if (i != j) {
                    CHECK(rs.cartan()[i][j] <= 0);
                    CHECK(rs.cartan()[i][j] >= -3);
                }
        }

        for (const Root& r : rs.roots()) {
            const bool nonneg = std::all_of(r.coords.begin(), r.coords.end(),
                                            [](long c) { return c >= 0; });
            const bool nonpos = std::all_of(r.coords.begin(), r.coords.end(),
                                            [](long c) { return c <= 0; });
            CHECK((nonneg || nonpos));
            CHECK(rs.pair_root_coroot(r, r) == 2);  // coroot normalization

            IVec neg(r.coords.size()), twice(r.coords.size());
            for (size_t i = 0; i < r.coords.size(); ++i) {
                neg[i] = -r.coords[i];
                twice[i] = 2 * r.coords[i];
            }
            CHECK(rs.is_root(neg));
            CHECK(!rs.is_root(twice));  // reduced
        }

        // highest root: the marked combination, plus highest + simple never a root
        IVec combo(rs.rank(), 0);
        for (int i = 0; i < rs.rank(); ++i) combo[i] = rs.marks()[i];
        CHECK(rs.highest_root().coords == combo);
        for (int i = 0; i < rs.rank(); ++i) {
            IVec sum = rs.highest_root().coords;
            sum[i] += 1;
            CHECK(!rs.is_root(sum));
        }
    }
}

TEST_CASE("cartan pairing on coweight coordinates") {
    const RootSystem a1((DynkinType(Family::A, 1)));
    CHECK(a1.pairing(QVec{Rat(0)}, a1.root_at(0)) == 0);
    CHECK(a1.pairing(QVec{Rat(1, 2)}, a1.root_at(0)) == Rat(1, 2));

    const RootSystem a2((DynkinType(Family::A, 2)));
    const int high = a2.root_index(IVec{1, 1});
    REQUIRE(high >= 0);
    CHECK(a2.pairing(QVec{Rat(1), Rat(0)}, a2.root_at(high)) == 1);

    CHECK_THROWS_AS(a2.pairing(QVec{Rat(1)}, a2.root_at(0)), validation_error);
}

TEST_CASE("pairing bilinearity on random rational samples") {
    for (const DynkinType t : admissible_types(3)) {
        const CheckResult r = checks::pairing_bilinearity(RootSystem(t), 40);
        CAPTURE(t.str());
        CHECK(r.violations == 0);
    }
}

TEST_CASE("reflections") {
    const RootSystem a1((DynkinType(Family::A, 1)));
    const Root alpha = a1.simple(0);
    CHECK(a1.reflect(alpha, alpha).coords == IVec{-1});

    const RootSystem a2((DynkinType(Family::A, 2)));
    CHECK(a2.reflect(a2.simple(0), a2.simple(1)).coords == IVec{1, 1});

    const RootSystem g2((DynkinType(Family::G, 2)));
    const Root image = g2.reflect(g2.simple(0), g2.simple(1));
    CHECK(image.coords == IVec{3, 1});
    CHECK(g2.is_root(image.coords));  // brute-force membership in the 12-root set

    // s_r is an involution and permutes the root set
    for (const Root& r : g2.roots())
        for (const Root& s : g2.roots()) {
            const Root once = g2.reflect(r, s);
            CHECK(g2.is_root(once.coords));
            CHECK(g2.reflect(r, once) == s);
        }
}

TEST_CASE("classify_subsystem examples") {
    const RootSystem a2((DynkinType(Family::A, 2)));

    SUBCASE("empty subset is the torus quotient") {
        const SubSystem sub = classify_subsystem(a2, {});
        CHECK(sub.components.empty());
        CHECK(sub.total_rank == 0);
        CHECK(sub.roots.empty());
    }

    SUBCASE("single root pair") {
        const SubSystem sub =
            classify_subsystem(a2, {a2.root_at(a2.root_index(IVec{1, 0})),
                                    a2.root_at(a2.root_index(IVec{-1, 0}))});
        CHECK(sub.components == std::vector<DynkinType>{DynkinType(Family::A, 1)});
        CHECK(sub.total_rank == 1);
    }

    SUBCASE("long A1 x A1 inside C2") {
        const RootSystem c2((DynkinType(Family::C, 2)));
        std::vector<Root> subset;
        for (IVec c : {IVec{0, 1}, IVec{0, -1}, IVec{2, 1}, IVec{-2, -1}})
            subset.push_back(c2.root_at(c2.root_index(c)));
        const SubSystem sub = classify_subsystem(c2, subset);
        const std::vector<DynkinType> expected{DynkinType(Family::A, 1), DynkinType(Family::A, 1)};
        CHECK(sub.components == expected);
    }

    SUBCASE("validation") {
        CHECK_THROWS_AS(classify_subsystem(a2, {a2.simple(0)}), validation_error);
        // {±a1, ±a2} misses a1+a2: symmetric but not closed
        std::vector<Root> open_set;
        for (IVec c : {IVec{1, 0}, IVec{-1, 0}, IVec{0, 1}, IVec{0, -1}})
            open_set.push_back(a2.root_at(a2.root_index(c)));
        CHECK_THROWS_AS(classify_subsystem(a2, open_set), validation_error);
    }
}

TEST_CASE("classification round-trips on the full system") {
    for (const DynkinType t : admissible_types(8)) {
        const RootSystem rs(t);
        const SubSystem sub = classify_subsystem(rs, rs.roots());
        CAPTURE(t.str());
        CHECK(sub.components == std::vector<DynkinType>{t});
        CHECK(sub.total_rank == rs.rank());
    }
}
