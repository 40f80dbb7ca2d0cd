#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "parahoric/parahoric.hpp"
#include "parahoric/verify.hpp"

using namespace parahoric;

namespace {

long exponent_of(const RootSystem& rs, const ParahoricData& data, const IVec& coords) {
    const int idx = rs.root_index(coords);
    REQUIRE(idx >= 0);
    return data.exponents[idx];
}

long prounipotent_of(const RootSystem& rs, const ParahoricData& data, const IVec& coords) {
    const int idx = rs.root_index(coords);
    REQUIRE(idx >= 0);
    return data.prounipotent[idx];
}

}  // namespace

TEST_CASE("parahoric exponents in A1") {
    const RootSystem a1((DynkinType(Family::A, 1)));

    SUBCASE("vertex v_0: the maximal parahoric at the origin") {
        const ParahoricData d = parahoric_exponents(a1, facet_for(a1, {0}), 2);
        CHECK(exponent_of(a1, d, {1}) == 0);     // -floor(0)
        CHECK(exponent_of(a1, d, {-1}) == 0);
        CHECK(prounipotent_of(a1, d, {1}) == 1);  // 1 - ceil(0)
        CHECK(prounipotent_of(a1, d, {-1}) == 1);
    }

    SUBCASE("interior: the Iwahori") {
        const ParahoricData d = parahoric_exponents(a1, facet_for(a1, {}), 2);
        CHECK(exponent_of(a1, d, {1}) == 0);      // -floor(1/2)
        CHECK(exponent_of(a1, d, {-1}) == 1);     // -floor(-1/2)
        CHECK(prounipotent_of(a1, d, {1}) == 0);  // 1 - ceil(1/2)
        CHECK(prounipotent_of(a1, d, {-1}) == 1);
    }

    SUBCASE("vertex at the fundamental coweight") {
        const ParahoricData d = parahoric_exponents(a1, facet_for(a1, {1}), 2);
        CHECK(exponent_of(a1, d, {1}) == -1);     // -floor(1)
        CHECK(exponent_of(a1, d, {-1}) == 1);     // -floor(-1)
        CHECK(prounipotent_of(a1, d, {1}) == 0);  // 1 - ceil(1)
        CHECK(prounipotent_of(a1, d, {-1}) == 2);
    }
}

TEST_CASE("exponents at a single apartment point") {
    const RootSystem a1((DynkinType(Family::A, 1)));

    // outside the fundamental alcove: the conjugated parahoric
    const PointExponents far = parahoric_exponents_at(a1, QVec{Rat(3, 2)});
    CHECK(far.exponents[a1.root_index(IVec{1})] == -1);   // -floor(3/2)
    CHECK(far.exponents[a1.root_index(IVec{-1})] == 2);   // -floor(-3/2)
    CHECK(far.prounipotent[a1.root_index(IVec{1})] == -1);
    CHECK(far.prounipotent[a1.root_index(IVec{-1})] == 2);

    // at an interior point the data agrees with the facet computation
    const PointExponents mid = parahoric_exponents_at(a1, QVec{Rat(1, 3)});
    const ParahoricData iwahori = parahoric_exponents(a1, facet_for(a1, {}));
    CHECK(mid.exponents == iwahori.exponents);
    CHECK(mid.prounipotent == iwahori.prounipotent);
}

TEST_CASE("exponent pair sums and pro-unipotent gaps") {
    for (const DynkinType t : admissible_types(3)) {
        const RootSystem rs(t);
        CAPTURE(t.str());
        for (const Facet& f : enumerate_facets(rs)) {
            const ParahoricData d = parahoric_exponents(rs, f, 2);
            for (long i = 0; i < rs.num_positive(); ++i) {
                const long sum = d.exponents[i] + d.exponents[i + rs.num_positive()];
                CHECK((sum == 0 || sum == 1));
            }
            for (long i = 0; i < rs.num_roots(); ++i) {
                const long gap = d.prounipotent[i] - d.exponents[i];
                CHECK((gap == 0 || gap == 1));
            }
        }
    }
}

TEST_CASE("Iwahori characterization across types") {
    for (const DynkinType t : admissible_types(6)) {
        const CheckResult r = checks::iwahori(RootSystem(t));
        CAPTURE(t.str());
        CHECK(r.violations == 0);
    }
}

TEST_CASE("filtration chain over closure pairs") {
    for (const DynkinType t : admissible_types(3)) {
        const CheckResult r = checks::filtration_chain(RootSystem(t));
        CAPTURE(t.str());
        CHECK(r.violations == 0);
    }
}

TEST_CASE("reductive quotients") {
    const RootSystem a1((DynkinType(Family::A, 1)));

    const ReductiveQuotient at_origin = reductive_quotient(a1, facet_for(a1, {0}));
    CHECK(at_origin.subsystem.components == std::vector<DynkinType>{DynkinType(Family::A, 1)});
    CHECK(at_origin.group_dim == 3);
    CHECK(at_origin.positive_count == 1);

    const ReductiveQuotient interior = reductive_quotient(a1, facet_for(a1, {}));
    CHECK(interior.subsystem.components.empty());
    CHECK(interior.group_dim == 1);  // the torus

    // C2: deleting the middle node of the affine diagram leaves A1 x A1
    const RootSystem c2((DynkinType(Family::C, 2)));
    const ReductiveQuotient wedge = reductive_quotient(c2, facet_for(c2, {1, 2}));
    const std::vector<DynkinType> a1a1{DynkinType(Family::A, 1), DynkinType(Family::A, 1)};
    CHECK(wedge.subsystem.components == a1a1);
    CHECK(wedge.group_dim == 2 + 4);

    // semisimple part of an A2 wall quotient is one dimension short of the group
    const RootSystem a2((DynkinType(Family::A, 2)));
    const ReductiveQuotient wall = reductive_quotient(a2, facet_for(a2, {0}));
    CHECK(wall.group_dim == 4);
    CHECK(wall.semisimple_dim == 3);
    CHECK(wall.torus_rank == 2);
}

TEST_CASE("quotient anchors for all small types") {
    for (const DynkinType t : admissible_types(4)) {
        const CheckResult r = checks::quotient_anchors(RootSystem(t));
        CAPTURE(t.str());
        CHECK(r.violations == 0);
    }
}

TEST_CASE("parabolic sets") {
    const RootSystem a1((DynkinType(Family::A, 1)));
    const Facet origin = facet_for(a1, {0});
    const Facet interior = facet_for(a1, {});

    SUBCASE("the Borel of the vertex fiber") {
        const ParabolicSet p = parabolic_set(a1, origin, interior);
        CHECK(p.levi.empty());  // torus Levi
        REQUIRE(p.unipotent.size() == 1);
        CHECK(p.unipotent[0].vec.coords == IVec{1});
        CHECK(p.unipotent[0].level == 0);
    }

    SUBCASE("s = b gives the full group") {
        const ParabolicSet p = parabolic_set(a1, origin, origin);
        CHECK(p.roots.size() == 2);
        CHECK(p.levi.size() == 2);
        CHECK(p.unipotent.empty());
    }

    SUBCASE("closure precondition") {
        CHECK_THROWS_AS(parabolic_set(a1, interior, origin), validation_error);
    }
}

TEST_CASE("parabolic of an edge facet in A2") {
    const RootSystem a2((DynkinType(Family::A, 2)));
    const Facet origin = facet_for(a2, {0, 1});
    const Facet edge = facet_for(a2, {1});  // alpha_2 still vanishes
    const ParabolicSet p = parabolic_set(a2, origin, edge);

    REQUIRE(p.levi.size() == 2);  // the A1 spanned by alpha_2
    CHECK(p.levi[0].vec.coords == IVec{0, 1});
    CHECK(p.levi[1].vec.coords == IVec{0, -1});
    REQUIRE(p.unipotent.size() == 2);  // the remaining two positive roots
    CHECK(p.unipotent[0].vec.coords == IVec{1, 0});
    CHECK(p.unipotent[1].vec.coords == IVec{1, 1});
}

TEST_CASE("parabolic invariants over all closure pairs") {
    for (const DynkinType t : admissible_types(3)) {
        const CheckResult r = checks::parabolic_invariants(RootSystem(t));
        CAPTURE(t.str());
        CHECK(r.violations == 0);
    }
}

TEST_CASE("floor/ceiling lemma") {
    const RootSystem a1((DynkinType(Family::A, 1)));
    const Facet origin = facet_for(a1, {0});
    const Facet interior = facet_for(a1, {});

    // s = v_0, b = interior: floor(1/2) = ceil(0) holds for alpha,
    // floor(-1/2) = -1 != 0 = ceil(0) for -alpha.
    const FloorCeilingReport r = verify_floor_ceiling(a1, origin, interior);
    REQUIRE(r.equality_roots.size() == 1);
    CHECK(r.equality_roots[0].coords == IVec{1});
    CHECK(r.matches_parabolic);
    CHECK(r.falsifications.empty());

    // s = b = interior: no root satisfies the equality
    const FloorCeilingReport diag = verify_floor_ceiling(a1, interior, interior);
    CHECK(diag.equality_roots.empty());
    CHECK(diag.matches_parabolic);
}

TEST_CASE("floor/ceiling sweep finds no counterexample") {
    for (const DynkinType t : admissible_types(3)) {
        const CheckResult r = checks::floor_ceiling(RootSystem(t));
        CAPTURE(t.str());
        CHECK(r.violations == 0);
    }
}

TEST_CASE("affine Cartan matrix of C2") {
    const RootSystem c2((DynkinType(Family::C, 2)));
    const CartanMatrix affine = affine_cartan(c2);
    const CartanMatrix expected{{2, -2, -2}, {-1, 2, 0}, {-1, 0, 2}};
    CHECK(affine == expected);
}

TEST_CASE("node deletion crosscheck") {
    SUBCASE("G2: affine plus long node gives the long A2") {
        const RootSystem g2((DynkinType(Family::G, 2)));
        const ReductiveQuotient q = reductive_quotient(g2, facet_for(g2, {1, 2}));
        CHECK(q.subsystem.components == std::vector<DynkinType>{DynkinType(Family::A, 2)});

        const CartanMatrix affine = affine_cartan(g2);
        CartanMatrix sub{{affine[1][1], affine[1][2]}, {affine[2][1], affine[2][2]}};
        CHECK(classify_components(sub) == std::vector<DynkinType>{DynkinType(Family::A, 2)});
    }

    SUBCASE("zero mismatches for every facet, rank <= 4") {
        for (const DynkinType t : admissible_types(4)) {
            const CrosscheckReport report = node_deletion_crosscheck(RootSystem(t));
            CAPTURE(t.str());
            CHECK(report.facets_checked == (1l << (t.rank() + 1)) - 1);
            CHECK(report.mismatches.empty());
        }
    }
}
