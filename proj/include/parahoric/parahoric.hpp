#pragma once

#include <string>
#include <vector>

#include "parahoric/apartment.hpp"

namespace parahoric {

// Filtration exponents of the parahoric attached to a facet: the group is
// generated by T(A) and u_r(t^{m_r} A) with m_r = -floor((theta, r)); the
// pro-unipotent radical by T(1+t) and u_r(t^{1 - ceil((theta, r))} A).
// Exponent vectors are parallel to rs.roots().
struct ParahoricData {
    Facet facet;
    std::vector<long> exponents;
    std::vector<long> prounipotent;

    static constexpr const char* torus_part = "T(A)";
    static constexpr const char* torus_part_prounipotent = "T(1+t)";
};

// audit_points > 0 re-verifies the exponents at extra sample points of the
// facet; any disagreement would falsify the facet-constancy of the data and
// is raised as internal_error.
ParahoricData parahoric_exponents(const RootSystem& rs, const Facet& f, int audit_points = 0);

// Theta = a single rational point, anywhere in the apartment (not only in
// the closure of the fundamental alcove). Exponent vectors parallel to
// rs.roots(), as above.
struct PointExponents {
    QVec point;
    std::vector<long> exponents;
    std::vector<long> prounipotent;
};

PointExponents parahoric_exponents_at(const RootSystem& rs, const QVec& point);

// The reductive quotient of the special fiber: its root system is the set
// Y_sigma of affine roots vanishing on the facet, identified with a closed
// subsystem of the finite system through the vector parts.
struct ReductiveQuotient {
    std::vector<AffineRoot> affine_roots;  // Y_sigma
    SubSystem subsystem;                   // its vector parts, classified
    long torus_rank = 0;                   // rank of G, constant across facets
    long semisimple_dim = 0;               // |roots| + total_rank
    long group_dim = 0;                    // torus_rank + |roots|
    long positive_count = 0;               // |roots| / 2
};

ReductiveQuotient reductive_quotient(const RootSystem& rs, const Facet& f);

// G_{s,b} = { alpha in Y_s | alpha(b) >= 0 }, split into the Levi part
// (alpha(b) = 0) and the unipotent part (alpha(b) > 0). Requires s to lie in
// the closure of b.
struct ParabolicSet {
    std::vector<AffineRoot> roots;
    std::vector<AffineRoot> levi;
    std::vector<AffineRoot> unipotent;
};

ParabolicSet parabolic_set(const RootSystem& rs, const Facet& s, const Facet& b);

// Checks, for every finite root r, that floor((b,r)) = ceil((s,r)) forces
// (s,r) integral, and that the set of roots satisfying the equality is
// exactly the vector-part set of parabolic_set(s, b). Counterexamples would
// falsify the floor/ceiling lemma and are collected, never thrown.
struct FloorCeilingReport {
    std::vector<Root> equality_roots;
    bool matches_parabolic = false;
    std::vector<std::string> falsifications;
};

FloorCeilingReport verify_floor_ceiling(const RootSystem& rs, const Facet& s, const Facet& b);

// The Cartan matrix of the affine diagram: nodes [alpha_1..alpha_rank,
// alpha_0 = -highest_root], entries by the same coroot pairing as the finite
// matrix.
CartanMatrix affine_cartan(const RootSystem& rs);

// For every facet, computes the type of the reductive quotient twice:
// from the vanishing affine roots, and from the sub-Cartan matrix of the
// affine diagram restricted to the facet's nodes. Mismatches are collected.
struct CrosscheckReport {
    long facets_checked = 0;
    std::vector<std::string> mismatches;
};

CrosscheckReport node_deletion_crosscheck(const RootSystem& rs);

}  // namespace parahoric
