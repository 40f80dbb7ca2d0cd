#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parahoric/root_system.hpp"

namespace parahoric {

// The affine functional x |-> r(x - v_0) + n. The origin v_0 is the zero of
// the coweight coordinates, so evaluation at v_0 equals the level.
struct AffineRoot {
    Root vec;
    long level = 0;

    std::string str() const;

    friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
        return a.level == b.level && a.vec == b.vec;
    }
};

Rat eval_affine(const RootSystem& rs, const AffineRoot& a, const QVec& x);

// The walls of the fundamental alcove: the simple affine roots
// [alpha_1, ..., alpha_rank, 1 - highest_root], with the affine node last.
// alcove_marks are [a_1, ..., a_rank, 1]; the marked sum of the simple
// affine roots is the constant functional 1.
struct Alcove {
    std::vector<AffineRoot> simple_affine;
    IVec alcove_marks;

    int size() const { return static_cast<int>(simple_affine.size()); }
    int affine_node() const { return size() - 1; }
};

Alcove fundamental_alcove(const RootSystem& rs);

// All affine roots vanishing at x. For each finite root r at most one level
// works (n = -<x,r> when that is an integer), so no scanning is needed.
std::vector<AffineRoot> vanishing_set(const RootSystem& rs, const QVec& x);

// A facet of the closure of the fundamental alcove: the locus where exactly
// the simple affine roots indexed by `vanishing` are 0 and the others are
// positive.
struct Facet {
    std::vector<int> vanishing;  // sorted proper subset of [0, rank]
    QVec representative;
    int dimension = 0;

    std::string vanishing_str() const;
};

// Canonical representative: the free simple-affine values are all set to
// 1/(sum of their alcove marks); the coordinates solve the resulting
// (diagonal) system exactly.
Facet facet_for(const RootSystem& rs, std::vector<int> vanishing);

// The 2^(rank+1) - 1 facets, ordered by the bitmask of their vanishing set.
std::vector<Facet> enumerate_facets(const RootSystem& rs);

// s lies in the closure of b iff b's vanishing conditions are a subset of
// s's (more vanishing = smaller facet).
bool facet_closure_leq(const Facet& s, const Facet& b);

// Extra exact points strictly inside a facet (used by the audit mode and the
// sampling tests). Distinct from the representative for dimension >= 1.
std::vector<QVec> facet_sample_points(const RootSystem& rs, const Facet& f, int count);

// Indices of the simple affine roots vanishing at x (x must lie in the
// closure of the fundamental alcove for this to name a facet).
std::vector<int> vanishing_pattern(const RootSystem& rs, const Alcove& alcove, const QVec& x);

// Reflection across the wall {a = 0}: x - a(x) * acheck.
QVec reflect_point(const RootSystem& rs, const AffineRoot& wall, const QVec& x);

// The image of an affine root under the same wall reflection.
AffineRoot reflect_affine(const RootSystem& rs, const AffineRoot& wall, const AffineRoot& a);

// A word in the simple affine reflections. word = [j_1, ..., j_k] denotes
// w = s_{j_1} o ... o s_{j_k} (rightmost letter applied first); w maps the
// fundamental alcove onto the alcove containing the walk's target.
struct AlcoveWalk {
    std::vector<int> word;
    QVec image_representative;            // w(representative of the open alcove)
    std::vector<AffineRoot> image_walls;  // w . simple_affine: walls of the image alcove
};

// Applies w to a point (rightmost letter first).
QVec apply_word_point(const RootSystem& rs, const Alcove& alcove, const std::vector<int>& word,
                      QVec x);

// Repeatedly reflects the target across the lowest-index violated wall of
// the fundamental alcove until none is violated; the collected letters give
// w with w(a_0) the alcove of the target. The word is not claimed reduced.
// Targets on a wall are rejected (the error names the vanishing affine root).
AlcoveWalk alcove_walk(const RootSystem& rs, const QVec& target);

}  // namespace parahoric
