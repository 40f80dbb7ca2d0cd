#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "parahoric/dynkin.hpp"
#include "parahoric/rational.hpp"

namespace parahoric {

// A root in the simple-root basis, together with the coordinates of its
// coroot in the simple-coroot basis. The coroot data makes every pairing
// <beta, gammacheck> an integer matrix product; no inner product is needed.
struct Root {
    IVec coords;
    IVec coroot;

    bool is_positive() const;
    long height() const;  // sum of coordinates
    std::string str() const;

    friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
};

struct SubSystem {
    std::vector<Root> roots;        // canonical order: positives then negatives
    std::vector<Root> simple_sub;   // indecomposable positive elements
    std::vector<DynkinType> components;  // sorted, with multiplicity
    int total_rank = 0;
};

class RootSystem {
public:
    explicit RootSystem(DynkinType type);

    DynkinType type() const { return type_; }
    int rank() const { return rank_; }
    const CartanMatrix& cartan() const { return cartan_; }

    // All roots: the positive roots sorted by (height, then coordinates),
    // followed by their negatives in the same order.
    const std::vector<Root>& roots() const { return roots_; }
    std::span<const Root> positive_roots() const;
    long num_roots() const { return static_cast<long>(roots_.size()); }
    long num_positive() const { return num_roots() / 2; }

    const Root& simple(int i) const;
    const Root& highest_root() const { return highest_; }
    // Coefficients of the highest root in the simple basis.
    const IVec& marks() const { return marks_; }

    bool is_root(const IVec& coords) const;
    int root_index(const IVec& coords) const;  // -1 if absent
    const Root& root_at(int index) const { return roots_[index]; }

    // <beta, gammacheck>: the value of the root beta on the coroot of gamma.
    long pair_root_coroot(const Root& beta, const Root& gamma) const;

    // s_r(s) = s - <s, rcheck> r. Both arguments must be roots of this system.
    Root reflect(const Root& r, const Root& s) const;

    // <theta, r> for theta in fundamental-coweight coordinates and r in
    // simple-root coordinates; the pairing matrix between the bases is the
    // identity, so this is an exact dot product.
    Rat pairing(const QVec& theta, const Root& r) const;

    // Coordinates of rcheck in the fundamental-coweight basis (A^T * coroot).
    IVec coroot_in_coweight(const Root& r) const;

    long dim_group() const { return rank_ + num_roots(); }

private:
    DynkinType type_;
    int rank_;
    CartanMatrix cartan_;
    std::vector<Root> roots_;
    Root highest_;
    IVec marks_;
    std::map<IVec, int> index_;
};

// Validates that `subset` is symmetric (closed under negation) and closed
// under root addition inside `rs`, then computes the indecomposable positive
// elements, their Cartan matrix, and the component types.
SubSystem classify_subsystem(const RootSystem& rs, std::vector<Root> subset);

}  // namespace parahoric
