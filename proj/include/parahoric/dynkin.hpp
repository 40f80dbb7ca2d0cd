#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "parahoric/rational.hpp"

namespace parahoric {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Cartan matrix in the generalized-Cartan-matrix convention
//   a[i][j] = <alpha_j, alphacheck_i> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i),
// rows indexed by coroots. Simple reflections act by
//   s_i(beta) = beta - (A beta)_i alpha_i.
using CartanMatrix = std::vector<IVec>;

// An admissible irreducible type. Construction canonicalizes the two
// coincidences of small rank: (B,2) -> C2 and (D,3) -> A3, so that the
// isomorphism-based classifier round-trips on every constructible type.
class DynkinType {
public:
    DynkinType(Family family, int rank);
    static DynkinType parse(std::string_view spec);  // "A2", "g2", "E8", ...

    Family family() const { return family_; }
    int rank() const { return rank_; }
    std::string str() const;

    friend auto operator<=>(const DynkinType&, const DynkinType&) = default;

private:
    Family family_;
    int rank_;
};

// Bourbaki numbering throughout (see the table in README.md).
CartanMatrix standard_cartan(DynkinType type);

// Closed-form number of roots: A_n n(n+1), B_n/C_n 2n^2, D_n 2n(n-1),
// E6 72, E7 126, E8 240, F4 48, G2 12.
long classical_root_count(DynkinType type);

// Splits a valid finite-type Cartan matrix into connected components and
// labels each one by directed-graph isomorphism against the standard
// matrices. The result is sorted (family, then rank). Throws internal_error
// if some component matches no standard type: callers only hand in Cartan
// matrices of closed subsystems, for which that cannot happen.
std::vector<DynkinType> classify_components(const CartanMatrix& cartan);

std::string components_str(const std::vector<DynkinType>& components);

}  // namespace parahoric
