#pragma once

#include <string>
#include <vector>

#include "parahoric/parahoric.hpp"

namespace parahoric {

// A torus-valued torsion element g = exp(2*pi*i*theta). Only the pairings
// <theta, r> mod Z enter any formula here, so theta matters modulo the
// lattice dual to the root lattice (integer coweight coordinates), and
// `order` is the least n with n*theta integral in coweight coordinates.
struct TorsionElement {
    QVec theta;
    long order = 1;
};

TorsionElement make_torsion(const RootSystem& rs, QVec theta);

// e_G(g) = rank(Id - Ad(g)) on the Lie algebra: Ad(g) fixes the torus
// directions and multiplies the root line of r by exp(2*pi*i*<theta,r>), so
// this is the number of roots with non-integral pairing.
long e_g(const RootSystem& rs, const TorsionElement& g);

// Centralizer structure of g: Z_g is generated by T and the root groups of
// y_g = { r | <theta, r> in Z }. The two claims
//     k = dim_zg_a     and     dim_zg_s <= dim G - 3k
// hold when theta lies in the closed fundamental alcove with
// <theta, highest_root> < 1 (`claims_apply`); on the affine wall both can
// fail (A2 at (1/2,1/2), G2 at (1/3,0)), so there and outside the alcove the
// observed truth values are reported without being asserted. The weaker
// bounds dim_zg_a <= k and dim_zg_s <= dim G - 3*dim_zg_a hold on the whole
// closed alcove.
struct CentralizerData {
    TorsionElement element;
    SubSystem y_g;
    long dim_zg = 0;    // rank + |y_g|
    long k = 0;         // #{ simple alpha_i : <theta, alpha_i> not integral }
    long dim_zg_a = 0;  // rank - rank(y_g)
    long dim_zg_s = 0;  // dim_zg - dim_zg_a
    bool in_fundamental_alcove = false;  // closed alcove
    bool claims_apply = false;           // closed alcove, <theta,highest> < 1
    bool k_equals_abelian_rank = false;
    bool semisimple_bound_holds = false;  // dim_zg_s <= dim G - 3k
};

CentralizerData centralizer(const RootSystem& rs, const TorsionElement& g);

// One marked point: local cyclic order n_i and the isotropy image of its
// generator. isotropy.order must divide order.
struct RamificationDatum {
    long order = 1;
    TorsionElement isotropy;
};

// Group type, genus, and m marked points with their facets sigma_x.
// ram and facets always have equal length; m = 0 is the unramified case
// (an extension of the paper's non-empty R, kept as a sanity anchor).
struct ModuliInput {
    DynkinType type;
    long genus = 0;
    std::vector<RamificationDatum> ram;
    std::vector<Facet> facets;
};

ModuliInput make_moduli_input(const RootSystem& rs, long genus, std::vector<RamificationDatum> ram,
                              std::vector<Facet> facets);

// dim G * (g_X - 1) + (1/2) sum e_G(C_i). Always an integer (e_G counts
// roots in +- pairs); raised as internal_error otherwise.
Rat moduli_dimension(const RootSystem& rs, const ModuliInput& input);

// The raw lower bound k*(2*(g_X - 1) + m/2) for the codimension of the
// stable-but-not-regularly-stable locus attached to a class with invariant k.
Rat rs_codim_bound_k(long genus, long m, long k);

struct CodimBound {
    Rat bound;
    long k = 0;
    bool at_least_two = false;
    bool at_least_four = false;  // the paper's conclusion for g_X >= 3
};

// Same bound with k computed from g; central g (k = 0) is rejected.
CodimBound rs_codim_bound(const RootSystem& rs, const ModuliInput& input, const TorsionElement& g);

// g_X - 1: the paper's bound for the non-stable locus, specialized to its
// weakest case dim G - dim P = 1 with nonnegative parabolic-degree terms.
long unstable_codim_bound(const ModuliInput& input);

// Dimension of the product of the full flag varieties of the reductive
// quotients at the sigma_x: sum of the positive-root counts of the Y_sigma.
long hecke_fiber_dimension(const RootSystem& rs, const ModuliInput& input);

// Validates n_i * theta_i integral for every marked point (so the isotropy
// image has order dividing n_i); the error names the failing index. Reports
// the Fuchsian generator count 2g + m and the orbifold Euler characteristic
// 2 - 2g - sum(1 - 1/n_i).
struct FuchsianReport {
    long generators = 0;
    Rat euler_characteristic;
};

FuchsianReport fuchsian_check(const RootSystem& rs, const ModuliInput& input);

}  // namespace parahoric
