#include "parahoric/moduli.hpp"

#include <algorithm>

namespace parahoric {

TorsionElement make_torsion(const RootSystem& rs, QVec theta) {
    if (static_cast<int>(theta.size()) != rs.rank())
        throw validation_error("dimension_mismatch", "torsion element of mismatched rank");
    mpz_class order = 1;
    for (const Rat& c : theta) mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), c.get_den_mpz_t());
    if (!order.fits_slong_p()) throw validation_error("bad_point", "torsion order out of range");
    return TorsionElement{std::move(theta), order.get_si()};
}

long e_g(const RootSystem& rs, const TorsionElement& g) {
    long count = 0;
    for (const Root& r : rs.roots())
        if (!is_integer(rs.pairing(g.theta, r))) ++count;
    return count;
}

CentralizerData centralizer(const RootSystem& rs, const TorsionElement& g) {
    CentralizerData data;
    data.element = g;

    std::vector<Root> integral;
    for (const Root& r : rs.roots())
        if (is_integer(rs.pairing(g.theta, r))) integral.push_back(r);
    data.y_g = classify_subsystem(rs, std::move(integral));

    data.dim_zg = rs.rank() + static_cast<long>(data.y_g.roots.size());
    data.k = 0;
    for (int i = 0; i < rs.rank(); ++i)
        if (!is_integer(rs.pairing(g.theta, rs.simple(i)))) ++data.k;
    data.dim_zg_a = rs.rank() - data.y_g.total_rank;
    data.dim_zg_s = data.dim_zg - data.dim_zg_a;

    bool nonnegative = true;
    for (int i = 0; i < rs.rank(); ++i)
        if (rs.pairing(g.theta, rs.simple(i)) < 0) nonnegative = false;
    const Rat highest_value = rs.pairing(g.theta, rs.highest_root());
    data.in_fundamental_alcove = nonnegative && highest_value <= 1;
    data.claims_apply = nonnegative && highest_value < 1;

    data.k_equals_abelian_rank = data.k == data.dim_zg_a;
    data.semisimple_bound_holds = data.dim_zg_s <= rs.dim_group() - 3 * data.k;
    return data;
}

ModuliInput make_moduli_input(const RootSystem& rs, long genus, std::vector<RamificationDatum> ram,
                              std::vector<Facet> facets) {
    if (genus < 0) throw validation_error("bad_genus", "genus must be nonnegative");
    for (const RamificationDatum& d : ram) {
        if (d.order < 1)
            throw validation_error("bad_ram", "ramification order must be positive");
        if (static_cast<int>(d.isotropy.theta.size()) != rs.rank())
            throw validation_error("dimension_mismatch", "isotropy element of mismatched rank");
    }
    if (facets.empty() && !ram.empty())
        facets.assign(ram.size(), facet_for(rs, {}));  // interior: trivial flag fiber
    if (ram.empty() && !facets.empty()) {
        QVec zero(rs.rank(), Rat(0));
        ram.assign(facets.size(), RamificationDatum{1, make_torsion(rs, zero)});
    }
    if (ram.size() != facets.size())
        throw validation_error("bad_input", "ramification data and facets of unequal length");
    return ModuliInput{rs.type(), genus, std::move(ram), std::move(facets)};
}

Rat moduli_dimension(const RootSystem& rs, const ModuliInput& input) {
    Rat dim = Rat(rs.dim_group()) * (input.genus - 1);
    for (const RamificationDatum& d : input.ram) dim += frac(e_g(rs, d.isotropy), 2);
    if (!is_integer(dim))
        throw internal_error("moduli dimension " + rat_str(dim) + " is not an integer");
    return dim;
}

Rat rs_codim_bound_k(long genus, long m, long k) {
    return Rat(k) * (Rat(2 * (genus - 1)) + frac(m, 2));
}

CodimBound rs_codim_bound(const RootSystem& rs, const ModuliInput& input,
                          const TorsionElement& g) {
    const CentralizerData data = centralizer(rs, g);
    if (data.k == 0)
        throw validation_error("central_element",
                               "codimension bound requires a noncentral element (k >= 1)");
    CodimBound out;
    out.k = data.k;
    out.bound = rs_codim_bound_k(input.genus, static_cast<long>(input.ram.size()), data.k);
    out.at_least_two = out.bound >= 2;
    out.at_least_four = out.bound >= 4;
    return out;
}

long unstable_codim_bound(const ModuliInput& input) { return input.genus - 1; }

long hecke_fiber_dimension(const RootSystem& rs, const ModuliInput& input) {
    long dim = 0;
    for (const Facet& f : input.facets) dim += reductive_quotient(rs, f).positive_count;
    return dim;
}

FuchsianReport fuchsian_check(const RootSystem& rs, const ModuliInput& input) {
    (void)rs;  // the check is lattice-level; rs kept for interface symmetry
    for (size_t i = 0; i < input.ram.size(); ++i) {
        const RamificationDatum& d = input.ram[i];
        for (const Rat& c : d.isotropy.theta)
            if (!is_integer(Rat(d.order) * c))
                throw validation_error(
                    "ram_order", "isotropy at point " + std::to_string(i) + " has order " +
                                     std::to_string(d.isotropy.order) + " not dividing n_i = " +
                                     std::to_string(d.order));
    }
    FuchsianReport report;
    report.generators = 2 * input.genus + static_cast<long>(input.ram.size());
    report.euler_characteristic = Rat(2 - 2 * input.genus);
    for (const RamificationDatum& d : input.ram)
        report.euler_characteristic -= Rat(1) - frac(1, d.order);
    return report;
}

}  // namespace parahoric
