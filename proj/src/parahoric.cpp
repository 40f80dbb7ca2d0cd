#include "parahoric/parahoric.hpp"

#include <algorithm>

namespace parahoric {

PointExponents parahoric_exponents_at(const RootSystem& rs, const QVec& point) {
    PointExponents out;
    out.point = point;
    for (const Root& r : rs.roots()) {
        const Rat v = rs.pairing(point, r);
        out.exponents.push_back(-floor_long(v));
        out.prounipotent.push_back(1 - ceil_long(v));
    }
    return out;
}

ParahoricData parahoric_exponents(const RootSystem& rs, const Facet& f, int audit_points) {
    ParahoricData data;
    data.facet = f;
    PointExponents at_rep = parahoric_exponents_at(rs, f.representative);
    data.exponents = std::move(at_rep.exponents);
    data.prounipotent = std::move(at_rep.prounipotent);

    if (audit_points > 0) {
        for (const QVec& p : facet_sample_points(rs, f, audit_points)) {
            const PointExponents sample = parahoric_exponents_at(rs, p);
            if (sample.exponents != data.exponents || sample.prounipotent != data.prounipotent)
                throw internal_error("parahoric exponents are not constant on facet " +
                                     f.vanishing_str());
        }
    }
    return data;
}

ReductiveQuotient reductive_quotient(const RootSystem& rs, const Facet& f) {
    ReductiveQuotient q;
    q.affine_roots = vanishing_set(rs, f.representative);
    std::vector<Root> vector_parts;
    for (const AffineRoot& a : q.affine_roots) vector_parts.push_back(a.vec);
    q.subsystem = classify_subsystem(rs, std::move(vector_parts));
    q.torus_rank = rs.rank();
    q.group_dim = q.torus_rank + static_cast<long>(q.subsystem.roots.size());
    q.semisimple_dim = static_cast<long>(q.subsystem.roots.size()) + q.subsystem.total_rank;
    q.positive_count = static_cast<long>(q.subsystem.roots.size()) / 2;
    return q;
}

ParabolicSet parabolic_set(const RootSystem& rs, const Facet& s, const Facet& b) {
    if (!facet_closure_leq(s, b))
        throw validation_error("not_closure_pair",
                               "facet {" + s.vanishing_str() + "} is not in the closure of {" +
                                   b.vanishing_str() + "}");
    ParabolicSet out;
    for (const AffineRoot& a : vanishing_set(rs, s.representative)) {
        const Rat v = eval_affine(rs, a, b.representative);
        if (v < 0) continue;
        out.roots.push_back(a);
        if (v == 0)
            out.levi.push_back(a);
        else
            out.unipotent.push_back(a);
    }
    return out;
}

FloorCeilingReport verify_floor_ceiling(const RootSystem& rs, const Facet& s, const Facet& b) {
    FloorCeilingReport report;
    for (const Root& r : rs.roots()) {
        const Rat vs = rs.pairing(s.representative, r);
        const Rat vb = rs.pairing(b.representative, r);
        if (floor_z(vb) != ceil_z(vs)) continue;
        report.equality_roots.push_back(r);
        if (!is_integer(vs))
            report.falsifications.push_back(
                "floor/ceiling lemma violated: root " + r.str() + ", (s,r) = " + rat_str(vs) +
                " not integral but floor((b,r)) = ceil((s,r)) with (b,r) = " + rat_str(vb));
    }

    std::vector<IVec> expected;
    for (const AffineRoot& a : parabolic_set(rs, s, b).roots) expected.push_back(a.vec.coords);
    std::vector<IVec> got;
    for (const Root& r : report.equality_roots) got.push_back(r.coords);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    report.matches_parabolic = expected == got;
    if (!report.matches_parabolic)
        report.falsifications.push_back(
            "floor/ceiling equality set differs from the parabolic set G_{s,b} at facets {" +
            s.vanishing_str() + "} <= {" + b.vanishing_str() + "}");
    return report;
}

CartanMatrix affine_cartan(const RootSystem& rs) {
    const Alcove alcove = fundamental_alcove(rs);
    const int n = alcove.size();
    CartanMatrix a(n, IVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = rs.pair_root_coroot(alcove.simple_affine[j].vec, alcove.simple_affine[i].vec);
    return a;
}

CrosscheckReport node_deletion_crosscheck(const RootSystem& rs) {
    const CartanMatrix affine = affine_cartan(rs);
    CrosscheckReport report;
    for (const Facet& f : enumerate_facets(rs)) {
        ++report.facets_checked;
        const auto from_vanishing = reductive_quotient(rs, f).subsystem.components;

        const int m = static_cast<int>(f.vanishing.size());
        CartanMatrix sub(m, IVec(m, 0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) sub[i][j] = affine[f.vanishing[i]][f.vanishing[j]];
        const auto from_diagram = classify_components(sub);

        if (from_vanishing != from_diagram)
            report.mismatches.push_back("facet {" + f.vanishing_str() + "} of " + rs.type().str() +
                                        ": vanishing roots give " +
                                        components_str(from_vanishing) + ", affine subdiagram gives " +
                                        components_str(from_diagram));
    }
    return report;
}

}  // namespace parahoric
