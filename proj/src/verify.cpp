#include "parahoric/verify.hpp"

#include <algorithm>
#include <set>

namespace parahoric {

namespace {
constexpr long kMaxReportedFalsifications = 8;
}

void CheckResult::fail(const std::string& message) {
    ++violations;
    if (static_cast<long>(falsifications.size()) < kMaxReportedFalsifications)
        falsifications.push_back(type + "/" + check + ": " + message);
}

std::uint64_t DetRng::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long DetRng::next_in(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat DetRng::next_rat(long max_abs, long max_den) {
    const long den = next_in(1, max_den);
    const long num = next_in(-max_abs * den, max_abs * den);
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::vector<DynkinType> admissible_types(int max_rank) {
    std::vector<DynkinType> out;
    for (int r = 1; r <= max_rank; ++r)
        for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F,
                         Family::G}) {
            try {
                DynkinType t(f, r);
                if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
            } catch (const validation_error&) {
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<QVec> alcove_points(const RootSystem& rs, long max_denominator) {
    std::set<QVec> points;
    const IVec& marks = rs.marks();
    for (long d = 1; d <= max_denominator; ++d) {
        QVec theta(rs.rank());
        auto rec = [&](auto&& self, int i, long budget) -> void {
            if (i == rs.rank()) {
                points.insert(theta);
                return;
            }
            for (long p = 0; p * marks[i] <= budget; ++p) {
                theta[i] = Rat(p, d);
                theta[i].canonicalize();
                self(self, i + 1, budget - p * marks[i]);
            }
        };
        rec(rec, 0, d);
    }
    return std::vector<QVec>(points.begin(), points.end());
}

std::vector<std::pair<int, int>> closure_pairs(const std::vector<Facet>& facets) {
    // enumerate_facets orders facets by the bitmask of their vanishing set,
    // so the submask walk enumerates exactly the closure relation.
    std::vector<std::pair<int, int>> out;
    for (int s = 0; s < static_cast<int>(facets.size()); ++s) {
        const unsigned long mask = static_cast<unsigned long>(s);
        unsigned long sub = mask;
        while (true) {
            out.emplace_back(s, static_cast<int>(sub));
            if (sub == 0) break;
            sub = (sub - 1) & mask;
        }
    }
    return out;
}

namespace checks {

namespace {

CheckResult make(const RootSystem& rs, const char* name) {
    CheckResult r;
    r.type = rs.type().str();
    r.check = name;
    return r;
}

}  // namespace

CheckResult root_count(const RootSystem& rs) {
    CheckResult r = make(rs, "root_count");
    r.cases = 1;
    if (rs.num_roots() != classical_root_count(rs.type()))
        r.fail("got " + std::to_string(rs.num_roots()) + " roots, classical count is " +
               std::to_string(classical_root_count(rs.type())));
    return r;
}

CheckResult facet_census(const RootSystem& rs) {
    CheckResult r = make(rs, "facet_census");
    const auto facets = enumerate_facets(rs);
    const Alcove alcove = fundamental_alcove(rs);
    r.cases = static_cast<long>(facets.size());
    const long expected = (1l << (rs.rank() + 1)) - 1;
    if (r.cases != expected)
        r.fail("facet count " + std::to_string(r.cases) + " != " + std::to_string(expected));
    for (const Facet& f : facets) {
        std::set<int> in_j(f.vanishing.begin(), f.vanishing.end());
        for (int i = 0; i < alcove.size(); ++i) {
            const Rat v = eval_affine(rs, alcove.simple_affine[i], f.representative);
            const bool ok = in_j.count(i) ? v == 0 : v > 0;
            if (!ok)
                r.fail("facet {" + f.vanishing_str() + "}: wall " + std::to_string(i) +
                       " evaluates to " + rat_str(v));
        }
        if (f.dimension != rs.rank() - static_cast<int>(f.vanishing.size()))
            r.fail("facet {" + f.vanishing_str() + "}: dependent vanishing vectors");
    }
    return r;
}

CheckResult floor_ceiling(const RootSystem& rs) {
    CheckResult r = make(rs, "floor_ceiling");
    const auto facets = enumerate_facets(rs);
    for (auto [si, bi] : closure_pairs(facets)) {
        ++r.cases;
        const FloorCeilingReport report = verify_floor_ceiling(rs, facets[si], facets[bi]);
        for (const std::string& f : report.falsifications) r.fail(f);
    }
    return r;
}

CheckResult filtration_chain(const RootSystem& rs) {
    CheckResult r = make(rs, "filtration_chain");
    const auto facets = enumerate_facets(rs);
    std::vector<ParahoricData> data;
    for (const Facet& f : facets) data.push_back(parahoric_exponents(rs, f));
    for (auto [si, bi] : closure_pairs(facets)) {
        ++r.cases;
        for (long i = 0; i < rs.num_roots(); ++i) {
            const bool chain = data[si].prounipotent[i] >= data[bi].prounipotent[i] &&
                               data[bi].prounipotent[i] >= data[bi].exponents[i] &&
                               data[bi].exponents[i] >= data[si].exponents[i];
            if (!chain)
                r.fail("chain P_s^u < P_b^u < P_b < P_s fails at root " +
                       rs.root_at(i).str() + " for facets {" + facets[si].vanishing_str() +
                       "} <= {" + facets[bi].vanishing_str() + "}");
        }
        for (long i = 0; i < rs.num_roots(); ++i) {
            const long diff = data[si].prounipotent[i] - data[si].exponents[i];
            if (diff < 0 || diff > 1)
                r.fail("prounipotent/exponent gap " + std::to_string(diff) + " at root " +
                       rs.root_at(i).str());
        }
    }
    // m_r + m_{-r} in {0, 1}
    for (const Facet& f : facets) {
        const ParahoricData d = parahoric_exponents(rs, f);
        for (long i = 0; i < rs.num_positive(); ++i) {
            const long sum = d.exponents[i] + d.exponents[i + rs.num_positive()];
            if (sum != 0 && sum != 1)
                r.fail("m_r + m_{-r} = " + std::to_string(sum) + " at root " +
                       rs.root_at(i).str() + ", facet {" + f.vanishing_str() + "}");
        }
    }
    return r;
}

CheckResult node_deletion(const RootSystem& rs) {
    CheckResult r = make(rs, "node_deletion");
    const CrosscheckReport report = node_deletion_crosscheck(rs);
    r.cases = report.facets_checked;
    for (const std::string& m : report.mismatches) r.fail(m);
    return r;
}

CheckResult parabolic_invariants(const RootSystem& rs) {
    CheckResult r = make(rs, "parabolic_invariants");
    const auto facets = enumerate_facets(rs);
    for (auto [si, bi] : closure_pairs(facets)) {
        ++r.cases;
        const Facet& s = facets[si];
        const Facet& b = facets[bi];
        const ParabolicSet p = parabolic_set(rs, s, b);
        const auto y_s = vanishing_set(rs, s.representative);

        if (p.levi.size() + p.unipotent.size() != p.roots.size())
            r.fail("levi/unipotent do not partition the parabolic set");

        std::set<IVec> in_p, in_levi, in_unip, in_ys;
        for (const AffineRoot& a : p.roots) in_p.insert(a.vec.coords);
        for (const AffineRoot& a : p.levi) in_levi.insert(a.vec.coords);
        for (const AffineRoot& a : p.unipotent) in_unip.insert(a.vec.coords);
        for (const AffineRoot& a : y_s) in_ys.insert(a.vec.coords);

        auto negate = [](const IVec& c) {
            IVec n(c.size());
            for (size_t i = 0; i < c.size(); ++i) n[i] = -c[i];
            return n;
        };
        for (const IVec& c : in_levi)
            if (!in_levi.count(negate(c))) r.fail("levi part not negation-closed");
        for (const IVec& c : in_unip)
            if (in_unip.count(negate(c))) r.fail("unipotent part meets its own negative");
        for (const IVec& c : in_ys)
            if (!in_p.count(c) && !in_p.count(negate(c)))
                r.fail("parabolic set does not cover Y_s up to sign at " + rs.root_at(rs.root_index(c)).str());
        for (const IVec& a : in_p)
            for (const IVec& c : in_p) {
                IVec sum(a.size());
                for (size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + c[i];
                if (in_ys.count(sum) && !in_p.count(sum))
                    r.fail("parabolic set not addition-closed inside Y_s");
            }

        if (bi == 0) {  // b = interior facet: the Borel of Y_s
            if (2 * p.unipotent.size() != y_s.size())
                r.fail("Borel unipotent part has " + std::to_string(p.unipotent.size()) +
                       " roots, expected |Y_s|/2 = " + std::to_string(y_s.size() / 2));
        }
        if (si == bi && p.roots.size() != y_s.size())
            r.fail("parabolic_set(s, s) is not all of Y_s");
    }
    return r;
}

CheckResult iwahori(const RootSystem& rs) {
    CheckResult r = make(rs, "iwahori");
    const ParahoricData d = parahoric_exponents(rs, facet_for(rs, {}));
    r.cases = rs.num_roots();
    for (long i = 0; i < rs.num_roots(); ++i) {
        const long expected = rs.root_at(i).is_positive() ? 0 : 1;
        if (d.exponents[i] != expected)
            r.fail("Iwahori exponent at " + rs.root_at(i).str() + " is " +
                   std::to_string(d.exponents[i]) + ", expected " + std::to_string(expected));
    }
    return r;
}

CheckResult quotient_anchors(const RootSystem& rs) {
    CheckResult r = make(rs, "quotient_anchors");
    r.cases = 2;
    const ReductiveQuotient interior = reductive_quotient(rs, facet_for(rs, {}));
    if (interior.group_dim != rs.rank() || !interior.subsystem.components.empty())
        r.fail("interior facet quotient is not the torus");

    std::vector<int> all_finite(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) all_finite[i] = i;
    const ReductiveQuotient origin = reductive_quotient(rs, facet_for(rs, all_finite));
    if (origin.subsystem.components != std::vector<DynkinType>{rs.type()})
        r.fail("vertex v_0 quotient is " + components_str(origin.subsystem.components) +
               ", expected " + rs.type().str());
    if (origin.group_dim != rs.dim_group()) r.fail("vertex v_0 quotient has wrong dimension");
    return r;
}

CheckResult centralizer_sweep(const RootSystem& rs, long max_denominator) {
    CheckResult r = make(rs, "centralizer");
    for (const QVec& theta : alcove_points(rs, max_denominator)) {
        ++r.cases;
        const TorsionElement g = make_torsion(rs, theta);
        const CentralizerData data = centralizer(rs, g);

        const long e = e_g(rs, g);
        if (e % 2 != 0) r.fail("e_G odd at theta = " + qvec_str(theta));
        if (e != rs.dim_group() - data.dim_zg)
            r.fail("e_G != dim G - dim Z_g at theta = " + qvec_str(theta));
        if (data.dim_zg_s + data.dim_zg_a != data.dim_zg || data.dim_zg_a < 0 || data.k < 0)
            r.fail("centralizer dimension bookkeeping broken at theta = " + qvec_str(theta));

        // On the whole closed alcove.
        if (data.dim_zg_a > data.k)
            r.fail("dim Z_g^a > k at theta = " + qvec_str(theta));
        if (data.dim_zg_s > rs.dim_group() - 3 * data.dim_zg_a)
            r.fail("dim Z_g^s > dim G - 3 dim Z_g^a at theta = " + qvec_str(theta));

        // The paper's claims, on the subdomain where they are provable.
        if (data.claims_apply) {
            if (!data.k_equals_abelian_rank)
                r.fail("k != dim Z_g^a inside the alcove at theta = " + qvec_str(theta));
            if (!data.semisimple_bound_holds)
                r.fail("dim Z_g^s > dim G - 3k inside the alcove at theta = " + qvec_str(theta));
        } else if (!data.k_equals_abelian_rank || !data.semisimple_bound_holds) {
            ++r.informational;  // affine-wall points where the literal claims fail
        }
    }
    return r;
}

CheckResult walk_sample(const RootSystem& rs, int samples) {
    CheckResult r = make(rs, "alcove_walk");
    DetRng rng(0x77a1c5eedull);
    for (int n = 0; n < samples; ++n) {
        QVec target(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) target[i] = rng.next_rat(10, 12);
        if (!vanishing_set(rs, target).empty()) continue;  // wall point: rejected by contract
        ++r.cases;
        const AlcoveWalk walk = alcove_walk(rs, target);
        const QVec image = walk.image_representative;
        for (const Root& root : rs.positive_roots())
            if (floor_z(rs.pairing(image, root)) != floor_z(rs.pairing(target, root))) {
                r.fail("walk image and target in different alcoves at " + qvec_str(target));
                break;
            }
        for (const AffineRoot& wall : walk.image_walls)
            if (eval_affine(rs, wall, target) <= 0) {
                r.fail("image wall " + wall.str() + " not positive at target " + qvec_str(target));
                break;
            }
    }
    return r;
}

CheckResult pairing_bilinearity(const RootSystem& rs, int samples) {
    CheckResult r = make(rs, "pairing_bilinearity");
    DetRng rng(0xb111ull);
    for (int n = 0; n < samples; ++n) {
        ++r.cases;
        QVec x(rs.rank()), y(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) {
            x[i] = rng.next_rat(6, 8);
            y[i] = rng.next_rat(6, 8);
        }
        const Rat a = rng.next_rat(5, 6);
        const Root& root = rs.root_at(rng.next_in(0, rs.num_roots() - 1));
        QVec combo(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) combo[i] = a * x[i] + y[i];
        if (rs.pairing(combo, root) != a * rs.pairing(x, root) + rs.pairing(y, root))
            r.fail("pairing not bilinear at sample " + std::to_string(n));
    }
    return r;
}

CheckResult alcove_relation(const RootSystem& rs) {
    CheckResult r = make(rs, "alcove_relation");
    const Alcove alcove = fundamental_alcove(rs);
    DetRng rng(0xa1c0ull);
    r.cases = 5;
    for (int n = 0; n < 5; ++n) {
        QVec x(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) x[i] = rng.next_rat(4, 9);
        Rat sum = 0;
        for (int i = 0; i < alcove.size(); ++i)
            sum += Rat(alcove.alcove_marks[i]) * eval_affine(rs, alcove.simple_affine[i], x);
        if (sum != 1)
            r.fail("marked sum of simple affine roots is " + rat_str(sum) + " at " + qvec_str(x));
    }
    return r;
}

CheckResult facet_welldefinedness(const RootSystem& rs) {
    CheckResult r = make(rs, "facet_welldefinedness");
    for (const Facet& f : enumerate_facets(rs)) {
        if (f.dimension < 1) continue;
        ++r.cases;
        const auto reference = vanishing_set(rs, f.representative);
        for (const QVec& p : facet_sample_points(rs, f, 3)) {
            const auto sample = vanishing_set(rs, p);
            if (sample != reference) {
                r.fail("Y_p differs across facet {" + f.vanishing_str() + "}");
                break;
            }
        }
    }
    return r;
}

CheckResult facet_partition(const RootSystem& rs, long max_denominator) {
    CheckResult r = make(rs, "facet_partition");
    const Alcove alcove = fundamental_alcove(rs);
    const auto facets = enumerate_facets(rs);
    for (const QVec& x : alcove_points(rs, max_denominator)) {
        ++r.cases;
        const std::vector<int> pattern = vanishing_pattern(rs, alcove, x);
        if (static_cast<int>(pattern.size()) > rs.rank()) {
            r.fail("all walls vanish at " + qvec_str(x));
            continue;
        }
        long matches = 0;
        for (const Facet& f : facets)
            if (f.vanishing == pattern) ++matches;
        if (matches != 1)
            r.fail("point " + qvec_str(x) + " matches " + std::to_string(matches) + " facets");
    }
    return r;
}

CheckResult moduli_sample(const RootSystem& rs, int samples) {
    CheckResult r = make(rs, "moduli_dimension");
    DetRng rng(0xd1aull);
    const auto points = alcove_points(rs, 4);
    for (int n = 0; n < samples; ++n) {
        ++r.cases;
        const long genus = rng.next_in(0, 6);
        const long m = rng.next_in(0, 4);
        std::vector<RamificationDatum> ram;
        for (long i = 0; i < m; ++i) {
            const TorsionElement iso =
                make_torsion(rs, points[rng.next_in(0, static_cast<long>(points.size()) - 1)]);
            const long extra = rng.next_in(1, 4);
            ram.push_back(RamificationDatum{iso.order * extra, iso});
        }
        const ModuliInput input = make_moduli_input(rs, genus, ram, {});
        fuchsian_check(rs, input);
        const Rat dim = moduli_dimension(rs, input);  // integrality checked inside
        if (!is_integer(dim)) r.fail("non-integral dimension");

        // Monotonicity: zeroing out one isotropy never increases the dimension.
        if (m > 0) {
            auto weakened = input;
            weakened.ram[0].isotropy = make_torsion(rs, QVec(rs.rank(), Rat(0)));
            weakened.ram[0].order = 1;
            if (moduli_dimension(rs, weakened) > dim)
                r.fail("dimension decreased when adding isotropy");
        }
    }
    return r;
}

CheckResult codim_sweep(const RootSystem& rs, long max_genus, long max_m) {
    CheckResult r = make(rs, "codim_bounds");
    for (long genus = 3; genus <= max_genus; ++genus)
        for (long m = 0; m <= max_m; ++m)
            for (long k = 1; k <= rs.rank(); ++k) {
                ++r.cases;
                if (rs_codim_bound_k(genus, m, k) < 4)
                    r.fail("regular-stability bound below four at g=" + std::to_string(genus) +
                           " m=" + std::to_string(m) + " k=" + std::to_string(k));
            }
    for (long genus = 3; genus <= max_genus; ++genus) {
        ++r.cases;
        ModuliInput input{rs.type(), genus, {}, {}};
        if (unstable_codim_bound(input) < 2)
            r.fail("unstable bound below two at g=" + std::to_string(genus));
    }
    return r;
}

CheckResult hecke_anchors(const RootSystem& rs) {
    CheckResult r = make(rs, "hecke_fiber");
    r.cases = 2;
    std::vector<int> all_finite(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) all_finite[i] = i;
    const long m = 2;

    ModuliInput at_origin = make_moduli_input(
        rs, 0, {}, std::vector<Facet>(m, facet_for(rs, all_finite)));
    if (hecke_fiber_dimension(rs, at_origin) != m * rs.num_positive())
        r.fail("fiber over v_0 points is not m * #positive roots");

    ModuliInput at_interior = make_moduli_input(rs, 0, {}, std::vector<Facet>(m, facet_for(rs, {})));
    if (hecke_fiber_dimension(rs, at_interior) != 0)
        r.fail("fiber over interior facets is not a point");
    return r;
}

}  // namespace checks

std::vector<CheckResult> run_verify(std::optional<DynkinType> only, int max_rank) {
    std::vector<DynkinType> types;
    if (only)
        types.push_back(*only);
    else
        types = admissible_types(max_rank);

    std::vector<CheckResult> out;
    for (DynkinType t : types) {
        const RootSystem rs(t);
        out.push_back(checks::root_count(rs));
        out.push_back(checks::facet_census(rs));
        out.push_back(checks::floor_ceiling(rs));
        out.push_back(checks::filtration_chain(rs));
        out.push_back(checks::node_deletion(rs));
        out.push_back(checks::parabolic_invariants(rs));
        out.push_back(checks::iwahori(rs));
        out.push_back(checks::quotient_anchors(rs));
        out.push_back(checks::centralizer_sweep(rs, 6));
        out.push_back(checks::walk_sample(rs, 25));
        out.push_back(checks::pairing_bilinearity(rs, 25));
        out.push_back(checks::alcove_relation(rs));
        out.push_back(checks::facet_welldefinedness(rs));
        out.push_back(checks::facet_partition(rs, 7));
        out.push_back(checks::moduli_sample(rs, 20));
        out.push_back(checks::codim_sweep(rs, 10, 10));
        out.push_back(checks::hecke_anchors(rs));
    }
    return out;
}

}  // namespace parahoric
