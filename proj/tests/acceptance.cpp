// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exits nonzero if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "parahoric/cli.hpp"
#include "parahoric/verify.hpp"

using namespace parahoric;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool condition, const std::string& message) {
        if (!condition && pass) {
            pass = false;
            detail = message;
        }
    }
};

int failures = 0;

void criterion(int number, const std::string& name, const std::function<void(Outcome&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.pass = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char line[512];
    std::snprintf(line, sizeof(line), "%s criterion %02d %-22s (%6.2fs)%s%s",
                  outcome.pass ? "PASS" : "FAIL", number, name.c_str(), seconds,
                  outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
    std::cout << line << std::endl;
    if (!outcome.pass) ++failures;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli_path = argc > 1 ? argv[1] : "";

    criterion(1, "root-counts", [](Outcome& o) {
        const auto start = std::chrono::steady_clock::now();
        long types = 0;
        for (const DynkinType t : admissible_types(8)) {
            const RootSystem rs(t);
            ++types;
            o.require(rs.num_roots() == classical_root_count(t),
                      t.str() + " has " + std::to_string(rs.num_roots()) + " roots");
        }
        o.require(types == 31, "expected 31 canonical types of rank <= 8");
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(seconds < 10.0, "root census exceeded 10s");
    });

    criterion(2, "facet-census", [](Outcome& o) {
        for (const DynkinType t : admissible_types(6)) {
            const CheckResult r = checks::facet_census(RootSystem(t));
            o.require(r.violations == 0, t.str() + ": " +
                                             (r.falsifications.empty() ? "census violation"
                                                                       : r.falsifications[0]));
            o.require(r.cases == (1l << (t.rank() + 1)) - 1, t.str() + ": wrong facet count");
        }
    });

    criterion(3, "floor-ceiling-lemma", [](Outcome& o) {
        const auto start = std::chrono::steady_clock::now();
        for (const DynkinType t : admissible_types(4)) {
            const CheckResult r = checks::floor_ceiling(RootSystem(t));
            o.require(r.violations == 0,
                      t.str() + ": " + (r.falsifications.empty() ? "?" : r.falsifications[0]));
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(seconds < 60.0, "floor/ceiling sweep exceeded 60s");
    });

    criterion(4, "filtration-chain", [](Outcome& o) {
        for (const DynkinType t : admissible_types(4)) {
            const CheckResult r = checks::filtration_chain(RootSystem(t));
            o.require(r.violations == 0,
                      t.str() + ": " + (r.falsifications.empty() ? "?" : r.falsifications[0]));
        }
    });

    criterion(5, "node-deletion", [](Outcome& o) {
        for (const DynkinType t : admissible_types(6)) {
            const CrosscheckReport r = node_deletion_crosscheck(RootSystem(t));
            o.require(r.facets_checked == (1l << (t.rank() + 1)) - 1,
                      t.str() + ": facet sweep incomplete");
            o.require(r.mismatches.empty(),
                      t.str() + ": " + (r.mismatches.empty() ? "" : r.mismatches[0]));
        }
    });

    criterion(6, "parabolic-invariants", [](Outcome& o) {
        for (const DynkinType t : admissible_types(4)) {
            const CheckResult r = checks::parabolic_invariants(RootSystem(t));
            o.require(r.violations == 0,
                      t.str() + ": " + (r.falsifications.empty() ? "?" : r.falsifications[0]));
        }
    });

    criterion(7, "dimension-formula", [](Outcome& o) {
        const RootSystem a1((DynkinType(Family::A, 1)));
        o.require(moduli_dimension(a1, make_moduli_input(a1, 2, {}, {})) == 3,
                  "A1 genus 2 unramified != 3");
        const TorsionElement half = make_torsion(a1, QVec{Rat(1, 2)});
        o.require(moduli_dimension(
                      a1, make_moduli_input(a1, 2, {RamificationDatum{2, half}}, {})) == 4,
                  "A1 genus 2 with one Z/2 point != 4");

        const auto types = admissible_types(4);
        std::vector<RootSystem> systems;
        std::vector<std::vector<QVec>> grids;
        for (const DynkinType t : types) {
            systems.emplace_back(t);
            grids.push_back(alcove_points(systems.back(), 4));
        }
        DetRng rng(0xacce9ull);
        long checked = 0;
        for (int n = 0; n < 1000; ++n) {
            const size_t which = static_cast<size_t>(rng.next_in(0, types.size() - 1));
            const RootSystem& rs = systems[which];
            const long genus = rng.next_in(0, 8);
            const long m = rng.next_in(0, 5);
            std::vector<RamificationDatum> ram;
            for (long i = 0; i < m; ++i) {
                const QVec& theta = grids[which][rng.next_in(0, grids[which].size() - 1)];
                const TorsionElement iso = make_torsion(rs, theta);
                ram.push_back(RamificationDatum{iso.order * rng.next_in(1, 3), iso});
            }
            const ModuliInput input = make_moduli_input(rs, genus, ram, {});
            fuchsian_check(rs, input);
            if (is_integer(moduli_dimension(rs, input))) ++checked;
        }
        o.require(checked == 1000, "non-integral dimension in the random sweep");
    });

    criterion(8, "codimension-bounds", [](Outcome& o) {
        for (const DynkinType t : admissible_types(4)) {
            const RootSystem rs(t);
            for (long genus = 3; genus <= 10; ++genus) {
                for (long m = 0; m <= 10; ++m)
                    for (long k = 1; k <= rs.rank(); ++k)
                        o.require(rs_codim_bound_k(genus, m, k) >= 4,
                                  "bound below 4 at g=" + std::to_string(genus) +
                                      " m=" + std::to_string(m) + " k=" + std::to_string(k));
                const ModuliInput input{rs.type(), genus, {}, {}};
                o.require(unstable_codim_bound(input) >= 2,
                          "unstable bound below 2 at g=" + std::to_string(genus));
            }
        }
    });

    criterion(9, "centralizer-consistency", [](Outcome& o) {
        long wall_observations = 0;
        for (const DynkinType t : admissible_types(4)) {
            const CheckResult r = checks::centralizer_sweep(RootSystem(t), 6);
            o.require(r.violations == 0,
                      t.str() + ": " + (r.falsifications.empty() ? "?" : r.falsifications[0]));
            wall_observations += r.informational;
        }
        if (o.pass)
            o.detail = std::to_string(wall_observations) +
                       " affine-wall classes outside the claim domain (reported, not asserted)";
    });

    criterion(10, "hecke-fiber", [](Outcome& o) {
        const RootSystem a1((DynkinType(Family::A, 1)));
        o.require(hecke_fiber_dimension(a1, make_moduli_input(a1, 0, {}, {facet_for(a1, {0})})) ==
                      1,
                  "A1 fiber over v_0 is not the projective line");
        for (const DynkinType t : admissible_types(4)) {
            const RootSystem rs(t);
            const ModuliInput interior =
                make_moduli_input(rs, 0, {}, {facet_for(rs, {}), facet_for(rs, {})});
            o.require(hecke_fiber_dimension(rs, interior) == 0,
                      t.str() + ": interior fiber not a point");
            const CheckResult r = checks::hecke_anchors(rs);
            o.require(r.violations == 0, t.str() + ": fiber anchor violated");
        }
    });

    criterion(11, "determinism", [&](Outcome& o) {
        if (cli_path.empty()) {
            o.require(false, "CLI path not supplied to the acceptance binary");
            return;
        }
        const std::string out_a = "acceptance_verify_a.json";
        const std::string out_b = "acceptance_verify_b.json";
        const std::string base = "\"" + cli_path + "\" verify --all --max-rank 4 --out ";
        const int status_a = std::system((base + out_a).c_str());
        const int status_b = std::system((base + out_b).c_str());
        o.require(status_a != -1 && WIFEXITED(status_a) && WEXITSTATUS(status_a) == 0,
                  "first verify run did not exit 0");
        o.require(status_b != -1 && WIFEXITED(status_b) && WEXITSTATUS(status_b) == 0,
                  "second verify run did not exit 0");
        const std::string content_a = read_file(out_a);
        const std::string content_b = read_file(out_b);
        o.require(!content_a.empty(), "first verify run produced no output");
        o.require(content_a == content_b, "verify output differs between runs");
        std::remove(out_a.c_str());
        std::remove(out_b.c_str());
    });

    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << (11 - failures) << "/11)" << std::endl;
    return failures == 0 ? 0 : 1;
}
