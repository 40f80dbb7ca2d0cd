#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parahoric/moduli.hpp"

namespace parahoric {

struct CheckResult {
    std::string type;
    std::string check;
    long cases = 0;
    long violations = 0;
    long informational = 0;  // observations outside the asserted domain
    std::vector<std::string> falsifications;  // capped detail for the report

    void fail(const std::string& message);
};

// Deterministic generator for the sampling checks (splitmix64). Sweeps are
// reproducible by construction; no environment seed is consulted.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    long next_in(long lo, long hi);  // inclusive
    Rat next_rat(long max_abs, long max_den);

private:
    std::uint64_t state_;
};

// Canonical admissible types of rank <= max_rank, deduplicated (B2 and D3
// construct as C2 and A3) and sorted.
std::vector<DynkinType> admissible_types(int max_rank);

// Every point of the closed fundamental alcove whose coordinates have
// denominator dividing some d <= max_denominator; deduplicated, sorted.
std::vector<QVec> alcove_points(const RootSystem& rs, long max_denominator);

// All closure pairs (s, b) with s in the closure of b, as index pairs into
// enumerate_facets(rs).
std::vector<std::pair<int, int>> closure_pairs(const std::vector<Facet>& facets);

namespace checks {

CheckResult root_count(const RootSystem& rs);
CheckResult facet_census(const RootSystem& rs);
CheckResult floor_ceiling(const RootSystem& rs);
CheckResult filtration_chain(const RootSystem& rs);
CheckResult node_deletion(const RootSystem& rs);
CheckResult parabolic_invariants(const RootSystem& rs);
CheckResult iwahori(const RootSystem& rs);
CheckResult quotient_anchors(const RootSystem& rs);
CheckResult centralizer_sweep(const RootSystem& rs, long max_denominator);
CheckResult walk_sample(const RootSystem& rs, int samples);
CheckResult pairing_bilinearity(const RootSystem& rs, int samples);
CheckResult alcove_relation(const RootSystem& rs);
CheckResult facet_welldefinedness(const RootSystem& rs);
CheckResult facet_partition(const RootSystem& rs, long max_denominator);
CheckResult moduli_sample(const RootSystem& rs, int samples);
CheckResult codim_sweep(const RootSystem& rs, long max_genus, long max_m);
CheckResult hecke_anchors(const RootSystem& rs);

}  // namespace checks

// The full battery for one type or for all canonical types of rank <=
// max_rank. Exhaustive sweeps use the spec tolerances (denominator 6 for the
// centralizer grid, 7 for the facet partition grid).
std::vector<CheckResult> run_verify(std::optional<DynkinType> only, int max_rank);

}  // namespace parahoric
