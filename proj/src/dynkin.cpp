#include "parahoric/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace parahoric {

namespace {

bool admissible(Family f, int rank) {
    switch (f) {
        case Family::A: return rank >= 1;
        case Family::B: return rank >= 2;
        case Family::C: return rank >= 2;
        case Family::D: return rank >= 3;
        case Family::E: return rank >= 6 && rank <= 8;
        case Family::F: return rank == 4;
        case Family::G: return rank == 2;
    }
    return false;
}

}  // namespace

DynkinType::DynkinType(Family family, int rank) : family_(family), rank_(rank) {
    if (!admissible(family, rank))
        throw validation_error("bad_type", std::string("inadmissible Dynkin type ") +
                                               static_cast<char>(family) + std::to_string(rank));
    // Rank-2 B and C and rank-3 D and A have isomorphic diagrams; keep one
    // label per isomorphism class so classification round-trips.
    if (family_ == Family::B && rank_ == 2) family_ = Family::C;
    if (family_ == Family::D && rank_ == 3) family_ = Family::A;
}

DynkinType DynkinType::parse(std::string_view spec) {
    std::string s(spec);
    if (s.size() < 2)
        throw validation_error("bad_type", "malformed type spec '" + s + "' (expected e.g. A2)");
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (f < 'A' || f > 'G')
        throw validation_error("bad_type", "unknown family in type spec '" + s + "'");
    for (size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw validation_error("bad_type", "malformed rank in type spec '" + s + "'");
    int rank = 0;
    try {
        rank = std::stoi(s.substr(1));
    } catch (const std::exception&) {
        throw validation_error("bad_type", "malformed rank in type spec '" + s + "'");
    }
    return DynkinType(static_cast<Family>(f), rank);
}

std::string DynkinType::str() const {
    return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

CartanMatrix standard_cartan(DynkinType type) {
    const int n = type.rank();
    CartanMatrix a(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto edge = [&](int i, int j, long aij = -1, long aji = -1) {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    switch (type.family()) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
            edge(n - 2, n - 1, -1, -2);  // alpha_n short
            break;
        case Family::C:
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
            edge(n - 2, n - 1, -2, -1);  // alpha_n long
            break;
        case Family::D:
            for (int i = 0; i + 3 < n; ++i) edge(i, i + 1);
            edge(n - 3, n - 2);
            edge(n - 3, n - 1);
            break;
        case Family::E:
            // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4.
            edge(0, 2);
            edge(1, 3);
            for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case Family::F:
            edge(0, 1);
            edge(1, 2, -1, -2);  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            edge(2, 3);
            break;
        case Family::G:
            edge(0, 1, -3, -1);  // alpha_1 short
            break;
    }
    return a;
}

long classical_root_count(DynkinType type) {
    const long n = type.rank();
    switch (type.family()) {
        case Family::A: return n * (n + 1);
        case Family::B:
        case Family::C: return 2 * n * n;
        case Family::D: return 2 * n * (n - 1);
        case Family::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
        case Family::F: return 48;
        case Family::G: return 12;
    }
    throw internal_error("unreachable family");
}

namespace {

// Backtracking directed-graph isomorphism of a component against a standard
// Cartan matrix. Ranks in play are tiny; adjacency pruning keeps this fast.
bool cartan_isomorphic(const CartanMatrix& comp, const CartanMatrix& std_cartan) {
    const int n = static_cast<int>(comp.size());
    if (static_cast<int>(std_cartan.size()) != n) return false;
    std::vector<int> perm(n, -1);       // candidate node -> component node
    std::vector<bool> used(n, false);   // component nodes already matched

    auto compatible = [&](int k, int target) {
        for (int j = 0; j < k; ++j) {
            if (std_cartan[k][j] != comp[target][perm[j]]) return false;
            if (std_cartan[j][k] != comp[perm[j]][target]) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int k) -> bool {
        if (k == n) return true;
        for (int t = 0; t < n; ++t) {
            if (used[t] || !compatible(k, t)) continue;
            perm[k] = t;
            used[t] = true;
            if (self(self, k + 1)) return true;
            used[t] = false;
            perm[k] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

std::vector<DynkinType> candidates_of_rank(int n) {
    std::vector<DynkinType> out;
    auto add = [&](Family f, int r) {
        if (r != n) return;
        try {
            DynkinType t(f, r);
            if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
        } catch (const validation_error&) {
        }
    };
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
        add(f, n);
    return out;
}

}  // namespace

std::vector<DynkinType> classify_components(const CartanMatrix& cartan) {
    const int n = static_cast<int>(cartan.size());
    std::vector<int> comp_of(n, -1);
    int num_comp = 0;
    for (int i = 0; i < n; ++i) {
        if (comp_of[i] >= 0) continue;
        std::vector<int> stack{i};
        comp_of[i] = num_comp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j)
                if (comp_of[j] < 0 && cartan[v][j] != 0) {
                    comp_of[j] = num_comp;
                    stack.push_back(j);
                }
        }
        ++num_comp;
    }

    std::vector<DynkinType> result;
    for (int c = 0; c < num_comp; ++c) {
        std::vector<int> nodes;
        for (int i = 0; i < n; ++i)
            if (comp_of[i] == c) nodes.push_back(i);
        CartanMatrix sub(nodes.size(), IVec(nodes.size()));
        for (size_t i = 0; i < nodes.size(); ++i)
            for (size_t j = 0; j < nodes.size(); ++j) sub[i][j] = cartan[nodes[i]][nodes[j]];

        bool matched = false;
        for (DynkinType cand : candidates_of_rank(static_cast<int>(nodes.size()))) {
            if (cartan_isomorphic(sub, standard_cartan(cand))) {
                result.push_back(cand);
                matched = true;
                break;
            }
        }
        if (!matched)
            throw internal_error("unclassifiable Cartan matrix component of rank " +
                                 std::to_string(nodes.size()));
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::string components_str(const std::vector<DynkinType>& components) {
    if (components.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) out += "x";
        out += components[i].str();
    }
    return out;
}

}  // namespace parahoric
