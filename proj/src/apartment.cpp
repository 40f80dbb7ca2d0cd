#include "parahoric/apartment.hpp"

#include <algorithm>
#include <set>

namespace parahoric {

std::string AffineRoot::str() const {
    return vec.str() + (level >= 0 ? "+" : "") + std::to_string(level);
}

Rat eval_affine(const RootSystem& rs, const AffineRoot& a, const QVec& x) {
    return rs.pairing(x, a.vec) + a.level;
}

Alcove fundamental_alcove(const RootSystem& rs) {
    Alcove alcove;
    for (int i = 0; i < rs.rank(); ++i) {
        alcove.simple_affine.push_back(AffineRoot{rs.simple(i), 0});
        alcove.alcove_marks.push_back(rs.marks()[i]);
    }
    const int neg_highest = rs.root_index([&] {
        IVec c(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) c[i] = -rs.marks()[i];
        return c;
    }());
    alcove.simple_affine.push_back(AffineRoot{rs.root_at(neg_highest), 1});
    alcove.alcove_marks.push_back(1);
    return alcove;
}

std::vector<AffineRoot> vanishing_set(const RootSystem& rs, const QVec& x) {
    std::vector<AffineRoot> out;
    for (const Root& r : rs.roots()) {
        const Rat v = -rs.pairing(x, r);
        if (is_integer(v)) out.push_back(AffineRoot{r, to_long(v)});
    }
    return out;
}

std::string Facet::vanishing_str() const {
    if (vanishing.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < vanishing.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vanishing[i]);
    }
    return out;
}

namespace {

int rational_rank(std::vector<QVec> rows) {
    int rank = 0;
    const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][c] == 0) continue;
            const Rat factor = rows[r][c] / rows[rank][c];
            for (int j = c; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

// In coweight coordinates the finite simple-affine values are the
// coordinates themselves; the affine value is then determined.
QVec point_from_wall_values(const RootSystem& rs, const std::vector<Rat>& finite_values) {
    QVec x(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) x[i] = finite_values[i];
    return x;
}

}  // namespace

Facet facet_for(const RootSystem& rs, std::vector<int> vanishing) {
    const Alcove alcove = fundamental_alcove(rs);
    std::sort(vanishing.begin(), vanishing.end());
    vanishing.erase(std::unique(vanishing.begin(), vanishing.end()), vanishing.end());
    for (int i : vanishing)
        if (i < 0 || i >= alcove.size())
            throw validation_error("bad_facet_index",
                                   "facet node index " + std::to_string(i) + " out of range");
    if (static_cast<int>(vanishing.size()) == alcove.size())
        throw validation_error("bad_facet",
                               "all simple affine roots cannot vanish simultaneously");

    std::set<int> in_j(vanishing.begin(), vanishing.end());
    long free_marks = 0;
    for (int i = 0; i < alcove.size(); ++i)
        if (!in_j.count(i)) free_marks += alcove.alcove_marks[i];
    const Rat free_value = Rat(1) / free_marks;

    std::vector<Rat> finite_values(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) finite_values[i] = in_j.count(i) ? Rat(0) : free_value;

    Facet f;
    f.vanishing = vanishing;
    f.representative = point_from_wall_values(rs, finite_values);

    std::vector<QVec> vectors;
    for (int i : vanishing) {
        const Root& r = alcove.simple_affine[i].vec;
        QVec row(rs.rank());
        for (int j = 0; j < rs.rank(); ++j) row[j] = r.coords[j];
        vectors.push_back(row);
    }
    f.dimension = rs.rank() - rational_rank(vectors);
    return f;
}

std::vector<Facet> enumerate_facets(const RootSystem& rs) {
    const int nodes = rs.rank() + 1;
    std::vector<Facet> out;
    for (unsigned long mask = 0; mask + 1 < (1ul << nodes); ++mask) {
        std::vector<int> vanishing;
        for (int i = 0; i < nodes; ++i)
            if (mask & (1ul << i)) vanishing.push_back(i);
        out.push_back(facet_for(rs, vanishing));
    }
    return out;
}

bool facet_closure_leq(const Facet& s, const Facet& b) {
    return std::includes(s.vanishing.begin(), s.vanishing.end(), b.vanishing.begin(),
                         b.vanishing.end());
}

std::vector<QVec> facet_sample_points(const RootSystem& rs, const Facet& f, int count) {
    if (count <= 0) return {};
    if (f.dimension == 0) return {f.representative};

    const Alcove alcove = fundamental_alcove(rs);
    std::set<int> in_j(f.vanishing.begin(), f.vanishing.end());
    const bool affine_fixed = in_j.count(alcove.affine_node()) != 0;

    std::vector<QVec> out;
    for (int k = 0; k < count; ++k) {
        // Positive weights, distinct per sample; scaled so the marked sum of
        // the free finite values is 1 (affine node vanishing) or (k+1)/(k+2).
        Rat weighted_sum = 0;
        std::vector<Rat> finite_values(rs.rank(), Rat(0));
        for (int i = 0; i < rs.rank(); ++i) {
            if (in_j.count(i)) continue;
            finite_values[i] = Rat(i + 2 + k);
            weighted_sum += Rat(alcove.alcove_marks[i]) * finite_values[i];
        }
        const Rat target = affine_fixed ? Rat(1) : frac(k + 1, k + 2);
        for (int i = 0; i < rs.rank(); ++i)
            if (!in_j.count(i)) finite_values[i] *= target / weighted_sum;
        out.push_back(point_from_wall_values(rs, finite_values));
    }
    return out;
}

std::vector<int> vanishing_pattern(const RootSystem& rs, const Alcove& alcove, const QVec& x) {
    std::vector<int> pattern;
    for (int i = 0; i < alcove.size(); ++i) {
        const Rat v = eval_affine(rs, alcove.simple_affine[i], x);
        if (v < 0)
            throw validation_error("outside_alcove",
                                   "point " + qvec_str(x) + " lies outside the closed alcove");
        if (v == 0) pattern.push_back(i);
    }
    return pattern;
}

QVec reflect_point(const RootSystem& rs, const AffineRoot& wall, const QVec& x) {
    const Rat value = eval_affine(rs, wall, x);
    const IVec coroot = rs.coroot_in_coweight(wall.vec);
    QVec out = x;
    for (int i = 0; i < rs.rank(); ++i) out[i] -= value * coroot[i];
    return out;
}

AffineRoot reflect_affine(const RootSystem& rs, const AffineRoot& wall, const AffineRoot& a) {
    const long pairing = rs.pair_root_coroot(a.vec, wall.vec);  // <a.vec, wall.veccheck>
    return AffineRoot{rs.reflect(wall.vec, a.vec), a.level - wall.level * pairing};
}

QVec apply_word_point(const RootSystem& rs, const Alcove& alcove, const std::vector<int>& word,
                      QVec x) {
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        x = reflect_point(rs, alcove.simple_affine[*it], x);
    return x;
}

AlcoveWalk alcove_walk(const RootSystem& rs, const QVec& target) {
    if (static_cast<int>(target.size()) != rs.rank())
        throw validation_error("dimension_mismatch", "target point of mismatched rank");
    const auto on_walls = vanishing_set(rs, target);
    if (!on_walls.empty())
        throw validation_error("degenerate_point", "target lies on the wall of affine root " +
                                                       on_walls.front().str());

    const Alcove alcove = fundamental_alcove(rs);
    // The number of affine walls separating the target from the fundamental
    // alcove bounds the word length; each step removes one.
    long budget = 10 + rs.rank();
    for (const Root& r : rs.positive_roots()) {
        const Rat v = rs.pairing(target, r);
        budget += std::abs(floor_long(v)) + 1;
    }

    AlcoveWalk walk;
    QVec y = target;
    while (true) {
        int violated = -1;
        for (int i = 0; i < alcove.size(); ++i)
            if (eval_affine(rs, alcove.simple_affine[i], y) < 0) {
                violated = i;
                break;
            }
        if (violated < 0) break;
        y = reflect_point(rs, alcove.simple_affine[violated], y);
        walk.word.push_back(violated);
        if (--budget < 0) throw internal_error("alcove walk exceeded its separation bound");
    }

    const Facet interior = facet_for(rs, {});
    walk.image_representative = apply_word_point(rs, alcove, walk.word, interior.representative);
    for (const AffineRoot& a : alcove.simple_affine) {
        AffineRoot image = a;
        for (auto it = walk.word.rbegin(); it != walk.word.rend(); ++it)
            image = reflect_affine(rs, alcove.simple_affine[*it], image);
        walk.image_walls.push_back(image);
    }
    return walk;
}

}  // namespace parahoric
