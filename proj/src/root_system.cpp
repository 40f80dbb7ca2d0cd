#include "parahoric/root_system.hpp"

#include <algorithm>
#include <set>

namespace parahoric {

bool Root::is_positive() const {
    for (long c : coords)
        if (c > 0) return true;
        else if (c < 0) return false;
    return false;  // zero vector: not a root, callers never see it
}

long Root::height() const {
    long h = 0;
    for (long c : coords) h += c;
    return h;
}

std::string Root::str() const {
    std::string out = "[";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coords[i]);
    }
    return out + "]";
}

namespace {

// Positive roots by (height, then coordinates descending), so the simple
// roots come first in Bourbaki order.
bool canonical_less(const Root& a, const Root& b) {
    const long ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coords > b.coords;
}

}  // namespace

RootSystem::RootSystem(DynkinType type) : type_(type), rank_(type.rank()) {
    cartan_ = standard_cartan(type_);

    auto pair_with_simple_coroot = [&](const IVec& coords, int i) {
        long v = 0;
        for (int j = 0; j < rank_; ++j) v += cartan_[i][j] * coords[j];
        return v;
    };
    auto pair_simple_on_coroot = [&](const IVec& coroot, int i) {
        long v = 0;
        for (int j = 0; j < rank_; ++j) v += cartan_[j][i] * coroot[j];
        return v;
    };

    // Reflection closure from the simple roots, tracking coroot coordinates
    // alongside (s_i commutes with the root <-> coroot correspondence).
    std::map<IVec, IVec> closure;  // coords -> coroot coords
    std::vector<Root> work;
    for (int i = 0; i < rank_; ++i) {
        IVec e(rank_, 0);
        e[i] = 1;
        closure.emplace(e, e);
        work.push_back(Root{e, e});
    }
    while (!work.empty()) {
        Root beta = work.back();
        work.pop_back();
        for (int i = 0; i < rank_; ++i) {
            const long n_root = pair_with_simple_coroot(beta.coords, i);
            const long n_coroot = pair_simple_on_coroot(beta.coroot, i);
            Root image = beta;
            image.coords[i] -= n_root;
            image.coroot[i] -= n_coroot;
            if (closure.emplace(image.coords, image.coroot).second) work.push_back(image);
        }
    }

    std::vector<Root> positives;
    for (const auto& [coords, coroot] : closure) {
        Root r{coords, coroot};
        if (r.is_positive()) positives.push_back(r);
    }
    std::sort(positives.begin(), positives.end(), canonical_less);
    if (2 * static_cast<long>(positives.size()) != static_cast<long>(closure.size()) ||
        static_cast<long>(closure.size()) != classical_root_count(type_))
        throw internal_error("reflection closure of " + type_.str() + " produced " +
                             std::to_string(closure.size()) + " roots");

    roots_ = positives;
    for (const Root& r : positives) {
        Root neg;
        for (long c : r.coords) neg.coords.push_back(-c);
        for (long c : r.coroot) neg.coroot.push_back(-c);
        roots_.push_back(neg);
    }
    for (size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i].coords, static_cast<int>(i));

    highest_ = positives.back();
    if (positives.size() > 1 && positives[positives.size() - 2].height() == highest_.height())
        throw internal_error("highest root of " + type_.str() + " is not unique");
    marks_ = highest_.coords;
}

std::span<const Root> RootSystem::positive_roots() const {
    return std::span<const Root>(roots_.data(), roots_.size() / 2);
}

const Root& RootSystem::simple(int i) const {
    if (i < 0 || i >= rank_) throw validation_error("bad_index", "simple root index out of range");
    return roots_[i];  // height-1 roots are exactly the simples, sorted first
}

bool RootSystem::is_root(const IVec& coords) const { return index_.count(coords) != 0; }

int RootSystem::root_index(const IVec& coords) const {
    auto it = index_.find(coords);
    return it == index_.end() ? -1 : it->second;
}

long RootSystem::pair_root_coroot(const Root& beta, const Root& gamma) const {
    long v = 0;
    for (int i = 0; i < rank_; ++i) {
        long row = 0;
        for (int j = 0; j < rank_; ++j) row += cartan_[i][j] * beta.coords[j];
        v += gamma.coroot[i] * row;
    }
    return v;
}

Root RootSystem::reflect(const Root& r, const Root& s) const {
    if (!is_root(r.coords) || !is_root(s.coords))
        throw validation_error("bad_root", "reflect arguments must be roots of the system");
    const long n = pair_root_coroot(s, r);        // <s, rcheck>
    const long n_co = pair_root_coroot(r, s);     // <r, scheck>
    Root image = s;
    for (int i = 0; i < rank_; ++i) {
        image.coords[i] -= n * r.coords[i];
        image.coroot[i] -= n_co * r.coroot[i];
    }
    const int idx = root_index(image.coords);
    if (idx < 0) throw internal_error("reflection left the root system");
    return roots_[idx];
}

Rat RootSystem::pairing(const QVec& theta, const Root& r) const {
    if (static_cast<int>(theta.size()) != rank_ || static_cast<int>(r.coords.size()) != rank_)
        throw validation_error("dimension_mismatch", "pairing arguments of mismatched rank");
    Rat v = 0;
    for (int i = 0; i < rank_; ++i) v += theta[i] * r.coords[i];
    return v;
}

IVec RootSystem::coroot_in_coweight(const Root& r) const {
    IVec out(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) out[i] += cartan_[j][i] * r.coroot[j];
    return out;
}

SubSystem classify_subsystem(const RootSystem& rs, std::vector<Root> subset) {
    std::set<IVec> members;
    for (const Root& r : subset) {
        const int idx = rs.root_index(r.coords);
        if (idx < 0)
            throw validation_error("bad_root", "subset element " + r.str() + " is not a root");
        members.insert(r.coords);
    }
    for (const IVec& c : members) {
        IVec neg(c.size());
        for (size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
        if (!members.count(neg))
            throw validation_error("subset_not_symmetric",
                                   "subset is not closed under negation");
    }
    for (const IVec& a : members)
        for (const IVec& b : members) {
            IVec sum(a.size());
            for (size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
            if (rs.is_root(sum) && !members.count(sum))
                throw validation_error("subset_not_closed",
                                       "subset is not closed under root addition");
        }

    SubSystem out;
    std::vector<int> indices;
    for (const IVec& c : members) indices.push_back(rs.root_index(c));
    std::sort(indices.begin(), indices.end());
    for (int i : indices) out.roots.push_back(rs.root_at(i));

    std::set<IVec> positives;
    for (const Root& r : out.roots)
        if (r.is_positive()) positives.insert(r.coords);
    for (const Root& r : out.roots) {
        if (!r.is_positive()) continue;
        bool decomposable = false;
        for (const IVec& a : positives) {
            IVec diff(a.size());
            for (size_t i = 0; i < a.size(); ++i) diff[i] = r.coords[i] - a[i];
            if (positives.count(diff)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) out.simple_sub.push_back(r);
    }

    const int m = static_cast<int>(out.simple_sub.size());
    CartanMatrix sub(m, IVec(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            sub[i][j] = rs.pair_root_coroot(out.simple_sub[j], out.simple_sub[i]);
    out.components = classify_components(sub);
    out.total_rank = m;

    int component_rank_sum = 0;
    for (const DynkinType& t : out.components) component_rank_sum += t.rank();
    if (component_rank_sum != out.total_rank)
        throw internal_error("component ranks do not sum to the subsystem rank");
    return out;
}

}  // namespace parahoric
