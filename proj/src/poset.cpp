#include "procstar/poset.hpp"

#include <algorithm>

namespace procstar {

std::vector<std::pair<NdId, NdId>> NdPoset::strict_pairs() const {
    std::vector<std::pair<NdId, NdId>> out;
    for (NdId a = 0; a < size(); ++a)
        for (NdId b = 0; b < size(); ++b)
            if (less[a][b]) out.emplace_back(a, b);
    return out;
}

NdPoset nd_poset(const FiniteSimplicialSet& X) {
    NdPoset P;
    P.elements = X.cells();
    P.less.assign(X.size(), std::vector<bool>(X.size(), false));
    for (NdId c = 0; c < X.size(); ++c) {
        if (X.dim(c) == 0) continue;
        for (int i = 0; i <= X.dim(c); ++i) P.less[X.stored_face(c, i).base][c] = true;
    }
    // Transitive closure, ascending by dimension (faces only lower it).
    std::vector<NdId> order(X.size());
    for (NdId c = 0; c < X.size(); ++c) order[c] = c;
    std::sort(order.begin(), order.end(),
              [&](NdId a, NdId b) { return X.dim(a) < X.dim(b); });
    for (NdId mid : order)
        for (NdId a = 0; a < X.size(); ++a)
            if (P.less[a][mid])
                for (NdId b = 0; b < X.size(); ++b)
                    if (P.less[mid][b]) P.less[a][b] = true;
    for (NdId a = 0; a < X.size(); ++a)
        if (P.less[a][a]) throw Error("nd_poset: reflexive pair (cyclic face structure)");
    return P;
}

bool PosetMap::monotone() const {
    for (NdId a = 0; a < source.size(); ++a)
        for (NdId b = 0; b < source.size(); ++b)
            if (source.less[a][b] && !target.leq(images[a], images[b])) return false;
    return true;
}

PosetMap nd_functor(const SimplicialMap& f) {
    PosetMap m{nd_poset(f.source), nd_poset(f.target), {}};
    for (NdId c = 0; c < f.source.size(); ++c) m.images.push_back(f.images[c].base);
    return m;
}

PosetMap compose(const PosetMap& g, const PosetMap& f) {
    if (!(f.target == g.source)) throw InputError("poset maps not composable");
    PosetMap h{f.source, g.target, {}};
    for (NdId c = 0; c < f.source.size(); ++c) h.images.push_back(g.images[f.images[c]]);
    return h;
}

PosetMap identity_poset_map(const NdPoset& P) {
    PosetMap m{P, P, {}};
    for (NdId c = 0; c < P.size(); ++c) m.images.push_back(c);
    return m;
}

DoubledQuiver doubled_quiver(const NdPoset& P, QuiverMode mode) {
    DoubledQuiver Q;
    Q.poset = P;
    Q.mode = mode;
    for (NdId a = 0; a < P.size(); ++a) {
        for (NdId b = 0; b < P.size(); ++b) {
            if (!P.less[a][b]) continue;
            if (mode == QuiverMode::HasseOnly) {
                bool cover = true;
                for (NdId m = 0; m < P.size() && cover; ++m)
                    if (P.less[a][m] && P.less[m][b]) cover = false;
                if (!cover) continue;
            }
            Q.edges.push_back(QuiverEdge{"x" + std::to_string(Q.edges.size() + 1), a, b});
        }
    }
    return Q;
}

std::vector<std::vector<NdId>> nerve_chains(const NdPoset& P, int k) {
    if (k < 0) throw InputError("nerve_chains: k must be >= 0");
    std::vector<std::vector<NdId>> chains;
    std::vector<NdId> cur;
    auto extend = [&](auto&& self, NdId last) -> void {
        if (static_cast<int>(cur.size()) == k + 1) {
            chains.push_back(cur);
            return;
        }
        for (NdId next = 0; next < P.size(); ++next) {
            if (!P.less[last][next]) continue;
            cur.push_back(next);
            self(self, next);
            cur.pop_back();
        }
    };
    for (NdId first = 0; first < P.size(); ++first) {
        cur = {first};
        if (k == 0)
            chains.push_back(cur);
        else
            extend(extend, first);
    }
    return chains;
}

std::size_t count_unstarred_paths(const DoubledQuiver& Q, int k) {
    if (k <= 0) return 0;
    std::size_t count = 0;
    auto walk = [&](auto&& self, NdId at, int remaining) -> void {
        if (remaining == 0) {
            ++count;
            return;
        }
        for (const auto& e : Q.edges)
            if (e.src == at) self(self, e.tgt, remaining - 1);
    };
    for (const auto& e : Q.edges) walk(walk, e.tgt, k - 1);
    return count;
}

}  // namespace procstar
