#include "procstar/subdivision.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace procstar {

DegeneracyWord deg_concat(const DegeneracyWord& outer, DegeneracyWord inner) {
    for (auto it = outer.rbegin(); it != outer.rend(); ++it) {
        int j = *it;
        std::size_t pos = 0;
        while (pos < inner.size() && j <= inner[pos]) {
            ++inner[pos];
            ++pos;
        }
        inner.insert(inner.begin() + static_cast<std::ptrdiff_t>(pos), j);
    }
    return inner;
}

void ColimitBuilder::identify(int copy_a, Simplex a, int copy_b, Simplex b) {
    int da = copies_[static_cast<std::size_t>(copy_a)]->dim(a.base) + static_cast<int>(a.deg.size());
    int db = copies_[static_cast<std::size_t>(copy_b)]->dim(b.base) + static_cast<int>(b.deg.size());
    if (da != db) throw Error("colimit identification between different dimensions");
    idents_.push_back({copy_a, std::move(a), copy_b, std::move(b)});
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ColimitBuilder::Result ColimitBuilder::build(const KeyFn& key_of, const NameFn& name_of) const {
    Result res;
    res.mapping.resize(copies_.size());
    for (std::size_t c = 0; c < copies_.size(); ++c)
        res.mapping[c].resize(copies_[c]->size());

    int max_dim = -1;
    for (const auto* c : copies_) max_dim = std::max(max_dim, c->max_dim());

    // Identifications grouped by the dimension of their sides.
    std::vector<std::vector<const Ident*>> by_dim(static_cast<std::size_t>(max_dim + 1));
    for (const auto& id : idents_) {
        int d = copies_[static_cast<std::size_t>(id.copy_a)]->dim(id.a.base) +
                static_cast<int>(id.a.deg.size());
        by_dim[static_cast<std::size_t>(d)].push_back(&id);
    }

    std::unordered_map<std::string, NdId> used_names;
    struct PendingFace {
        NdId cell;
        int copy;
        NdId member;
    };
    std::vector<PendingFace> pending;

    for (int k = 0; k <= max_dim; ++k) {
        // Strict nodes: one per (copy, cell) of dimension k.
        std::vector<std::pair<int, NdId>> strict;
        std::map<std::pair<int, NdId>, int> strict_index;
        for (std::size_t c = 0; c < copies_.size(); ++c) {
            for (NdId cell = 0; cell < copies_[c]->size(); ++cell) {
                if (copies_[c]->dim(cell) != k) continue;
                strict_index[{static_cast<int>(c), cell}] = static_cast<int>(strict.size());
                strict.emplace_back(static_cast<int>(c), cell);
            }
        }
        // Formal nodes: degenerate simplices of the colimit built so far,
        // keyed by (base cell of the colimit, degeneracy word).
        std::vector<std::pair<NdId, DegeneracyWord>> formal;
        std::map<std::pair<NdId, DegeneracyWord>, int> formal_index;

        Dsu dsu(strict.size());
        auto ensure_formal = [&](const std::pair<NdId, DegeneracyWord>& key) {
            auto it = formal_index.find(key);
            if (it != formal_index.end()) return it->second;
            int node = static_cast<int>(strict.size() + formal.size());
            formal.push_back(key);
            formal_index.emplace(key, node);
            dsu.parent.push_back(node);
            return node;
        };
        // Resolves one identification side to a node at this stage.
        auto side_node = [&](int copy, const Simplex& s) {
            if (s.deg.empty()) return strict_index.at({copy, s.base});
            // A degenerate side: push through the already-computed mapping of
            // its (lower-dimensional) base.
            const Simplex& low = res.mapping[static_cast<std::size_t>(copy)][s.base];
            return ensure_formal({low.base, deg_concat(s.deg, low.deg)});
        };
        for (const Ident* id : by_dim[static_cast<std::size_t>(k)])
            dsu.unite(side_node(id->copy_a, id->a), side_node(id->copy_b, id->b));

        // Collect classes.
        std::map<int, std::vector<int>> classes;
        for (int n = 0; n < static_cast<int>(strict.size() + formal.size()); ++n)
            classes[dsu.find(n)].push_back(n);

        struct NewCell {
            Members members;
            std::vector<std::uint32_t> key;
        };
        std::vector<NewCell> fresh;
        for (auto& [root, nodes] : classes) {
            Members members;
            const std::pair<NdId, DegeneracyWord>* degenerate = nullptr;
            for (int n : nodes) {
                if (n < static_cast<int>(strict.size())) {
                    members.push_back(strict[static_cast<std::size_t>(n)]);
                } else {
                    const auto& key = formal[static_cast<std::size_t>(n - strict.size())];
                    if (degenerate && !(*degenerate == key))
                        throw Error("inconsistent colimit: two distinct degenerate normal forms identified");
                    degenerate = &key;
                }
            }
            std::sort(members.begin(), members.end());
            if (degenerate) {
                Simplex value{degenerate->first, degenerate->second};
                for (const auto& [copy, cell] : members)
                    res.mapping[static_cast<std::size_t>(copy)][cell] = value;
            } else {
                if (members.empty()) continue;  // isolated formal node
                fresh.push_back({std::move(members), {}});
            }
        }
        for (auto& nc : fresh) nc.key = key_of(k, nc.members);
        std::sort(fresh.begin(), fresh.end(), [](const NewCell& a, const NewCell& b) {
            return std::tie(a.key, a.members) < std::tie(b.key, b.members);
        });
        for (auto& nc : fresh) {
            std::string name = name_of(k, nc.members);
            while (used_names.count(name)) name += "~";
            NdId cell = res.sset.add_cell(name, k);
            used_names.emplace(name, cell);
            for (const auto& [copy, mem] : nc.members)
                res.mapping[static_cast<std::size_t>(copy)][mem] = Simplex{cell, {}};
            if (k >= 1)
                pending.push_back({cell, nc.members.front().first, nc.members.front().second});
            res.members.push_back(std::move(nc.members));
        }
    }

    // Face tables, chased through the copy mappings; all members of a class
    // must agree (colimit functoriality), which we verify.
    auto map_simplex = [&](int copy, const Simplex& s) {
        const Simplex& low = res.mapping[static_cast<std::size_t>(copy)][s.base];
        return Simplex{low.base, deg_concat(s.deg, low.deg)};
    };
    for (const auto& pf : pending) {
        int d = res.sset.dim(pf.cell);
        std::vector<Simplex> faces;
        const auto* copy = copies_[static_cast<std::size_t>(pf.copy)];
        for (int i = 0; i <= d; ++i)
            faces.push_back(map_simplex(pf.copy, copy->stored_face(pf.member, i)));
        for (const auto& [c2, m2] : res.members[pf.cell]) {
            const auto* other = copies_[static_cast<std::size_t>(c2)];
            for (int i = 0; i <= d; ++i) {
                if (!(map_simplex(c2, other->stored_face(m2, i)) == faces[static_cast<std::size_t>(i)]))
                    throw Error("inconsistent colimit: face disagreement between class members");
            }
        }
        res.sset.set_faces(pf.cell, std::move(faces));
    }
    return res;
}

namespace {

void enumerate_chains(const std::vector<std::vector<int>>& subsets, std::size_t start,
                      SubsetChain& cur, std::vector<SubsetChain>& out) {
    for (std::size_t i = start; i < subsets.size(); ++i) {
        if (!cur.empty()) {
            const auto& prev = cur.back();
            if (!std::includes(subsets[i].begin(), subsets[i].end(), prev.begin(), prev.end()) ||
                subsets[i].size() == prev.size())
                continue;
        }
        cur.push_back(subsets[i]);
        out.push_back(cur);
        enumerate_chains(subsets, 0, cur, out);
        cur.pop_back();
    }
}

void all_subsets(int n, std::vector<int>& cur, int next, std::vector<std::vector<int>>& out) {
    if (!cur.empty()) out.push_back(cur);
    for (int v = next; v <= n; ++v) {
        cur.push_back(v);
        all_subsets(n, cur, v + 1, out);
        cur.pop_back();
    }
}

std::string chain_name(const SubsetChain& chain) {
    std::string s;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) s += "<";
        for (std::size_t j = 0; j < chain[i].size(); ++j) {
            if (chain[i][j] >= 10) s += "_";
            s += std::to_string(chain[i][j]);
        }
    }
    return s;
}

}  // namespace

const SdStandard& sd_standard(int n) {
    static std::map<int, SdStandard> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    SdStandard sd;
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    all_subsets(n, cur, 0, subsets);
    std::vector<SubsetChain> chains;
    SubsetChain chain;
    enumerate_chains(subsets, 0, chain, chains);
    std::sort(chains.begin(), chains.end(), [](const SubsetChain& a, const SubsetChain& b) {
        return std::tuple(a.size(), a) < std::tuple(b.size(), b);
    });
    for (const auto& c : chains) {
        NdId cell = sd.sset.add_cell(chain_name(c), static_cast<int>(c.size()) - 1);
        sd.chains.push_back(c);
        sd.index.emplace(c, cell);
    }
    for (NdId cell = 0; cell < sd.sset.size(); ++cell) {
        const auto& c = sd.chains[cell];
        if (c.size() < 2) continue;
        std::vector<Simplex> faces;
        for (std::size_t i = 0; i < c.size(); ++i) {
            SubsetChain f = c;
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
            faces.push_back(Simplex{sd.index.at(f), {}});
        }
        sd.sset.set_faces(cell, std::move(faces));
    }
    return cache.emplace(n, std::move(sd)).first->second;
}

namespace {

// Direct image of a chain under a vertex map, entrywise.
SubsetChain chain_image(const SubsetChain& chain, const std::vector<int>& vertex_map) {
    SubsetChain out;
    for (const auto& subset : chain) {
        std::vector<int> img;
        for (int v : subset) img.push_back(vertex_map[static_cast<std::size_t>(v)]);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        out.push_back(std::move(img));
    }
    return out;
}

// EZ normal form of a weak chain in a nerve: peel repeated entries from the
// largest position down. The collected word is strictly decreasing and
// outermost-first, hence already the normal form.
std::pair<SubsetChain, DegeneracyWord> chain_normal_form(SubsetChain chain) {
    DegeneracyWord word;
    for (int t = static_cast<int>(chain.size()) - 2; t >= 0; --t) {
        if (chain[static_cast<std::size_t>(t)] == chain[static_cast<std::size_t>(t) + 1]) {
            word.push_back(t);
            chain.erase(chain.begin() + t + 1);
        }
    }
    return {std::move(chain), std::move(word)};
}

// The monotone function [n] -> [n-m] of a degeneracy word (outermost first).
std::vector<int> surjection_of_word(const DegeneracyWord& word, int n) {
    std::vector<int> f(static_cast<std::size_t>(n) + 1);
    std::iota(f.begin(), f.end(), 0);
    for (int j : word)
        for (auto& v : f)
            if (v > j) --v;
    return f;
}

// The coface injection [n-1] -> [n] skipping i.
std::vector<int> coface_injection(int i, int n) {
    std::vector<int> f;
    for (int t = 0; t < n; ++t) f.push_back(t < i ? t : t + 1);
    return f;
}

}  // namespace

SubdivisionResult subdivide(const FiniteSimplicialSet& X) {
    if (auto rep = validate(X); !rep.ok())
        throw InputError("subdivide: input does not validate:\n" + rep.to_string());

    std::vector<const FiniteSimplicialSet*> copies;
    for (NdId c = 0; c < X.size(); ++c) copies.push_back(&sd_standard(X.dim(c)).sset);
    ColimitBuilder builder(std::move(copies));

    for (NdId tau = 0; tau < X.size(); ++tau) {
        int n = X.dim(tau);
        if (n == 0) continue;
        const SdStandard& top = sd_standard(n);
        const SdStandard& fac = sd_standard(n - 1);
        for (int i = 0; i <= n; ++i) {
            const Simplex& f = X.stored_face(tau, i);  // (tau0, W0)
            const SdStandard& low = sd_standard(X.dim(f.base));
            std::vector<int> inj = coface_injection(i, n);
            std::vector<int> surj = surjection_of_word(f.deg, n - 1);
            for (NdId y = 0; y < fac.sset.size(); ++y) {
                SubsetChain in_top = chain_image(fac.chains[y], inj);
                auto [strict, word] = chain_normal_form(chain_image(fac.chains[y], surj));
                builder.identify(static_cast<int>(tau), Simplex{top.index.at(in_top), {}},
                                 static_cast<int>(f.base), Simplex{low.index.at(strict), word});
            }
        }
    }

    // Sort key and name come from the class signature: the chain of bases of
    // the vertex-set restrictions, which is invariant across class members.
    std::map<std::pair<NdId, std::vector<int>>, NdId> restriction_cache;
    auto restriction_base = [&](NdId cell, const std::vector<int>& subset) {
        auto key = std::make_pair(cell, subset);
        auto it = restriction_cache.find(key);
        if (it != restriction_cache.end()) return it->second;
        NdId base = restrict_to_vertices(X, cell, subset).base;
        restriction_cache.emplace(std::move(key), base);
        return base;
    };
    auto signature = [&](const ColimitBuilder::Members& members) {
        const auto& [copy, cell] = members.front();
        const SubsetChain& chain = sd_standard(X.dim(static_cast<NdId>(copy))).chains[cell];
        std::vector<std::uint32_t> sig;
        for (const auto& subset : chain)
            sig.push_back(restriction_base(static_cast<NdId>(copy), subset));
        return sig;
    };
    auto result = builder.build(
        [&](int, const ColimitBuilder::Members& m) { return signature(m); },
        [&](int, const ColimitBuilder::Members& m) {
            std::string name;
            for (std::uint32_t b : signature(m)) {
                if (!name.empty()) name += "<";
                name += X.id(b);
            }
            return name;
        });

    SubdivisionResult out;
    out.sd = std::move(result.sset);
    out.chain_images = std::move(result.mapping);
    out.provenance.resize(out.sd.size());
    for (NdId cell = 0; cell < out.sd.size(); ++cell)
        for (const auto& [copy, mem] : result.members[cell])
            out.provenance[cell].push_back(
                {static_cast<NdId>(copy), sd_standard(X.dim(static_cast<NdId>(copy))).chains[mem]});
    return out;
}

SimplicialMap subdivide_map(const SimplicialMap& f) {
    if (auto rep = f.validate(); !rep.ok())
        throw InputError("subdivide_map: map does not validate:\n" + rep.to_string());
    SubdivisionResult sx = subdivide(f.source);
    SubdivisionResult sy = subdivide(f.target);
    SimplicialMap sf{sx.sd, sy.sd, {}};
    for (NdId cell = 0; cell < sx.sd.size(); ++cell) {
        const ChainInCell& prov = sx.provenance[cell].front();
        const Simplex& img = f.images[prov.cell];  // (tau', W)
        std::vector<int> surj = surjection_of_word(img.deg, f.source.dim(prov.cell));
        auto [strict, word] = chain_normal_form(chain_image(prov.chain, surj));
        const SdStandard& std_t = sd_standard(f.target.dim(img.base));
        const Simplex& low = sy.chain_images[img.base][std_t.index.at(strict)];
        sf.images.push_back(Simplex{low.base, deg_concat(word, low.deg)});
    }
    return sf;
}

bool RegularityReport::regular() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const RegularityEntry& e) { return e.regular; });
}

std::string RegularityReport::to_string() const {
    std::ostringstream os;
    for (const auto& e : entries)
        os << (e.regular ? "regular    " : "NOT regular") << "  " << e.detail << "\n";
    return os.str();
}

RegularityReport is_regular(const FiniteSimplicialSet& X) {
    if (auto rep = validate(X); !rep.ok())
        throw InputError("is_regular: input does not validate:\n" + rep.to_string());
    RegularityReport report;
    auto counts_per_dim = [](const FiniteSimplicialSet& S) {
        std::vector<int> c(static_cast<std::size_t>(std::max(S.max_dim(), 0)) + 1, 0);
        for (NdId i = 0; i < S.size(); ++i) ++c[static_cast<std::size_t>(S.dim(i))];
        return c;
    };
    for (NdId x = 0; x < X.size(); ++x) {
        int n = X.dim(x);
        if (n == 0) {
            report.entries.push_back({x, true, X.id(x) + " (vertex)"});
            continue;
        }
        Subcomplex gen = subcomplex_generated_by(X, x);
        const Simplex& last = X.stored_face(x, n);
        Subcomplex lastgen = subcomplex_generated_by(X, last.base);
        std::vector<NdId> to_sub(X.size(), 0);
        for (NdId i = 0; i < lastgen.sset.size(); ++i) to_sub[lastgen.into_parent[i]] = i;

        FiniteSimplicialSet simp = standard_simplex(n);
        ColimitBuilder builder({&simp, &lastgen.sset});
        const FiniteSimplicialSet& facet = standard_simplex(n - 1);
        for (NdId s = 0; s < facet.size(); ++s) {
            // subset of [n-1], included into [n] untouched (the last face)
            Simplex in_simp{*simp.find(facet.id(s)), {}};
            std::vector<int> verts = parse_subset_label(facet.id(s));
            Simplex restricted = last;
            for (int i = n - 1; i >= 0; --i)
                if (std::find(verts.begin(), verts.end(), i) == verts.end())
                    restricted = apply_face(X, restricted, i);
            Simplex in_last{to_sub[restricted.base], restricted.deg};
            builder.identify(0, in_simp, 1, in_last);
        }
        auto pushout = builder.build(
            [](int, const ColimitBuilder::Members& m) {
                std::vector<std::uint32_t> key;
                for (const auto& [c, i] : m) {
                    key.push_back(static_cast<std::uint32_t>(c));
                    key.push_back(i);
                }
                return key;
            },
            [](int dim, const ColimitBuilder::Members& m) {
                return "p" + std::to_string(dim) + "_" + std::to_string(m.front().first) + "_" +
                       std::to_string(m.front().second);
            });
        bool ok = counts_per_dim(pushout.sset) == counts_per_dim(gen.sset);
        std::ostringstream detail;
        detail << X.id(x);
        if (!ok) detail << " (pushout cell counts differ from the generated subcomplex)";
        report.entries.push_back({x, ok, detail.str()});
    }
    return report;
}

}  // namespace procstar
