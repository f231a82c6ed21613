#include "procstar/sset.hpp"

#include <algorithm>
#include <sstream>

namespace procstar {

bool is_strictly_decreasing(const DegeneracyWord& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] <= w[i]) return false;
    return true;
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    if (ok()) {
        os << "valid\n";
        return os.str();
    }
    for (const auto& is : issues) os << is.what << " @ " << is.witness << "\n";
    return os.str();
}

NdId FiniteSimplicialSet::add_cell(std::string id, int dim) {
    if (dim < 0) throw InputError("cell dimension must be >= 0: " + id);
    if (by_id_.count(id)) throw InputError("duplicate cell id: " + id);
    NdId c = static_cast<NdId>(cells_.size());
    by_id_.emplace(id, c);
    cells_.push_back(NdCell{std::move(id), dim});
    faces_.emplace_back();
    return c;
}

void FiniteSimplicialSet::set_faces(NdId cell, std::vector<Simplex> faces) {
    if (cells_[cell].dim == 0) throw InputError("0-cells have no face table");
    if (static_cast<int>(faces.size()) != cells_[cell].dim + 1)
        throw InputError("face table for " + cells_[cell].id + " must have dim+1 entries");
    faces_[cell] = std::move(faces);
}

std::optional<NdId> FiniteSimplicialSet::find(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
}

int FiniteSimplicialSet::max_dim() const {
    int d = -1;
    for (const auto& c : cells_) d = std::max(d, c.dim);
    return d;
}

const Simplex& FiniteSimplicialSet::stored_face(NdId cell, int i) const {
    const auto& f = faces_[cell];
    if (f.empty()) throw DimensionError("no face table for 0-cell " + cells_[cell].id);
    if (i < 0 || i > cells_[cell].dim)
        throw DimensionError("face index out of range for " + cells_[cell].id);
    return f[static_cast<std::size_t>(i)];
}

int dim_of(const FiniteSimplicialSet& X, const Simplex& s) {
    return X.dim(s.base) + static_cast<int>(s.deg.size());
}

Simplex apply_degeneracy(const FiniteSimplicialSet& X, const Simplex& s, int j) {
    int n = dim_of(X, s);
    if (j < 0 || j > n)
        throw DimensionError("degeneracy index " + std::to_string(j) +
                             " out of range on a " + std::to_string(n) + "-simplex");
    // Insert j into the strictly decreasing word using s_i s_j = s_{j+1} s_i
    // for i <= j: each entry >= the incoming index gets bumped by one.
    Simplex r = s;
    DegeneracyWord& w = r.deg;
    std::size_t pos = 0;
    while (pos < w.size() && j <= w[pos]) {
        ++w[pos];
        ++pos;
    }
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), j);
    return r;
}

Simplex apply_face(const FiniteSimplicialSet& X, const Simplex& s, int i) {
    int n = dim_of(X, s);
    if (n == 0) throw DimensionError("0-simplex " + X.id(s.base) + " has no faces");
    if (i < 0 || i > n)
        throw DimensionError("face index " + std::to_string(i) + " out of range on a " +
                             std::to_string(n) + "-simplex");
    if (s.deg.empty()) return X.stored_face(s.base, i);
    int j = s.deg.front();
    Simplex inner{s.base, DegeneracyWord(s.deg.begin() + 1, s.deg.end())};
    if (i == j || i == j + 1) return inner;  // d_i s_j = id
    if (i < j) {
        // d_i s_j = s_{j-1} d_i
        return apply_degeneracy(X, apply_face(X, inner, i), j - 1);
    }
    // i > j + 1: d_i s_j = s_j d_{i-1}
    return apply_degeneracy(X, apply_face(X, inner, i - 1), j);
}

Simplex face(const FiniteSimplicialSet& X, const Simplex& s, int i) {
    return apply_face(X, s, i);
}

Simplex normalize(const FiniteSimplicialSet& X, NdId base,
                  const std::vector<SimplicialOp>& word) {
    Simplex s{base, {}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (it->kind == SimplicialOp::Face)
            s = apply_face(X, s, it->index);
        else
            s = apply_degeneracy(X, s, it->index);
    }
    return s;
}

Simplex restrict_to_vertices(const FiniteSimplicialSet& X, NdId cell,
                             const std::vector<int>& vertices) {
    int n = X.dim(cell);
    if (vertices.empty()) throw InputError("restriction to the empty vertex set");
    Simplex s{cell, {}};
    for (int i = n; i >= 0; --i) {
        if (std::find(vertices.begin(), vertices.end(), i) == vertices.end())
            s = apply_face(X, s, i);
    }
    return s;
}

std::string subset_label(const std::vector<int>& subset) {
    std::string id;
    for (int v : subset) {
        if (v >= 10) id += "_";  // keep multi-digit vertex labels parseable
        id += std::to_string(v);
    }
    return id;
}

std::vector<int> parse_subset_label(const std::string& label) {
    std::vector<int> out;
    std::size_t p = 0;
    while (p < label.size()) {
        if (label[p] == '_') {
            std::size_t q = p + 1;
            while (q < label.size() && std::isdigit(static_cast<unsigned char>(label[q]))) ++q;
            out.push_back(std::stoi(label.substr(p + 1, q - p - 1)));
            p = q;
        } else {
            out.push_back(label[p] - '0');
            ++p;
        }
    }
    return out;
}

namespace {

void enumerate_subsets(int n, std::vector<int>& cur, int next,
                       std::vector<std::vector<int>>& out) {
    if (!cur.empty()) out.push_back(cur);
    for (int v = next; v <= n; ++v) {
        cur.push_back(v);
        enumerate_subsets(n, cur, v + 1, out);
        cur.pop_back();
    }
}

}  // namespace

FiniteSimplicialSet standard_simplex(int n) {
    if (n < 0) throw InputError("standard_simplex needs n >= 0");
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    enumerate_subsets(n, cur, 0, subsets);  // already subset-lexicographic
    FiniteSimplicialSet X;
    std::unordered_map<std::string, NdId> index;
    for (const auto& s : subsets)
        index.emplace(subset_label(s), X.add_cell(subset_label(s), static_cast<int>(s.size()) - 1));
    for (const auto& s : subsets) {
        if (s.size() < 2) continue;
        std::vector<Simplex> faces;
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<int> f = s;
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
            faces.push_back(Simplex{index.at(subset_label(f)), {}});
        }
        X.set_faces(index.at(subset_label(s)), std::move(faces));
    }
    return X;
}

ValidationReport validate(const FiniteSimplicialSet& X) {
    ValidationReport rep;
    // Well-formedness of stored face tables.
    for (NdId c = 0; c < X.size(); ++c) {
        if (X.dim(c) == 0) continue;
        for (int i = 0; i <= X.dim(c); ++i) {
            const Simplex* f = nullptr;
            try {
                f = &X.stored_face(c, i);
            } catch (const Error& e) {
                rep.issues.push_back({"missing face entry", X.id(c) + " d_" + std::to_string(i)});
                continue;
            }
            if (f->base >= X.size()) {
                rep.issues.push_back({"face references unknown cell", X.id(c)});
                continue;
            }
            if (!is_strictly_decreasing(f->deg))
                rep.issues.push_back({"degeneracy word not strictly decreasing",
                                      X.id(c) + " d_" + std::to_string(i)});
            if (dim_of(X, *f) != X.dim(c) - 1)
                rep.issues.push_back({"face has wrong dimension", X.id(c) + " d_" + std::to_string(i)});
        }
    }
    if (!rep.ok()) return rep;  // identity checks need well-formed tables

    // d_i d_j = d_{j-1} d_i for i < j, on all generated simplices up to
    // dimension max_dim + 2. Degeneracy interchange holds by construction of
    // the normal-form arithmetic, so face tables are the only failure source.
    int top = X.max_dim() + 2;
    std::vector<Simplex> layer;
    for (NdId c = 0; c < X.size(); ++c) layer.push_back(Simplex{c, {}});
    std::vector<Simplex> all = layer;
    // generate degeneracies breadth-first by total dimension
    for (int d = 0; d <= top; ++d) {
        std::vector<Simplex> next;
        for (const auto& s : all) {
            if (dim_of(X, s) != d) continue;
            for (int j = 0; j <= d; ++j) {
                Simplex t = apply_degeneracy(X, s, j);
                if (std::find(next.begin(), next.end(), t) == next.end() && dim_of(X, t) <= top)
                    next.push_back(t);
            }
        }
        all.insert(all.end(), next.begin(), next.end());
    }
    std::sort(all.begin(), all.end(), [&](const Simplex& a, const Simplex& b) {
        return std::tuple(dim_of(X, a), a.base, a.deg) < std::tuple(dim_of(X, b), b.base, b.deg);
    });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (const auto& s : all) {
        int d = dim_of(X, s);
        if (d < 2) continue;
        for (int j = 1; j <= d; ++j) {
            for (int i = 0; i < j; ++i) {
                Simplex lhs = apply_face(X, apply_face(X, s, j), i);
                Simplex rhs = apply_face(X, apply_face(X, s, i), j - 1);
                if (!(lhs == rhs)) {
                    std::ostringstream w;
                    w << "d_" << i << " d_" << j << " on (" << X.id(s.base);
                    for (int k : s.deg) w << " s" << k;
                    w << ")";
                    rep.issues.push_back({"d_i d_j = d_{j-1} d_i violated", w.str()});
                }
            }
        }
    }
    return rep;
}

FiniteSimplicialSet disjoint_union(const FiniteSimplicialSet& X,
                                   const FiniteSimplicialSet& Y) {
    FiniteSimplicialSet U;
    for (NdId c = 0; c < X.size(); ++c) U.add_cell("l_" + X.id(c), X.dim(c));
    for (NdId c = 0; c < Y.size(); ++c) U.add_cell("r_" + Y.id(c), Y.dim(c));
    auto offset = static_cast<NdId>(X.size());
    for (NdId c = 0; c < X.size(); ++c) {
        if (X.dim(c) == 0) continue;
        std::vector<Simplex> faces;
        for (int i = 0; i <= X.dim(c); ++i) faces.push_back(X.stored_face(c, i));
        U.set_faces(c, std::move(faces));
    }
    for (NdId c = 0; c < Y.size(); ++c) {
        if (Y.dim(c) == 0) continue;
        std::vector<Simplex> faces;
        for (int i = 0; i <= Y.dim(c); ++i) {
            Simplex f = Y.stored_face(c, i);
            f.base += offset;
            faces.push_back(f);
        }
        U.set_faces(c + offset, std::move(faces));
    }
    return U;
}

namespace {

std::string word_str(const DegeneracyWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ".";
        s += std::to_string(w[i]);
    }
    return s;
}

// Enumerate strictly decreasing words over {0..n-1} of a given length.
void decreasing_words(int n, int len, std::vector<int>& cur,
                      std::vector<DegeneracyWord>& out) {
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    int hi = cur.empty() ? n - 1 : cur.back() - 1;
    for (int v = hi; v >= 0; --v) {
        cur.push_back(v);
        decreasing_words(n, len, cur, out);
        cur.pop_back();
    }
}

bool words_disjoint(const DegeneracyWord& a, const DegeneracyWord& b) {
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) return false;
    return true;
}

struct PairSimplex {
    Simplex left, right;
    bool operator==(const PairSimplex&) const = default;
};

// Joint EZ normal form of a pair: peel the largest j with
// s_j(d_j left, d_j right) == (left, right), collecting the word.
PairSimplex joint_normalize(const FiniteSimplicialSet& X, const FiniteSimplicialSet& Y,
                            Simplex left, Simplex right, DegeneracyWord& word_out) {
    int n = dim_of(X, left);
    for (int j = n - 1; j >= 0; --j) {
        Simplex la = apply_face(X, left, j);
        Simplex ra = apply_face(Y, right, j);
        if (apply_degeneracy(X, la, j) == left && apply_degeneracy(Y, ra, j) == right) {
            DegeneracyWord inner;
            PairSimplex core = joint_normalize(X, Y, la, ra, inner);
            word_out.clear();
            word_out.push_back(j);
            word_out.insert(word_out.end(), inner.begin(), inner.end());
            return core;
        }
    }
    word_out.clear();
    return PairSimplex{std::move(left), std::move(right)};
}

std::string product_cell_id(const FiniteSimplicialSet& X, const FiniteSimplicialSet& Y,
                            NdId sx, const DegeneracyWord& u, NdId sy,
                            const DegeneracyWord& v) {
    return "(" + X.id(sx) + "[" + word_str(u) + "]," + Y.id(sy) + "[" + word_str(v) + "])";
}

}  // namespace

std::optional<NdId> ProductResult::find_cell(const Simplex& left,
                                             const Simplex& right) const {
    for (NdId c = 0; c < cells.size(); ++c)
        if (cells[c].left == left && cells[c].right == right) return c;
    return std::nullopt;
}

ProductResult product_with_cells(const FiniteSimplicialSet& X,
                                 const FiniteSimplicialSet& Y) {
    struct Entry {
        NdId sx, sy;
        DegeneracyWord u, v;
        int dim;
    };
    std::vector<Entry> entries;
    for (NdId sx = 0; sx < X.size(); ++sx) {
        for (NdId sy = 0; sy < Y.size(); ++sy) {
            int dx = X.dim(sx), dy = Y.dim(sy);
            for (int n = std::max(dx, dy); n <= dx + dy; ++n) {
                std::vector<DegeneracyWord> us, vs;
                std::vector<int> cur;
                decreasing_words(n, n - dx, cur, us);
                decreasing_words(n, n - dy, cur, vs);
                for (const auto& u : us)
                    for (const auto& v : vs)
                        if (words_disjoint(u, v)) entries.push_back({sx, sy, u, v, n});
            }
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::tuple(a.dim, a.sx, a.sy, a.u, a.v) <
               std::tuple(b.dim, b.sx, b.sy, b.u, b.v);
    });
    ProductResult P;
    std::unordered_map<std::string, NdId> index;
    for (const auto& e : entries) {
        std::string id = product_cell_id(X, Y, e.sx, e.u, e.sy, e.v);
        index.emplace(id, P.sset.add_cell(id, e.dim));
        P.cells.push_back(ProductCellData{Simplex{e.sx, e.u}, Simplex{e.sy, e.v}});
    }
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const auto& e = entries[k];
        if (e.dim == 0) continue;
        std::vector<Simplex> faces;
        for (int i = 0; i <= e.dim; ++i) {
            Simplex l = apply_face(X, Simplex{e.sx, e.u}, i);
            Simplex r = apply_face(Y, Simplex{e.sy, e.v}, i);
            DegeneracyWord w;
            PairSimplex core = joint_normalize(X, Y, l, r, w);
            std::string id = product_cell_id(X, Y, core.left.base, core.left.deg,
                                             core.right.base, core.right.deg);
            faces.push_back(Simplex{index.at(id), w});
        }
        P.sset.set_faces(static_cast<NdId>(k), std::move(faces));
    }
    return P;
}

FiniteSimplicialSet product(const FiniteSimplicialSet& X, const FiniteSimplicialSet& Y) {
    return product_with_cells(X, Y).sset;
}

Simplex SimplicialMap::evaluate(const Simplex& s) const {
    if (s.base >= source.size()) throw InputError("unknown simplex in map evaluation");
    Simplex img = images[s.base];
    for (auto it = s.deg.rbegin(); it != s.deg.rend(); ++it)
        img = apply_degeneracy(target, img, *it);
    return img;
}

ValidationReport SimplicialMap::validate() const {
    ValidationReport rep;
    if (images.size() != source.size()) {
        rep.issues.push_back({"image table size mismatch", ""});
        return rep;
    }
    for (NdId c = 0; c < source.size(); ++c) {
        if (images[c].base >= target.size()) {
            rep.issues.push_back({"image references unknown target cell", source.id(c)});
            return rep;
        }
        if (dim_of(target, images[c]) != source.dim(c))
            rep.issues.push_back({"image has wrong dimension", source.id(c)});
    }
    if (!rep.ok()) return rep;
    for (NdId c = 0; c < source.size(); ++c) {
        if (source.dim(c) == 0) continue;
        for (int i = 0; i <= source.dim(c); ++i) {
            Simplex lhs = evaluate(source.stored_face(c, i));
            Simplex rhs = apply_face(target, images[c], i);
            if (!(lhs == rhs))
                rep.issues.push_back({"map does not commute with d_" + std::to_string(i),
                                      source.id(c)});
        }
    }
    return rep;
}

Simplex evaluate_map(const SimplicialMap& f, const Simplex& s) { return f.evaluate(s); }

SimplicialMap identity_map(const FiniteSimplicialSet& X) {
    SimplicialMap f{X, X, {}};
    for (NdId c = 0; c < X.size(); ++c) f.images.push_back(Simplex{c, {}});
    return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (!(f.target == g.source)) throw InputError("maps not composable");
    SimplicialMap h{f.source, g.target, {}};
    for (NdId c = 0; c < f.source.size(); ++c) h.images.push_back(g.evaluate(f.images[c]));
    return h;
}

SimplicialMap collapse_to_point(const FiniteSimplicialSet& X) {
    SimplicialMap f{X, standard_simplex(0), {}};
    for (NdId c = 0; c < X.size(); ++c) {
        DegeneracyWord w;
        for (int j = X.dim(c) - 1; j >= 0; --j) w.push_back(j);
        f.images.push_back(Simplex{0, w});
    }
    return f;
}

Subcomplex subcomplex_generated_by(const FiniteSimplicialSet& X, NdId cell) {
    std::vector<bool> in(X.size(), false);
    std::vector<NdId> stack{cell};
    in[cell] = true;
    while (!stack.empty()) {
        NdId c = stack.back();
        stack.pop_back();
        if (X.dim(c) == 0) continue;
        for (int i = 0; i <= X.dim(c); ++i) {
            NdId b = X.stored_face(c, i).base;
            if (!in[b]) {
                in[b] = true;
                stack.push_back(b);
            }
        }
    }
    Subcomplex sub;
    std::vector<NdId> to_sub(X.size(), 0);
    for (NdId c = 0; c < X.size(); ++c) {
        if (!in[c]) continue;
        to_sub[c] = sub.sset.add_cell(X.id(c), X.dim(c));
        sub.into_parent.push_back(c);
    }
    for (NdId c = 0; c < X.size(); ++c) {
        if (!in[c] || X.dim(c) == 0) continue;
        std::vector<Simplex> faces;
        for (int i = 0; i <= X.dim(c); ++i) {
            Simplex f = X.stored_face(c, i);
            f.base = to_sub[f.base];
            faces.push_back(f);
        }
        sub.sset.set_faces(to_sub[c], std::move(faces));
    }
    return sub;
}

}  // namespace procstar
