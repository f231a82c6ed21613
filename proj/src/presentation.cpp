#include "procstar/presentation.hpp"

#include <sstream>

namespace procstar {

std::string schema_name(RelationSchema s) {
    switch (s) {
        case RelationSchema::Concat: return "Concat";
        case RelationSchema::PartialIsometry: return "PartialIsometry";
        case RelationSchema::LeftUnit: return "LeftUnit";
        case RelationSchema::RightUnit: return "RightUnit";
        case RelationSchema::ApproxUnit: return "ApproxUnit";
    }
    throw Error("unreachable schema");
}

RelationSchema schema_from_name(const std::string& s) {
    if (s == "Concat") return RelationSchema::Concat;
    if (s == "PartialIsometry") return RelationSchema::PartialIsometry;
    if (s == "LeftUnit") return RelationSchema::LeftUnit;
    if (s == "RightUnit") return RelationSchema::RightUnit;
    if (s == "ApproxUnit") return RelationSchema::ApproxUnit;
    throw ParseError("unknown relation schema: " + s);
}

namespace {

const char* kLambdaNote =
    "relation (5) ranges over the directed set of finite vertex subsets; "
    "finite case specialized to vertex sum = 1";

}  // namespace

Presentation::Presentation(std::vector<VertexGen> verts, std::vector<EdgeGen> edges,
                           bool unital, QuiverMode mode)
    : vertex_gens_(std::move(verts)),
      edge_gens_(std::move(edges)),
      unital_(unital),
      mode_(mode),
      lambda_note_(kLambdaNote) {
    alphabet_.num_vertices = static_cast<int>(vertex_gens_.size());
    alphabet_.num_edges = static_cast<int>(edge_gens_.size());
    for (const auto& v : vertex_gens_) alphabet_.names.push_back(v.name);
    for (const auto& e : edge_gens_) alphabet_.names.push_back(e.name);
    for (const auto& e : edge_gens_) alphabet_.names.push_back(e.name + "*");
    for (const auto& e : edge_gens_) {
        if (e.src < 0 || e.src >= alphabet_.num_vertices || e.tgt < 0 ||
            e.tgt >= alphabet_.num_vertices)
            throw InputError("edge generator " + e.name + " references unknown vertex");
    }
}

int Presentation::source_of(Letter l) const {
    if (alphabet_.is_edge(l)) return edge_gens_[static_cast<std::size_t>(l - alphabet_.num_vertices)].src;
    if (alphabet_.is_star(l))
        return edge_gens_[static_cast<std::size_t>(l - alphabet_.num_vertices - alphabet_.num_edges)].tgt;
    throw InputError("source_of: not an edge letter");
}

int Presentation::target_of(Letter l) const {
    if (alphabet_.is_edge(l)) return edge_gens_[static_cast<std::size_t>(l - alphabet_.num_vertices)].tgt;
    if (alphabet_.is_star(l))
        return edge_gens_[static_cast<std::size_t>(l - alphabet_.num_vertices - alphabet_.num_edges)].src;
    throw InputError("target_of: not an edge letter");
}

StarPolynomial Presentation::vertex_sum() const {
    StarPolynomial s;
    for (int i = 0; i < alphabet_.num_vertices; ++i) s.add_term(Word{vertex_letter(i)}, 1);
    return s;
}

void Presentation::for_each_relation(
    const std::function<void(const RelationInstance&)>& fn) const {
    const int ne = alphabet_.num_edges;
    const int nv = alphabet_.num_vertices;
    std::vector<Letter> doubled;
    for (int i = 0; i < ne; ++i) doubled.push_back(edge_letter(i));
    for (int i = 0; i < ne; ++i) doubled.push_back(star_letter(i));

    for (Letter e1 : doubled) {
        for (Letter e2 : doubled) {
            Word w{e1, e2};
            bool composable = target_of(e1) == source_of(e2);
            fn(RelationInstance{RelationSchema::Concat, StarPolynomial::from_word(w),
                                composable ? StarPolynomial::from_word(w)
                                           : StarPolynomial::zero()});
        }
    }
    for (int i = 0; i < ne; ++i) {
        Letter x = edge_letter(i), xs = star_letter(i);
        fn(RelationInstance{RelationSchema::PartialIsometry,
                            StarPolynomial::from_word({x, xs}),
                            StarPolynomial::from_word({vertex_letter(edge_gens_[i].src)})});
        fn(RelationInstance{RelationSchema::PartialIsometry,
                            StarPolynomial::from_word({xs, x}),
                            StarPolynomial::from_word({vertex_letter(edge_gens_[i].tgt)})});
    }
    for (int v = 0; v < nv; ++v) {
        for (Letter e : doubled) {
            bool hit = source_of(e) == v;
            fn(RelationInstance{RelationSchema::LeftUnit,
                                StarPolynomial::from_word({vertex_letter(v), e}),
                                hit ? StarPolynomial::from_word({e}) : StarPolynomial::zero()});
        }
    }
    for (Letter e : doubled) {
        for (int v = 0; v < nv; ++v) {
            bool hit = target_of(e) == v;
            fn(RelationInstance{RelationSchema::RightUnit,
                                StarPolynomial::from_word({e, vertex_letter(v)}),
                                hit ? StarPolynomial::from_word({e}) : StarPolynomial::zero()});
        }
    }
    if (unital_)
        fn(RelationInstance{RelationSchema::ApproxUnit, vertex_sum(), StarPolynomial::unit()});
}

std::vector<RelationInstance> Presentation::relations() const {
    std::vector<RelationInstance> out;
    out.reserve(relation_count());
    for_each_relation([&](const RelationInstance& r) { out.push_back(r); });
    return out;
}

std::size_t Presentation::relation_count() const {
    std::size_t e2 = 2 * static_cast<std::size_t>(alphabet_.num_edges);
    std::size_t nv = static_cast<std::size_t>(alphabet_.num_vertices);
    return e2 * e2 + e2 + 2 * nv * e2 + (unital_ ? 1 : 0);
}

bool Presentation::check_relations_wellformed() const {
    bool ok = true;
    for_each_relation([&](const RelationInstance& r) {
        auto check_poly = [&](const StarPolynomial& p) {
            for (const auto& [w, c] : p.terms()) {
                (void)c;
                for (Letter l : w)
                    if (l < 0 || l >= alphabet_.total()) ok = false;
            }
        };
        check_poly(r.lhs);
        check_poly(r.rhs);
        if (r.schema != RelationSchema::ApproxUnit) {
            // monomial schemas: each side a single word or zero
            if (r.lhs.terms().size() != 1 || r.rhs.terms().size() > 1) ok = false;
        }
    });
    return ok;
}

std::string vertex_gen_name(std::size_t i) {
    // bijective base-26 ("a".."z", "aa", ...), skipping names that start
    // with 'x' so vertex names never prefix-collide with edge names.
    std::size_t n = 0;
    for (std::size_t count = 0;; ++n) {
        std::size_t k = n + 1;
        std::string name;
        while (k > 0) {
            --k;
            name.insert(name.begin(), static_cast<char>('a' + k % 26));
            k /= 26;
        }
        if (name.front() == 'x') continue;
        if (count == i) return name;
        ++count;
    }
}

Presentation present(const FiniteSimplicialSet& X, QuiverMode mode) {
    SubdivisionResult sd = subdivide(X);
    NdPoset P = nd_poset(sd.sd);
    DoubledQuiver Q = doubled_quiver(P, mode);

    std::vector<VertexGen> verts;
    for (NdId c = 0; c < P.size(); ++c)
        verts.push_back(VertexGen{vertex_gen_name(c), P.elements[c].dim, true});
    std::vector<EdgeGen> edges;
    for (const auto& e : Q.edges)
        edges.push_back(EdgeGen{e.id, static_cast<int>(e.src), static_cast<int>(e.tgt)});
    return Presentation(std::move(verts), std::move(edges), /*unital=*/true, mode);
}

std::string emit_text(const Presentation& P) {
    std::ostringstream os;
    os << "# ProC* presentation: " << P.vertex_gens().size() << " vertex generators, "
       << P.edge_gens().size() << " edge pairs, "
       << (P.unital() ? "unital" : "non-unital") << "\n";
    os << "# " << P.lambda_note() << "\n";
    os << "# vertices:";
    for (const auto& v : P.vertex_gens()) os << " " << v.name << "(dim " << v.dim << ")";
    os << "\n# edges:";
    for (const auto& e : P.edge_gens())
        os << " " << e.name << ":" << P.vertex_gens()[static_cast<std::size_t>(e.src)].name
           << "->" << P.vertex_gens()[static_cast<std::size_t>(e.tgt)].name;
    os << "\n";
    P.for_each_relation([&](const RelationInstance& r) {
        os << print_polynomial(r.lhs, P.alphabet()) << " = "
           << print_polynomial(r.rhs, P.alphabet()) << "\n";
    });
    return os.str();
}

}  // namespace procstar
