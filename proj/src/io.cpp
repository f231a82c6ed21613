#include "procstar/io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace procstar::io {

namespace {

json simplex_to_json(const FiniteSimplicialSet& X, const Simplex& s) {
    return json{{"base", X.id(s.base)}, {"deg", s.deg}};
}

Simplex simplex_from_json(const FiniteSimplicialSet& X, const json& j) {
    auto base = X.find(j.at("base").get<std::string>());
    if (!base) throw ParseError("unknown simplex id: " + j.at("base").get<std::string>());
    Simplex s{*base, j.at("deg").get<DegeneracyWord>()};
    if (!is_strictly_decreasing(s.deg))
        throw ParseError("degeneracy word not strictly decreasing in " + j.dump());
    return s;
}

void check_schema(const json& j, const std::string& expected) {
    if (!j.is_object() || j.value("schema", "") != expected)
        throw ParseError("expected schema \"" + expected + "\"");
}

}  // namespace

json sset_to_json(const FiniteSimplicialSet& X) {
    json simplices = json::array();
    for (NdId c = 0; c < X.size(); ++c)
        simplices.push_back(json{{"id", X.id(c)}, {"dim", X.dim(c)}});
    json faces = json::object();
    for (NdId c = 0; c < X.size(); ++c) {
        if (X.dim(c) == 0) continue;
        json entry = json::array();
        for (int i = 0; i <= X.dim(c); ++i)
            entry.push_back(simplex_to_json(X, X.stored_face(c, i)));
        faces[X.id(c)] = std::move(entry);
    }
    return json{{"schema", "sset.v1"}, {"simplices", std::move(simplices)},
                {"faces", std::move(faces)}};
}

FiniteSimplicialSet sset_from_json(const json& j) {
    check_schema(j, "sset.v1");
    FiniteSimplicialSet X;
    for (const auto& s : j.at("simplices"))
        X.add_cell(s.at("id").get<std::string>(), s.at("dim").get<int>());
    const json& faces = j.at("faces");
    for (NdId c = 0; c < X.size(); ++c) {
        if (X.dim(c) == 0) continue;
        auto it = faces.find(X.id(c));
        if (it == faces.end()) throw ParseError("missing face table for " + X.id(c));
        std::vector<Simplex> fs;
        for (const auto& f : *it) fs.push_back(simplex_from_json(X, f));
        X.set_faces(c, std::move(fs));
    }
    return X;
}

namespace {

json images_to_json(const SimplicialMap& f) {
    json images = json::object();
    for (NdId c = 0; c < f.source.size(); ++c)
        images[f.source.id(c)] = simplex_to_json(f.target, f.images[c]);
    return images;
}

std::vector<Simplex> images_from_json(const FiniteSimplicialSet& source,
                                      const FiniteSimplicialSet& target, const json& images) {
    std::vector<Simplex> out;
    for (NdId c = 0; c < source.size(); ++c) {
        auto it = images.find(source.id(c));
        if (it == images.end()) throw ParseError("missing image for " + source.id(c));
        out.push_back(simplex_from_json(target, *it));
    }
    return out;
}

}  // namespace

json smap_to_json(const SimplicialMap& f) {
    return json{{"schema", "smap.v1"},
                {"source", sset_to_json(f.source)},
                {"target", sset_to_json(f.target)},
                {"images", images_to_json(f)}};
}

SimplicialMap smap_from_json(const json& j) {
    check_schema(j, "smap.v1");
    SimplicialMap f;
    f.source = sset_from_json(j.at("source"));
    f.target = sset_from_json(j.at("target"));
    f.images = images_from_json(f.source, f.target, j.at("images"));
    return f;
}

json filtration_to_json(const Filtration& f) {
    json stages = json::array();
    for (const auto& s : f.stages) stages.push_back(sset_to_json(s));
    json inclusions = json::array();
    for (const auto& m : f.inclusions) inclusions.push_back(images_to_json(m));
    json map_stages = json::array();
    for (const auto& m : f.map_stages) map_stages.push_back(images_to_json(m));
    return json{{"schema", "filtration.v1"},
                {"stages", std::move(stages)},
                {"target", sset_to_json(f.target)},
                {"inclusions", std::move(inclusions)},
                {"map_stages", std::move(map_stages)}};
}

Filtration filtration_from_json(const json& j) {
    check_schema(j, "filtration.v1");
    Filtration f;
    for (const auto& s : j.at("stages")) f.stages.push_back(sset_from_json(s));
    f.target = sset_from_json(j.at("target"));
    const json& incl = j.at("inclusions");
    for (std::size_t i = 0; i + 1 < f.stages.size(); ++i) {
        if (i >= incl.size()) throw ParseError("missing inclusion " + std::to_string(i));
        SimplicialMap m{f.stages[i], f.stages[i + 1], {}};
        m.images = images_from_json(m.source, m.target, incl[i]);
        f.inclusions.push_back(std::move(m));
    }
    const json& ms = j.at("map_stages");
    for (std::size_t i = 0; i < f.stages.size(); ++i) {
        if (i >= ms.size()) throw ParseError("missing map stage " + std::to_string(i));
        SimplicialMap m{f.stages[i], f.target, {}};
        m.images = images_from_json(m.source, m.target, ms[i]);
        f.map_stages.push_back(std::move(m));
    }
    return f;
}

json quiver_to_json(const DoubledQuiver& Q) {
    json vertices = json::array();
    for (const auto& e : Q.poset.elements)
        vertices.push_back(json{{"id", e.id}, {"dim", e.dim}});
    json edges = json::array();
    for (const auto& e : Q.edges)
        edges.push_back(json{{"id", e.id},
                             {"src", Q.poset.elements[e.src].id},
                             {"tgt", Q.poset.elements[e.tgt].id},
                             {"star", e.id + "*"}});
    return json{{"schema", "quiver.v1"},
                {"mode", Q.mode == QuiverMode::AllStrictPairs ? "all-strict-pairs" : "hasse"},
                {"vertices", std::move(vertices)},
                {"edges", std::move(edges)}};
}

namespace {

json poly_to_json(const StarPolynomial& p, const Alphabet& alpha) {
    json terms = json::array();
    for (const auto& [w, c] : p.terms()) {
        json letters = json::array();
        for (Letter l : w) letters.push_back(alpha.name(l));
        terms.push_back(json::array({c, std::move(letters)}));
    }
    return terms;
}

StarPolynomial poly_from_json(const json& j, const Alphabet& alpha) {
    std::unordered_map<std::string, Letter> by_name;
    for (Letter l = 0; l < alpha.total(); ++l) by_name.emplace(alpha.name(l), l);
    StarPolynomial p;
    for (const auto& term : j) {
        long long c = term.at(0).get<long long>();
        Word w;
        for (const auto& name : term.at(1)) {
            auto it = by_name.find(name.get<std::string>());
            if (it == by_name.end())
                throw ParseError("relation references undeclared generator: " +
                                 name.get<std::string>());
            w.push_back(it->second);
        }
        p.add_term(w, c);
    }
    return p;
}

}  // namespace

json presentation_to_json(const Presentation& P) {
    json verts = json::array();
    for (const auto& v : P.vertex_gens())
        verts.push_back(json{{"id", v.name}, {"dim", v.dim}, {"positive", v.positive}});
    json edges = json::array();
    for (const auto& e : P.edge_gens())
        edges.push_back(json{{"id", e.name},
                             {"src", P.vertex_gens()[static_cast<std::size_t>(e.src)].name},
                             {"tgt", P.vertex_gens()[static_cast<std::size_t>(e.tgt)].name},
                             {"star", e.name + "*"}});
    json relations = json::array();
    P.for_each_relation([&](const RelationInstance& r) {
        relations.push_back(json{{"schema", schema_name(r.schema)},
                                 {"lhs", poly_to_json(r.lhs, P.alphabet())},
                                 {"rhs", poly_to_json(r.rhs, P.alphabet())}});
    });
    return json{{"schema", "presentation.v1"},
                {"unital", P.unital()},
                {"quiver_mode",
                 P.quiver_mode() == QuiverMode::AllStrictPairs ? "all-strict-pairs" : "hasse"},
                {"lambda_note", P.lambda_note()},
                {"vertex_gens", std::move(verts)},
                {"edge_gens", std::move(edges)},
                {"relations", std::move(relations)}};
}

Presentation presentation_from_json(const json& j) {
    check_schema(j, "presentation.v1");
    std::vector<VertexGen> verts;
    std::unordered_map<std::string, int> vert_index;
    for (const auto& v : j.at("vertex_gens")) {
        vert_index.emplace(v.at("id").get<std::string>(), static_cast<int>(verts.size()));
        verts.push_back(VertexGen{v.at("id").get<std::string>(), v.at("dim").get<int>(),
                                  v.at("positive").get<bool>()});
    }
    std::vector<EdgeGen> edges;
    for (const auto& e : j.at("edge_gens")) {
        auto s = vert_index.find(e.at("src").get<std::string>());
        auto t = vert_index.find(e.at("tgt").get<std::string>());
        if (s == vert_index.end() || t == vert_index.end())
            throw ParseError("edge generator references undeclared vertex");
        edges.push_back(EdgeGen{e.at("id").get<std::string>(), s->second, t->second});
    }
    QuiverMode mode = j.value("quiver_mode", "all-strict-pairs") == "hasse"
                          ? QuiverMode::HasseOnly
                          : QuiverMode::AllStrictPairs;
    Presentation P(std::move(verts), std::move(edges), j.at("unital").get<bool>(), mode);
    // The relation list is canonical: validate the file against the list
    // regenerated from the generators.
    const json& rels = j.at("relations");
    std::size_t index = 0;
    bool ok = true;
    P.for_each_relation([&](const RelationInstance& r) {
        if (!ok) return;
        if (index >= rels.size()) {
            ok = false;
            return;
        }
        const json& jr = rels[index];
        if (schema_from_name(jr.at("schema").get<std::string>()) != r.schema ||
            !(poly_from_json(jr.at("lhs"), P.alphabet()) == r.lhs) ||
            !(poly_from_json(jr.at("rhs"), P.alphabet()) == r.rhs))
            ok = false;
        ++index;
    });
    if (!ok || index != rels.size())
        throw ParseError("presentation relations do not match the canonical list "
                         "generated by its quiver");
    return P;
}

json genmap_to_json(const GeneratorMap& g) {
    json vimages = json::object();
    const auto& sp = g.source_presentation;
    for (std::size_t v = 0; v < sp.vertex_gens().size(); ++v)
        vimages[sp.vertex_gens()[v].name] =
            poly_to_json(g.vertex_images[v], g.target_presentation.alphabet());
    json eimages = json::object();
    for (std::size_t e = 0; e < sp.edge_gens().size(); ++e)
        eimages[sp.edge_gens()[e].name] =
            poly_to_json(g.edge_images[e], g.target_presentation.alphabet());
    return json{{"schema", "genmap.v1"},
                {"source_presentation", presentation_to_json(g.source_presentation)},
                {"target_presentation", presentation_to_json(g.target_presentation)},
                {"vertex_images", std::move(vimages)},
                {"edge_images", std::move(eimages)}};
}

GeneratorMap genmap_from_json(const json& j) {
    check_schema(j, "genmap.v1");
    GeneratorMap g;
    g.source_presentation = presentation_from_json(j.at("source_presentation"));
    g.target_presentation = presentation_from_json(j.at("target_presentation"));
    const json& vimages = j.at("vertex_images");
    for (const auto& v : g.source_presentation.vertex_gens()) {
        auto it = vimages.find(v.name);
        if (it == vimages.end()) throw ParseError("missing vertex image for " + v.name);
        g.vertex_images.push_back(poly_from_json(*it, g.target_presentation.alphabet()));
    }
    const json& eimages = j.at("edge_images");
    for (const auto& e : g.source_presentation.edge_gens()) {
        auto it = eimages.find(e.name);
        if (it == eimages.end()) throw ParseError("missing edge image for " + e.name);
        g.edge_images.push_back(poly_from_json(*it, g.target_presentation.alphabet()));
    }
    return g;
}

json rep_to_json(const MatrixRep& rep, const Presentation& P) {
    const Alphabet& a = P.alphabet();
    json images = json::object();
    auto matrix_json = [&](const Eigen::MatrixXcd& m) {
        json rows = json::array();
        for (int i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (int k = 0; k < m.cols(); ++k)
                row.push_back(json::array({m(i, k).real(), m(i, k).imag()}));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    for (Letter l = 0; l < a.total(); ++l) {
        if (a.is_star(l)) continue;  // adjoints derived
        images[a.name(l)] = matrix_json(rep.image(l));
    }
    return json{{"schema", "rep.v1"}, {"dim", rep.dim}, {"images", std::move(images)}};
}

MatrixRep rep_from_json(const json& j, const Presentation& P) {
    check_schema(j, "rep.v1");
    const Alphabet& a = P.alphabet();
    MatrixRep rep;
    rep.dim = j.at("dim").get<int>();
    if (rep.dim <= 0) throw ParseError("rep.v1: dim must be positive");
    rep.images.assign(static_cast<std::size_t>(a.total()),
                      Eigen::MatrixXcd::Zero(rep.dim, rep.dim));
    const json& images = j.at("images");
    for (Letter l = 0; l < a.total(); ++l) {
        if (a.is_star(l)) continue;
        auto it = images.find(a.name(l));
        if (it == images.end()) throw ParseError("rep.v1: missing image for " + a.name(l));
        const json& rows = *it;
        if (static_cast<int>(rows.size()) != rep.dim)
            throw ParseError("rep.v1: wrong row count for " + a.name(l));
        Eigen::MatrixXcd m(rep.dim, rep.dim);
        for (int r = 0; r < rep.dim; ++r) {
            const json& row = rows[static_cast<std::size_t>(r)];
            if (static_cast<int>(row.size()) != rep.dim)
                throw ParseError("rep.v1: wrong column count for " + a.name(l));
            for (int c = 0; c < rep.dim; ++c)
                m(r, c) = std::complex<double>(row[static_cast<std::size_t>(c)].at(0).get<double>(),
                                               row[static_cast<std::size_t>(c)].at(1).get<double>());
        }
        rep.images[static_cast<std::size_t>(l)] = std::move(m);
        if (a.is_edge(l))
            rep.images[static_cast<std::size_t>(a.star(l))] =
                rep.images[static_cast<std::size_t>(l)].adjoint();
    }
    return rep;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

void save_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << dump_canonical(j);
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

}  // namespace procstar::io
