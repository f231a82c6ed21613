#include "procstar/functor.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace procstar {

ValidationReport Filtration::validate() const {
    ValidationReport rep;
    if (stages.empty()) {
        rep.issues.push_back({"filtration has no stages", ""});
        return rep;
    }
    if (inclusions.size() + 1 != stages.size())
        rep.issues.push_back({"filtration needs one inclusion per consecutive stage pair", ""});
    if (map_stages.size() != stages.size())
        rep.issues.push_back({"filtration needs one map stage per stage", ""});
    if (!rep.ok()) return rep;
    for (std::size_t i = 0; i < stages.size(); ++i) {
        if (auto r = procstar::validate(stages[i]); !r.ok())
            rep.issues.push_back({"stage " + std::to_string(i) + " invalid", r.to_string()});
        if (!(map_stages[i].source == stages[i]) || !(map_stages[i].target == target))
            rep.issues.push_back({"map stage " + std::to_string(i) + " endpoints mismatch", ""});
        else if (auto r = map_stages[i].validate(); !r.ok())
            rep.issues.push_back({"map stage " + std::to_string(i) + " invalid", r.to_string()});
    }
    for (std::size_t i = 0; i + 1 < stages.size(); ++i) {
        if (!(inclusions[i].source == stages[i]) || !(inclusions[i].target == stages[i + 1])) {
            rep.issues.push_back({"inclusion " + std::to_string(i) + " endpoints mismatch", ""});
            continue;
        }
        if (auto r = inclusions[i].validate(); !r.ok()) {
            rep.issues.push_back({"inclusion " + std::to_string(i) + " invalid", r.to_string()});
            continue;
        }
        // injectivity on nondegenerate cells
        std::vector<bool> hit(stages[i + 1].size(), false);
        bool inj = true;
        for (const Simplex& img : inclusions[i].images) {
            if (img.degenerate() || hit[img.base]) inj = false;
            if (!img.degenerate()) hit[img.base] = true;
        }
        if (!inj)
            rep.issues.push_back({"inclusion " + std::to_string(i) + " not injective", ""});
        if (!(compose(map_stages[i + 1], inclusions[i]) == map_stages[i]))
            rep.issues.push_back(
                {"map stages do not commute with inclusion " + std::to_string(i), ""});
    }
    return rep;
}

const char* properness_name(Properness p) {
    switch (p) {
        case Properness::Proper: return "PROPER";
        case Properness::ProperOnWindow: return "PROPER_ON_WINDOW";
        case Properness::NotProper: return "NOT_PROPER";
        case Properness::Unknown: return "UNKNOWN";
    }
    return "?";
}

namespace {

std::vector<std::size_t> preimage_counts(const SimplicialMap& f) {
    std::vector<std::size_t> counts(f.target.size(), 0);
    for (NdId c = 0; c < f.source.size(); ++c) ++counts[f.images[c].base];
    return counts;
}

}  // namespace

PropernessVerdict is_proper(const SimplicialMap& f) {
    if (auto r = f.validate(); !r.ok())
        throw InputError("is_proper: map does not validate:\n" + r.to_string());
    PropernessVerdict v;
    v.verdict = Properness::Proper;
    auto counts = preimage_counts(f);
    for (NdId t = 0; t < f.target.size(); ++t) v.max_preimage = std::max(v.max_preimage, counts[t]);
    v.detail = "finite map; max nd-poset preimage " + std::to_string(v.max_preimage);
    return v;
}

PropernessVerdict is_proper(const Filtration& f) {
    if (auto r = f.validate(); !r.ok())
        throw InputError("is_proper: filtration does not validate:\n" + r.to_string());
    if (f.stages.size() < 2)
        throw InputError("is_proper: filtration needs at least two stages");
    std::vector<std::vector<std::size_t>> counts;
    for (const auto& m : f.map_stages) counts.push_back(preimage_counts(m));
    PropernessVerdict v;
    bool all_stable = true;
    for (NdId t = 0; t < f.target.size(); ++t) {
        bool grows_everywhere = true;
        for (std::size_t s = 0; s + 1 < counts.size(); ++s)
            if (counts[s + 1][t] <= counts[s][t]) grows_everywhere = false;
        if (grows_everywhere) {
            v.verdict = Properness::NotProper;
            v.witness = f.target.id(t);
            v.max_preimage = counts.back()[t];
            v.detail = "preimage of " + v.witness + " strictly grows at every stage";
            return v;
        }
        if (counts[counts.size() - 2][t] != counts.back()[t]) all_stable = false;
    }
    if (all_stable) {
        v.verdict = Properness::ProperOnWindow;
        for (NdId t = 0; t < f.target.size(); ++t)
            v.max_preimage = std::max(v.max_preimage, counts.back()[t]);
        v.detail = "all preimages stable across the last two stages";
    } else {
        v.verdict = Properness::Unknown;
        v.detail = "some preimage still moving at the window boundary";
    }
    return v;
}

StarPolynomial GeneratorMap::image_of_letter(Letter l) const {
    const Alphabet& a = source_presentation.alphabet();
    if (a.is_vertex(l)) return vertex_images[static_cast<std::size_t>(l)];
    if (a.is_edge(l)) return edge_images[static_cast<std::size_t>(l - a.num_vertices)];
    return edge_images[static_cast<std::size_t>(l - a.num_vertices - a.num_edges)].star(
        target_presentation.alphabet());
}

StarPolynomial GeneratorMap::apply(const StarPolynomial& p) const {
    StarPolynomial out;
    for (const auto& [w, c] : p.terms()) {
        StarPolynomial prod = StarPolynomial::unit();
        for (Letter l : w) prod = prod * image_of_letter(l);
        out = out + prod * c;
    }
    return out;
}

bool GeneratorMap::star_compatible() const {
    const Alphabet& a = source_presentation.alphabet();
    const Alphabet& b = target_presentation.alphabet();
    for (Letter l = 0; l < a.total(); ++l) {
        if (!(image_of_letter(a.star(l)) == image_of_letter(l).star(b))) return false;
    }
    return true;
}

GeneratorMap induced_hom(const SimplicialMap& f) {
    if (auto r = f.validate(); !r.ok())
        throw InputError("induced_hom: map does not validate:\n" + r.to_string());
    // f is pushed through Sd; the generator formulas read preimages off
    // Nd(Sd(f)). Finite maps are automatically proper.
    SimplicialMap sdf = subdivide_map(f);
    GeneratorMap g;
    g.source_presentation = present(f.target);
    g.target_presentation = present(f.source);

    std::vector<NdId> nd_image;  // Nd(Sd(f)): cell of Sd(source) -> cell of Sd(target)
    for (NdId c = 0; c < sdf.source.size(); ++c) nd_image.push_back(sdf.images[c].base);

    for (std::size_t v = 0; v < g.source_presentation.vertex_gens().size(); ++v) {
        StarPolynomial img;
        for (NdId w = 0; w < nd_image.size(); ++w)
            if (nd_image[w] == v)
                img.add_term(Word{g.target_presentation.vertex_letter(static_cast<int>(w))}, 1);
        g.vertex_images.push_back(std::move(img));
    }
    const auto& src_edges = g.target_presentation.edge_gens();
    for (const auto& e : g.source_presentation.edge_gens()) {
        StarPolynomial img;
        for (std::size_t y = 0; y < src_edges.size(); ++y) {
            if (nd_image[static_cast<NdId>(src_edges[y].src)] == static_cast<NdId>(e.src) &&
                nd_image[static_cast<NdId>(src_edges[y].tgt)] == static_cast<NdId>(e.tgt))
                img.add_term(Word{g.target_presentation.edge_letter(static_cast<int>(y))}, 1);
        }
        g.edge_images.push_back(std::move(img));
    }
    return g;
}

GeneratorMap identity_genmap(const Presentation& P) {
    GeneratorMap g;
    g.source_presentation = P;
    g.target_presentation = P;
    for (std::size_t v = 0; v < P.vertex_gens().size(); ++v)
        g.vertex_images.push_back(StarPolynomial::from_letter(P.vertex_letter(static_cast<int>(v))));
    for (std::size_t e = 0; e < P.edge_gens().size(); ++e)
        g.edge_images.push_back(StarPolynomial::from_letter(P.edge_letter(static_cast<int>(e))));
    return g;
}

GeneratorMap compose_genmaps(const GeneratorMap& g1, const GeneratorMap& g2,
                             const RewriteSystem* normalize_with) {
    if (!(g1.target_presentation == g2.source_presentation))
        throw InputError("compose_genmaps: presentations do not match");
    GeneratorMap h;
    h.source_presentation = g1.source_presentation;
    h.target_presentation = g2.target_presentation;
    auto push = [&](const StarPolynomial& p) {
        StarPolynomial out = g2.apply(p);
        if (normalize_with) out = normalize_with->normal_form(out);
        return out;
    };
    for (const auto& img : g1.vertex_images) h.vertex_images.push_back(push(img));
    for (const auto& img : g1.edge_images) h.edge_images.push_back(push(img));
    return h;
}

std::string VerifyReport::to_string() const {
    std::ostringstream os;
    os << "checked " << checked << " relation instances, " << unknowns << " unknown, "
       << problems.size() << " problem(s)\n";
    for (const auto& p : problems)
        os << "  [" << schema_name(p.schema) << " #" << p.relation_index << "] "
           << decision_name(p.result) << ": " << p.detail << "\n";
    return os.str();
}

VerifyReport verify_relation_preservation(const GeneratorMap& g,
                                          const RewriteSystem& target_system) {
    VerifyReport rep;
    std::size_t index = 0;
    const Alphabet& src_alpha = g.source_presentation.alphabet();
    const Alphabet& tgt_alpha = g.target_presentation.alphabet();
    g.source_presentation.for_each_relation([&](const RelationInstance& rel) {
        Decision d = decide_equal(target_system, g.apply(rel.lhs), g.apply(rel.rhs));
        if (d != Decision::Equal) {
            std::ostringstream detail;
            detail << print_polynomial(rel.lhs, src_alpha) << " = "
                   << print_polynomial(rel.rhs, src_alpha) << "  maps to  "
                   << print_polynomial(g.apply(rel.lhs), tgt_alpha) << " vs "
                   << print_polynomial(g.apply(rel.rhs), tgt_alpha);
            rep.problems.push_back(VerifyEntry{index, rel.schema, d, detail.str()});
            if (d == Decision::Unknown) ++rep.unknowns;
        }
        ++rep.checked;
        ++index;
    });
    if (g.source_presentation.unital()) {
        // unit preservation: g(1) = 1 (definitional) and, with substance,
        // the image of the source vertex sum is the target unit
        Decision d = decide_equal(target_system, g.apply(StarPolynomial::unit()),
                                  StarPolynomial::unit());
        ++rep.checked;
        if (d != Decision::Equal) {
            rep.problems.push_back(VerifyEntry{index, RelationSchema::ApproxUnit, d,
                                               "unit preservation g(1) = 1 failed"});
            if (d == Decision::Unknown) ++rep.unknowns;
        }
    }
    return rep;
}

}  // namespace procstar
