#include "procstar/fixtures.hpp"

namespace procstar {

FiniteSimplicialSet minimal_circle() {
    FiniteSimplicialSet X;
    NdId v = X.add_cell("v", 0);
    NdId e = X.add_cell("e", 1);
    X.set_faces(e, {Simplex{v, {}}, Simplex{v, {}}});
    return X;
}

FiniteSimplicialSet two_points() {
    return disjoint_union(standard_simplex(0), standard_simplex(0));
}

SimplicialMap classifying_map(const FiniteSimplicialSet& X, NdId cell) {
    int n = X.dim(cell);
    FiniteSimplicialSet simp = standard_simplex(n);
    SimplicialMap f{simp, X, {}};
    for (NdId s = 0; s < simp.size(); ++s)
        f.images.push_back(restrict_to_vertices(X, cell, parse_subset_label(simp.id(s))));
    return f;
}

SimplicialMap fold_map() {
    FiniteSimplicialSet two = two_points();
    SimplicialMap f{two, standard_simplex(0), {}};
    f.images = {Simplex{0, {}}, Simplex{0, {}}};
    return f;
}

Filtration points_to_point_filtration(int stages) {
    if (stages < 2) throw InputError("filtration needs at least two stages");
    Filtration filt;
    filt.target = standard_simplex(0);
    FiniteSimplicialSet acc = standard_simplex(0);
    for (int n = 0; n < stages; ++n) {
        filt.stages.push_back(acc);
        acc = disjoint_union(acc, standard_simplex(0));
    }
    for (int n = 0; n + 1 < stages; ++n) {
        SimplicialMap inc{filt.stages[static_cast<std::size_t>(n)],
                          filt.stages[static_cast<std::size_t>(n) + 1],
                          {}};
        for (NdId c = 0; c < inc.source.size(); ++c)
            inc.images.push_back(Simplex{*inc.target.find("l_" + inc.source.id(c)), {}});
        filt.inclusions.push_back(std::move(inc));
    }
    for (int n = 0; n < stages; ++n)
        filt.map_stages.push_back(collapse_to_point(filt.stages[static_cast<std::size_t>(n)]));
    return filt;
}

}  // namespace procstar
