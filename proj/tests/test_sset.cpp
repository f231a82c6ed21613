#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "procstar/io.hpp"
#include "test_helpers.hpp"

using namespace procstar;
using tc::corpus;

TEST_CASE("standard simplex cell counts match the monotone-injection oracle") {
    for (int n = 0; n <= 4; ++n) {
        FiniteSimplicialSet X = standard_simplex(n);
        std::map<int, long long> per_dim;
        for (NdId c = 0; c < X.size(); ++c) ++per_dim[X.dim(c)];
        for (int k = 0; k <= n; ++k) CHECK(per_dim[k] == tc::binomial(n + 1, k + 1));
        long long total = 0;
        for (int k = 0; k <= n; ++k) total += tc::binomial(n + 1, k + 1);
        CHECK(static_cast<long long>(X.size()) == total);
    }
    CHECK(standard_simplex(0).size() == 1);
    CHECK(standard_simplex(1).size() == 3);
    CHECK(standard_simplex(2).size() == 7);
}

TEST_CASE("normalize: nondegenerate base with empty word is the identity") {
    const auto& d2 = corpus().d2;
    for (NdId c = 0; c < d2.size(); ++c) {
        Simplex s = normalize(d2, c, {});
        CHECK(s == Simplex{c, {}});
    }
}

TEST_CASE("normalize: s0 s0 on a vertex gives the word [1,0]") {
    FiniteSimplicialSet pt = standard_simplex(0);
    Simplex s = normalize(pt, 0, {{SimplicialOp::Degeneracy, 0}, {SimplicialOp::Degeneracy, 0}});
    CHECK(s.base == 0);
    CHECK(s.deg == DegeneracyWord{1, 0});
}

TEST_CASE("normalize: d0 s0 is the identity") {
    FiniteSimplicialSet pt = standard_simplex(0);
    Simplex s{0, {0}};
    CHECK(apply_face(pt, s, 0) == Simplex{0, {}});
}

TEST_CASE("normalize: out-of-range operator index raises a dimension error") {
    FiniteSimplicialSet pt = standard_simplex(0);
    CHECK_THROWS_AS(normalize(pt, 0, {{SimplicialOp::Degeneracy, 1}}), DimensionError);
    CHECK_THROWS_AS(normalize(pt, 0, {{SimplicialOp::Face, 0}}), DimensionError);
    FiniteSimplicialSet d1 = standard_simplex(1);
    CHECK_THROWS_AS(apply_face(d1, Simplex{*d1.find("01"), {}}, 2), DimensionError);
}

TEST_CASE("normal-form uniqueness against the monotone model (words up to length 4)") {
    // Evaluate every valid operator word of length <= 4 on the top cell of
    // Delta^2 both in the implementation and in the independent monotone
    // model; equal model values must give identical (base, deg) pairs.
    FiniteSimplicialSet d2 = standard_simplex(2);
    NdId top = *d2.find("012");
    tc::MonotoneSimplex mtop{{0, 1, 2}};

    std::map<tc::MonotoneSimplex, Simplex> seen;
    std::size_t checked = 0;
    auto explore = [&](auto&& self, const Simplex& s, const tc::MonotoneSimplex& m,
                       int depth) -> void {
        auto it = seen.find(m);
        if (it == seen.end())
            seen.emplace(m, s);
        else
            CHECK(it->second == s);
        ++checked;
        if (depth == 4) return;
        int d = dim_of(d2, s);
        for (int j = 0; j <= d; ++j)
            self(self, apply_degeneracy(d2, s, j), m.degeneracy(j), depth + 1);
        if (d >= 1)
            for (int i = 0; i <= d; ++i) self(self, apply_face(d2, s, i), m.face(i), depth + 1);
    };
    explore(explore, Simplex{top, {}}, mtop, 0);
    CHECK(checked > 1000);
    // the model also confirms dim bookkeeping
    for (const auto& [m, s] : seen)
        CHECK(static_cast<int>(m.values.size()) - 1 == dim_of(d2, s));
}

TEST_CASE("face: the faces of the edge of Delta^1 are its two vertices") {
    const auto& d1 = corpus().d1;
    NdId c = *d1.find("01");
    CHECK(face(d1, Simplex{c, {}}, 0) == Simplex{*d1.find("1"), {}});
    CHECK(face(d1, Simplex{c, {}}, 1) == Simplex{*d1.find("0"), {}});
}

TEST_CASE("face: degenerate simplex over the point") {
    FiniteSimplicialSet pt = standard_simplex(0);
    CHECK(face(pt, Simplex{0, {0}}, 0) == Simplex{0, {}});
}

TEST_CASE("face: d_i d_j = d_{j-1} d_i on all faces of Delta^2") {
    const auto& d2 = corpus().d2;
    NdId top = *d2.find("012");
    for (int j = 1; j <= 2; ++j)
        for (int i = 0; i < j; ++i)
            CHECK(apply_face(d2, apply_face(d2, Simplex{top, {}}, j), i) ==
                  apply_face(d2, apply_face(d2, Simplex{top, {}}, i), j - 1));
}

TEST_CASE("validate: standard simplices and the minimal circle are valid") {
    for (int n = 0; n <= 4; ++n) CHECK(validate(standard_simplex(n)).ok());
    CHECK(validate(corpus().circle).ok());
}

TEST_CASE("validate: a corrupted face table is reported with one violation") {
    FiniteSimplicialSet X = standard_simplex(2);
    NdId top = *X.find("012");
    // set d0(012) := 02 (same as d1); exactly the pair (i,j) = (0,2) fails
    X.set_faces(top, {Simplex{*X.find("02"), {}}, Simplex{*X.find("02"), {}},
                      Simplex{*X.find("01"), {}}});
    ValidationReport rep = validate(X);
    CHECK(rep.issues.size() == 1);
}

TEST_CASE("product: Delta^1 x Delta^1 has 4 vertices, 5 edges, 2 triangles") {
    FiniteSimplicialSet P = product(corpus().d1, corpus().d1);
    std::map<int, int> per_dim;
    for (NdId c = 0; c < P.size(); ++c) ++per_dim[P.dim(c)];
    CHECK(per_dim[0] == 4);
    CHECK(per_dim[1] == 5);
    CHECK(per_dim[2] == 2);
    CHECK(P.size() == 11);
    CHECK(validate(P).ok());
    CHECK(static_cast<long long>(P.size()) == tc::count_product_cells(1, 1));
}

TEST_CASE("product: point times X is an isomorphic copy of X") {
    for (const FiniteSimplicialSet* X : {&corpus().d1, &corpus().d2, &corpus().circle}) {
        ProductResult P = product_with_cells(corpus().d0, *X);
        REQUIRE(P.sset.size() == X->size());
        CHECK(validate(P.sset).ok());
        // the right components enumerate the cells of X bijectively
        std::vector<bool> hit(X->size(), false);
        for (NdId c = 0; c < P.sset.size(); ++c) {
            CHECK(P.cells[c].right.deg.empty());
            hit[P.cells[c].right.base] = true;
            CHECK(P.sset.dim(c) == X->dim(P.cells[c].right.base));
        }
        CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    }
}

TEST_CASE("product: X x point is X again") {
    ProductResult P = product_with_cells(corpus().d1, corpus().d0);
    CHECK(P.sset.size() == corpus().d1.size());
    CHECK(validate(P.sset).ok());
}

TEST_CASE("product: counts are symmetric and match the word-pair oracle") {
    const auto& c = corpus();
    const FiniteSimplicialSet* sets[] = {&c.d0, &c.d1, &c.d2, &c.circle};
    for (const auto* X : sets) {
        for (const auto* Y : sets) {
            FiniteSimplicialSet XY = product(*X, *Y);
            FiniteSimplicialSet YX = product(*Y, *X);
            std::map<int, int> a, b;
            for (NdId i = 0; i < XY.size(); ++i) ++a[XY.dim(i)];
            for (NdId i = 0; i < YX.size(); ++i) ++b[YX.dim(i)];
            CHECK(a == b);
            CHECK(validate(XY).ok());
        }
    }
    CHECK(static_cast<long long>(product(c.d1, c.d2).size()) == tc::count_product_cells(1, 2));
    CHECK(static_cast<long long>(product(c.d2, c.d2).size()) == tc::count_product_cells(2, 2));
}

TEST_CASE("disjoint union: counts add and the empty set is a unit") {
    const auto& c = corpus();
    FiniteSimplicialSet u = disjoint_union(c.d0, c.d0);
    CHECK(u.size() == 2);
    CHECK(u.max_dim() == 0);
    FiniteSimplicialSet empty;
    FiniteSimplicialSet ue = disjoint_union(c.d2, empty);
    CHECK(ue.size() == c.d2.size());
    CHECK(validate(ue).ok());
    CHECK(disjoint_union(c.d1, c.circle).size() == c.d1.size() + c.circle.size());
}

TEST_CASE("evaluate_map: identity, collapse and fold behave as expected") {
    const auto& c = corpus();
    SimplicialMap id = identity_map(c.d1);
    for (NdId s = 0; s < c.d1.size(); ++s) CHECK(evaluate_map(id, Simplex{s, {}}) == Simplex{s, {}});

    SimplicialMap col = collapse_to_point(c.d1);
    CHECK(evaluate_map(col, Simplex{*c.d1.find("01"), {}}) == Simplex{0, DegeneracyWord{0}});

    SimplicialMap fold = fold_map();
    CHECK(evaluate_map(fold, Simplex{0, {}}) == Simplex{0, {}});
    CHECK(evaluate_map(fold, Simplex{1, {}}) == Simplex{0, {}});
    CHECK_THROWS_AS(evaluate_map(fold, Simplex{5, {}}), InputError);
}

TEST_CASE("evaluate_map commutes with composition on all corpus composites") {
    const auto& c = corpus();
    for (const auto& [i, j] : c.composable) {
        const SimplicialMap& f = c.maps[i].map;
        const SimplicialMap& g = c.maps[j].map;
        SimplicialMap gf = compose(g, f);
        CHECK(gf.validate().ok());
        for (NdId s = 0; s < f.source.size(); ++s) {
            Simplex probe{s, {}};
            CHECK(evaluate_map(gf, probe) == evaluate_map(g, evaluate_map(f, probe)));
            if (f.source.dim(s) >= 1) {
                Simplex degen = apply_degeneracy(f.source, probe, 0);
                CHECK(evaluate_map(gf, degen) == evaluate_map(g, evaluate_map(f, degen)));
            }
        }
    }
    CHECK(c.composable.size() >= 10);
}

TEST_CASE("all corpus maps validate and subcomplex extraction is face-closed") {
    for (const auto& nm : corpus().maps) CHECK_MESSAGE(nm.map.validate().ok(), nm.name);
    Subcomplex sub = subcomplex_generated_by(corpus().d2, *corpus().d2.find("012"));
    CHECK(sub.sset.size() == corpus().d2.size());
    Subcomplex edge = subcomplex_generated_by(corpus().d2, *corpus().d2.find("01"));
    CHECK(edge.sset.size() == 3);
    CHECK(validate(edge.sset).ok());
}

TEST_CASE("sset and smap JSON round trips are lossless and byte-stable") {
    const auto& c = corpus();
    for (const FiniteSimplicialSet* X : {&c.d0, &c.d1, &c.d2, &c.circle, &c.sd_circle}) {
        auto j = io::sset_to_json(*X);
        FiniteSimplicialSet back = io::sset_from_json(j);
        CHECK(back == *X);
        CHECK(io::dump_canonical(io::sset_to_json(back)) == io::dump_canonical(j));
    }
    for (const auto& nm : c.maps) {
        auto j = io::smap_to_json(nm.map);
        CHECK(io::smap_from_json(j) == nm.map);
        CHECK(io::dump_canonical(io::smap_to_json(io::smap_from_json(j))) ==
              io::dump_canonical(j));
    }
}
