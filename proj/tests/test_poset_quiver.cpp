#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"

using namespace procstar;
using tc::corpus;

TEST_CASE("nd-poset of Sd(Delta^1): five elements, the paper's four pairs") {
    NdPoset P = nd_poset(subdivide(corpus().d1).sd);
    CHECK(P.size() == 5);
    auto pairs = P.strict_pairs();
    REQUIRE(pairs.size() == 4);
    // elements: 0="0", 1=barycenter "01", 2="1", 3="0<01", 4="1<01";
    // the pattern a<d, b<d, b<e, c<e
    std::vector<std::pair<NdId, NdId>> expected{{0, 3}, {1, 3}, {1, 4}, {2, 4}};
    CHECK(pairs == expected);
}

TEST_CASE("nd-poset of Delta^2: 12 strict pairs") {
    NdPoset P = nd_poset(corpus().d2);
    CHECK(P.size() == 7);
    auto pairs = P.strict_pairs();
    CHECK(pairs.size() == 12);
    int vertex_edge = 0, vertex_tri = 0, edge_tri = 0;
    for (const auto& [a, b] : pairs) {
        int da = P.elements[a].dim, db = P.elements[b].dim;
        if (da == 0 && db == 1) ++vertex_edge;
        if (da == 0 && db == 2) ++vertex_tri;
        if (da == 1 && db == 2) ++edge_tri;
    }
    CHECK(vertex_edge == 6);
    CHECK(vertex_tri == 3);
    CHECK(edge_tri == 3);
}

TEST_CASE("nd-poset of the point is trivial, dims increase along the order") {
    NdPoset P = nd_poset(corpus().d0);
    CHECK(P.size() == 1);
    CHECK(P.strict_pairs().empty());
    for (const FiniteSimplicialSet* X : {&corpus().d2, &corpus().circle, &corpus().sd_circle}) {
        NdPoset Q = nd_poset(*X);
        for (const auto& [a, b] : Q.strict_pairs())
            CHECK(Q.elements[a].dim < Q.elements[b].dim);
    }
}

TEST_CASE("nd_functor: identity, collapse, fold") {
    const auto& c = corpus();
    PosetMap id = nd_functor(identity_map(c.d1));
    CHECK(id == identity_poset_map(nd_poset(c.d1)));

    PosetMap col = nd_functor(collapse_to_point(c.d1));
    CHECK(col.monotone());
    for (NdId s = 0; s < col.source.size(); ++s) CHECK(col.images[s] == 0);

    PosetMap fold = nd_functor(fold_map());
    CHECK(fold.monotone());
    std::size_t preimage = 0;
    for (NdId s = 0; s < fold.source.size(); ++s)
        if (fold.images[s] == 0) ++preimage;
    CHECK(preimage == 2);
}

TEST_CASE("nd_functor laws and monotonicity over the corpus") {
    const auto& c = corpus();
    for (const auto& nm : c.maps) {
        PosetMap m = nd_functor(nm.map);
        CHECK_MESSAGE(m.monotone(), nm.name);
        for (NdId s = 0; s < m.source.size(); ++s)
            CHECK(m.source.elements[s].dim >= m.target.elements[m.images[s]].dim);
    }
    for (const auto& [i, j] : c.composable) {
        PosetMap lhs = nd_functor(compose(c.maps[j].map, c.maps[i].map));
        PosetMap rhs = compose(nd_functor(c.maps[j].map), nd_functor(c.maps[i].map));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("doubled quiver: Sd(Delta^1) has 4 edges, the point none") {
    DoubledQuiver Q = doubled_quiver(nd_poset(subdivide(corpus().d1).sd));
    CHECK(Q.edges.size() == 4);
    CHECK(Q.edges[0].id == "x1");
    CHECK(Q.edges[3].id == "x4");
    CHECK(doubled_quiver(nd_poset(corpus().d0)).edges.empty());
}

TEST_CASE("doubled quiver on Nd(Delta^2): 12 edges; length-2 paths = 6 chains") {
    NdPoset P = nd_poset(corpus().d2);
    DoubledQuiver Q = doubled_quiver(P);
    CHECK(Q.edges.size() == 12);
    CHECK(count_unstarred_paths(Q, 2) == 6);
    CHECK(nerve_chains(P, 2).size() == 6);
}

TEST_CASE("nerve chains of the Sd(Delta^1) poset") {
    NdPoset P = nd_poset(subdivide(corpus().d1).sd);
    CHECK(nerve_chains(P, 0).size() == P.size());
    CHECK(nerve_chains(P, 1).size() == 4);
    CHECK(nerve_chains(P, 2).empty());
}

TEST_CASE("path/chain bijection for k <= 3 over corpus posets") {
    const auto& c = corpus();
    for (const FiniteSimplicialSet* X : {&c.d1, &c.d2, &c.circle, &c.sd_circle}) {
        NdPoset P = nd_poset(subdivide(*X).sd);
        DoubledQuiver Q = doubled_quiver(P);
        for (int k = 1; k <= 3; ++k)
            CHECK(count_unstarred_paths(Q, k) == nerve_chains(P, k).size());
    }
}

TEST_CASE("unstarred edges are acyclic") {
    for (const FiniteSimplicialSet* X : {&corpus().d2, &corpus().sd_circle}) {
        DoubledQuiver Q = doubled_quiver(nd_poset(*X));
        // depth-limited walk: any cycle would allow paths longer than the
        // number of poset elements
        CHECK(count_unstarred_paths(Q, static_cast<int>(Q.poset.size())) == 0);
    }
}

TEST_CASE("hasse variant keeps only covers") {
    NdPoset P = nd_poset(subdivide(corpus().d2).sd);
    DoubledQuiver all = doubled_quiver(P, QuiverMode::AllStrictPairs);
    DoubledQuiver hasse = doubled_quiver(P, QuiverMode::HasseOnly);
    CHECK(hasse.edges.size() < all.edges.size());
    for (const auto& e : hasse.edges) {
        bool cover = true;
        for (NdId m = 0; m < P.size(); ++m)
            if (P.less[e.src][m] && P.less[m][e.tgt]) cover = false;
        CHECK(cover);
    }
    // on the height-one Sd(Delta^1) poset the two variants coincide
    NdPoset P1 = nd_poset(subdivide(corpus().d1).sd);
    CHECK(doubled_quiver(P1, QuiverMode::HasseOnly).edges.size() ==
          doubled_quiver(P1, QuiverMode::AllStrictPairs).edges.size());
}
