#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"

using namespace procstar;
using tc::corpus;

TEST_CASE("is_proper on finite maps records the max preimage") {
    PropernessVerdict id = is_proper(identity_map(corpus().d1));
    CHECK(id.verdict == Properness::Proper);
    CHECK(id.max_preimage == 1);
    PropernessVerdict fold = is_proper(fold_map());
    CHECK(fold.verdict == Properness::Proper);
    CHECK(fold.max_preimage == 2);
    for (const auto& nm : corpus().maps)
        CHECK(is_proper(nm.map).verdict == Properness::Proper);
}

TEST_CASE("the points-to-point filtration is NOT_PROPER with the point witness") {
    Filtration f = points_to_point_filtration(5);
    CHECK(f.validate().ok());
    PropernessVerdict v = is_proper(f);
    CHECK(v.verdict == Properness::NotProper);
    CHECK(v.witness == "0");
}

TEST_CASE("constant filtrations are PROPER_ON_WINDOW") {
    Filtration f;
    f.target = corpus().d0;
    for (int i = 0; i < 3; ++i) f.stages.push_back(corpus().d1);
    for (int i = 0; i < 2; ++i) f.inclusions.push_back(identity_map(corpus().d1));
    for (int i = 0; i < 3; ++i) f.map_stages.push_back(collapse_to_point(corpus().d1));
    CHECK(is_proper(f).verdict == Properness::ProperOnWindow);
}

TEST_CASE("pausing growth yields UNKNOWN") {
    // preimage counts 1, 2, 2, 3: neither stable at the end nor growing at
    // every stage
    const auto& d0 = corpus().d0;
    FiniteSimplicialSet two = two_points();
    FiniteSimplicialSet three = disjoint_union(two, d0);
    Filtration f;
    f.target = d0;
    f.stages = {d0, two, two, three};
    SimplicialMap inc01{d0, two, {Simplex{*two.find("l_0"), {}}}};
    SimplicialMap inc23{two, three, {Simplex{*three.find("l_l_0"), {}}, Simplex{*three.find("l_r_0"), {}}}};
    f.inclusions = {inc01, identity_map(two), inc23};
    for (const auto& s : f.stages) f.map_stages.push_back(collapse_to_point(s));
    REQUIRE(f.validate().ok());
    CHECK(is_proper(f).verdict == Properness::Unknown);
}

TEST_CASE("filtrations validate inclusion shape") {
    Filtration f = points_to_point_filtration(3);
    f.inclusions[0].images[0] = Simplex{0, {}};
    f.inclusions[0].images.push_back(Simplex{0, {}});
    CHECK_FALSE(f.validate().ok());
}

TEST_CASE("induced_hom of the identity is the identity generator map") {
    for (const FiniteSimplicialSet* X : {&corpus().d0, &corpus().d1, &corpus().circle}) {
        GeneratorMap g = induced_hom(identity_map(*X));
        CHECK(g == identity_genmap(tc::cached_presentation(*X)));
    }
}

TEST_CASE("induced_hom of the fold map sums the two preimage vertices") {
    GeneratorMap g = induced_hom(fold_map());
    REQUIRE(g.source_presentation.vertex_gens().size() == 1);
    const Alphabet& t = g.target_presentation.alphabet();
    CHECK(g.vertex_images[0] == parse_polynomial("a+b", t));
    CHECK(g.star_compatible());
}

TEST_CASE("induced_hom of a vertex inclusion hits one generator, kills the rest") {
    const auto& d1 = corpus().d1;
    GeneratorMap g = induced_hom(classifying_map(d1, *d1.find("0")));
    // source presentation is Delta^1's (5 vertex generators a..e)
    REQUIRE(g.vertex_images.size() == 5);
    const Alphabet& t = g.target_presentation.alphabet();
    CHECK(g.vertex_images[0] == parse_polynomial("a", t));  // preimage of a
    for (std::size_t v = 1; v < 5; ++v) CHECK(g.vertex_images[v].is_zero());
    for (const auto& e : g.edge_images) CHECK(e.is_zero());
}

TEST_CASE("star compatibility holds for every corpus generator map") {
    for (const auto& nm : corpus().maps) CHECK_MESSAGE(induced_hom(nm.map).star_compatible(), nm.name);
}

TEST_CASE("verify_relation_preservation on identity and fold") {
    {
        GeneratorMap g = induced_hom(identity_map(corpus().d1));
        VerifyReport rep = verify_relation_preservation(g, tc::cached_system(corpus().d1));
        CHECK(rep.all_passed());
        CHECK(rep.unknowns == 0);
        CHECK(rep.checked == 154);  // 153 instances plus unit preservation
    }
    {
        GeneratorMap g = induced_hom(fold_map());
        const RewriteSystem& rs = tc::cached_system(corpus().two);
        VerifyReport rep = verify_relation_preservation(g, rs);
        CHECK(rep.all_passed());
        // the image of the source unit relation squares correctly:
        // (a+b)^2 normalizes to a+b
        StarPolynomial img = g.vertex_images[0];
        CHECK(decide_equal(rs, img * img, img) == Decision::Equal);
        CHECK(brute_force_equal(g.target_presentation, img * img, img, 4) == Decision::Equal);
    }
}

TEST_CASE("unit preservation: vertex preimages partition the source vertices") {
    for (const auto& nm : corpus().maps) {
        GeneratorMap g = induced_hom(nm.map);
        StarPolynomial total;
        for (const auto& img : g.vertex_images) total = total + img;
        CHECK_MESSAGE(total == g.target_presentation.vertex_sum(), nm.name);
    }
}

TEST_CASE("a perturbed generator map fails verification with a witness") {
    GeneratorMap g = induced_hom(identity_map(corpus().d1));
    g.edge_images[0] = StarPolynomial::zero();  // breaks x1 x1* = a
    VerifyReport rep = verify_relation_preservation(g, tc::cached_system(corpus().d1));
    CHECK_FALSE(rep.all_passed());
    CHECK(rep.unknowns == 0);
}

TEST_CASE("compose_genmaps: composing with the identity changes nothing") {
    GeneratorMap f = induced_hom(collapse_to_point(corpus().d1));
    GeneratorMap composed =
        compose_genmaps(f, identity_genmap(tc::cached_presentation(corpus().d1)));
    CHECK(composed == f);
}

TEST_CASE("vertex-into-interval then collapse composes to the identity map") {
    const auto& d1 = corpus().d1;
    SimplicialMap incl = classifying_map(d1, *d1.find("0"));
    SimplicialMap col = collapse_to_point(d1);
    SimplicialMap composite = compose(col, incl);
    REQUIRE(composite == identity_map(corpus().d0));
    const RewriteSystem& rs0 = tc::cached_system(corpus().d0);
    GeneratorMap direct = induced_hom(composite);
    GeneratorMap staged = compose_genmaps(induced_hom(col), induced_hom(incl), &rs0);
    REQUIRE(direct.vertex_images.size() == staged.vertex_images.size());
    for (std::size_t v = 0; v < direct.vertex_images.size(); ++v)
        CHECK(decide_equal(rs0, direct.vertex_images[v], staged.vertex_images[v]) ==
              Decision::Equal);
}

TEST_CASE("contravariant functor law over all corpus composites") {
    const auto& c = corpus();
    for (const auto& [i, j] : c.composable) {
        const SimplicialMap& f = c.maps[i].map;
        const SimplicialMap& g = c.maps[j].map;
        GeneratorMap lhs = induced_hom(compose(g, f));
        GeneratorMap rhs = compose_genmaps(induced_hom(g), induced_hom(f));
        const RewriteSystem& rs = tc::cached_system(f.source);
        REQUIRE(lhs.vertex_images.size() == rhs.vertex_images.size());
        REQUIRE(lhs.edge_images.size() == rhs.edge_images.size());
        for (std::size_t v = 0; v < lhs.vertex_images.size(); ++v)
            CHECK(decide_equal(rs, lhs.vertex_images[v], rhs.vertex_images[v]) == Decision::Equal);
        for (std::size_t e = 0; e < lhs.edge_images.size(); ++e)
            CHECK(decide_equal(rs, lhs.edge_images[e], rhs.edge_images[e]) == Decision::Equal);
    }
}

TEST_CASE("composition of proper maps stays proper on the corpus") {
    const auto& c = corpus();
    for (const auto& [i, j] : c.composable)
        CHECK(is_proper(compose(c.maps[j].map, c.maps[i].map)).verdict == Properness::Proper);
}
