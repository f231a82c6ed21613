#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "procstar/io.hpp"
#include "test_helpers.hpp"

using namespace procstar;
using tc::corpus;

TEST_CASE("present(point): one positive generator with the relation a = 1") {
    Presentation P = present(corpus().d0);
    REQUIRE(P.vertex_gens().size() == 1);
    CHECK(P.vertex_gens()[0].positive);
    CHECK(P.edge_gens().empty());
    CHECK(P.unital());
    auto rels = P.relations();
    REQUIRE(rels.size() == 1);
    CHECK(rels[0].schema == RelationSchema::ApproxUnit);
    CHECK(rels[0].lhs == StarPolynomial::from_word({0}));
    CHECK(rels[0].rhs == StarPolynomial::unit());
}

TEST_CASE("present(Delta^1) matches the worked example") {
    Presentation P = present(corpus().d1);
    REQUIRE(P.vertex_gens().size() == 5);
    REQUIRE(P.edge_gens().size() == 4);
    const char* vnames[] = {"a", "b", "c", "d", "e"};
    for (int i = 0; i < 5; ++i) CHECK(P.vertex_gens()[static_cast<std::size_t>(i)].name == vnames[i]);
    // x1: a->d, x2: b->d, x3: b->e, x4: c->e
    CHECK(P.edge_gens()[0].src == 0);
    CHECK(P.edge_gens()[0].tgt == 3);
    CHECK(P.edge_gens()[1].src == 1);
    CHECK(P.edge_gens()[1].tgt == 3);
    CHECK(P.edge_gens()[2].src == 1);
    CHECK(P.edge_gens()[2].tgt == 4);
    CHECK(P.edge_gens()[3].src == 2);
    CHECK(P.edge_gens()[3].tgt == 4);

    std::string text = emit_text(P);
    for (const char* needle :
         {"x1x2 = 0", "bx2 = x2", "x2*b = x2*", "a+b+c+d+e = 1", "x1*x1 = d", "x1x1* = a"})
        CHECK_MESSAGE(text.find(needle) != std::string::npos, needle);
}

TEST_CASE("generator counts track the subdivision and quiver sizes") {
    const auto& c = corpus();
    for (const FiniteSimplicialSet* X : {&c.d0, &c.d1, &c.d2, &c.two, &c.circle, &c.sd_circle}) {
        Presentation P = present(*X);
        SubdivisionResult sd = subdivide(*X);
        CHECK(P.vertex_gens().size() == sd.sd.size());
        CHECK(P.edge_gens().size() == nd_poset(sd.sd).strict_pairs().size());
        CHECK(P.check_relations_wellformed());
        // exactly one unital relation
        std::size_t approx = 0;
        P.for_each_relation([&](const RelationInstance& r) {
            if (r.schema == RelationSchema::ApproxUnit) ++approx;
        });
        CHECK(approx == 1);
        CHECK(P.relation_count() ==
              [&] {
                  std::size_t n = 0;
                  P.for_each_relation([&](const RelationInstance&) { ++n; });
                  return n;
              }());
    }
}

TEST_CASE("every relation schema appears and references declared letters") {
    Presentation P = present(corpus().d1);
    std::map<RelationSchema, std::size_t> counts;
    P.for_each_relation([&](const RelationInstance& r) { ++counts[r.schema]; });
    CHECK(counts[RelationSchema::Concat] == 64);
    CHECK(counts[RelationSchema::PartialIsometry] == 8);
    CHECK(counts[RelationSchema::LeftUnit] == 40);
    CHECK(counts[RelationSchema::RightUnit] == 40);
    CHECK(counts[RelationSchema::ApproxUnit] == 1);
    CHECK(P.relation_count() == 153);
}

TEST_CASE("vertex generator names skip the x block") {
    CHECK(vertex_gen_name(0) == "a");
    CHECK(vertex_gen_name(22) == "w");
    CHECK(vertex_gen_name(23) == "y");  // x skipped
    CHECK(vertex_gen_name(24) == "z");
    CHECK(vertex_gen_name(25) == "aa");
    // none of the first few hundred names starts with 'x'
    for (std::size_t i = 0; i < 700; ++i) CHECK(vertex_gen_name(i).front() != 'x');
}

TEST_CASE("expression parsing and printing round-trip through the alphabet") {
    Presentation P = present(corpus().d1);
    const Alphabet& a = P.alphabet();
    for (const char* expr : {"x1x2", "bx2", "x2*b", "a+b+c+d+e", "1", "3.a-2x1x1*", "x1**"}) {
        StarPolynomial p = parse_polynomial(expr, a);
        StarPolynomial q = parse_polynomial(print_polynomial(p, a), a);
        CHECK(p == q);
    }
    CHECK(parse_polynomial("x1**", a) == parse_polynomial("x1", a));
    CHECK(parse_polynomial("x1 . x2", a) == parse_polynomial("x1x2", a));
    CHECK_THROWS_AS(parse_polynomial("nope", a), ParseError);
    CHECK_THROWS_AS(parse_polynomial("", a), ParseError);
}

TEST_CASE("presentation JSON round trip is lossless; tampering is rejected") {
    for (const FiniteSimplicialSet* X : {&corpus().d0, &corpus().d1, &corpus().circle}) {
        Presentation P = present(*X);
        auto j = io::presentation_to_json(P);
        Presentation back = io::presentation_from_json(j);
        CHECK(back == P);
        CHECK(io::dump_canonical(io::presentation_to_json(back)) == io::dump_canonical(j));
    }
    Presentation P = present(corpus().d1);
    auto j = io::presentation_to_json(P);
    j["relations"][0]["rhs"] = j["relations"][0]["lhs"];
    CHECK_THROWS_AS(io::presentation_from_json(j), ParseError);
}

TEST_CASE("hasse-mode presentations stay well-formed") {
    Presentation P = present(corpus().d2, QuiverMode::HasseOnly);
    CHECK(P.quiver_mode() == QuiverMode::HasseOnly);
    CHECK(P.check_relations_wellformed());
    Presentation Q = present(corpus().d2);
    CHECK(P.edge_gens().size() < Q.edge_gens().size());
}
