#pragma once

#include <string>
#include <vector>

#include "procstar/poset.hpp"
#include "procstar/presentation.hpp"
#include "procstar/rewrite.hpp"
#include "procstar/subdivision.hpp"

namespace procstar {

/// Finite window onto an infinite simplicial set: an increasing chain of
/// stages with inclusion maps, and compatible restrictions of one map into
/// a fixed target.
struct Filtration {
    std::vector<FiniteSimplicialSet> stages;
    std::vector<SimplicialMap> inclusions;  // stage i -> stage i+1
    FiniteSimplicialSet target;
    std::vector<SimplicialMap> map_stages;  // stage i -> target

    ValidationReport validate() const;
};

enum class Properness { Proper, ProperOnWindow, NotProper, Unknown };
const char* properness_name(Properness p);

struct PropernessVerdict {
    Properness verdict = Properness::Unknown;
    std::size_t max_preimage = 0;
    std::string witness;  // target element whose preimage certifies NotProper
    std::string detail;
};

/// [OP] is_proper on a finite map: always proper, with the max preimage
/// cardinality of the induced nd-poset map.
PropernessVerdict is_proper(const SimplicialMap& f);

/// [OP] is_proper on a filtration: PROPER_ON_WINDOW when every preimage is
/// stable across the last two stages, NOT_PROPER with a witness whose
/// preimage strictly grows at every stage, otherwise UNKNOWN.
PropernessVerdict is_proper(const Filtration& f);

/// The generator-level *-homomorphism induced by a proper simplicial map,
/// in the contravariant direction: generators of the presentation of the
/// map's TARGET go to sums of generators over preimages in the SOURCE.
struct GeneratorMap {
    Presentation source_presentation;
    Presentation target_presentation;
    std::vector<StarPolynomial> vertex_images;  // per source-presentation vertex
    std::vector<StarPolynomial> edge_images;    // per source-presentation edge pair

    /// Image of any letter; starred letters go to the starred image.
    StarPolynomial image_of_letter(Letter l) const;
    /// Multiplicative extension to polynomials (unit maps to unit).
    StarPolynomial apply(const StarPolynomial& p) const;
    /// g(x*) == g(x)* for every generator (holds by construction; checkable).
    bool star_compatible() const;

    bool operator==(const GeneratorMap&) const = default;
};

/// [OP] induced_hom: pushes f through Sd and Nd, then applies the preimage
/// sum formulas. Finite maps are automatically proper.
GeneratorMap induced_hom(const SimplicialMap& f);

GeneratorMap identity_genmap(const Presentation& P);

/// [OP] compose_genmaps: substitution g2(g1(-)); contravariantly,
/// (g o f)~ = compose_genmaps(induced_hom(g), induced_hom(f)).
/// When a rewrite system for the final target is supplied the images are
/// normalized with it.
GeneratorMap compose_genmaps(const GeneratorMap& g1, const GeneratorMap& g2,
                             const RewriteSystem* normalize_with = nullptr);

struct VerifyEntry {
    std::size_t relation_index = 0;
    RelationSchema schema = RelationSchema::Concat;
    Decision result = Decision::Unknown;
    std::string detail;
};

struct VerifyReport {
    std::size_t checked = 0;
    std::size_t unknowns = 0;
    std::vector<VerifyEntry> problems;  // every non-Equal outcome, with witness
    bool all_passed() const { return problems.empty(); }
    std::string to_string() const;
};

/// [OP] verify_relation_preservation: every relation instance lhs = rhs of
/// the source presentation must satisfy g(lhs) == g(rhs) in the target
/// system; unital presentations additionally get g(1) == 1 through the
/// ApproxUnit instance. Bounded-incomplete rewriting yields UNKNOWN
/// entries, never silent passes.
VerifyReport verify_relation_preservation(const GeneratorMap& g,
                                          const RewriteSystem& target_system);

}  // namespace procstar
