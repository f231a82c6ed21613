#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "procstar/sset.hpp"

namespace procstar {

/// Normal form of the composite s_outer . s_inner (word arithmetic only).
DegeneracyWord deg_concat(const DegeneracyWord& outer, DegeneracyWord inner);

/// Colimit of a diagram of simplicial sets presented by copies plus a list
/// of simplex identifications, resolved stage-by-stage with union-find.
/// Identifications must generate the full congruence: feeding one pair per
/// nondegenerate simplex of the gluing data suffices because degeneracies
/// act functorially on normal forms.
class ColimitBuilder {
  public:
    explicit ColimitBuilder(std::vector<const FiniteSimplicialSet*> copies)
        : copies_(std::move(copies)) {}

    void identify(int copy_a, Simplex a, int copy_b, Simplex b);

    using Members = std::vector<std::pair<int, NdId>>;  // (copy, cell), sorted
    using KeyFn = std::function<std::vector<std::uint32_t>(int dim, const Members&)>;
    using NameFn = std::function<std::string(int dim, const Members&)>;

    struct Result {
        FiniteSimplicialSet sset;
        std::vector<std::vector<Simplex>> mapping;  // [copy][cell] -> colimit simplex
        std::vector<Members> members;               // [colimit cell] -> class members
    };

    Result build(const KeyFn& key_of, const NameFn& name_of) const;

  private:
    std::vector<const FiniteSimplicialSet*> copies_;
    struct Ident {
        int copy_a;
        Simplex a;
        int copy_b;
        Simplex b;
    };
    std::vector<Ident> idents_;
};

/// A chain of vertex subsets of one cell; strict chains index the cells of
/// the subdivided standard simplex.
using SubsetChain = std::vector<std::vector<int>>;

/// Sd(standard_simplex(n)): the nerve of the poset of nonempty subsets of
/// [n]. Cells are strict chains in subset-chain-lexicographic order.
struct SdStandard {
    FiniteSimplicialSet sset;
    std::vector<SubsetChain> chains;             // indexed by NdId
    std::map<SubsetChain, NdId> index;
};
const SdStandard& sd_standard(int n);  // cached per dimension

struct ChainInCell {
    NdId cell;         // nondegenerate cell of the source
    SubsetChain chain;  // chain of vertex subsets of that cell
};

struct SubdivisionResult {
    FiniteSimplicialSet sd;
    /// For each cell of sd, the class of chains it arose from.
    std::vector<std::vector<ChainInCell>> provenance;
    /// For each cell tau of the source and each strict chain over [dim tau]
    /// (indexed as in sd_standard), the simplex of sd it lands on.
    std::vector<std::vector<Simplex>> chain_images;
};

/// [OP] subdivide: barycentric subdivision as the colimit over all
/// simplices of the subdivided standard simplices.
SubdivisionResult subdivide(const FiniteSimplicialSet& X);

/// [OP] subdivide_map: Sd on morphisms; Sd(id) = id and Sd(g.f) = Sd(g).Sd(f).
SimplicialMap subdivide_map(const SimplicialMap& f);

struct RegularityEntry {
    NdId cell;
    bool regular;
    std::string detail;
};

struct RegularityReport {
    std::vector<RegularityEntry> entries;
    bool regular() const;
    std::string to_string() const;
};

/// [OP] is_regular: per nondegenerate n-simplex x, checks that the
/// subcomplex generated by x agrees (nondegenerate counts per dimension)
/// with the pushout of Delta^n along its last face over <d_n x>.
RegularityReport is_regular(const FiniteSimplicialSet& X);

}  // namespace procstar
