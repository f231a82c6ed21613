#pragma once

#include <string>
#include <utility>
#include <vector>

#include "procstar/sset.hpp"

namespace procstar {

/// The poset of nondegenerate simplices, ordered by "iterated face of"
/// (strict order, transitive closure of single-face bases).
struct NdPoset {
    std::vector<NdCell> elements;         // same indexing as the source sset
    std::vector<std::vector<bool>> less;  // less[a][b] <=> a < b

    std::size_t size() const { return elements.size(); }
    bool strictly_less(NdId a, NdId b) const { return less[a][b]; }
    bool leq(NdId a, NdId b) const { return a == b || less[a][b]; }

    /// All strict pairs (a, b) with a < b, sorted by (a, b).
    std::vector<std::pair<NdId, NdId>> strict_pairs() const;

    bool operator==(const NdPoset&) const = default;
};

/// [OP] nd_poset.
NdPoset nd_poset(const FiniteSimplicialSet& X);

/// Monotone map of nd-posets induced by a simplicial map (sigma -> the
/// nondegenerate base of its image).
struct PosetMap {
    NdPoset source;
    NdPoset target;
    std::vector<NdId> images;

    bool monotone() const;
    bool operator==(const PosetMap&) const = default;
};

/// [OP] nd_functor.
PosetMap nd_functor(const SimplicialMap& f);

PosetMap compose(const PosetMap& g, const PosetMap& f);
PosetMap identity_poset_map(const NdPoset& P);

struct QuiverEdge {
    std::string id;  // "x1", "x2", ...; the star is id + "*"
    NdId src;
    NdId tgt;
    bool operator==(const QuiverEdge&) const = default;
};

enum class QuiverMode { AllStrictPairs, HasseOnly };

/// The doubled quiver on a poset: one edge per strict pair (source below
/// target) plus a formal adjoint per edge. Only the unstarred edges are
/// stored; the star involution swaps endpoints.
struct DoubledQuiver {
    NdPoset poset;
    std::vector<QuiverEdge> edges;  // sorted by (src, tgt)
    QuiverMode mode = QuiverMode::AllStrictPairs;

    bool operator==(const DoubledQuiver&) const = default;
};

/// [OP] doubled_quiver. AllStrictPairs is the default: unstarred monomials
/// must biject with nerve simplices, which forces an edge per strict pair.
DoubledQuiver doubled_quiver(const NdPoset& P, QuiverMode mode = QuiverMode::AllStrictPairs);

/// [OP] nerve_chains: all strict chains e_0 < ... < e_k.
std::vector<std::vector<NdId>> nerve_chains(const NdPoset& P, int k);

/// Number of oriented paths of length k using only unstarred edges.
std::size_t count_unstarred_paths(const DoubledQuiver& Q, int k);

}  // namespace procstar
