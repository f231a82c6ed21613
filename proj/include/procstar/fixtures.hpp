#pragma once

#include "procstar/functor.hpp"
#include "procstar/sset.hpp"

namespace procstar {

/// One vertex, one edge, both faces at the vertex.
FiniteSimplicialSet minimal_circle();

/// Two disjoint points l_0, r_0.
FiniteSimplicialSet two_points();

/// The classifying map of a nondegenerate cell: standard_simplex(dim c)
/// into X, top cell to c, subsets to the vertex-set restrictions.
SimplicialMap classifying_map(const FiniteSimplicialSet& X, NdId cell);

/// The fold map two_points -> point.
SimplicialMap fold_map();

/// Stages union(n+1 points) -> point for n = 0..stages-1; the canonical
/// non-proper window.
Filtration points_to_point_filtration(int stages);

}  // namespace procstar
