#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "procstar/core.hpp"

namespace procstar {

/// Index of a nondegenerate simplex within one FiniteSimplicialSet.
using NdId = std::uint32_t;

/// Strictly decreasing list of degeneracy indices, outermost first.
/// The word [j1, j2, ..., jm] denotes the composite s_{j1} s_{j2} ... s_{jm}.
using DegeneracyWord = std::vector<int>;

bool is_strictly_decreasing(const DegeneracyWord& w);

/// A simplex in Eilenberg-Zilber normal form: a degeneracy word applied to a
/// nondegenerate base. The representation is unique; the empty word denotes
/// the nondegenerate simplex itself.
struct Simplex {
    NdId base = 0;
    DegeneracyWord deg;

    bool degenerate() const { return !deg.empty(); }
    bool operator==(const Simplex&) const = default;
};

/// A face (d_i) or degeneracy (s_j) operator, used for raw operator words.
struct SimplicialOp {
    enum Kind { Face, Degeneracy };
    Kind kind;
    int index;
};

struct NdCell {
    std::string id;
    int dim = 0;
    bool operator==(const NdCell&) const = default;
};

struct ValidationIssue {
    std::string what;     // which identity or well-formedness rule failed
    std::string witness;  // the simplex / indices it failed on
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string to_string() const;
};

/// A simplicial set with finitely many nondegenerate simplices. Faces are
/// stored for nondegenerate simplices only; everything else is derived from
/// the simplicial identities. Immutable once built.
class FiniteSimplicialSet {
  public:
    FiniteSimplicialSet() = default;

    /// Appends a nondegenerate cell; ids must be unique. Returns its NdId.
    NdId add_cell(std::string id, int dim);

    /// Sets the face table of a cell of dimension >= 1 (one Simplex per
    /// face index 0..dim).
    void set_faces(NdId cell, std::vector<Simplex> faces);

    std::size_t size() const { return cells_.size(); }
    int dim(NdId c) const { return cells_[c].dim; }
    const std::string& id(NdId c) const { return cells_[c].id; }
    const std::vector<NdCell>& cells() const { return cells_; }
    std::optional<NdId> find(const std::string& id) const;

    /// Largest dimension of a nondegenerate simplex (-1 when empty).
    int max_dim() const;

    /// Stored face d_i of a nondegenerate cell (dim >= 1).
    const Simplex& stored_face(NdId cell, int i) const;

    bool operator==(const FiniteSimplicialSet&) const = default;

  private:
    std::vector<NdCell> cells_;
    std::vector<std::vector<Simplex>> faces_;  // empty vector for 0-cells
    std::unordered_map<std::string, NdId> by_id_;
};

int dim_of(const FiniteSimplicialSet& X, const Simplex& s);

/// s_j applied to a simplex, renormalized via s_i s_j = s_{j+1} s_i.
Simplex apply_degeneracy(const FiniteSimplicialSet& X, const Simplex& s, int j);

/// d_i applied to a simplex, pushed through the degeneracy word via the
/// simplicial identities and resolved against the face table at the base.
Simplex apply_face(const FiniteSimplicialSet& X, const Simplex& s, int i);

/// [OP] face: d_i of a simplex of dimension >= 1, result in normal form.
Simplex face(const FiniteSimplicialSet& X, const Simplex& s, int i);

/// [OP] normalize: applies a raw operator word to a nondegenerate base.
/// The word is given outermost-first (like the composite notation) and is
/// applied innermost-first. Throws DimensionError on out-of-range indices.
Simplex normalize(const FiniteSimplicialSet& X, NdId base,
                  const std::vector<SimplicialOp>& word);

/// Iterated-face restriction of a nondegenerate cell to a vertex subset
/// (sorted ascending, nonempty).
Simplex restrict_to_vertices(const FiniteSimplicialSet& X, NdId cell,
                             const std::vector<int>& vertices);

/// [OP] standard_simplex: the simplicial set of monotone injections into
/// [n]; one nondegenerate cell per nonempty subset, ordered subset-
/// lexicographically ("0" < "01" < "012" < "02" < "1" < ...).
FiniteSimplicialSet standard_simplex(int n);

/// Cell label of a sorted vertex subset of a standard simplex ("02", "_10_12").
std::string subset_label(const std::vector<int>& subset);
std::vector<int> parse_subset_label(const std::string& label);

/// [OP] validate: checks well-formedness of the face tables and every
/// instance of the identity d_i d_j = d_{j-1} d_i (i < j) on the generated
/// simplices up to dimension max_dim + 2.
ValidationReport validate(const FiniteSimplicialSet& X);

/// [OP] disjoint_union: tagged union, ids prefixed "l_" / "r_".
FiniteSimplicialSet disjoint_union(const FiniteSimplicialSet& X,
                                   const FiniteSimplicialSet& Y);

/// A nondegenerate cell of a product is a jointly nondegenerate pair of
/// component simplices (their degeneracy words share no index).
struct ProductCellData {
    Simplex left;
    Simplex right;
};

struct ProductResult {
    FiniteSimplicialSet sset;
    std::vector<ProductCellData> cells;  // indexed by product NdId

    /// Looks up the cell with the given component pair (must be jointly
    /// nondegenerate).
    std::optional<NdId> find_cell(const Simplex& left, const Simplex& right) const;
};

/// [OP] product: coordinatewise product. Nondegenerate cells are the
/// jointly nondegenerate pairs (s_u sigma, s_v tau) with u, v disjoint.
ProductResult product_with_cells(const FiniteSimplicialSet& X,
                                 const FiniteSimplicialSet& Y);
FiniteSimplicialSet product(const FiniteSimplicialSet& X,
                            const FiniteSimplicialSet& Y);

/// A simplicial map, stored by its images on nondegenerate simplices and
/// extended to everything else by naturality.
struct SimplicialMap {
    FiniteSimplicialSet source;
    FiniteSimplicialSet target;
    std::vector<Simplex> images;  // indexed by source NdId

    Simplex evaluate(const Simplex& s) const;
    ValidationReport validate() const;
    bool operator==(const SimplicialMap&) const = default;
};

/// [OP] evaluate_map.
Simplex evaluate_map(const SimplicialMap& f, const Simplex& s);

SimplicialMap identity_map(const FiniteSimplicialSet& X);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// The unique map X -> standard_simplex(0).
SimplicialMap collapse_to_point(const FiniteSimplicialSet& X);

/// The subcomplex of X generated by one simplex (its base's iterated
/// faces), as a standalone simplicial set plus the inclusion id table.
struct Subcomplex {
    FiniteSimplicialSet sset;
    std::vector<NdId> into_parent;  // cell of sset -> cell of X
};
Subcomplex subcomplex_generated_by(const FiniteSimplicialSet& X, NdId cell);

}  // namespace procstar
