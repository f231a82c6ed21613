#pragma once

#include <functional>
#include <string>
#include <vector>

#include "procstar/poset.hpp"
#include "procstar/star_poly.hpp"
#include "procstar/subdivision.hpp"

namespace procstar {

enum class RelationSchema { Concat, PartialIsometry, LeftUnit, RightUnit, ApproxUnit };
std::string schema_name(RelationSchema s);
RelationSchema schema_from_name(const std::string& s);

struct RelationInstance {
    RelationSchema schema;
    StarPolynomial lhs;
    StarPolynomial rhs;
    bool operator==(const RelationInstance&) const = default;
};

struct VertexGen {
    std::string name;
    int dim = 0;          // dimension of the underlying Nd(Sd(X)) element
    bool positive = true;  // consumed by repcheck, not an algebraic relation
    bool operator==(const VertexGen&) const = default;
};

struct EdgeGen {
    std::string name;  // adjoint generator is name + "*"
    int src = 0;       // vertex-generator indices
    int tgt = 0;
    bool operator==(const EdgeGen&) const = default;
};

/// The universal *-algebra presentation of a doubled quiver: positive
/// self-adjoint vertex generators, edge generators with formal adjoints,
/// and the relation schemas
///   (Concat)          xy = concatenation when t(x) = s(y), else 0
///   (PartialIsometry) xx* = s(x), x*x = t(x)
///   (LeftUnit)        vx = x when s(x) = v, else 0
///   (RightUnit)       xv = x when t(x) = v, else 0
///   (ApproxUnit)      sum of vertices = 1 (finite, unital case)
/// Relation instances are enumerated on demand; the Concat schema alone is
/// quadratic in the doubled edge count.
class Presentation {
  public:
    Presentation() = default;
    Presentation(std::vector<VertexGen> verts, std::vector<EdgeGen> edges, bool unital,
                 QuiverMode mode);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<VertexGen>& vertex_gens() const { return vertex_gens_; }
    const std::vector<EdgeGen>& edge_gens() const { return edge_gens_; }
    bool unital() const { return unital_; }
    QuiverMode quiver_mode() const { return mode_; }
    /// Marker that relation (5) ranges over the directed set of finite
    /// vertex subsets; the finite case is specialized to sum = 1.
    const std::string& lambda_note() const { return lambda_note_; }

    Letter vertex_letter(int i) const { return i; }
    Letter edge_letter(int i) const { return static_cast<int>(vertex_gens_.size()) + i; }
    Letter star_letter(int i) const {
        return static_cast<int>(vertex_gens_.size() + edge_gens_.size()) + i;
    }
    /// Source/target vertex-generator index of a doubled-edge letter.
    int source_of(Letter l) const;
    int target_of(Letter l) const;

    StarPolynomial vertex_sum() const;

    void for_each_relation(const std::function<void(const RelationInstance&)>& fn) const;
    std::vector<RelationInstance> relations() const;  // materialized; small inputs only
    std::size_t relation_count() const;

    /// Every relation references only declared generators and the two sides
    /// are well-formed for their schema.
    bool check_relations_wellformed() const;

    bool operator==(const Presentation&) const = default;

  private:
    std::vector<VertexGen> vertex_gens_;
    std::vector<EdgeGen> edge_gens_;
    bool unital_ = true;
    QuiverMode mode_ = QuiverMode::AllStrictPairs;
    Alphabet alphabet_;
    std::string lambda_note_;
};

/// [OP] present: subdivide, take the nd-poset, double the quiver, emit the
/// presentation. Vertex generators are named a, b, c, ... (skipping names
/// that start with 'x') in poset-element order; edges are x1, x2, ... in
/// (source, target) order.
Presentation present(const FiniteSimplicialSet& X,
                     QuiverMode mode = QuiverMode::AllStrictPairs);

/// Spreadsheet-style generator name for index i (a..w, y, z, aa, ab, ...).
std::string vertex_gen_name(std::size_t i);

/// [OP] emit (text form): one relation per line, "lhs = rhs".
std::string emit_text(const Presentation& P);

}  // namespace procstar
