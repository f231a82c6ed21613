#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "procstar/presentation.hpp"

namespace procstar {

/// A finite-dimensional *-representation of a presentation: one complex
/// matrix per letter, with starred letters pinned to conjugate transposes.
struct MatrixRep {
    int dim = 0;
    std::vector<Eigen::MatrixXcd> images;  // indexed by letter

    const Eigen::MatrixXcd& image(Letter l) const { return images[static_cast<std::size_t>(l)]; }
    bool star_consistent(const Alphabet& alpha, double tol) const;
};

/// [OP] matrix_unit_rep: vertices to diagonal matrix units, the edge
/// (s, t) to the matrix unit E_{s,t}. Satisfies every relation exactly.
MatrixRep matrix_unit_rep(const Presentation& P);

Eigen::MatrixXcd evaluate(const MatrixRep& rep, const StarPolynomial& p);

/// Largest singular value (0 fast path for the zero matrix).
double operator_norm(const Eigen::MatrixXcd& m);

struct ResidualEntry {
    std::size_t index = 0;
    RelationSchema schema = RelationSchema::Concat;
    double residual = 0;
    std::string text;
};

struct ResidualReport {
    std::size_t checked = 0;
    double max_residual = 0;
    std::vector<ResidualEntry> worst;  // up to 8 largest offenders
};

/// [OP] relation_residual: per-relation operator norm of lhs - rhs.
ResidualReport relation_residual(const MatrixRep& rep, const Presentation& P);

struct VertexNormEntry {
    std::string name;
    double norm = 0;
    bool edge_incident = false;
    double projection_defect = 0;  // ||v^2 - v||, meaningful when edge incident
};

struct VertexNormReport {
    std::vector<VertexNormEntry> entries;
    double max_norm = 0;
    double max_projection_defect = 0;     // over edge-incident vertices
    double max_orthogonality_defect = 0;  // ||v w|| over distinct edge-incident pairs
    double residual_at_entry = 0;         // relation residual this report assumed
};

/// [OP] vertex_norm_report: requires relation residuals <= tol first, then
/// reports per-vertex operator norms (the norm-one property of the
/// presentation's vertices), projection and pairwise orthogonality defects
/// for edge-incident vertices.
VertexNormReport vertex_norm_report(const MatrixRep& rep, const Presentation& P, double tol);

/// Summed squared Frobenius residual over all relation instances, plus its
/// Wirtinger gradient with respect to the conjugate of each letter image
/// (finite differences on real/imag parts equal twice its real/imag parts).
struct RepresentationGradient {
    double loss = 0;
    std::vector<Eigen::MatrixXcd> grad;
};
RepresentationGradient representation_loss_gradient(const Presentation& P,
                                                    const MatrixRep& rep);

struct SearchResult {
    MatrixRep rep;
    double residual = 0;  // sqrt of the summed squared Frobenius residuals
    bool converged = false;
    int iterations = 0;
    int restarts = 0;
};

/// [OP] search_representation: seed-deterministic gradient descent on the
/// real parametrization (vertices as A A^*, edges free), fixed step,
/// restarts on divergence. No optimality claim.
SearchResult search_representation(const Presentation& P, int dim, int iters,
                                   unsigned long long seed);

}  // namespace procstar
