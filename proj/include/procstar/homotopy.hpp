#pragma once

#include <array>
#include <string>
#include <vector>

#include "procstar/functor.hpp"
#include "procstar/sset.hpp"

namespace procstar {

/// The cylinder over X: the product with the standard 1-simplex, its two
/// endpoint inclusions (coface convention: d0 lands on vertex 1, d1 on
/// vertex 0) and the projection back to X.
struct Cylinder {
    FiniteSimplicialSet cyl;
    SimplicialMap d0_incl;     // X -> cyl
    SimplicialMap d1_incl;     // X -> cyl
    SimplicialMap projection;  // cyl -> X
};

/// [OP] cylinder.
Cylinder cylinder(const FiniteSimplicialSet& X);

/// A simplicial homotopy diagram: gamma restricted along the endpoint
/// inclusions must give f1 and f2.
struct HomotopyDiagram {
    SimplicialMap f1;
    SimplicialMap f2;
    SimplicialMap gamma;  // cylinder(f1.source) -> f1.target
};

/// The constant homotopy f o pr2 from f to itself.
HomotopyDiagram constant_homotopy(const SimplicialMap& f);

struct HomotopyVerdict {
    bool well_typed = false;
    bool valid = false;
    std::string witness;  // first failing nondegenerate simplex, if any
    bool proper_checked = false;
    PropernessVerdict f1_proper, f2_proper, gamma_proper;
    bool proper() const;
};

/// [OP] verify_homotopy: checks both triangle identities by exhaustive
/// evaluation on nondegenerate simplices; with require_proper also runs
/// is_proper on f1, f2, gamma.
HomotopyVerdict verify_homotopy(const HomotopyDiagram& d, bool require_proper);

/// 2x2 matrix over the star-polynomial ring, row major.
using PolyMat2 = std::array<StarPolynomial, 4>;
PolyMat2 mat2_mul(const PolyMat2& A, const PolyMat2& B);

struct EtaGeneratorEntry {
    std::string generator;
    PolyMat2 at_t0;  // omega_0 conj of diag((d0x1)~(g), (d1x1)~(g)) = the diagonal itself
    PolyMat2 at_t1;  // omega_1 conjugate: the diagonal swap
    Decision corner_t0 = Decision::Unknown;   // (1,1) entry vs (d0x1)~(g)
    Decision corner_t1 = Decision::Unknown;   // (1,1) entry vs (d1x1)~(g)
    Decision off_diagonal = Decision::Unknown;  // all four off-diagonal entries vs 0
};

/// Symbolic endpoint certificate for the rotation homotopy. The rotation
/// datum itself (transcendental for 0 < t < 1) is recorded as metadata;
/// only the endpoint specializations are algebraic.
struct EtaCertificate {
    std::string rotation_note;
    std::vector<EtaGeneratorEntry> entries;
    std::size_t unknowns = 0;
    bool ok() const;
};

/// [OP] eta_endpoints: builds, per generator of the cylinder presentation,
/// the endpoint matrices of the rotation homotopy and certifies the corner
/// identities against the endpoint inclusions' induced maps.
EtaCertificate eta_endpoints(const HomotopyDiagram& d, int completion_bound = 6);

}  // namespace procstar
