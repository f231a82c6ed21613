#include "procstar/homotopy.hpp"

namespace procstar {

Cylinder cylinder(const FiniteSimplicialSet& X) {
    if (auto rep = validate(X); !rep.ok())
        throw InputError("cylinder: input does not validate:\n" + rep.to_string());
    const FiniteSimplicialSet interval = standard_simplex(1);
    ProductResult prod = product_with_cells(interval, X);

    Cylinder C;
    C.cyl = prod.sset;
    NdId v0 = *interval.find("0");
    NdId v1 = *interval.find("1");
    auto inclusion_at = [&](NdId vertex) {
        SimplicialMap incl{X, C.cyl, {}};
        for (NdId c = 0; c < X.size(); ++c) {
            DegeneracyWord full;
            for (int j = X.dim(c) - 1; j >= 0; --j) full.push_back(j);
            auto cell = prod.find_cell(Simplex{vertex, full}, Simplex{c, {}});
            if (!cell) throw Error("cylinder: missing product cell for inclusion");
            incl.images.push_back(Simplex{*cell, {}});
        }
        return incl;
    };
    // coface convention: d^0 omits 0 (lands on vertex 1), d^1 omits 1
    C.d0_incl = inclusion_at(v1);
    C.d1_incl = inclusion_at(v0);
    C.projection = SimplicialMap{C.cyl, X, {}};
    for (NdId c = 0; c < C.cyl.size(); ++c) C.projection.images.push_back(prod.cells[c].right);
    return C;
}

HomotopyDiagram constant_homotopy(const SimplicialMap& f) {
    Cylinder C = cylinder(f.source);
    return HomotopyDiagram{f, f, compose(f, C.projection)};
}

bool HomotopyVerdict::proper() const {
    if (!proper_checked) return false;
    return f1_proper.verdict == Properness::Proper &&
           f2_proper.verdict == Properness::Proper &&
           gamma_proper.verdict == Properness::Proper;
}

HomotopyVerdict verify_homotopy(const HomotopyDiagram& d, bool require_proper) {
    HomotopyVerdict v;
    if (!(d.f1.source == d.f2.source) || !(d.f1.target == d.f2.target) ||
        !(d.gamma.target == d.f1.target))
        return v;
    Cylinder C = cylinder(d.f1.source);
    if (!(d.gamma.source == C.cyl)) return v;
    if (!d.f1.validate().ok() || !d.f2.validate().ok() || !d.gamma.validate().ok()) return v;
    v.well_typed = true;
    v.valid = true;
    for (NdId c = 0; c < d.f1.source.size(); ++c) {
        if (!(d.gamma.evaluate(C.d0_incl.images[c]) == d.f1.images[c])) {
            v.valid = false;
            v.witness = d.f1.source.id(c) + " (endpoint t=0)";
            break;
        }
        if (!(d.gamma.evaluate(C.d1_incl.images[c]) == d.f2.images[c])) {
            v.valid = false;
            v.witness = d.f1.source.id(c) + " (endpoint t=1)";
            break;
        }
    }
    if (require_proper) {
        v.proper_checked = true;
        v.f1_proper = is_proper(d.f1);
        v.f2_proper = is_proper(d.f2);
        v.gamma_proper = is_proper(d.gamma);
    }
    return v;
}

PolyMat2 mat2_mul(const PolyMat2& A, const PolyMat2& B) {
    return PolyMat2{A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3],
                    A[2] * B[0] + A[3] * B[2], A[2] * B[1] + A[3] * B[3]};
}

bool EtaCertificate::ok() const {
    for (const auto& e : entries)
        if (e.corner_t0 != Decision::Equal || e.corner_t1 != Decision::Equal ||
            e.off_diagonal != Decision::Equal)
            return false;
    return true;
}

EtaCertificate eta_endpoints(const HomotopyDiagram& d, int completion_bound) {
    HomotopyVerdict hv = verify_homotopy(d, /*require_proper=*/false);
    if (!hv.well_typed || !hv.valid)
        throw InputError("eta_endpoints: diagram is not a verified homotopy diagram");
    Cylinder C = cylinder(d.f1.source);
    GeneratorMap g0 = induced_hom(C.d0_incl);  // P(cylinder) -> P(source)
    GeneratorMap g1 = induced_hom(C.d1_incl);
    RewriteSystem rs = compile(g0.target_presentation, completion_bound);

    EtaCertificate cert;
    cert.rotation_note =
        "omega_t = [[cos(pi t/2), sin(pi t/2)], [-sin(pi t/2), cos(pi t/2)]]; "
        "omega_0 = identity, omega_1 = quarter turn; the corner embedding is "
        "formally inverted by reading off the (1,1) entry";

    const Alphabet& cyl_alpha = g0.source_presentation.alphabet();
    auto constant = [](long long c) { return StarPolynomial::unit() * c; };
    const PolyMat2 omega1{constant(0), constant(1), constant(-1), constant(0)};
    const PolyMat2 omega1_inv{constant(0), constant(-1), constant(1), constant(0)};

    for (Letter l = 0; l < cyl_alpha.total(); ++l) {
        EtaGeneratorEntry entry;
        entry.generator = cyl_alpha.name(l);
        StarPolynomial p0 = g0.image_of_letter(l);
        StarPolynomial p1 = g1.image_of_letter(l);
        PolyMat2 diag{p0, StarPolynomial::zero(), StarPolynomial::zero(), p1};
        entry.at_t0 = diag;  // omega_0 is the identity rotation
        entry.at_t1 = mat2_mul(mat2_mul(omega1, diag), omega1_inv);
        entry.corner_t0 = decide_equal(rs, entry.at_t0[0], p0);
        entry.corner_t1 = decide_equal(rs, entry.at_t1[0], p1);
        entry.off_diagonal = Decision::Equal;
        for (std::size_t k : {std::size_t{1}, std::size_t{2}}) {
            for (const PolyMat2* m : {&entry.at_t0, &entry.at_t1}) {
                Decision dd = decide_equal(rs, (*m)[k], StarPolynomial::zero());
                if (dd == Decision::Unknown && entry.off_diagonal == Decision::Equal)
                    entry.off_diagonal = Decision::Unknown;
                if (dd == Decision::Distinct) entry.off_diagonal = Decision::Distinct;
            }
        }
        if (entry.corner_t0 == Decision::Unknown || entry.corner_t1 == Decision::Unknown ||
            entry.off_diagonal == Decision::Unknown)
            ++cert.unknowns;
        cert.entries.push_back(std::move(entry));
    }
    return cert;
}

}  // namespace procstar
