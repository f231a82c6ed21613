#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "procstar/homotopy.hpp"
#include "procstar/io.hpp"

namespace ps = procstar;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifiedFalse = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;

int run_subdivide(const std::string& in, const std::string& out,
                  const std::string& provenance) {
    ps::FiniteSimplicialSet X = ps::io::sset_from_json(ps::io::load_file(in));
    ps::SubdivisionResult sd = ps::subdivide(X);
    if (!out.empty())
        ps::io::save_file(out, ps::io::sset_to_json(sd.sd));
    else
        std::cout << ps::io::dump_canonical(ps::io::sset_to_json(sd.sd));
    if (!provenance.empty()) {
        json prov = json::object();
        for (ps::NdId c = 0; c < sd.sd.size(); ++c) {
            json members = json::array();
            for (const auto& m : sd.provenance[c])
                members.push_back(json{{"simplex", X.id(m.cell)}, {"chain", m.chain}});
            prov[sd.sd.id(c)] = std::move(members);
        }
        ps::io::save_file(provenance, json{{"schema", "sd-provenance.v1"},
                                           {"classes", std::move(prov)}});
    }
    return kOk;
}

int run_present(const std::string& in, const std::string& out, bool text, bool hasse,
                const std::string& quiver_out) {
    ps::FiniteSimplicialSet X = ps::io::sset_from_json(ps::io::load_file(in));
    ps::QuiverMode mode = hasse ? ps::QuiverMode::HasseOnly : ps::QuiverMode::AllStrictPairs;
    ps::Presentation P = ps::present(X, mode);
    if (!out.empty()) ps::io::save_file(out, ps::io::presentation_to_json(P));
    if (text) std::cout << ps::emit_text(P);
    if (out.empty() && !text) std::cout << ps::io::dump_canonical(ps::io::presentation_to_json(P));
    if (!quiver_out.empty()) {
        ps::SubdivisionResult sd = ps::subdivide(X);
        ps::io::save_file(quiver_out,
                          ps::io::quiver_to_json(ps::doubled_quiver(ps::nd_poset(sd.sd), mode)));
    }
    return kOk;
}

int run_nf(const std::string& in, const std::string& expr, int bound) {
    ps::Presentation P = ps::io::presentation_from_json(ps::io::load_file(in));
    ps::RewriteSystem rs = ps::compile(P, bound);
    ps::StarPolynomial p = ps::parse_polynomial(expr, P.alphabet());
    std::cout << ps::print_polynomial(rs.normal_form(p), P.alphabet()) << "\n";
    if (!rs.complete()) {
        std::cerr << "note: completion bound " << bound
                  << " was not enough to resolve all overlaps\n";
        return kUnknown;
    }
    return kOk;
}

int run_induce(const std::string& in, const std::string& out) {
    ps::SimplicialMap f = ps::io::smap_from_json(ps::io::load_file(in));
    ps::GeneratorMap g = ps::induced_hom(f);
    if (!out.empty())
        ps::io::save_file(out, ps::io::genmap_to_json(g));
    else
        std::cout << ps::io::dump_canonical(ps::io::genmap_to_json(g));
    return kOk;
}

int run_check_proper(const std::string& in) {
    json j = ps::io::load_file(in);
    ps::PropernessVerdict v;
    if (j.value("schema", "") == "smap.v1")
        v = ps::is_proper(ps::io::smap_from_json(j));
    else if (j.value("schema", "") == "filtration.v1")
        v = ps::is_proper(ps::io::filtration_from_json(j));
    else
        throw ps::ParseError("check-proper expects smap.v1 or filtration.v1");
    std::cout << ps::properness_name(v.verdict) << ": " << v.detail << "\n";
    if (v.verdict == ps::Properness::NotProper) {
        std::cout << "witness: " << v.witness << "\n";
        return kVerifiedFalse;
    }
    if (v.verdict == ps::Properness::Unknown) return kUnknown;
    return kOk;
}

int run_verify(const std::string& in, int bound) {
    ps::GeneratorMap g = ps::io::genmap_from_json(ps::io::load_file(in));
    ps::RewriteSystem rs = ps::compile(g.target_presentation, bound);
    ps::VerifyReport rep = ps::verify_relation_preservation(g, rs);
    std::cout << rep.to_string();
    if (!rep.all_passed())
        return rep.unknowns == rep.problems.size() ? kUnknown : kVerifiedFalse;
    return kOk;
}

int run_check_homotopy(const std::string& f1p, const std::string& f2p, const std::string& gp,
                       bool proper, bool eta, int bound) {
    ps::HomotopyDiagram d;
    d.f1 = ps::io::smap_from_json(ps::io::load_file(f1p));
    d.f2 = ps::io::smap_from_json(ps::io::load_file(f2p));
    d.gamma = ps::io::smap_from_json(ps::io::load_file(gp));
    ps::HomotopyVerdict v = ps::verify_homotopy(d, proper);
    if (!v.well_typed) {
        std::cout << "ill-typed homotopy diagram\n";
        return kVerifiedFalse;
    }
    std::cout << (v.valid ? "homotopy diagram valid" : "homotopy diagram INVALID at " + v.witness)
              << "\n";
    if (proper)
        std::cout << "properness: f1 " << ps::properness_name(v.f1_proper.verdict) << ", f2 "
                  << ps::properness_name(v.f2_proper.verdict) << ", gamma "
                  << ps::properness_name(v.gamma_proper.verdict) << "\n";
    if (!v.valid || (proper && !v.proper())) return kVerifiedFalse;
    if (eta) {
        ps::EtaCertificate cert = ps::eta_endpoints(d, bound);
        std::cout << "eta endpoints: " << cert.entries.size() << " generators, "
                  << (cert.ok() ? "all corner identities hold" : "FAILED") << "\n";
        if (cert.unknowns > 0) return kUnknown;
        if (!cert.ok()) return kVerifiedFalse;
    }
    return kOk;
}

int run_rep(const std::string& in, bool canonical, const std::vector<std::string>& search,
            const std::string& check, const std::string& out, double tol) {
    ps::Presentation P = ps::io::presentation_from_json(ps::io::load_file(in));
    ps::MatrixRep rep;
    bool have_rep = false;
    if (canonical) {
        rep = ps::matrix_unit_rep(P);
        have_rep = true;
    } else if (!search.empty()) {
        if (search.size() != 3) throw ps::InputError("--search needs: dim iters seed");
        ps::SearchResult sr = ps::search_representation(P, std::stoi(search[0]),
                                                        std::stoi(search[1]),
                                                        std::stoull(search[2]));
        std::cout << "search residual " << sr.residual << " ("
                  << (sr.converged ? "converged" : "non-converged") << ", " << sr.iterations
                  << " iterations)\n";
        rep = sr.rep;
        have_rep = true;
    }
    if (!check.empty()) {
        rep = ps::io::rep_from_json(ps::io::load_file(check), P);
        have_rep = true;
    }
    if (!have_rep) throw ps::InputError("rep: pick one of --canonical, --search, --check");
    if (!out.empty()) ps::io::save_file(out, ps::io::rep_to_json(rep, P));
    ps::ResidualReport rr = ps::relation_residual(rep, P);
    std::cout << "max relation residual " << rr.max_residual << " over " << rr.checked
              << " instances\n";
    for (const auto& w : rr.worst)
        std::cout << "  residual " << w.residual << "  [" << ps::schema_name(w.schema) << "] "
                  << w.text << "\n";
    if (rr.max_residual > tol) return kVerifiedFalse;
    ps::VertexNormReport vn = ps::vertex_norm_report(rep, P, tol);
    std::cout << "vertex norms: max " << vn.max_norm << "; projection defect "
              << vn.max_projection_defect << "; orthogonality defect "
              << vn.max_orthogonality_defect << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"procstar: universal pro-C*-algebra presentations from simplicial sets"};
    app.require_subcommand(1);

    int bound = 6;
    double tol = 1e-9;
    unsigned long long seed = 0;
    app.add_option("--bound", bound, "rewrite completion bound (default 6)");
    app.add_option("--tol", tol, "numerical tolerance (default 1e-9)");
    app.add_option("--seed", seed, "seed for randomized subcommands (default 0)");

    std::string in, out, provenance, expr, quiver_out, check;
    std::string f1, f2, gamma;
    bool text = false, hasse = false, proper = false, eta = false, canonical = false;
    std::vector<std::string> search;

    auto* c_sub = app.add_subcommand("subdivide", "barycentric subdivision Sd(X)");
    c_sub->add_option("input", in, "sset.v1 file")->required();
    c_sub->add_option("-o,--output", out, "output sset.v1 file");
    c_sub->add_option("--provenance", provenance, "write chain provenance JSON");

    auto* c_pres = app.add_subcommand("present", "emit the ProC* presentation of Sd(X)");
    c_pres->add_option("input", in, "sset.v1 file")->required();
    c_pres->add_option("-o,--output", out, "output presentation.v1 file");
    c_pres->add_flag("--text", text, "print the human-readable form to stdout");
    c_pres->add_flag("--hasse", hasse, "quiver on Hasse covers only (default: all strict pairs)");
    c_pres->add_option("--quiver", quiver_out, "also write the doubled quiver (quiver.v1)");

    auto* c_nf = app.add_subcommand("nf", "normal form of an expression");
    c_nf->add_option("input", in, "presentation.v1 file")->required();
    c_nf->add_option("--expr", expr, "expression over the generators")->required();

    auto* c_ind = app.add_subcommand("induce", "generator map induced by a simplicial map");
    c_ind->add_option("input", in, "smap.v1 file")->required();
    c_ind->add_option("-o,--output", out, "output genmap.v1 file");

    auto* c_prop = app.add_subcommand("check-proper", "properness of a map or filtration");
    c_prop->add_option("input", in, "smap.v1 or filtration.v1 file")->required();

    auto* c_ver = app.add_subcommand("verify", "relation preservation of a generator map");
    c_ver->add_option("input", in, "genmap.v1 file")->required();

    auto* c_hom = app.add_subcommand("check-homotopy", "verify a simplicial homotopy diagram");
    c_hom->add_option("f1", f1, "smap.v1 file")->required();
    c_hom->add_option("f2", f2, "smap.v1 file")->required();
    c_hom->add_option("gamma", gamma, "smap.v1 file (cylinder source)")->required();
    c_hom->add_flag("--proper", proper, "also require all maps proper");
    c_hom->add_flag("--eta", eta, "certify the rotation homotopy endpoints");

    auto* c_rep = app.add_subcommand("rep", "matrix representations and residuals");
    c_rep->add_option("input", in, "presentation.v1 file")->required();
    c_rep->add_flag("--canonical", canonical, "use the matrix-unit representation");
    c_rep->add_option("--search", search, "gradient search: dim iters seed")->expected(3);
    c_rep->add_option("--check", check, "check a rep.v1 file");
    c_rep->add_option("-o,--output", out, "write the representation (rep.v1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (c_sub->parsed()) return run_subdivide(in, out, provenance);
        if (c_pres->parsed()) return run_present(in, out, text, hasse, quiver_out);
        if (c_nf->parsed()) return run_nf(in, expr, bound);
        if (c_ind->parsed()) return run_induce(in, out);
        if (c_prop->parsed()) return run_check_proper(in);
        if (c_ver->parsed()) return run_verify(in, bound);
        if (c_hom->parsed()) return run_check_homotopy(f1, f2, gamma, proper, eta, bound);
        if (c_rep->parsed()) return run_rep(in, canonical, search, check, out, tol);
    } catch (const ps::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
