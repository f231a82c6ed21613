#include "procstar/repcheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace procstar {

bool MatrixRep::star_consistent(const Alphabet& alpha, double tol) const {
    for (Letter l = 0; l < alpha.total(); ++l) {
        if (!alpha.is_edge(l)) continue;
        if ((image(alpha.star(l)) - image(l).adjoint()).cwiseAbs().maxCoeff() > tol)
            return false;
    }
    return true;
}

MatrixRep matrix_unit_rep(const Presentation& P) {
    const Alphabet& a = P.alphabet();
    MatrixRep rep;
    rep.dim = a.num_vertices;
    if (rep.dim == 0) throw InputError("matrix_unit_rep: presentation has no vertices");
    rep.images.assign(static_cast<std::size_t>(a.total()),
                      Eigen::MatrixXcd::Zero(rep.dim, rep.dim));
    for (int v = 0; v < a.num_vertices; ++v) rep.images[static_cast<std::size_t>(v)](v, v) = 1.0;
    for (int e = 0; e < a.num_edges; ++e) {
        const EdgeGen& eg = P.edge_gens()[static_cast<std::size_t>(e)];
        rep.images[static_cast<std::size_t>(P.edge_letter(e))](eg.src, eg.tgt) = 1.0;
        rep.images[static_cast<std::size_t>(P.star_letter(e))](eg.tgt, eg.src) = 1.0;
    }
    return rep;
}

Eigen::MatrixXcd evaluate(const MatrixRep& rep, const StarPolynomial& p) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(rep.dim, rep.dim);
    for (const auto& [w, c] : p.terms()) {
        Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(rep.dim, rep.dim);
        for (Letter l : w) prod = prod * rep.image(l);
        acc += static_cast<double>(c) * prod;
    }
    return acc;
}

double operator_norm(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return 0.0;
    if (m.cwiseAbs().maxCoeff() == 0.0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
}

ResidualReport relation_residual(const MatrixRep& rep, const Presentation& P) {
    if (rep.dim <= 0) throw InputError("relation_residual: empty representation");
    for (Letter l = 0; l < P.alphabet().total(); ++l)
        if (rep.images[static_cast<std::size_t>(l)].rows() != rep.dim ||
            rep.images[static_cast<std::size_t>(l)].cols() != rep.dim)
            throw InputError("relation_residual: missing or missized generator image for " +
                             P.alphabet().name(l));
    ResidualReport report;
    std::size_t index = 0;
    P.for_each_relation([&](const RelationInstance& rel) {
        double r = operator_norm(evaluate(rep, rel.lhs) - evaluate(rep, rel.rhs));
        if (r > report.max_residual) report.max_residual = r;
        if (r > 0) {
            ResidualEntry e{index, rel.schema, r,
                            print_polynomial(rel.lhs, P.alphabet()) + " = " +
                                print_polynomial(rel.rhs, P.alphabet())};
            report.worst.push_back(e);
            std::sort(report.worst.begin(), report.worst.end(),
                      [](const ResidualEntry& a, const ResidualEntry& b) {
                          return a.residual > b.residual;
                      });
            if (report.worst.size() > 8) report.worst.resize(8);
        }
        ++index;
        ++report.checked;
    });
    return report;
}

VertexNormReport vertex_norm_report(const MatrixRep& rep, const Presentation& P, double tol) {
    ResidualReport rr = relation_residual(rep, P);
    if (rr.max_residual > tol)
        throw InputError("vertex_norm_report: relation residual " +
                         std::to_string(rr.max_residual) + " exceeds tolerance");
    VertexNormReport report;
    report.residual_at_entry = rr.max_residual;
    const Alphabet& a = P.alphabet();
    std::vector<bool> incident(static_cast<std::size_t>(a.num_vertices), false);
    for (const auto& e : P.edge_gens()) {
        incident[static_cast<std::size_t>(e.src)] = true;
        incident[static_cast<std::size_t>(e.tgt)] = true;
    }
    for (int v = 0; v < a.num_vertices; ++v) {
        const Eigen::MatrixXcd& m = rep.image(v);
        VertexNormEntry entry;
        entry.name = a.name(v);
        entry.norm = operator_norm(m);
        entry.edge_incident = incident[static_cast<std::size_t>(v)];
        entry.projection_defect = operator_norm(m * m - m);
        report.max_norm = std::max(report.max_norm, entry.norm);
        if (entry.edge_incident)
            report.max_projection_defect =
                std::max(report.max_projection_defect, entry.projection_defect);
        report.entries.push_back(std::move(entry));
    }
    for (int v = 0; v < a.num_vertices; ++v) {
        if (!incident[static_cast<std::size_t>(v)]) continue;
        for (int w = 0; w < a.num_vertices; ++w) {
            if (w == v || !incident[static_cast<std::size_t>(w)]) continue;
            report.max_orthogonality_defect =
                std::max(report.max_orthogonality_defect,
                         operator_norm(rep.image(v) * rep.image(w)));
        }
    }
    return report;
}

RepresentationGradient representation_loss_gradient(const Presentation& P,
                                                    const MatrixRep& rep) {
    const Alphabet& a = P.alphabet();
    RepresentationGradient lg;
    lg.grad.assign(static_cast<std::size_t>(a.total()),
                   Eigen::MatrixXcd::Zero(rep.dim, rep.dim));
    P.for_each_relation([&](const RelationInstance& rel) {
        Eigen::MatrixXcd R = evaluate(rep, rel.lhs) - evaluate(rep, rel.rhs);
        double f = R.squaredNorm();
        if (f == 0.0) return;
        lg.loss += f;
        auto accumulate = [&](const StarPolynomial& side, double sign) {
            for (const auto& [w, c] : side.terms()) {
                if (w.empty()) continue;
                // prefix[k] = product of images before position k
                std::vector<Eigen::MatrixXcd> prefix(w.size() + 1);
                prefix[0] = Eigen::MatrixXcd::Identity(rep.dim, rep.dim);
                for (std::size_t k = 0; k < w.size(); ++k)
                    prefix[k + 1] = prefix[k] * rep.image(w[k]);
                Eigen::MatrixXcd suffix = Eigen::MatrixXcd::Identity(rep.dim, rep.dim);
                for (std::size_t k = w.size(); k-- > 0;) {
                    lg.grad[static_cast<std::size_t>(w[k])] +=
                        sign * static_cast<double>(c) * prefix[k].adjoint() * R *
                        suffix.adjoint();
                    suffix = rep.image(w[k]) * suffix;
                }
            }
        };
        accumulate(rel.lhs, 1.0);
        accumulate(rel.rhs, -1.0);
    });
    return lg;
}

SearchResult search_representation(const Presentation& P, int dim, int iters,
                                   unsigned long long seed) {
    if (dim < 1) throw InputError("search_representation: dim must be >= 1");
    const Alphabet& a = P.alphabet();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 0.4);

    const int restarts = std::max(1, iters / 4000);
    const int per_run = std::max(1, iters / restarts);
    const double step = 0.02;

    SearchResult best;
    best.residual = std::numeric_limits<double>::infinity();
    best.restarts = restarts;

    for (int run = 0; run < restarts; ++run) {
        // parameters: vertex factors A_v (image = A A^*), edge images B_e
        std::vector<Eigen::MatrixXcd> vertex_factor(
            static_cast<std::size_t>(a.num_vertices));
        std::vector<Eigen::MatrixXcd> edge_param(static_cast<std::size_t>(a.num_edges));
        auto random_matrix = [&] {
            Eigen::MatrixXcd m(dim, dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    m(i, j) = std::complex<double>(gauss(rng), gauss(rng));
            return m;
        };
        for (auto& m : vertex_factor) m = random_matrix();
        for (auto& m : edge_param) m = random_matrix();

        MatrixRep rep;
        rep.dim = dim;
        rep.images.assign(static_cast<std::size_t>(a.total()),
                          Eigen::MatrixXcd::Zero(dim, dim));
        auto refresh = [&] {
            for (int v = 0; v < a.num_vertices; ++v)
                rep.images[static_cast<std::size_t>(v)] =
                    vertex_factor[static_cast<std::size_t>(v)] *
                    vertex_factor[static_cast<std::size_t>(v)].adjoint();
            for (int e = 0; e < a.num_edges; ++e) {
                rep.images[static_cast<std::size_t>(P.edge_letter(e))] =
                    edge_param[static_cast<std::size_t>(e)];
                rep.images[static_cast<std::size_t>(P.star_letter(e))] =
                    edge_param[static_cast<std::size_t>(e)].adjoint();
            }
        };
        refresh();
        double loss = 0;
        int it = 0;
        for (; it < per_run; ++it) {
            RepresentationGradient lg = representation_loss_gradient(P, rep);
            loss = lg.loss;
            if (!std::isfinite(loss)) break;  // diverged; next restart
            if (loss < 1e-18) break;
            for (int v = 0; v < a.num_vertices; ++v) {
                const Eigen::MatrixXcd& gv = lg.grad[static_cast<std::size_t>(v)];
                vertex_factor[static_cast<std::size_t>(v)] -=
                    step * (gv + gv.adjoint()) * vertex_factor[static_cast<std::size_t>(v)];
            }
            for (int e = 0; e < a.num_edges; ++e) {
                edge_param[static_cast<std::size_t>(e)] -=
                    step * (lg.grad[static_cast<std::size_t>(P.edge_letter(e))] +
                            lg.grad[static_cast<std::size_t>(P.star_letter(e))].adjoint());
            }
            refresh();
        }
        if (std::isfinite(loss)) loss = representation_loss_gradient(P, rep).loss;
        double residual = std::isfinite(loss) ? std::sqrt(loss) : std::numeric_limits<double>::infinity();
        if (residual < best.residual) {
            best.rep = rep;
            best.residual = residual;
            best.iterations = it;
        }
    }
    best.converged = best.residual <= 1e-6;
    return best;
}

}  // namespace procstar
