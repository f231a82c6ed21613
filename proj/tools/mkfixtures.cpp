// Writes the example corpus (simplicial sets, maps, a filtration and two
// presentations) as JSON files ready for the procstar CLI.

#include <filesystem>
#include <iostream>

#include <nlohmann/json.hpp>

#include "procstar/fixtures.hpp"
#include "procstar/homotopy.hpp"
#include "procstar/io.hpp"

namespace ps = procstar;
namespace fs = std::filesystem;

int main(int argc, char** argv) {
    fs::path dir = argc > 1 ? argv[1] : "fixtures";
    fs::create_directories(dir);
    auto put = [&](const std::string& name, const nlohmann::json& j) {
        ps::io::save_file((dir / name).string(), j);
        std::cout << (dir / name).string() << "\n";
    };

    ps::FiniteSimplicialSet d0 = ps::standard_simplex(0);
    ps::FiniteSimplicialSet d1 = ps::standard_simplex(1);
    ps::FiniteSimplicialSet d2 = ps::standard_simplex(2);
    ps::FiniteSimplicialSet d3 = ps::standard_simplex(3);
    ps::FiniteSimplicialSet circle = ps::minimal_circle();
    ps::FiniteSimplicialSet sd_circle = ps::subdivide(circle).sd;
    ps::FiniteSimplicialSet two = ps::two_points();

    put("delta0.sset.json", ps::io::sset_to_json(d0));
    put("delta1.sset.json", ps::io::sset_to_json(d1));
    put("delta2.sset.json", ps::io::sset_to_json(d2));
    put("delta3.sset.json", ps::io::sset_to_json(d3));
    put("circle.sset.json", ps::io::sset_to_json(circle));
    put("sd_circle.sset.json", ps::io::sset_to_json(sd_circle));
    put("two_points.sset.json", ps::io::sset_to_json(two));

    put("id_delta1.smap.json", ps::io::smap_to_json(ps::identity_map(d1)));
    put("collapse_delta1.smap.json", ps::io::smap_to_json(ps::collapse_to_point(d1)));
    put("collapse_delta2.smap.json", ps::io::smap_to_json(ps::collapse_to_point(d2)));
    put("fold.smap.json", ps::io::smap_to_json(ps::fold_map()));
    put("vertex0_into_delta1.smap.json",
        ps::io::smap_to_json(ps::classifying_map(d1, *d1.find("0"))));
    put("vertex1_into_delta1.smap.json",
        ps::io::smap_to_json(ps::classifying_map(d1, *d1.find("1"))));
    put("edge01_into_delta2.smap.json",
        ps::io::smap_to_json(ps::classifying_map(d2, *d2.find("01"))));
    put("edge_into_circle.smap.json",
        ps::io::smap_to_json(ps::classifying_map(circle, *circle.find("e"))));

    put("points_to_point.filtration.json",
        ps::io::filtration_to_json(ps::points_to_point_filtration(5)));

    put("delta0.presentation.json", ps::io::presentation_to_json(ps::present(d0)));
    put("delta1.presentation.json", ps::io::presentation_to_json(ps::present(d1)));

    // constant homotopy over the collapse, ready for check-homotopy
    ps::HomotopyDiagram diag = ps::constant_homotopy(ps::collapse_to_point(d1));
    put("collapse_homotopy_f1.smap.json", ps::io::smap_to_json(diag.f1));
    put("collapse_homotopy_f2.smap.json", ps::io::smap_to_json(diag.f2));
    put("collapse_homotopy_gamma.smap.json", ps::io::smap_to_json(diag.gamma));
    return 0;
}
