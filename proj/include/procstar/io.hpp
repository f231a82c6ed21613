#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "procstar/functor.hpp"
#include "procstar/poset.hpp"
#include "procstar/presentation.hpp"
#include "procstar/repcheck.hpp"
#include "procstar/sset.hpp"

namespace procstar::io {

using json = nlohmann::json;

// "sset.v1"
json sset_to_json(const FiniteSimplicialSet& X);
FiniteSimplicialSet sset_from_json(const json& j);

// "smap.v1" (source and target embedded; bit-exact round trip)
json smap_to_json(const SimplicialMap& f);
SimplicialMap smap_from_json(const json& j);

// "filtration.v1"
json filtration_to_json(const Filtration& f);
Filtration filtration_from_json(const json& j);

// "quiver.v1"
json quiver_to_json(const DoubledQuiver& Q);

// "presentation.v1" — the relation list is canonical; parsing validates it
// against the list regenerated from the generators.
json presentation_to_json(const Presentation& P);
Presentation presentation_from_json(const json& j);

// "genmap.v1"
json genmap_to_json(const GeneratorMap& g);
GeneratorMap genmap_from_json(const json& j);

// "rep.v1" (row-major complex matrices as [re, im] pairs; vertices and
// unstarred edges stored, adjoints derived)
json rep_to_json(const MatrixRep& rep, const Presentation& P);
MatrixRep rep_from_json(const json& j, const Presentation& P);

std::string dump_canonical(const json& j);
json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);
void save_text(const std::string& path, const std::string& text);

}  // namespace procstar::io
