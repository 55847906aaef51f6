#pragma once

// JSON schemas and file loading.
//
//   digraph: {"n": 4, "arcs": [[0,1],[2,0],[1,3],[2,3]]}
//   graph:   {"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]}
//   element: {"basis": "Psi", "terms": [{"index":[2,1],"num":-1,"den":1}, ...]}
//   generator polynomial: {"terms": [{"word":[1,1],"num":1,"den":1}, ...]}
//
// Digraphs also load from plain text: one "u v" arc per line, '#' starts a
// comment, vertex count inferred as 1 + the largest endpoint.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "cnsf/chromatic.hpp"
#include "cnsf/digraph.hpp"
#include "cnsf/nsym.hpp"
#include "cnsf/sym.hpp"

namespace cnsf {

nlohmann::json to_json(const Digraph& d);
nlohmann::json to_json(const UndirectedGraph& g);
nlohmann::json to_json(const NSymElement& e);
nlohmann::json to_json(const SymElement& e);
nlohmann::json to_json(const GeneratorPolynomial& p);

Digraph digraph_from_json(const nlohmann::json& j);
UndirectedGraph graph_from_json(const nlohmann::json& j);

// Dispatches on content: JSON if the first non-space byte is '{',
// otherwise the plain-text arc list.
Digraph load_digraph(const std::filesystem::path& path);

// Loads D1.json, D2.json, ... from a directory, consecutively from 1.
GeneratorFamily load_family(const std::filesystem::path& dir);

} // namespace cnsf
