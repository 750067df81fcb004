#ifndef SPOHN_IO_HPP
#define SPOHN_IO_HPP

#include <string>

#include "spohn/game.hpp"
#include "spohn/graph.hpp"

namespace spohn {

// Game JSON: {"players": n, "choices": [d1,...], "payoffs": [tensor_1,...]}:
// each tensor is a flat array (player 1 slowest, strategies 1-based) of
// integers or strings ("3", "-1/2", "0.25") parsed exactly. Non-integral
// JSON numbers are rejected to avoid silent precision loss.
Game game_from_json(const std::string& text);
std::string game_to_json(const Game& g);

// Graph JSON: {"vertices": n, "edges": [[a,b],...]} with 1-based vertices.
Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

// Resolves a named builtin or reads a JSON file.
Game load_game(const std::string& name_or_path);
Graph load_graph(const std::string& name_or_path);

}  // namespace spohn

#endif
