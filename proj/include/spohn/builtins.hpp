#ifndef SPOHN_BUILTINS_HPP
#define SPOHN_BUILTINS_HPP

#include <optional>
#include <string>

#include "spohn/game.hpp"
#include "spohn/graph.hpp"

namespace spohn {

// Named graphs: line4, cycle4, figure2 (7-vertex decomposable graph with
// maximal cliques 123, 2345, 2356, 567), g4-example (edges {1,2}, {3,4}).
std::optional<Graph> builtin_graph(const std::string& name);

// Named games: example-4player, the binary 4-player game whose (2,2) system
// factors into the four line-times-quadric products.
std::optional<Game> builtin_game(const std::string& name);

Game example_4player();
Graph line4();
Graph cycle4();
Graph figure2();
Graph g4_example();

// Random integer games with entries uniform on [-10, 10], deterministic in
// the seed; the workhorse for the generic-game experiments.
Game random_binary_game(int players, uint64_t seed);

}  // namespace spohn

#endif
