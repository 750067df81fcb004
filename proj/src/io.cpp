#include "spohn/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spohn/builtins.hpp"

namespace spohn {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<int64_t>()));
  if (v.is_string()) return rat_from_string(v.get<std::string>());
  if (v.is_number_float())
    throw std::invalid_argument(
        "non-integer JSON numbers are rejected; pass exact values as strings");
  throw std::invalid_argument("payoff entries must be integers or strings");
}

std::string rational_to_string(const Rational& r) {
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) s += "/" + r.get_den().get_str();
  return s;
}

}  // namespace

Game game_from_json(const std::string& text) {
  json j = json::parse(text);
  int players = j.at("players").get<int>();
  std::vector<int> choices = j.at("choices").get<std::vector<int>>();
  if (static_cast<int>(choices.size()) != players)
    throw std::invalid_argument("choices length must equal the player count");
  const json& payoffs = j.at("payoffs");
  if (!payoffs.is_array() || static_cast<int>(payoffs.size()) != players)
    throw std::invalid_argument("payoffs must hold one tensor per player");
  std::vector<std::vector<Rational>> tensors;
  for (const auto& tensor : payoffs) {
    std::vector<Rational> flat;
    flat.reserve(tensor.size());
    for (const auto& v : tensor) flat.push_back(rational_from_json(v));
    tensors.push_back(std::move(flat));
  }
  return Game(std::move(choices), std::move(tensors));
}

std::string game_to_json(const Game& g) {
  json j;
  j["players"] = g.player_count();
  j["choices"] = g.choices();
  json payoffs = json::array();
  for (int i = 1; i <= g.player_count(); ++i) {
    json tensor = json::array();
    for (const auto& v : g.payoff_tensor(i)) tensor.push_back(rational_to_string(v));
    payoffs.push_back(std::move(tensor));
  }
  j["payoffs"] = std::move(payoffs);
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  json j = json::parse(text);
  int n = j.at("vertices").get<int>();
  Graph g(n);
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edges must be pairs");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

std::string graph_to_json(const Graph& g) {
  json j;
  j["vertices"] = g.vertex_count();
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back(json::array({a, b}));
  j["edges"] = std::move(edges);
  return j.dump();
}

namespace {
std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}
}  // namespace

Game load_game(const std::string& name_or_path) {
  if (auto g = builtin_game(name_or_path)) return *g;
  return game_from_json(read_file(name_or_path));
}

Graph load_graph(const std::string& name_or_path) {
  if (auto g = builtin_graph(name_or_path)) return *g;
  return graph_from_json(read_file(name_or_path));
}

}  // namespace spohn
