#include "spohn/builtins.hpp"

namespace spohn {

Graph line4() { return Graph(4, {{1, 2}, {2, 3}, {3, 4}}); }

Graph cycle4() { return Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

Graph figure2() {
  Graph g(7);
  auto clique = [&](std::initializer_list<int> vs) {
    std::vector<int> v(vs);
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = i + 1; j < v.size(); ++j) g.add_edge(v[i], v[j]);
  };
  clique({1, 2, 3});
  clique({2, 3, 4, 5});
  clique({2, 3, 5, 6});
  clique({5, 6, 7});
  return g;
}

Graph g4_example() { return Graph(4, {{1, 2}, {3, 4}}); }

std::optional<Graph> builtin_graph(const std::string& name) {
  if (name == "line4") return line4();
  if (name == "cycle4") return cycle4();
  if (name == "figure2") return figure2();
  if (name == "g4-example") return g4_example();
  return std::nullopt;
}

Game example_4player() {
  std::vector<int> choices(4, 2);
  std::vector<std::vector<Rational>> tensors(4, std::vector<Rational>(16, Rational(0)));
  auto set = [&](int player, int j1, int j2, int j3, int j4, long value) {
    long idx = ((j1 - 1) * 2 + (j2 - 1)) * 4 + (j3 - 1) * 2 + (j4 - 1);
    tensors[player - 1][idx] = value;
  };
  // Player 1: block (j3,j4)=(1,1) carries 1,2,3,4; block (2,2) carries
  // 6,4,2,0 so the polynomial factors as (s11 - 2 s22) times a quadric.
  set(1, 1, 1, 1, 1, 1);
  set(1, 1, 2, 1, 1, 2);
  set(1, 2, 1, 1, 1, 3);
  set(1, 2, 2, 1, 1, 4);
  set(1, 1, 1, 2, 2, 6);
  set(1, 1, 2, 2, 2, 4);
  set(1, 2, 1, 2, 2, 2);
  // Player 2: block (1,2) carries 1,3,2,4; block (2,1) carries the -10..-16
  // arithmetic square.
  set(2, 1, 1, 1, 2, 1);
  set(2, 1, 2, 1, 2, 3);
  set(2, 2, 1, 1, 2, 2);
  set(2, 2, 2, 1, 2, 4);
  set(2, 1, 1, 2, 1, -10);
  set(2, 1, 2, 2, 1, -14);
  set(2, 2, 1, 2, 1, -12);
  set(2, 2, 2, 2, 1, -16);
  // Players 3 and 4 are the images of players 1 and 2 under swapping the
  // two blocks of the partition.
  set(3, 1, 1, 1, 1, 1);
  set(3, 1, 1, 1, 2, 2);
  set(3, 1, 1, 2, 1, 3);
  set(3, 1, 1, 2, 2, 4);
  set(3, 2, 2, 1, 1, 6);
  set(3, 2, 2, 1, 2, 4);
  set(3, 2, 2, 2, 1, 2);
  set(4, 1, 2, 1, 1, 1);
  set(4, 1, 2, 1, 2, 3);
  set(4, 1, 2, 2, 1, 2);
  set(4, 1, 2, 2, 2, 4);
  set(4, 2, 1, 1, 1, -10);
  set(4, 2, 1, 1, 2, -14);
  set(4, 2, 1, 2, 1, -12);
  set(4, 2, 1, 2, 2, -16);
  return Game(choices, std::move(tensors));
}

std::optional<Game> builtin_game(const std::string& name) {
  if (name == "example-4player") return example_4player();
  return std::nullopt;
}

namespace {
uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

Game random_binary_game(int players, uint64_t seed) {
  long total = 1L << players;
  std::vector<std::vector<Rational>> tensors(players, std::vector<Rational>(total));
  uint64_t state = splitmix64(seed ^ 0x9a3e5u);
  for (int i = 0; i < players; ++i)
    for (long w = 0; w < total; ++w) {
      state = splitmix64(state);
      tensors[i][w] = Rational(static_cast<long>(state % 21) - 10);
    }
  return Game(std::vector<int>(players, 2), std::move(tensors));
}

}  // namespace spohn
