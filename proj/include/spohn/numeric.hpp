#ifndef SPOHN_NUMERIC_HPP
#define SPOHN_NUMERIC_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "spohn/game.hpp"
#include "spohn/graph.hpp"
#include "spohn/spohnci.hpp"

namespace spohn {

using Cxd = std::complex<double>;

struct SolveConfig {
  explicit SolveConfig(uint64_t seed_value) : seed(seed_value) {}

  double tol = 1e-10;             // residual tolerance for Newton convergence
  double validation_tol = 1e-9;   // ambient residual bound for accepted points
  int max_iter = 100;
  int starts = 200;
  double start_lo = 0.0, start_hi = 1.0;
  double dedup_radius = 1e-6;
  int slice_retries = 10;         // slice redraws per requested point
  int probe_points = 5;
  uint64_t seed;
};

struct EquilibriumPoint {
  std::vector<double> torus;        // dehomogenized torus coordinates
  std::vector<double> probability;  // normalized ambient distribution
  double quadric_residual = 0;
  double minor_residual = 0;
  bool totally_mixed = false;
  std::vector<double> payoffs;
};

// Multistart Newton for a square polynomial system; unknowns are exactly the
// variables of the system's table. Deduplicated converged solutions, sorted,
// deterministic for a fixed seed. complex_starts draws starts (and therefore
// iterates) with nonzero imaginary parts.
std::vector<std::vector<Cxd>> newton_solve(const std::vector<Polynomial>& system,
                                           const SolveConfig& cfg, bool complex_starts = false);

struct NashSolveResult {
  std::vector<EquilibriumPoint> points;
  bool degenerate_warning = false;  // some player's polynomial vanished identically
};

NashSolveResult solve_totally_mixed_nash(const Game& game, const SolveConfig& cfg);

std::vector<EquilibriumPoint> sample_ci_equilibria(const Graph& g, const Game& game, int count,
                                                   const SolveConfig& cfg);

struct ProbeResult {
  int dimension = -1;                       // modal local dimension
  std::vector<int> per_point;               // local dimension at each sampled point
  std::vector<std::vector<double>> sv_profiles;  // singular values per point
};

// Jacobian-rank dimension probe at sampled points of the torus variety,
// mapped to ambient coordinates. Points need not be positive or real; the
// variety is probed away from the coordinate and marginal hyperplanes.
ProbeResult dimension_probe(const Graph& g, const Game& game, const SolveConfig& cfg);

std::vector<std::vector<double>> payoff_region_sample(const Graph& g, const Game& game, int count,
                                                      const SolveConfig& cfg,
                                                      std::vector<EquilibriumPoint>* points = nullptr);

bool pareto_dominates(const std::vector<double>& a, const std::vector<double>& b);

// Ambient defining equations used for validation and the probe: conditional
// independence quadrics plus the Spohn minors. For disjoint-clique graphs the
// quadrics are the block-versus-rest Segre generators, which generate the
// same ideal as the full global Markov set.
std::vector<Polynomial> ambient_equations(const Graph& g, const Game& game,
                                          const VarTablePtr& ptab);

}  // namespace spohn

#endif
