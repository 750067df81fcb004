#include "spohn/numeric.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <unordered_set>

#include "spohn/cimodel.hpp"

namespace spohn {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic stream independent of platform library distributions.
struct Rng {
  uint64_t state;
  Rng(uint64_t seed, uint64_t salt1, uint64_t salt2 = 0) {
    state = splitmix64(seed ^ splitmix64(salt1 ^ splitmix64(salt2)));
  }
  uint64_t next() {
    state = splitmix64(state);
    return state;
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

struct CompiledTerm {
  Cxd coef;
  std::vector<std::pair<int, int>> powers;  // (variable, exponent)
};

struct CompiledPoly {
  std::vector<CompiledTerm> terms;

  Cxd eval(const std::vector<Cxd>& x) const {
    Cxd sum = 0;
    for (const auto& t : terms) {
      Cxd m = t.coef;
      for (auto [v, e] : t.powers)
        for (int i = 0; i < e; ++i) m *= x[v];
      sum += m;
    }
    return sum;
  }
};

CompiledPoly compile(const Polynomial& p) {
  CompiledPoly cp;
  for (const auto& t : p.terms()) {
    CompiledTerm ct;
    ct.coef = to_double(t.coef);
    for (size_t v = 0; v < t.exps.size(); ++v)
      if (t.exps[v] > 0) ct.powers.emplace_back(static_cast<int>(v), t.exps[v]);
    cp.terms.push_back(std::move(ct));
  }
  return cp;
}

struct CompiledSystem {
  int nvars = 0;
  std::vector<CompiledPoly> polys;
  std::vector<std::vector<CompiledPoly>> jac;  // [equation][variable]

  static CompiledSystem build(const std::vector<Polynomial>& system) {
    if (system.empty()) throw std::invalid_argument("empty system");
    CompiledSystem cs;
    cs.nvars = system[0].table()->size();
    for (const auto& p : system) {
      cs.polys.push_back(compile(p));
      std::vector<CompiledPoly> row;
      row.reserve(cs.nvars);
      for (int v = 0; v < cs.nvars; ++v) row.push_back(compile(p.partial_derivative(v)));
      cs.jac.push_back(std::move(row));
    }
    return cs;
  }

  void add_affine(const std::vector<Cxd>& coefs, Cxd constant) {
    CompiledPoly poly;
    std::vector<CompiledPoly> row(nvars);
    for (int v = 0; v < nvars; ++v) {
      if (coefs[v] == Cxd(0, 0)) continue;
      poly.terms.push_back({coefs[v], {{v, 1}}});
      row[v].terms.push_back({coefs[v], {}});
    }
    poly.terms.push_back({constant, {}});
    polys.push_back(std::move(poly));
    jac.push_back(std::move(row));
  }
};

int solver_threads() {
  if (const char* env = std::getenv("SPOHN_LAB_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 4u));
}

std::vector<std::vector<Cxd>> newton_core(const CompiledSystem& cs, const SolveConfig& cfg,
                                          bool complex_starts, const std::vector<Cxd>* center,
                                          uint64_t salt) {
  int m = static_cast<int>(cs.polys.size());
  if (m != cs.nvars) throw std::invalid_argument("Newton requires a square system");

  std::vector<std::vector<Cxd>> found(cfg.starts);
  std::vector<char> ok(cfg.starts, 0);

  auto run_start = [&](int s) {
    Rng rng(cfg.seed, salt, 0x100000 + static_cast<uint64_t>(s));
    std::vector<Cxd> x(cs.nvars);
    for (int v = 0; v < cs.nvars; ++v) {
      double re, im = 0;
      if (center) {
        re = (*center)[v].real() + 1.5 * (rng.uniform() - 0.5);
        im = (*center)[v].imag();
        if (complex_starts) im += 1.5 * (rng.uniform() - 0.5);
      } else {
        re = rng.uniform(cfg.start_lo, cfg.start_hi);
        if (complex_starts) im = rng.uniform(-1.0, 1.0);
      }
      x[v] = Cxd(re, im);
    }
    Eigen::MatrixXcd J(m, cs.nvars);
    Eigen::VectorXcd Fv(m);
    for (int it = 0; it <= cfg.max_iter; ++it) {
      double res = 0;
      for (int e = 0; e < m; ++e) {
        Cxd val = cs.polys[e].eval(x);
        Fv(e) = val;
        res = std::max(res, std::abs(val));
      }
      if (!std::isfinite(res)) return;
      if (res < cfg.tol) {
        found[s] = x;
        ok[s] = 1;
        return;
      }
      if (it == cfg.max_iter) return;
      for (int e = 0; e < m; ++e)
        for (int v = 0; v < cs.nvars; ++v) J(e, v) = cs.jac[e][v].eval(x);
      Eigen::VectorXcd delta = J.partialPivLu().solve(-Fv);
      double xnorm = 0;
      for (int v = 0; v < cs.nvars; ++v) {
        x[v] += delta(v);
        xnorm = std::max(xnorm, std::abs(x[v]));
      }
      if (!std::isfinite(xnorm) || xnorm > 1e9) return;
    }
  };

  int nthreads = std::min(solver_threads(), cfg.starts);
  if (nthreads <= 1) {
    for (int s = 0; s < cfg.starts; ++s) run_start(s);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next_start{0};
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        int s;
        while ((s = next_start.fetch_add(1)) < cfg.starts) run_start(s);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<std::vector<Cxd>> solutions;
  for (int s = 0; s < cfg.starts; ++s)
    if (ok[s]) solutions.push_back(std::move(found[s]));
  std::sort(solutions.begin(), solutions.end(), [](const auto& a, const auto& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
      if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
  });
  std::vector<std::vector<Cxd>> dedup;
  for (auto& sol : solutions) {
    bool dup = false;
    for (auto& kept : dedup) {
      double dist = 0;
      for (size_t i = 0; i < sol.size(); ++i) dist = std::max(dist, std::abs(sol[i] - kept[i]));
      if (dist < cfg.dedup_radius) {
        dup = true;
        break;
      }
    }
    if (!dup) dedup.push_back(std::move(sol));
  }
  return dedup;
}

// Affine chart of the torus: the all-2 variable of every block is pinned to 1
// and removed from the variable table.
struct Chart {
  VarTablePtr reduced;
  std::vector<int> reduced_to_full;
  std::vector<Polynomial> polys;

  std::vector<Cxd> full_point(const ParamMap& pm, const std::vector<Cxd>& x) const {
    std::vector<Cxd> full(pm.torus->size(), Cxd(1, 0));
    for (size_t i = 0; i < reduced_to_full.size(); ++i) full[reduced_to_full[i]] = x[i];
    return full;
  }
};

Chart make_chart(const ParamMap& pm, const std::vector<Polynomial>& polys) {
  std::vector<char> dropped(pm.torus->size(), 0);
  for (size_t c = 0; c < pm.cliques.size(); ++c) dropped[pm.all_two_var(static_cast<int>(c))] = 1;
  Chart chart;
  std::vector<std::string> names;
  for (int v = 0; v < pm.torus->size(); ++v)
    if (!dropped[v]) {
      chart.reduced_to_full.push_back(v);
      names.push_back(pm.torus->name(v));
    }
  chart.reduced = std::make_shared<VarTable>(std::move(names));
  for (const auto& p : polys) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      ExpVec e(chart.reduced->size(), 0);
      for (size_t i = 0; i < chart.reduced_to_full.size(); ++i)
        e[i] = t.exps[chart.reduced_to_full[i]];
      terms.push_back({std::move(e), t.coef});
    }
    chart.polys.push_back(Polynomial::from_terms(chart.reduced, std::move(terms)));
  }
  return chart;
}

std::vector<Cxd> push_to_ambient(const ParamMap& pm, const std::vector<Cxd>& full_torus) {
  std::vector<Cxd> p(pm.image.size());
  for (size_t w = 0; w < pm.image.size(); ++w) {
    Cxd m = 1;
    const ExpVec& e = pm.image[w];
    for (size_t v = 0; v < e.size(); ++v)
      for (int i = 0; i < e[v]; ++i) m *= full_torus[v];
    p[w] = m;
  }
  return p;
}

// One-block-versus-rest exchange quadrics of the Segre product; they generate
// the same ideal as the full global Markov set of a disjoint-clique graph.
std::vector<Polynomial> segre_generators(const Partition& part, const Game& game,
                                         const VarTablePtr& ptab) {
  int n = game.player_count();
  std::vector<Polynomial> out;
  std::unordered_set<std::string> seen;
  for (const auto& block : part.blocks) {
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
      if (std::find(block.begin(), block.end(), v) == block.end()) rest.push_back(v);
    if (rest.empty()) continue;
    long bs = 1L << block.size(), rs = 1L << rest.size();
    auto flat = [&](long bidx, long ridx) {
      std::vector<int> profile(n, 1);
      for (size_t t = 0; t < block.size(); ++t)
        profile[block[t] - 1] = static_cast<int>((bidx >> (block.size() - 1 - t)) & 1) + 1;
      for (size_t t = 0; t < rest.size(); ++t)
        profile[rest[t] - 1] = static_cast<int>((ridx >> (rest.size() - 1 - t)) & 1) + 1;
      long idx = 0;
      for (int v = 0; v < n; ++v) idx = idx * 2 + (profile[v] - 1);
      return idx;
    };
    for (long b1 = 0; b1 < bs; ++b1)
      for (long b2 = b1 + 1; b2 < bs; ++b2)
        for (long r1 = 0; r1 < rs; ++r1)
          for (long r2 = r1 + 1; r2 < rs; ++r2) {
            Polynomial q = Polynomial::variable(ptab, flat(b1, r1)) *
                               Polynomial::variable(ptab, flat(b2, r2)) -
                           Polynomial::variable(ptab, flat(b1, r2)) *
                               Polynomial::variable(ptab, flat(b2, r1));
            q = q.primitive();
            if (!q.is_zero() && seen.insert(q.to_string()).second) out.push_back(std::move(q));
          }
  }
  return out;
}

struct AmbientValidator {
  VarTablePtr ptab;
  std::vector<Polynomial> quadrics;
  std::vector<Polynomial> minors;
  std::vector<CompiledPoly> cquadrics, cminors;
  // Sparse Jacobian rows: only the variables that actually occur.
  std::vector<std::vector<std::pair<int, CompiledPoly>>> jac;

  static AmbientValidator build(const Graph& g, const Game& game, bool with_jacobian) {
    AmbientValidator av;
    av.ptab = probability_table(game);
    if (auto part = g.is_disjoint_cliques())
      av.quadrics = segre_generators(*part, game, av.ptab);
    else
      av.quadrics = model_quadrics(g, game.choices(), av.ptab);
    av.minors = spohn_minors(game, av.ptab);
    for (const auto& q : av.quadrics) av.cquadrics.push_back(compile(q));
    for (const auto& q : av.minors) av.cminors.push_back(compile(q));
    if (with_jacobian) {
      auto add_rows = [&](const std::vector<Polynomial>& eqs) {
        for (const auto& q : eqs) {
          std::vector<char> occurs(av.ptab->size(), 0);
          for (const auto& t : q.terms())
            for (size_t v = 0; v < t.exps.size(); ++v)
              if (t.exps[v] > 0) occurs[v] = 1;
          std::vector<std::pair<int, CompiledPoly>> row;
          for (int v = 0; v < av.ptab->size(); ++v)
            if (occurs[v]) row.emplace_back(v, compile(q.partial_derivative(v)));
          av.jac.push_back(std::move(row));
        }
      };
      add_rows(av.quadrics);
      add_rows(av.minors);
    }
    return av;
  }

  std::pair<double, double> residuals(const std::vector<Cxd>& p) const {
    double qres = 0, mres = 0;
    for (const auto& q : cquadrics) qres = std::max(qres, std::abs(q.eval(p)));
    for (const auto& q : cminors) mres = std::max(mres, std::abs(q.eval(p)));
    return {qres, mres};
  }
};

// Exact singular values of the stacked Jacobian via Gram-preserving
// accumulation: replacing rows [B; batch] by S V^H of their SVD keeps B^H B,
// so the final singular values equal those of the full matrix while memory
// stays O(cols^2).
std::vector<double> stacked_singular_values(const AmbientValidator& av, const std::vector<Cxd>& p) {
  int cols = av.ptab->size();
  Eigen::MatrixXcd B(0, cols);
  size_t row = 0;
  const size_t batch_size = 256;
  while (row < av.jac.size()) {
    size_t take = std::min(batch_size, av.jac.size() - row);
    Eigen::MatrixXcd S(B.rows() + static_cast<long>(take), cols);
    if (B.rows() > 0) S.topRows(B.rows()) = B;
    S.bottomRows(static_cast<long>(take)).setZero();
    for (size_t r = 0; r < take; ++r)
      for (const auto& [v, dq] : av.jac[row + r])
        S(B.rows() + static_cast<long>(r), v) = dq.eval(p);
    row += take;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(S, Eigen::ComputeThinV);
    Eigen::VectorXd sv = svd.singularValues();
    long keep = std::min<long>(sv.size(), cols);
    B = sv.head(keep).cast<Cxd>().asDiagonal() * svd.matrixV().leftCols(keep).adjoint();
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(B);
  Eigen::VectorXd sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

std::vector<double> real_parts(const std::vector<Cxd>& x) {
  std::vector<double> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i].real();
  return out;
}

double max_imag(const std::vector<Cxd>& x) {
  double m = 0;
  for (const auto& v : x) m = std::max(m, std::abs(v.imag()));
  return m;
}

// Cuts the dehomogenized torus variety to dimension zero with random affine
// slices through a random anchor, then runs multistart Newton around it.
struct SliceSampler {
  SpohnCISystem sys;
  Chart chart;
  AmbientValidator av;
  CompiledSystem base;
  int unknowns;
  int excess;

  SliceSampler(const Graph& g, const Game& game, bool with_jacobian)
      : sys(build_system(g, game)),
        chart(make_chart(sys.pm, sys.F)),
        av(AmbientValidator::build(g, game, with_jacobian)),
        base(CompiledSystem::build(chart.polys)) {
    unknowns = chart.reduced->size();
    excess = unknowns - static_cast<int>(chart.polys.size());
    if (excess < 0) throw std::logic_error("more equations than torus unknowns");
  }

  std::vector<std::vector<Cxd>> solve_once(const SolveConfig& cfg, bool complex_mode,
                                           uint64_t attempt) {
    Rng rng(cfg.seed, 0xabcdef, attempt);
    std::vector<Cxd> anchor(unknowns);
    for (int v = 0; v < unknowns; ++v)
      anchor[v] = complex_mode ? Cxd(rng.uniform(0.3, 1.7), rng.uniform(-0.7, 0.7))
                               : Cxd(rng.uniform(0.25, 1.75), 0);
    CompiledSystem cs = base;
    for (int s = 0; s < excess; ++s) {
      std::vector<Cxd> coefs(unknowns);
      Cxd constant = 0;
      for (int v = 0; v < unknowns; ++v) {
        Cxd c = complex_mode ? Cxd(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))
                             : Cxd(rng.uniform(-1.0, 1.0), 0);
        coefs[v] = c;
        constant -= c * anchor[v];
      }
      cs.add_affine(coefs, constant);
    }
    return newton_core(cs, cfg, complex_mode, &anchor, 0x515ce000 + attempt);
  }
};

int mode_of(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  int best = values[0], best_count = 0;
  for (size_t i = 0; i < values.size();) {
    size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    if (static_cast<int>(j - i) > best_count) {
      best_count = static_cast<int>(j - i);
      best = values[i];
    }
    i = j;
  }
  return best;
}

}  // namespace

std::vector<std::vector<Cxd>> newton_solve(const std::vector<Polynomial>& system,
                                           const SolveConfig& cfg, bool complex_starts) {
  return newton_core(CompiledSystem::build(system), cfg, complex_starts, nullptr, 0);
}

NashSolveResult solve_totally_mixed_nash(const Game& game, const SolveConfig& cfg) {
  if (!game.is_binary()) throw std::invalid_argument("binary game required");
  Graph empty(game.player_count());
  SpohnCISystem sys = build_system(empty, game);
  NashSolveResult result;
  AmbientValidator av = AmbientValidator::build(empty, game, false);

  for (const auto& f : sys.F)
    if (f.is_zero()) result.degenerate_warning = true;
  if (result.degenerate_warning) {
    // Every positive point solves the vanished equations; report the
    // barycenter as a representative of the non-isolated solution set.
    long total = game.profile_count();
    EquilibriumPoint pt;
    pt.torus.assign(game.player_count(), 1.0);
    pt.probability.assign(total, 1.0 / static_cast<double>(total));
    std::vector<Cxd> pc(pt.probability.begin(), pt.probability.end());
    auto [qres, mres] = av.residuals(pc);
    pt.quadric_residual = qres;
    pt.minor_residual = mres;
    pt.totally_mixed = true;
    pt.payoffs = payoff_map(game, Distribution{pt.probability});
    result.points.push_back(std::move(pt));
    return result;
  }

  Chart chart = make_chart(sys.pm, sys.F);
  auto solutions = newton_core(CompiledSystem::build(chart.polys), cfg, false, nullptr, 1);

  for (const auto& sol : solutions) {
    if (max_imag(sol) > 1e-8) continue;
    bool positive = true;
    for (const auto& v : sol)
      if (v.real() <= 0) positive = false;
    if (!positive) continue;
    auto full = chart.full_point(sys.pm, sol);
    auto pc = push_to_ambient(sys.pm, full);
    double sum = 0;
    for (auto& v : pc) sum += v.real();
    if (std::abs(sum) < 1e-12) continue;
    EquilibriumPoint pt;
    pt.torus = real_parts(sol);
    pt.probability.resize(pc.size());
    for (size_t i = 0; i < pc.size(); ++i) pt.probability[i] = pc[i].real() / sum;
    std::vector<Cxd> pnorm(pt.probability.begin(), pt.probability.end());
    auto [qres, mres] = av.residuals(pnorm);
    if (qres > cfg.validation_tol || mres > cfg.validation_tol) continue;
    pt.quadric_residual = qres;
    pt.minor_residual = mres;
    double minp = 1;
    for (double v : pt.probability) minp = std::min(minp, v);
    if (minp <= 0) continue;
    pt.totally_mixed = true;
    pt.payoffs = payoff_map(game, Distribution{pt.probability});
    result.points.push_back(std::move(pt));
  }
  return result;
}

std::vector<EquilibriumPoint> sample_ci_equilibria(const Graph& g, const Game& game, int count,
                                                   const SolveConfig& cfg) {
  SliceSampler sampler(g, game, false);
  std::vector<EquilibriumPoint> points;
  std::vector<std::vector<double>> kept_probs;

  auto consider = [&](const std::vector<Cxd>& sol) {
    if (max_imag(sol) > 1e-7) return;
    auto full = sampler.chart.full_point(sampler.sys.pm, sol);
    auto pc = push_to_ambient(sampler.sys.pm, full);
    double sum = 0;
    for (auto& v : pc) sum += v.real();
    if (std::abs(sum) < 1e-12) return;
    std::vector<double> prob(pc.size());
    double minp = 1e300;
    for (size_t i = 0; i < pc.size(); ++i) {
      prob[i] = pc[i].real() / sum;
      minp = std::min(minp, prob[i]);
    }
    if (minp <= 1e-12) return;
    for (const auto& kp : kept_probs) {
      double dist = 0;
      for (size_t i = 0; i < prob.size(); ++i) dist = std::max(dist, std::abs(prob[i] - kp[i]));
      if (dist < cfg.dedup_radius) return;
    }
    std::vector<Cxd> pnorm(prob.begin(), prob.end());
    auto [qres, mres] = sampler.av.residuals(pnorm);
    if (qres > cfg.validation_tol || mres > cfg.validation_tol) return;
    EquilibriumPoint pt;
    pt.torus = real_parts(sol);
    pt.probability = prob;
    pt.quadric_residual = qres;
    pt.minor_residual = mres;
    pt.totally_mixed = true;
    pt.payoffs = payoff_map(game, Distribution{prob});
    kept_probs.push_back(std::move(prob));
    points.push_back(std::move(pt));
  };

  if (sampler.excess == 0) {
    for (const auto& sol : newton_core(sampler.base, cfg, false, nullptr, 2)) consider(sol);
    return points;
  }

  long budget = static_cast<long>(cfg.slice_retries) * std::max(count, 1);
  for (long attempt = 0; attempt < budget && static_cast<int>(points.size()) < count; ++attempt)
    for (const auto& sol : sampler.solve_once(cfg, false, static_cast<uint64_t>(attempt)))
      consider(sol);
  return points;
}

ProbeResult dimension_probe(const Graph& g, const Game& game, const SolveConfig& cfg) {
  SliceSampler sampler(g, game, true);
  long nump = game.profile_count();
  ProbeResult result;

  auto consider = [&](const std::vector<Cxd>& sol) {
    if (static_cast<int>(result.per_point.size()) >= cfg.probe_points) return;
    auto full = sampler.chart.full_point(sampler.sys.pm, sol);
    auto pc = push_to_ambient(sampler.sys.pm, full);
    double maxp = 0;
    for (auto& v : pc) maxp = std::max(maxp, std::abs(v));
    if (maxp == 0) return;
    for (auto& v : pc) v /= maxp;
    for (auto& v : pc)
      if (std::abs(v) < 1e-9) return;  // too close to a coordinate hyperplane
    auto [qres, mres] = sampler.av.residuals(pc);
    if (qres > 1e-6 || mres > 1e-6) return;
    auto sv = stacked_singular_values(sampler.av, pc);
    double top = sv.empty() ? 0 : sv[0];
    int rank = 0;
    for (double s : sv)
      if (s > 1e-8 * top) ++rank;
    result.per_point.push_back(static_cast<int>(nump) - 1 - rank);
    result.sv_profiles.push_back(std::move(sv));
  };

  if (sampler.excess == 0) {
    for (const auto& sol : newton_core(sampler.base, cfg, true, nullptr, 3)) consider(sol);
  } else {
    long budget = static_cast<long>(cfg.slice_retries) * cfg.probe_points;
    for (long attempt = 0;
         attempt < budget && static_cast<int>(result.per_point.size()) < cfg.probe_points;
         ++attempt)
      for (const auto& sol : sampler.solve_once(cfg, true, 0x700000 + attempt)) consider(sol);
  }

  if (result.per_point.empty())
    throw std::domain_error("dimension probe found no usable points on the variety");
  result.dimension = mode_of(result.per_point);
  return result;
}

std::vector<std::vector<double>> payoff_region_sample(const Graph& g, const Game& game, int count,
                                                      const SolveConfig& cfg,
                                                      std::vector<EquilibriumPoint>* points) {
  auto pts = sample_ci_equilibria(g, game, count, cfg);
  std::vector<std::vector<double>> images;
  images.reserve(pts.size());
  for (const auto& pt : pts) images.push_back(pt.payoffs);
  if (points) *points = std::move(pts);
  return images;
}

bool pareto_dominates(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("payoff vectors of different lengths");
  bool strict = false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

std::vector<Polynomial> ambient_equations(const Graph& g, const Game& game,
                                          const VarTablePtr& ptab) {
  std::vector<Polynomial> out;
  if (auto part = g.is_disjoint_cliques()) {
    auto q = segre_generators(*part, game, ptab);
    out.insert(out.end(), q.begin(), q.end());
  } else {
    auto q = model_quadrics(g, game.choices(), ptab);
    out.insert(out.end(), q.begin(), q.end());
  }
  auto m = spohn_minors(game, ptab);
  out.insert(out.end(), m.begin(), m.end());
  return out;
}

}  // namespace spohn
