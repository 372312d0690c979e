#include "pla/solver.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "pla/errors.hpp"

namespace pla {

std::vector<Rat> Ansatz::grid_values() const {
  if (denominators.empty())
    throw PreconditionError("ansatz: denominators must be nonempty");
  if (bound < 0) throw PreconditionError("ansatz: bound must be >= 0");
  std::set<Rat> values;
  for (long d : denominators) {
    if (d <= 0) throw PreconditionError("ansatz: denominators must be positive");
    for (long a = -bound * d; a <= bound * d; ++a) values.insert(rat(a, d));
  }
  return {values.begin(), values.end()};
}

namespace {

inline Index flat_product_index(Index dim, Index i, Index j, Index k) {
  return (i * dim + j) * dim + k;
}

// Sparse affine form c + sum lin[a] t_a over the grid parameters.
struct AffForm {
  Rat c = 0;
  std::map<Index, Rat> lin;
};

// Quadratic polynomial in the grid parameters, kept sparse.
struct QPoly {
  Rat c = 0;
  std::map<Index, Rat> lin;
  std::map<std::pair<Index, Index>, Rat> quad;  // key (a, b) with a <= b

  void add_scaled(const AffForm& x, const Rat& s) {
    if (sgn(s) == 0) return;
    c += s * x.c;
    for (const auto& [a, v] : x.lin) lin[a] += s * v;
  }

  // += s * x * y
  void add_scaled_product(const AffForm& x, const AffForm& y, const Rat& s) {
    if (sgn(s) == 0) return;
    c += s * x.c * y.c;
    if (sgn(y.c) != 0)
      for (const auto& [a, v] : x.lin) lin[a] += s * v * y.c;
    if (sgn(x.c) != 0)
      for (const auto& [b, v] : y.lin) lin[b] += s * v * x.c;
    for (const auto& [a, va] : x.lin)
      for (const auto& [b, vb] : y.lin)
        quad[{std::min(a, b), std::max(a, b)}] += s * va * vb;
  }

  void prune() {
    for (auto it = lin.begin(); it != lin.end();)
      it = sgn(it->second) == 0 ? lin.erase(it) : std::next(it);
    for (auto it = quad.begin(); it != quad.end();)
      it = sgn(it->second) == 0 ? quad.erase(it) : std::next(it);
  }

  std::vector<Index> variables() const {
    std::set<Index> vars;
    for (const auto& [a, v] : lin) vars.insert(a);
    for (const auto& [ab, v] : quad) {
      vars.insert(ab.first);
      vars.insert(ab.second);
    }
    return {vars.begin(), vars.end()};
  }

  bool eval_zero(const std::vector<Rat>& t) const {
    Rat acc = c;
    for (const auto& [a, v] : lin)
      acc += v * t[static_cast<std::size_t>(a)];
    for (const auto& [ab, v] : quad)
      acc += v * t[static_cast<std::size_t>(ab.first)] *
             t[static_cast<std::size_t>(ab.second)];
    return sgn(acc) == 0;
  }
};

// Backtracking enumeration of the full grid. Variables are ordered so
// residual polynomials complete as early as possible; a subtree is pruned
// exactly when a completed polynomial is nonzero, which cannot discard a
// grid solution. Top-level blocks keep results deterministic under any
// thread count.
struct GridEngine {
  Index num_params = 0;
  std::vector<QPoly> polys;
  std::vector<Rat> values;
  std::size_t max_solutions = 0;
  unsigned threads = 1;

  std::vector<Index> order;                 // DFS variable order
  std::vector<std::vector<Index>> schedule; // polys completed per depth

  bool infeasible = false;  // a constant polynomial is nonzero

  void prepare() {
    for (auto& p : polys) p.prune();
    for (const auto& p : polys)
      if (p.variables().empty() && sgn(p.c) != 0) infeasible = true;

    std::vector<std::vector<Index>> pvars;
    for (const auto& p : polys) pvars.push_back(p.variables());
    std::vector<bool> used(static_cast<std::size_t>(num_params), false);
    std::vector<bool> done(polys.size(), false);
    for (std::size_t i = 0; i < pvars.size(); ++i)
      if (pvars[i].empty()) done[i] = true;
    while (static_cast<Index>(order.size()) < num_params) {
      Index best = -1;
      long best_score = -1;
      for (Index v = 0; v < num_params; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        long score = 0;
        for (std::size_t i = 0; i < pvars.size(); ++i) {
          if (done[i]) continue;
          bool completes = true;
          for (Index w : pvars[i])
            if (w != v && !used[static_cast<std::size_t>(w)]) {
              completes = false;
              break;
            }
          if (completes) ++score;
        }
        if (score > best_score) {
          best_score = score;
          best = v;
        }
      }
      used[static_cast<std::size_t>(best)] = true;
      order.push_back(best);
      for (std::size_t i = 0; i < pvars.size(); ++i) {
        if (done[i]) continue;
        bool complete = true;
        for (Index w : pvars[i])
          if (!used[static_cast<std::size_t>(w)]) {
            complete = false;
            break;
          }
        done[i] = complete;
      }
    }

    schedule.assign(static_cast<std::size_t>(num_params) + 1, {});
    std::vector<Index> pos(static_cast<std::size_t>(num_params));
    for (std::size_t d = 0; d < order.size(); ++d)
      pos[static_cast<std::size_t>(order[d])] = static_cast<Index>(d);
    for (std::size_t i = 0; i < pvars.size(); ++i) {
      if (pvars[i].empty()) continue;
      Index depth = 0;
      for (Index v : pvars[i])
        depth = std::max(depth, pos[static_cast<std::size_t>(v)] + 1);
      schedule[static_cast<std::size_t>(depth)].push_back(
          static_cast<Index>(i));
    }
  }

  struct BlockResult {
    std::vector<Vec> hits;
    bool complete = true;
  };

  void dfs(Index depth, std::vector<Rat>& t, BlockResult& out) const {
    if (!out.complete) return;
    if (out.hits.size() >= max_solutions) {
      out.complete = false;
      return;
    }
    if (depth == num_params) {
      Vec v(num_params);
      for (Index i = 0; i < num_params; ++i)
        v(i) = t[static_cast<std::size_t>(i)];
      out.hits.push_back(std::move(v));
      return;
    }
    const Index var = order[static_cast<std::size_t>(depth)];
    for (const Rat& value : values) {
      t[static_cast<std::size_t>(var)] = value;
      bool ok = true;
      for (Index pi : schedule[static_cast<std::size_t>(depth) + 1])
        if (!polys[static_cast<std::size_t>(pi)].eval_zero(t)) {
          ok = false;
          break;
        }
      if (ok) dfs(depth + 1, t, out);
      if (!out.complete) break;
    }
    t[static_cast<std::size_t>(var)] = 0;
  }

  // Returns lexicographically sorted grid points (original coordinate
  // order) plus an exhaustion flag.
  std::pair<std::vector<Vec>, bool> run() {
    prepare();
    if (infeasible) return {{}, true};
    if (num_params == 0) {
      std::vector<Vec> hits;
      bool ok = true;
      std::vector<Rat> empty;
      for (const auto& p : polys)
        if (!p.eval_zero(empty)) ok = false;
      if (ok) hits.push_back(Vec(0));
      return {hits, true};
    }

    const std::size_t blocks = values.size();
    std::vector<BlockResult> results(blocks);
    auto run_block = [&](std::size_t b) {
      std::vector<Rat> t(static_cast<std::size_t>(num_params), Rat(0));
      const Index var = order[0];
      t[static_cast<std::size_t>(var)] = values[b];
      bool ok = true;
      for (Index pi : schedule[1])
        if (!polys[static_cast<std::size_t>(pi)].eval_zero(t)) {
          ok = false;
          break;
        }
      if (ok) dfs(1, t, results[b]);
    };

    unsigned workers = std::min<unsigned>(std::max(1u, threads),
                                          static_cast<unsigned>(blocks));
    if (workers <= 1) {
      for (std::size_t b = 0; b < blocks; ++b) run_block(b);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (std::size_t b = next.fetch_add(1); b < blocks;
               b = next.fetch_add(1))
            run_block(b);
        });
      for (auto& th : pool) th.join();
    }

    std::vector<Vec> hits;
    bool exhausted = true;
    for (const auto& r : results) {
      exhausted = exhausted && r.complete;
      hits.insert(hits.end(), r.hits.begin(), r.hits.end());
    }
    auto lex_less = [](const Vec& a, const Vec& b) {
      for (Index i = 0; i < a.size(); ++i) {
        int cmp = cmp_rat(a(i), b(i));
        if (cmp != 0) return cmp < 0;
      }
      return false;
    };
    std::sort(hits.begin(), hits.end(), lex_less);
    if (hits.size() > max_solutions) {
      hits.resize(max_solutions);
      exhausted = false;
    }
    return {hits, exhausted};
  }

  static int cmp_rat(const Rat& a, const Rat& b) {
    return mpq_cmp(a.get_mpq_t(), b.get_mpq_t());
  }
};

AffForm entry_form(const AffineSolutionSpace& space, Index flat) {
  AffForm f;
  f.c = space.particular(flat);
  for (Index a = 0; a < space.basis.cols(); ++a)
    if (sgn(space.basis(flat, a)) != 0) f.lin[a] = space.basis(flat, a);
  return f;
}

std::vector<QPoly> eq2_residuals(const LiePair& pair,
                                 const AffineSolutionSpace& space) {
  const Index d = pair.g.dim();
  auto P = [&](Index i, Index j, Index k) {
    return entry_form(space, flat_product_index(d, i, j, k));
  };
  std::vector<QPoly> polys;
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      Vec cg = pair.g.bracket_basis(i, j);
      for (Index k = 0; k < d; ++k)
        for (Index c = 0; c < d; ++c) {
          QPoly poly;
          // [e_i, e_j] . e_k
          for (Index m = 0; m < d; ++m)
            if (sgn(cg(m)) != 0) poly.add_scaled(P(m, k, c), cg(m));
          // - e_i.(e_j.e_k) + e_j.(e_i.e_k)
          for (Index m = 0; m < d; ++m) {
            poly.add_scaled_product(P(j, k, m), P(i, m, c), Rat(-1));
            poly.add_scaled_product(P(i, k, m), P(j, m, c), Rat(1));
          }
          poly.prune();
          if (sgn(poly.c) != 0 || !poly.lin.empty() || !poly.quad.empty())
            polys.push_back(std::move(poly));
        }
    }
  return polys;
}

}  // namespace

std::optional<AffineSolutionSpace> linear_stage(
    const LiePair& pair, const std::optional<SupportMask>& support) {
  const Index d = pair.g.dim();
  const Index unknowns = d * d * d;
  std::vector<Vec> rows;
  std::vector<Rat> rhs;

  // Eq (1): p[i][j] - p[j][i] = [e_i,e_j] - {e_i,e_j}
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      Vec diff = pair.g.bracket_basis(i, j) - pair.n.bracket_basis(i, j);
      for (Index k = 0; k < d; ++k) {
        Vec row = zero_vec(unknowns);
        row(flat_product_index(d, i, j, k)) += 1;
        row(flat_product_index(d, j, i, k)) -= 1;
        rows.push_back(std::move(row));
        rhs.push_back(diff(k));
      }
    }

  // Eq (3): e_i.{e_j,e_k} = {e_i.e_j, e_k} + {e_j, e_i.e_k}
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = j + 1; k < d; ++k) {
        Vec cn = pair.n.bracket_basis(j, k);
        for (Index c = 0; c < d; ++c) {
          Vec row = zero_vec(unknowns);
          for (Index m = 0; m < d; ++m) {
            if (sgn(cn(m)) != 0)
              row(flat_product_index(d, i, m, c)) += cn(m);
            // {e_i.e_j, e_k}: coefficient of p[i][j][m] is {e_m,e_k}_c
            row(flat_product_index(d, i, j, m)) -=
                pair.n.bracket_basis(m, k)(c);
            row(flat_product_index(d, i, k, m)) -=
                pair.n.bracket_basis(j, m)(c);
          }
          rows.push_back(std::move(row));
          rhs.push_back(Rat(0));
        }
      }

  if (support) {
    std::set<std::pair<Index, Index>> allowed(support->allowed.begin(),
                                              support->allowed.end());
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) {
        if (allowed.count({i, j})) continue;
        for (Index k = 0; k < d; ++k) {
          Vec row = zero_vec(unknowns);
          row(flat_product_index(d, i, j, k)) = 1;
          rows.push_back(std::move(row));
          rhs.push_back(Rat(0));
        }
      }
  }

  Mat m(static_cast<Index>(rows.size()), unknowns);
  Vec b(static_cast<Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    m.row(static_cast<Index>(r)) = rows[r].transpose();
    b(static_cast<Index>(r)) = rhs[r];
  }
  auto sol = solve_affine(m, b);
  if (!sol) return std::nullopt;

  AffineSolutionSpace space;
  space.flat_dim = unknowns;
  space.particular = sol->particular;
  space.basis = Mat(unknowns, static_cast<Index>(sol->homogeneous.size()));
  for (std::size_t c = 0; c < sol->homogeneous.size(); ++c)
    space.basis.col(static_cast<Index>(c)) = sol->homogeneous[c];
  return space;
}

namespace {

BilinearProduct product_from_flat(Index d, const Vec& flat) {
  BilinearProduct p = BilinearProduct::zero(d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k)
        p.left[static_cast<std::size_t>(i)](k, j) =
            flat(flat_product_index(d, i, j, k));
  return p;
}

}  // namespace

SolutionSet grid_search(const LiePair& pair, const AffineSolutionSpace& space,
                        const Ansatz& ansatz) {
  if (static_cast<std::size_t>(space.dim()) > ansatz.param_cap)
    throw CapExceeded("grid search over " + std::to_string(space.dim()) +
                      " free parameters exceeds --param-cap " +
                      std::to_string(ansatz.param_cap));
  GridEngine engine;
  engine.num_params = space.dim();
  engine.polys = eq2_residuals(pair, space);
  engine.values = ansatz.grid_values();
  engine.max_solutions = ansatz.max_solutions;
  engine.threads = ansatz.threads;
  auto [hits, exhausted] = engine.run();

  SolutionSet out;
  out.exhausted = exhausted;
  for (const Vec& t : hits) {
    Solution s;
    s.t = t;
    s.prod = product_from_flat(pair.g.dim(), space.point(t));
    s.report = check_postlie(pair, s.prod);
    if (!s.report.pass())
      throw Error("grid solution fails re-verification");
    InducedAlgebra ind = induced_g(pair.n, s.prod);
    s.induced_jacobi_ok = ind.jacobi.ok;
    if (ind.jacobi.ok) s.induced_fingerprint = classify(ind.algebra);
    out.solutions.push_back(std::move(s));
  }
  return out;
}

RBSolutionSet search_rb(const LieAlgebra& n, const Ansatz& ansatz) {
  const Index d = n.dim();
  std::vector<std::pair<Index, Index>> positions;
  if (ansatz.support) {
    positions = ansatz.support->allowed;
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()),
                    positions.end());
    for (auto [r, c] : positions)
      if (r < 0 || r >= d || c < 0 || c >= d)
        throw PreconditionError("support mask position out of range");
  } else {
    for (Index r = 0; r < d; ++r)
      for (Index c = 0; c < d; ++c) positions.push_back({r, c});
  }
  const Index k = static_cast<Index>(positions.size());
  if (static_cast<std::size_t>(k) > ansatz.param_cap)
    throw CapExceeded("operator search over " + std::to_string(k) +
                      " free entries exceeds --param-cap " +
                      std::to_string(ansatz.param_cap));

  // R(r, c) as an affine form in the grid parameters.
  std::vector<std::vector<AffForm>> rform(
      static_cast<std::size_t>(d),
      std::vector<AffForm>(static_cast<std::size_t>(d)));
  for (Index a = 0; a < k; ++a) {
    auto [r, c] = positions[static_cast<std::size_t>(a)];
    rform[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].lin[a] = 1;
  }

  std::vector<QPoly> polys;
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      // {Re_i, Re_j} - R({Re_i,e_j} + {e_i,Re_j} + {e_i,e_j})
      for (Index c = 0; c < d; ++c) {
        QPoly poly;
        for (Index a = 0; a < d; ++a)
          for (Index b = 0; b < d; ++b) {
            Rat s = n.bracket_basis(a, b)(c);
            if (sgn(s) != 0)
              poly.add_scaled_product(
                  rform[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)],
                  rform[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)],
                  s);
          }
        for (Index m = 0; m < d; ++m) {
          // inner_m = {Re_i,e_j}_m + {e_i,Re_j}_m + {e_i,e_j}_m
          AffForm inner;
          inner.c = n.bracket_basis(i, j)(m);
          for (Index a = 0; a < d; ++a) {
            Rat s1 = n.bracket_basis(a, j)(m);
            if (sgn(s1) != 0)
              for (const auto& [var, coef] :
                   rform[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)].lin)
                inner.lin[var] += s1 * coef;
            Rat s2 = n.bracket_basis(i, a)(m);
            if (sgn(s2) != 0)
              for (const auto& [var, coef] :
                   rform[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)].lin)
                inner.lin[var] += s2 * coef;
          }
          poly.add_scaled_product(
              rform[static_cast<std::size_t>(c)][static_cast<std::size_t>(m)],
              inner, Rat(-1));
        }
        poly.prune();
        if (sgn(poly.c) != 0 || !poly.lin.empty() || !poly.quad.empty())
          polys.push_back(std::move(poly));
      }
    }

  GridEngine engine;
  engine.num_params = k;
  engine.polys = std::move(polys);
  engine.values = ansatz.grid_values();
  engine.max_solutions = ansatz.max_solutions;
  engine.threads = ansatz.threads;
  auto [hits, exhausted] = engine.run();

  RBSolutionSet out;
  out.exhausted = exhausted;
  for (const Vec& t : hits) {
    RBSolution s;
    s.t = t;
    s.op = zeros(d, d);
    for (Index a = 0; a < k; ++a)
      s.op(positions[static_cast<std::size_t>(a)].first,
           positions[static_cast<std::size_t>(a)].second) = t(a);
    if (!check_rota_baxter(n, s.op, Rat(1)).ok)
      throw Error("operator solution fails re-verification");
    BilinearProduct prod = inner_product_from_map(n, s.op);
    InducedAlgebra ind = induced_g(n, prod);
    s.induced_jacobi_ok = ind.jacobi.ok;
    if (ind.jacobi.ok) {
      s.postlie_ok =
          check_postlie(LiePair{ind.algebra, n}, prod).pass();
      if (!s.postlie_ok)
        throw Error("weight-1 operator with Lie-admissible brackets must "
                    "induce a post-Lie structure");
      s.induced_fingerprint = classify(ind.algebra);
    }
    out.solutions.push_back(std::move(s));
  }
  return out;
}

NonexistenceReport nonexistence_report(const LiePair& pair,
                                       const Ansatz& ansatz) {
  NonexistenceReport rep;
  auto space = linear_stage(pair, ansatz.support);
  if (!space) {
    rep.kind = NonexistenceKind::ProvenEmpty;
    rep.grid_exhausted = true;
    return rep;
  }
  rep.free_parameters = space->dim();
  SolutionSet set = grid_search(pair, *space, ansatz);
  rep.grid_exhausted = set.exhausted;
  if (set.solutions.empty()) {
    rep.kind = NonexistenceKind::GridEmpty;
  } else {
    rep.kind = NonexistenceKind::WitnessFound;
    rep.witness = set.solutions.front();
  }
  return rep;
}

}  // namespace pla
