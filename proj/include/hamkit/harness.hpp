#pragma once

// Exhaustive agreement checks between the structural deciders and the
// subset-DP oracle, shared by the CLI sweep and the acceptance suite.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "hamkit/generators.hpp"
#include "hamkit/ham5.hpp"
#include "hamkit/oracle.hpp"

namespace hamkit::harness {

struct Tally {
  std::uint64_t queries = 0;
  std::uint64_t mismatches = 0;
  void merge(const Tally& o) {
    queries += o.queries;
    mismatches += o.mismatches;
  }
};

struct SweepStats {
  std::uint64_t graphs = 0;
  std::uint64_t class3 = 0, class4 = 0, class5 = 0;
  Tally ham3;        // u-v paths, paths from u, covers
  Tally ham4;        // Hamiltonian path, paths from u, covers
  Tally ham4_cover;  // two-path covers attached to No verdicts
  Tally ham5;
  Tally witnesses;   // every Yes verdict validated
  Tally rechecks;    // every No verdict re-derived
  Tally cut_rule;    // minimum-cut wording vs. any 2-cut, where the rest holds
  Tally fans;        // fan-extension engines under their hypotheses
  std::uint64_t errors = 0;
  std::map<std::string, std::uint64_t> obstacles;
  std::vector<std::string> failures;

  void merge(const SweepStats& o) {
    graphs += o.graphs;
    class3 += o.class3;
    class4 += o.class4;
    class5 += o.class5;
    ham3.merge(o.ham3);
    ham4.merge(o.ham4);
    ham4_cover.merge(o.ham4_cover);
    ham5.merge(o.ham5);
    witnesses.merge(o.witnesses);
    rechecks.merge(o.rechecks);
    cut_rule.merge(o.cut_rule);
    fans.merge(o.fans);
    errors += o.errors;
    for (const auto& [k, v] : o.obstacles) obstacles[k] += v;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
  bool clean() const {
    return errors == 0 && ham3.mismatches == 0 && ham4.mismatches == 0 && ham4_cover.mismatches == 0 &&
           ham5.mismatches == 0 && witnesses.mismatches == 0 && rechecks.mismatches == 0 &&
           cut_rule.mismatches == 0 && fans.mismatches == 0;
  }
};

struct SweepOptions {
  std::size_t n_min = 1;
  std::size_t n_max = 7;
  unsigned threads = 1;
  bool deciders = true;
  bool fan_engines = true;
  std::size_t max_failures = 25;
};

// Vertex connectivity by trying every vertex subset; n-1 for complete graphs.
inline std::size_t brute_connectivity(const Graph& g) {
  const auto n = g.order();
  std::size_t best = n ? n - 1 : 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size >= best || size + 2 > n) continue;
    VertexSet s(n);
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
      if ((mask >> v) & 1U) s.insert(v);
    if (is_cut(g, s)) best = size;
  }
  return best;
}

class Checker {
 public:
  Checker(const Graph& g, SweepStats& st, std::size_t max_failures) : g_(g), st_(st), max_failures_(max_failures) {}

  void run_deciders() {
    const auto n = static_cast<Vertex>(g_.order());
    auto cl = classify(g_);
    oracle::PathTable table(g_);
    if (cl.alpha <= 2) ++st_.class3;
    if (cl.alpha <= 3) ++st_.class4;
    if (cl.alpha <= 4) ++st_.class5;

    if (cl.alpha <= 2) {
      auto cuts = cut_vertices(g_);
      bool two_connected_exactly = cuts.empty() && g_.order() >= 3 && !two_cuts(g_).empty();
      for (Vertex u = 0; u < n; ++u) {
        guard(st_.ham3, "ham3.from", u, -1, [&] {
          auto r = ham3::decide_path_from(g_, u);
          judge(st_.ham3, "ham3.from", u, -1, r.is_yes(), table.path_from(u));
          if (r.is_yes()) witness(is_path_valid(g_, r.witness(), true) && r.witness().front() == u, "ham3.from", u, -1);
          else recheck(ham3::recheck_from(g_, u, r.obstacle()), "ham3.from", r.obstacle(), u, -1);
        });
        for (Vertex v = 0; v < n; ++v) {
          if (v == u) continue;
          guard(st_.ham3, "ham3.uv", u, v, [&] {
            auto r = ham3::decide_path_uv(g_, u, v);
            judge(st_.ham3, "ham3.uv", u, v, r.is_yes(), table.path_between(u, v));
            if (r.is_yes())
              witness(is_path_valid(g_, r.witness(), true) && r.witness().front() == u && r.witness().back() == v,
                      "ham3.uv", u, v);
            else recheck(ham3::recheck_uv(g_, u, v, r.obstacle()), "ham3.uv", r.obstacle(), u, v);
          });
          guard(st_.ham3, "ham3.cover", u, v, [&] {
            auto pc = ham3::path_cover_uv(g_, u, v);
            judge(st_.ham3, "ham3.cover", u, v, true, table.cover_from(u, v));
            std::vector<Vertex> starts{u, v};
            witness(is_path_cover_valid(g_, pc, starts), "ham3.cover", u, v);
          });
          // Where both endpoint conditions hold, "{u,v} is not a minimum
          // cut" and "{u,v} is not a 2-cut" must agree.
          bool a_ok = !cuts.contains(u) && !cuts.contains(v);
          bool b_ok = a_ok;
          for (Vertex x : cuts) {
            if (!b_ok) break;
            auto d = components(g_, VertexSet(g_.order(), {x}));
            if (d.index_of(u) == d.index_of(v)) b_ok = false;
          }
          if (a_ok && b_ok) {
            ++st_.cut_rule.queries;
            bool pair_cut = is_cut(g_, VertexSet(g_.order(), {u, v}));
            bool min_rule = !(pair_cut && two_connected_exactly);
            bool two_rule = !pair_cut;
            if (min_rule != two_rule) fail(st_.cut_rule, "cut-rule", u, v, "wordings disagree");
          }
        }
      }
    }

    if (cl.alpha <= 3) {
      guard(st_.ham4, "ham4.path", -1, -1, [&] {
        auto r = ham4::decide_ham_path(g_);
        judge(st_.ham4, "ham4.path", -1, -1, r.is_yes(), table.ham_path());
        if (r.is_yes()) {
          witness(is_path_valid(g_, r.witness(), true), "ham4.path", -1, -1);
        } else {
          recheck(ham4::recheck_ham_path(g_, r.obstacle()), "ham4.path", r.obstacle(), -1, -1);
          ++st_.ham4_cover.queries;
          if (!r.cover() || !is_two_path_cover(g_, *r.cover()))
            fail(st_.ham4_cover, "ham4.path", -1, -1, "missing or invalid two-path cover");
        }
      });
      for (Vertex u = 0; u < n; ++u) {
        guard(st_.ham4, "ham4.from", u, -1, [&] {
          auto r = ham4::decide_path_from(g_, u);
          judge(st_.ham4, "ham4.from", u, -1, r.is_yes(), table.path_from(u));
          if (r.is_yes()) witness(is_path_valid(g_, r.witness(), true) && r.witness().front() == u, "ham4.from", u, -1);
          else recheck(ham4::recheck_from(g_, u, r.obstacle()), "ham4.from", r.obstacle(), u, -1);
        });
        for (Vertex v = 0; v < n; ++v) {
          if (v == u) continue;
          guard(st_.ham4, "ham4.cover", u, v, [&] {
            auto r = ham4::path_cover_uv(g_, u, v);
            judge(st_.ham4, "ham4.cover", u, v, r.is_yes(), table.cover_from(u, v));
            std::vector<Vertex> starts{u, v};
            if (r.is_yes()) witness(is_path_cover_valid(g_, r.witness(), starts), "ham4.cover", u, v);
            else recheck(ham4::recheck_pc(g_, u, v, r.obstacle()), "ham4.cover", r.obstacle(), u, v);
          });
        }
      }
    }

    if (cl.alpha <= 4) {
      guard(st_.ham5, "ham5.path", -1, -1, [&] {
        auto r = ham5::decide_ham_path(g_);
        judge(st_.ham5, "ham5.path", -1, -1, r.is_yes(), table.ham_path());
        if (r.is_yes()) witness(is_path_valid(g_, r.witness(), true), "ham5.path", -1, -1);
        else recheck(ham5::recheck(g_, r.obstacle()), "ham5.path", r.obstacle(), -1, -1);
      });
    }
  }

  // Fan-extension engines on s-connected graphs, s = vertex connectivity.
  void run_fan_engines() {
    const auto n = g_.order();
    if (n < 2) return;
    auto alpha_r = oracle::exact_alpha(g_);
    const std::size_t alpha = *alpha_r.value;
    const std::size_t s = brute_connectivity(g_);
    if (s == 0) return;
    if (alpha < s + 2) {
      ++st_.fans.queries;
      auto p = path_by_fan_extension(g_, s);
      if (!p || !is_path_valid(g_, *p, true)) fail(st_.fans, "fan.path", -1, -1, "no Hamiltonian path");
    }
    if (alpha < s + 1 && n >= 3) {
      ++st_.fans.queries;
      auto c = cycle_by_fan_extension(g_, s);
      bool ok = c && is_path_valid(g_, *c, true) && g_.adjacent(c->front(), c->back());
      if (!ok) fail(st_.fans, "fan.cycle", -1, -1, "no Hamiltonian cycle");
    }
    if (alpha < s) {
      for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
        for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
          if (u == v) continue;
          ++st_.fans.queries;
          auto p = uv_path_by_fan_extension(g_, u, v, s);
          if (!p || !is_path_valid(g_, *p, true) || p->front() != u || p->back() != v)
            fail(st_.fans, "fan.uv", u, v, "no Hamiltonian u-v path");
        }
    }
  }

 private:
  template <class F>
  void guard(Tally& t, const char* op, Vertex u, Vertex v, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      ++st_.errors;
      fail(t, op, u, v, std::string("exception: ") + e.what());
    }
  }

  void judge(Tally& t, const char* op, Vertex u, Vertex v, bool got, bool want) {
    ++t.queries;
    if (got != want) fail(t, op, u, v, got ? "decider Yes, oracle No" : "decider No, oracle Yes");
  }

  void witness(bool ok, const char* op, Vertex u, Vertex v) {
    ++st_.witnesses.queries;
    if (!ok) fail(st_.witnesses, op, u, v, "invalid witness");
  }

  void recheck(bool ok, const char* op, const Obstacle& o, Vertex u, Vertex v) {
    ++st_.rechecks.queries;
    ++st_.obstacles[std::string(op) + ":" + to_string(o.kind)];
    if (!ok) fail(st_.rechecks, op, u, v, std::string("obstacle did not re-check: ") + to_string(o.kind));
  }

  void fail(Tally& t, const char* op, Vertex u, Vertex v, const std::string& why) {
    ++t.mismatches;
    if (st_.failures.size() < max_failures_)
      st_.failures.push_back(std::string(op) + " u=" + std::to_string(u) + " v=" + std::to_string(v) + " " + why +
                             " graph=" + gen::to_corpus_line(g_));
  }

  const Graph& g_;
  SweepStats& st_;
  std::size_t max_failures_;
};

// All connected labeled graphs with n_min <= n <= n_max, split into mask
// ranges that worker threads claim in order.
inline SweepStats run_sweep(const SweepOptions& opt) {
  SweepStats total;
  for (std::size_t n = opt.n_min; n <= opt.n_max; ++n) {
    const std::uint64_t limit = gen::mask_limit(n);
    const std::uint64_t chunk = std::max<std::uint64_t>(1, limit / 256);
    std::atomic<std::uint64_t> next{0};
    std::mutex mu;
    auto work = [&] {
      SweepStats local;
      while (true) {
        std::uint64_t lo = next.fetch_add(chunk);
        if (lo >= limit) break;
        gen::enumerate_connected_range(n, lo, std::min(limit, lo + chunk), [&](const Graph& g, std::uint64_t) {
          ++local.graphs;
          Checker c(g, local, opt.max_failures);
          if (opt.deciders) c.run_deciders();
          if (opt.fan_engines) c.run_fan_engines();
        });
      }
      std::lock_guard lock(mu);
      total.merge(local);
    };
    const unsigned t = std::max(1U, opt.threads);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < t; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
  }
  std::sort(total.failures.begin(), total.failures.end());
  if (total.failures.size() > opt.max_failures) total.failures.resize(opt.max_failures);
  return total;
}

struct BenchRow {
  std::size_t n = 0, k = 0;
  std::uint64_t seed = 0;
  double median_ms = 0;
  bool yes = false;
};

// Median wall time of the Hamiltonian-path decision on one generated graph.
// The class is taken from the generator's clique partition rather than
// recomputed, so the timing covers only the decider.
inline BenchRow bench_one(const gen::GenSpec& spec, std::size_t repeats) {
  gen::GenSpec s = spec;
  s.connect = true;
  auto made = gen::random_kk1_free(s);
  if (!is_clique_partition(made.graph, made.cliques) || made.cliques.size() + 1 > s.k)
    throw std::logic_error("bench: generator certificate does not establish the class");
  BenchRow row{s.n, s.k, s.seed, 0, false};
  std::vector<double> times;
  for (std::size_t r = 0; r < std::max<std::size_t>(1, repeats); ++r) {
    auto t0 = std::chrono::steady_clock::now();
    bool yes = s.k <= 4 ? ham4::decide_ham_path(made.graph).is_yes() : ham5::decide_ham_path(made.graph).is_yes();
    times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    row.yes = yes;
  }
  std::sort(times.begin(), times.end());
  row.median_ms = times[times.size() / 2];
  return row;
}

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double k = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace hamkit::harness
