// hamkit: decide, verify, sweep, generate, classify, bench.
//
// Exit codes: 0 Yes, 1 No, 2 unsupported class or oracle fallback used,
// 3 bad input or arguments, 4 internal failure (a certificate that did not
// validate).

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamkit/harness.hpp"
#include "hamkit/io.hpp"

using namespace hamkit;
using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitYes = 0, kExitNo = 1, kExitUnsupported = 2, kExitInput = 3, kExitInternal = 4;

struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

io::ParsedGraph load(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return format == "dimacs" ? io::read_dimacs(in) : io::read_edge_list(in);
}

json sets_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s.to_vector());
  return out;
}

json cover_json(const PathCover& pc) {
  json out = json::array();
  for (const auto& p : pc.paths) out.push_back(p);
  return out;
}

json obstacle_json(const Obstacle& o, bool rechecked) {
  json out;
  out["kind"] = to_string(o.kind);
  out["vertices"] = o.vertices;
  out["sets"] = sets_json(o.sets);
  if (!o.detail.empty()) out["detail"] = o.detail;
  out["rechecked"] = rechecked;
  return out;
}

enum class Answer { yes, no, unsupported, unknown };

struct Outcome {
  Answer answer = Answer::unsupported;
  std::string theorem;
  json body = json::object();  // witness / obstacle / cover fields
};

struct Query {
  std::string mode;
  Vertex u = -1, v = -1;
};

bool needs_u(const std::string& mode) { return mode != "hampath"; }
bool needs_v(const std::string& mode) { return mode == "hampath-uv" || mode == "pc-uv"; }

void check_query(const Graph& g, const Query& q) {
  auto in_range = [&](Vertex x) { return x >= 0 && static_cast<std::size_t>(x) < g.order(); };
  if (needs_u(q.mode) && !in_range(q.u)) throw PreconditionError("--u is missing or not a vertex");
  if (needs_v(q.mode) && !in_range(q.v)) throw PreconditionError("--v is missing or not a vertex");
  if (needs_v(q.mode) && q.u == q.v) throw PreconditionError("--u and --v must differ");
  if (g.order() == 0) throw PreconditionError("graph has no vertices");
}

Outcome path_outcome(const Verdict<VertexPath>& r, bool rechecked, std::string theorem) {
  Outcome o;
  o.theorem = std::move(theorem);
  if (r.is_yes()) {
    o.answer = Answer::yes;
    o.body["witness"] = {{"path", r.witness()}};
  } else {
    if (!rechecked) throw InternalError("obstacle failed its re-check");
    o.answer = Answer::no;
    o.body["obstacle"] = obstacle_json(r.obstacle(), rechecked);
    if (r.cover()) o.body["cover"] = cover_json(*r.cover());
  }
  return o;
}

// Structural decision, dispatched on the independence class.
Outcome decide(const Graph& g, const Query& q, const ClassLabel& cl) {
  const std::string& m = q.mode;
  const bool path_mode = m == "hampath" || m == "hampath-from" || m == "hampath-uv";
  if (path_mode && !is_connected(g)) {
    Obstacle ob{ObstacleKind::Disconnected, {}, component_sets(g), ""};
    Outcome o;
    o.answer = Answer::no;
    o.theorem = "connectivity";
    o.body["obstacle"] = obstacle_json(ob, component_count(g) > 1);
    return o;
  }
  if (m == "hampath") {
    if (cl.alpha <= 3) {
      auto r = ham4::decide_ham_path(g);
      bool ok = r.is_yes() ? is_path_valid(g, r.witness(), true)
                           : ham4::recheck_ham_path(g, r.obstacle()) && r.cover() && is_two_path_cover(g, *r.cover());
      if (!ok) throw InternalError("hampath certificate failed validation");
      return path_outcome(r, true, "ham4.hamiltonian_path");
    }
    if (cl.alpha == 4) {
      auto r = ham5::decide_ham_path(g);
      bool ok = r.is_yes() ? is_path_valid(g, r.witness(), true) : ham5::recheck(g, r.obstacle());
      if (!ok) throw InternalError("hampath certificate failed validation");
      return path_outcome(r, true, "ham5.hamiltonian_path");
    }
    return {};
  }
  if (m == "hampath-from") {
    if (cl.alpha <= 2) {
      auto r = ham3::decide_path_from(g, q.u);
      bool ok = r.is_yes() ? is_path_valid(g, r.witness(), true) && r.witness().front() == q.u
                           : ham3::recheck_from(g, q.u, r.obstacle());
      if (!ok) throw InternalError("hampath-from certificate failed validation");
      return path_outcome(r, true, "ham3.path_from");
    }
    if (cl.alpha == 3) {
      auto r = ham4::decide_path_from(g, q.u);
      bool ok = r.is_yes() ? is_path_valid(g, r.witness(), true) && r.witness().front() == q.u
                           : ham4::recheck_from(g, q.u, r.obstacle());
      if (!ok) throw InternalError("hampath-from certificate failed validation");
      return path_outcome(r, true, "ham4.path_from");
    }
    return {};
  }
  if (m == "hampath-uv") {
    if (cl.alpha > 2) return {};
    auto r = ham3::decide_path_uv(g, q.u, q.v);
    bool ok = r.is_yes() ? is_path_valid(g, r.witness(), true) && r.witness().front() == q.u &&
                               r.witness().back() == q.v
                         : ham3::recheck_uv(g, q.u, q.v, r.obstacle());
    if (!ok) throw InternalError("hampath-uv certificate failed validation");
    return path_outcome(r, true, "ham3.path_uv");
  }
  if (m == "pc-uv") {
    std::vector<Vertex> starts{q.u, q.v};
    Outcome o;
    if (cl.alpha <= 2 && is_connected(g)) {
      auto pc = ham3::path_cover_uv(g, q.u, q.v);
      if (!is_path_cover_valid(g, pc, starts)) throw InternalError("pc-uv cover failed validation");
      o.answer = Answer::yes;
      o.theorem = "ham3.path_cover";
      o.body["witness"] = {{"cover", cover_json(pc)}};
      return o;
    }
    if (cl.alpha > 3) return {};
    auto r = ham4::path_cover_uv(g, q.u, q.v);
    o.theorem = "ham4.path_cover";
    if (r.is_yes()) {
      if (!is_path_cover_valid(g, r.witness(), starts)) throw InternalError("pc-uv cover failed validation");
      o.answer = Answer::yes;
      o.body["witness"] = {{"cover", cover_json(r.witness())}};
    } else {
      if (!ham4::recheck_pc(g, q.u, q.v, r.obstacle())) throw InternalError("pc-uv obstacle failed its re-check");
      o.answer = Answer::no;
      o.body["obstacle"] = obstacle_json(r.obstacle(), true);
    }
    return o;
  }
  throw PreconditionError("unknown mode " + m);
}

// Exponential search, only behind --oracle-fallback or in `verify`.
Outcome oracle_decide(const Graph& g, const Query& q, oracle::Budget budget) {
  Outcome o;
  o.theorem = "oracle";
  auto settle = [&](oracle::Status st) {
    o.answer = st == oracle::Status::found ? Answer::yes : st == oracle::Status::absent ? Answer::no : Answer::unknown;
  };
  if (q.mode == "pc-uv") {
    auto r = oracle::brute_pc_uv(g, q.u, q.v, budget);
    settle(r.status);
    if (r.value) o.body["witness"] = {{"cover", cover_json(*r.value)}};
    o.body["oracle_nodes"] = r.nodes;
    return o;
  }
  std::optional<Vertex> start, end;
  if (q.mode != "hampath") start = q.u;
  if (q.mode == "hampath-uv") end = q.v;
  auto r = oracle::brute_ham_path(g, start, end, budget);
  settle(r.status);
  if (r.value) o.body["witness"] = {{"path", *r.value}};
  o.body["oracle_nodes"] = r.nodes;
  return o;
}

const char* answer_name(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::unsupported: return "unsupported";
    case Answer::unknown: return "unknown";
  }
  return "?";
}

json input_json(const io::ParsedGraph& pg, const std::string& path, const std::string& format) {
  json in;
  in["file"] = path;
  in["format"] = format;
  std::ostringstream hex;
  hex << std::hex << io::digest(pg.graph);
  in["digest"] = "fnv1a64:" + hex.str();
  in["n"] = pg.graph.order();
  in["m"] = pg.graph.size();
  if (pg.relabeled) in["labels"] = pg.labels;
  return in;
}

json class_json(const ClassLabel& cl) {
  return {{"name", cl.name()}, {"alpha", cl.alpha}, {"alpha_exact", cl.alpha <= 4}, {"witness", cl.witness}};
}

json query_json(const Query& q) {
  json out{{"mode", q.mode}};
  if (needs_u(q.mode)) out["u"] = q.u;
  if (needs_v(q.mode)) out["v"] = q.v;
  return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct CommonOpts {
  std::string file;
  std::string format = "edgelist";
  Query q{"hampath"};
  bool timing = true;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("file", c.file, "graph file")->required();
  cmd->add_option("--format", c.format, "input format")->check(CLI::IsMember({"edgelist", "dimacs"}));
  cmd->add_option("--mode", c.q.mode, "question to decide")
      ->check(CLI::IsMember({"hampath", "hampath-from", "hampath-uv", "pc-uv"}));
  cmd->add_option("--u", c.q.u, "first vertex (0-based id after parsing)");
  cmd->add_option("--v", c.q.v, "second vertex");
  cmd->add_flag("!--no-timing", c.timing, "omit the timing block");
}

int cmd_decide(const CommonOpts& c, bool fallback, oracle::Budget budget) {
  auto pg = load(c.file, c.format);
  check_query(pg.graph, c.q);
  json report;
  report["schema_version"] = kSchemaVersion;
  report["input"] = input_json(pg, c.file, c.format);
  auto t0 = std::chrono::steady_clock::now();
  auto cl = classify(pg.graph);
  double classify_ms = ms_since(t0);
  report["class"] = class_json(cl);
  report["query"] = query_json(c.q);
  t0 = std::chrono::steady_clock::now();
  Outcome o = decide(pg.graph, c.q, cl);
  bool fell_back = false;
  if (o.answer == Answer::unsupported && fallback) {
    o = oracle_decide(pg.graph, c.q, budget);
    fell_back = true;
  }
  double decide_ms = ms_since(t0);
  report["theorem"] = o.theorem.empty() ? json(nullptr) : json(o.theorem);
  report["verdict"] = answer_name(o.answer);
  report["oracle_fallback"] = fell_back;
  if (o.answer == Answer::unsupported)
    report["error"] = "class " + cl.name() + " is not supported for mode " + c.q.mode + " without --oracle-fallback";
  for (auto& [k, v] : o.body.items()) report[k] = v;
  if (c.timing) report["timing"] = {{"classify_ms", classify_ms}, {"decide_ms", decide_ms}};
  std::cout << report.dump(2) << '\n';
  if (fell_back || o.answer == Answer::unsupported || o.answer == Answer::unknown) return kExitUnsupported;
  return o.answer == Answer::yes ? kExitYes : kExitNo;
}

// Structural answer against the exhaustive one.
int cmd_verify(const CommonOpts& c, oracle::Budget budget) {
  auto pg = load(c.file, c.format);
  check_query(pg.graph, c.q);
  auto cl = classify(pg.graph);
  Outcome s = decide(pg.graph, c.q, cl);
  Outcome o = oracle_decide(pg.graph, c.q, budget);
  json report;
  report["schema_version"] = kSchemaVersion;
  report["input"] = input_json(pg, c.file, c.format);
  report["class"] = class_json(cl);
  report["query"] = query_json(c.q);
  report["structural"] = {{"theorem", s.theorem}, {"verdict", answer_name(s.answer)}};
  for (auto& [k, v] : s.body.items()) report["structural"][k] = v;
  report["oracle"] = {{"verdict", answer_name(o.answer)}};
  for (auto& [k, v] : o.body.items()) report["oracle"][k] = v;
  bool comparable = s.answer != Answer::unsupported && o.answer != Answer::unknown;
  report["agree"] = comparable ? json(s.answer == o.answer) : json(nullptr);
  std::cout << report.dump(2) << '\n';
  if (!comparable) return kExitUnsupported;
  return s.answer == o.answer ? 0 : 1;
}

int cmd_sweep(const harness::SweepOptions& opt) {
  if (opt.n_max > 7 || opt.n_min < 1 || opt.n_min > opt.n_max)
    throw PreconditionError("sweep: need 1 <= n-min <= n-max <= 7");
  auto t0 = std::chrono::steady_clock::now();
  auto st = harness::run_sweep(opt);
  double secs = ms_since(t0) / 1000.0;
  auto tally = [](const harness::Tally& t) { return json{{"queries", t.queries}, {"mismatches", t.mismatches}}; };
  json report;
  report["schema_version"] = kSchemaVersion;
  report["n_min"] = opt.n_min;
  report["n_max"] = opt.n_max;
  report["graphs"] = st.graphs;
  report["classes"] = {{"3K1-free", st.class3}, {"4K1-free", st.class4}, {"5K1-free", st.class5}};
  report["ham3"] = tally(st.ham3);
  report["ham4"] = tally(st.ham4);
  report["ham4_no_covers"] = tally(st.ham4_cover);
  report["ham5"] = tally(st.ham5);
  report["witnesses"] = tally(st.witnesses);
  report["rechecks"] = tally(st.rechecks);
  report["cut_rule"] = tally(st.cut_rule);
  report["fan_engines"] = tally(st.fans);
  report["errors"] = st.errors;
  report["obstacles"] = st.obstacles;
  report["failures"] = st.failures;
  report["clean"] = st.clean();
  report["timing"] = {{"seconds", secs}, {"threads", opt.threads}};
  std::cout << report.dump(2) << '\n';
  return st.clean() ? 0 : 1;
}

int cmd_generate(gen::GenSpec spec, std::size_t count) {
  if (spec.k < 3 || spec.k > 5) throw PreconditionError("generate: k must be 3, 4 or 5");
  if (spec.n < spec.k - 1) throw PreconditionError("generate: need n >= k-1");
  std::cout << "# prng=" << SplitMix64::name << " n=" << spec.n << " k=" << spec.k << " seed=" << spec.seed
            << " p=" << spec.extra_edge_prob << " connect=" << (spec.connect ? 1 : 0) << " count=" << count
            << " (graph i uses seed+i)\n";
  const std::uint64_t base = spec.seed;
  for (std::size_t i = 0; i < count; ++i) {
    spec.seed = base + i;
    std::cout << gen::to_corpus_line(gen::random_kk1_free(spec).graph) << '\n';
  }
  return 0;
}

int cmd_classify(const std::string& file, const std::string& format) {
  auto pg = load(file, format);
  json report;
  report["schema_version"] = kSchemaVersion;
  report["input"] = input_json(pg, file, format);
  report["class"] = class_json(classify(pg.graph));
  report["connected"] = is_connected(pg.graph);
  std::cout << report.dump(2) << '\n';
  return 0;
}

int cmd_bench(const std::vector<std::size_t>& ns, std::size_t k, const std::vector<std::uint64_t>& seeds, double p,
              std::size_t repeats) {
  if (k < 3 || k > 5) throw PreconditionError("bench: k must be 3, 4 or 5");
  std::cout << "n,k,seed,median_ms,verdict\n";
  std::map<std::size_t, std::vector<double>> by_n;
  for (std::size_t n : ns)
    for (std::uint64_t seed : seeds) {
      gen::GenSpec spec{n, k, seed, p, true};
      auto row = harness::bench_one(spec, repeats);
      std::cout << row.n << ',' << row.k << ',' << row.seed << ',' << row.median_ms << ','
                << (row.yes ? "yes" : "no") << '\n'
                << std::flush;
      by_n[n].push_back(row.median_ms);
    }
  if (by_n.size() >= 2) {
    std::vector<double> xs, ys;
    for (auto& [n, t] : by_n) {
      std::sort(t.begin(), t.end());
      xs.push_back(static_cast<double>(n));
      ys.push_back(std::max(t[t.size() / 2], 1e-6));
    }
    std::cerr << "loglog_slope=" << harness::loglog_slope(xs, ys) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian paths and two-path covers in graphs of small independence number"};
  app.require_subcommand(1);

  CommonOpts dc, vc;
  bool fallback = false;
  oracle::Budget budget;
  auto* decide_cmd = app.add_subcommand("decide", "decide and certify one question about a graph file");
  add_common(decide_cmd, dc);
  decide_cmd->add_flag("--oracle-fallback", fallback, "use exhaustive search outside the supported classes");
  decide_cmd->add_option("--node-limit", budget.node_limit, "search budget for the fallback");
  decide_cmd->add_option("--max-vertices", budget.max_vertices, "largest graph the fallback will search");

  auto* verify_cmd = app.add_subcommand("verify", "compare the structural answer with exhaustive search");
  add_common(verify_cmd, vc);
  verify_cmd->add_option("--node-limit", budget.node_limit, "search budget");
  verify_cmd->add_option("--max-vertices", budget.max_vertices, "largest graph to search");

  harness::SweepOptions sw;
  sw.threads = std::max(1U, std::thread::hardware_concurrency());
  bool no_fans = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "check every connected graph up to n-max against the oracle");
  sweep_cmd->add_option("--n-max", sw.n_max, "largest order (at most 7)");
  sweep_cmd->add_option("--n-min", sw.n_min, "smallest order");
  sweep_cmd->add_option("--threads", sw.threads, "worker threads");
  sweep_cmd->add_flag("--no-fan-engines", no_fans, "skip the fan-extension checks");

  gen::GenSpec gs{10, 4, 1, 0.1, false};
  std::size_t count = 1;
  auto* gen_cmd = app.add_subcommand("generate", "print random graphs of bounded independence number");
  gen_cmd->add_option("--n", gs.n, "order");
  gen_cmd->add_option("--k", gs.k, "graphs are kK1-free");
  gen_cmd->add_option("--seed", gs.seed, "seed of the first graph");
  gen_cmd->add_option("--p", gs.extra_edge_prob, "cross-edge probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--count", count, "number of graphs");
  gen_cmd->add_flag("--connect", gs.connect, "join components with random edges");

  std::string cfile, cformat = "edgelist";
  auto* classify_cmd = app.add_subcommand("classify", "report the independence class");
  classify_cmd->add_option("file", cfile, "graph file")->required();
  classify_cmd->add_option("--format", cformat, "input format")->check(CLI::IsMember({"edgelist", "dimacs"}));

  std::vector<std::size_t> bns;
  std::vector<std::uint64_t> bseeds{1};
  std::size_t bk = 4, repeats = 3;
  double bp = 0.1;
  auto* bench_cmd = app.add_subcommand("bench", "time the Hamiltonian-path decision on generated graphs");
  bench_cmd->add_option("--n", bns, "orders to time")->delimiter(',');
  bench_cmd->add_option("--k", bk, "graphs are kK1-free");
  bench_cmd->add_option("--seed", bseeds, "seeds")->delimiter(',');
  bench_cmd->add_option("--p", bp, "cross-edge probability")->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--repeats", repeats, "timed runs per graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*decide_cmd) return cmd_decide(dc, fallback, budget);
    if (*verify_cmd) return cmd_verify(vc, budget);
    if (*sweep_cmd) {
      sw.fan_engines = !no_fans;
      return cmd_sweep(sw);
    }
    if (*gen_cmd) return cmd_generate(gs, count);
    if (*classify_cmd) return cmd_classify(cfile, cformat);
    if (*bench_cmd) return cmd_bench(bns, bk, bseeds, bp, repeats);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::logic_error& e) {
    // GraphError, ParseError, ClassError and PreconditionError derive from
    // invalid_argument; anything else here is a bug.
    if (dynamic_cast<const std::invalid_argument*>(&e)) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitInput;
    }
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
