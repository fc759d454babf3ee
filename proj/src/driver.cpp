#include "mincut/driver.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "mincut/approx_cut.hpp"
#include "mincut/oracles.hpp"
#include "mincut/parallel.hpp"
#include "mincut/tree_packing.hpp"
#include "mincut/two_respecting.hpp"

namespace mincut {

const char* to_string(Algo a) {
  switch (a) {
    case Algo::Exact: return "exact";
    case Algo::Matula: return "matula";
    case Algo::KApprox: return "kapprox";
    case Algo::ConstApprox: return "constapprox";
  }
  return "exact";
}

Algo parse_algo(const std::string& name) {
  for (Algo a : {Algo::Exact, Algo::Matula, Algo::KApprox, Algo::ConstApprox}) {
    if (name == to_string(a)) return a;
  }
  throw Error(ErrorCode::ParseError, "unknown algorithm '" + name + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void run_exact(const WeightedGraph& g, const RunConfig& cfg, RunReport& rep) {
  auto t0 = Clock::now();
  const Ternarized tern = ternarize(g);
  const WeightedGraph& h = tern.graph;
  PackingConfig pc;
  pc.approx = {cfg.alpha, cfg.beta, cfg.eps};
  pc.gamma = cfg.gamma;
  pc.delta = cfg.delta;
  Rng rng(cfg.seed);
  const auto trees = pack_trees(h, rng, cfg.trees, pc);
  rep.timings_ms["packing"] = ms_since(t0);

  t0 = Clock::now();
  std::vector<TwoCut> cuts(trees.size());
  parallel_for(0, trees.size(), [&](std::size_t i) {
    cuts[i] = min_2respecting(h, trees[i], counter_hash(cfg.seed, 7, i));
  });
  rep.timings_ms["two_respecting"] = ms_since(t0);

  std::size_t best = 0;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    rep.tree_values.push_back(cuts[i].value);
    if (cuts[i].value < cuts[best].value) best = i;
  }
  const RootedTree& t = trees[best];
  const auto side_h = two_cut_side(t, cuts[best]);
  rep.cut.side.assign(g.num_vertices(), 0);
  for (VertexId x = 0; x < h.num_vertices(); ++x) rep.cut.side[tern.owner[x]] = side_h[x];
  CutWitness w;
  w.tree = best;
  for (VertexId c : cuts[best].edges) w.edges.push_back(t.parent_eid(c));
  rep.cut.witness = w;
  rep.value = static_cast<Weight>(cuts[best].value);
}

}  // namespace

namespace {

RunReport run_body(const WeightedGraph& g, const RunConfig& cfg) {
  RunReport rep;
  const auto start = Clock::now();
  Rng rng(cfg.seed);
  auto take = [&](ApproxCut a) {
    rep.value = a.value;
    rep.cut = std::move(a.cut);
  };
  switch (cfg.algo) {
    case Algo::Exact:
      run_exact(g, cfg, rep);
      break;
    case Algo::Matula: {
      take(matula_approx(g, cfg.eps));
      std::ostringstream os;
      os << "within a factor " << 2 + cfg.eps << " of the minimum cut";
      rep.note = os.str();
      break;
    }
    case Algo::KApprox:
      take(logn_approx(g, rng, cfg.alpha));
      rep.note = "within a factor ceil(log2 n) of the minimum cut w.h.p.";
      break;
    case Algo::ConstApprox:
      take(constant_approx_min_cut(g, rng, {cfg.alpha, cfg.beta, cfg.eps}));
      rep.note = "within a constant factor of the minimum cut w.h.p.";
      break;
  }
  if (cfg.inject_fault) rep.value += 1;
  rep.cut.weight = rep.value;
  rep.timings_ms["total"] = ms_since(start);

  if (cfg.verify) {
    const auto t0 = Clock::now();
    bool ok = cut_weight(g, rep.cut.side) == rep.value;
    if (g.num_vertices() <= kVerifyOracleLimit) {
      rep.oracle = stoer_wagner(g).first;
      ok = ok && (cfg.algo == Algo::Exact ? rep.value == *rep.oracle : rep.value >= *rep.oracle);
    }
    rep.verified = ok;
    rep.timings_ms["verify"] = ms_since(t0);
  }
  return rep;
}

}  // namespace

RunReport run_mincut(const WeightedGraph& g, const RunConfig& cfg) {
  if (g.num_vertices() < 2) throw Error(ErrorCode::TrivialCut, "graph has fewer than two vertices");
  if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "input graph is disconnected");
  WorkerLimit limit(cfg.threads);
  return limit.run([&] { return run_body(g, cfg); });
}

std::string report_json(const RunReport& r, const RunConfig& cfg, bool with_timings) {
  nlohmann::ordered_json j;
  j["value"] = r.value;
  j["side"] = r.cut.side;
  if (r.cut.witness) {
    j["witness"] = {{"tree", r.cut.witness->tree}, {"edges", r.cut.witness->edges}};
  } else {
    j["witness"] = nullptr;
  }
  j["seed"] = cfg.seed;
  j["algo"] = to_string(cfg.algo);
  j["trees"] = r.tree_values;
  j["constants"] = {{"alpha", cfg.alpha}, {"beta", cfg.beta}, {"gamma", cfg.gamma},
                    {"delta", cfg.delta}, {"eps", cfg.eps}};
  j["timings_ms"] = with_timings ? nlohmann::ordered_json(r.timings_ms)
                                 : nlohmann::ordered_json::object();
  j["verified"] = r.verified ? nlohmann::ordered_json(*r.verified) : nullptr;
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump(2);
}

std::string report_text(const RunReport& r, const RunConfig& cfg) {
  std::ostringstream os;
  os << "value " << r.value << "\n";
  os << "side";
  for (VertexId v = 0; v < r.cut.side.size(); ++v) {
    if (r.cut.side[v]) os << ' ' << v + 1;
  }
  os << "\n";
  if (r.cut.witness) {
    os << "witness tree " << r.cut.witness->tree << " edges";
    for (EdgeId e : r.cut.witness->edges) os << ' ' << e;
    os << "\n";
  }
  if (!r.note.empty()) os << "note " << to_string(cfg.algo) << " is " << r.note << "\n";
  if (r.verified) os << "verified " << (*r.verified ? "yes" : "NO") << "\n";
  return os.str();
}

}  // namespace mincut
