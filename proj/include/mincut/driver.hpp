#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

enum class Algo { Exact, Matula, KApprox, ConstApprox };

const char* to_string(Algo a);
// Throws ParseError on unknown names.
Algo parse_algo(const std::string& name);

struct RunConfig {
  std::uint64_t seed = 0;
  Algo algo = Algo::Exact;
  std::size_t trees = 0;    // 0: ceil(delta * log2 n)
  std::size_t threads = 0;  // 0: TBB default
  bool verify = false;
  double alpha = 3.0;
  double beta = 6.0;
  double gamma = 3.0;
  double delta = 2.0;
  double eps = 1.0;
  bool inject_fault = false;  // corrupts the reported value (testing --verify)
};

struct RunReport {
  Weight value = 0;
  CutResult cut;
  std::vector<std::int64_t> tree_values;  // exact: best 2-respecting value per tree
  std::map<std::string, double> timings_ms;
  std::optional<bool> verified;           // set when verification ran
  std::optional<Weight> oracle;           // exact value when small enough to check
  std::string note;                       // approximation factor, if any
};

// Stoer-Wagner cross-check is only attempted up to this many vertices.
inline constexpr std::size_t kVerifyOracleLimit = 14;

RunReport run_mincut(const WeightedGraph& g, const RunConfig& cfg);

// {value, side, witness, seed, algo, trees, constants, timings_ms, verified}
std::string report_json(const RunReport& r, const RunConfig& cfg, bool with_timings = true);
std::string report_text(const RunReport& r, const RunConfig& cfg);

}  // namespace mincut
