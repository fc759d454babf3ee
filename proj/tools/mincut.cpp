#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mincut/driver.hpp"

int main(int argc, char** argv) {
  mincut::RunConfig cfg;
  std::string path, algo = "exact";
  bool json = false;

  CLI::App app{"Minimum cut of a weighted undirected graph (DIMACS 'p max' format)."};
  app.add_option("graph", path, "input graph")->required();
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--algo", algo, "exact | matula | kapprox | constapprox")
      ->check(CLI::IsMember({"exact", "matula", "kapprox", "constapprox"}));
  app.add_option("--trees", cfg.trees, "number of spanning trees (0 = automatic)");
  app.add_option("--threads", cfg.threads, "worker threads (0 = automatic)")
      ->envname("MINCUT_THREADS");
  app.add_flag("--verify", cfg.verify, "check the result against cut weight and an oracle");
  app.add_flag("--json", json, "print a JSON report");
  app.add_option("--alpha", cfg.alpha, "trial count constant");
  app.add_option("--beta", cfg.beta, "certificate constant");
  app.add_option("--gamma", cfg.gamma, "skeleton density constant");
  app.add_option("--delta", cfg.delta, "tree count constant");
  app.add_option("--eps", cfg.eps, "Matula slack");
  app.add_flag("--inject-fault", cfg.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.algo = mincut::parse_algo(algo);
    const mincut::WeightedGraph g = mincut::read_dimacs_file(path);
    const mincut::RunReport rep = mincut::run_mincut(g, cfg);
    std::cout << (json ? mincut::report_json(rep, cfg) + "\n" : mincut::report_text(rep, cfg));
    if (rep.verified && !*rep.verified) {
      std::cerr << "mincut: verification failed\n";
      return 1;
    }
  } catch (const mincut::Error& e) {
    std::cerr << "mincut: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
