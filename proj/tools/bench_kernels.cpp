// Times the OpenMP kernels against their serial twins and checks that both
// produce identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "ncg/kernels.hpp"
#include "ncg/ncgraph.hpp"
#include "ncg/relations.hpp"
#include "ncg/search.hpp"

using namespace ncg;

namespace {

template <class F>
double best_seconds(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 8;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  const auto x = conjugate(traceless_from_graph(Graph::cycle(n)), random_unitary(n, 1));
  std::vector<Vector> vecs;
  const auto u = random_unitary(n, 2);
  for (std::size_t j = 0; j < n; ++j) vecs.push_back(u.column(j));

  std::vector<double> a, b;
  const double tp = best_seconds(reps, [&] {
    for (int k = 0; k < 200; ++k) a = pair_projection_norms(x.basis(), vecs);
  });
  const double ts = best_seconds(reps, [&] {
    for (int k = 0; k < 200; ++k) b = pair_projection_norms_serial(x.basis(), vecs);
  });
  std::printf("threads %d, n %zu\n", thread_count(), n);
  std::printf("%-24s %10s %10s %8s %s\n", "kernel", "serial_s", "omp_s", "speedup", "identical");
  std::printf("%-24s %10.4f %10.4f %8.2f %s\n", "pair_projection_norms", ts, tp, ts / tp, a == b ? "yes" : "NO");

  const RelationOracle oracle(x);
  const ScoreFn score = [](const DerivedGraphs& g) {
    return BasisScore{-static_cast<long>(g.distinguishability.edge_count()), g.slack};
  };
  SearchConfig cfg;
  cfg.starts = 32;
  cfg.seed = 3;
  std::vector<Candidate> cp, cs;
  const double mp = best_seconds(reps, [&] { cp = multistart(oracle, score, cfg); });
  const double ms = best_seconds(reps, [&] { cs = multistart_serial(oracle, score, cfg); });
  bool same = cp.size() == cs.size();
  for (std::size_t i = 0; same && i < cp.size(); ++i)
    same = cp[i].score.primary == cs[i].score.primary && cp[i].score.slack == cs[i].score.slack;
  std::printf("%-24s %10.4f %10.4f %8.2f %s\n", "multistart", ms, mp, ms / mp, same ? "yes" : "NO");
  return a == b && same ? 0 : 1;
}
