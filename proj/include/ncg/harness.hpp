#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ncg/graph.hpp"

namespace ncg {

struct SuiteRow {
  std::string id;
  bool pass = false;
  nlohmann::json detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteRow> rows;
  std::size_t failures() const;
};

struct HarnessOptions {
  std::uint64_t seed = 0;
  std::size_t random_graphs = 200;   // n in {6, 7}
  std::size_t max_class_n = 5;       // all isomorphism classes up to this size
  std::size_t sandwich_d2_max_n = 5;
  std::size_t random_subspaces = 100;
  std::size_t theta_random_graphs = 100;
  std::size_t mutations = 20;
  std::size_t unrecognized_max_n = 4;  // conjugated copies checked up to this size
};

/// All isomorphism classes with n <= max_class_n, then the random graphs.
std::vector<Graph> graph_suite(const HarnessOptions& o);
/// K1, K2, empty2, P3, K3, empty3, C4, P4, K4, K1,3.
std::vector<std::pair<std::string, Graph>> product_pool();
/// G(n, 1/2) from a seed.
Graph random_graph(std::size_t n, std::uint64_t seed);

SuiteReport run_faithfulness(const HarnessOptions& o);
SuiteReport run_duality(const HarnessOptions& o);
SuiteReport run_theta_oracle(const HarnessOptions& o);
SuiteReport run_examples(const HarnessOptions& o);
SuiteReport run_sandwich(const HarnessOptions& o);
SuiteReport run_products(const HarnessOptions& o);
SuiteReport run_sabidussi(const HarnessOptions& o);
SuiteReport run_hedetniemi(const HarnessOptions& o);
SuiteReport run_homomorphisms(const HarnessOptions& o);

/// Names accepted by reproduce(); "all" runs every suite in this order.
const std::vector<std::string>& suite_names();
std::vector<SuiteReport> reproduce(std::string_view suite, const HarnessOptions& o);

/// JSON lines (one per row, canonical order) followed by a summary table.
std::string render(const std::vector<SuiteReport>& reports);

}  // namespace ncg
