#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncg {

/// Finite simple undirected graph on vertices 0..n-1 (1-based in files).
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t edge_count() const;
  bool adjacent(std::size_t i, std::size_t j) const { return (adj_[i] >> j) & 1U; }
  std::uint64_t neighbours(std::size_t i) const { return adj_[i]; }
  /// Adds {i,j}. Throws ParseError on loops or out-of-range vertices.
  void add_edge(std::size_t i, std::size_t j);
  /// Sorted list of pairs (i < j).
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> adj_;
};

Graph complement(const Graph& g);
/// Vertex (i,k) -> i*h.n()+k.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph categorical_product(const Graph& g, const Graph& h);
/// Relabels vertex i as sigma[i].
Graph relabel(const Graph& g, const std::vector<std::size_t>& sigma);

/// Result of an exact combinatorial computation. `value` is empty when the
/// instance exceeds the vertex limit or the node budget ("exact unavailable").
struct ExactResult {
  std::optional<int> value;
  std::vector<std::size_t> vertices;  // independent set / clique witness
  std::vector<int> colouring;         // colour per vertex (chromatic number)
};

inline constexpr std::size_t kExactVertexLimit = 40;
inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

ExactResult alpha_exact(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);
ExactResult omega_exact(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);
ExactResult chi_exact(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

bool is_proper_colouring(const Graph& g, const std::vector<int>& colour);
bool is_independent(const Graph& g, const std::vector<std::size_t>& vertices);

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

/// Edge-list text: header "n m" then m lines "i j" (1-based). Duplicate edges
/// are merged with a warning; loops and out-of-range vertices are errors.
ParsedGraph parse_graph(std::string_view text);
std::string emit_graph(const Graph& g);

/// All graphs on n vertices up to isomorphism (canonical representatives,
/// n <= 6).
std::vector<Graph> isomorphism_classes(std::size_t n);
/// Canonical form: lexicographically smallest adjacency code over all vertex
/// permutations. Intended for n <= 7.
std::uint64_t canonical_code(const Graph& g);

}  // namespace ncg
