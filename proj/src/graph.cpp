#include "ncg/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "ncg/error.hpp"

namespace ncg {

Graph::Graph(std::size_t n) : n_(n), adj_(n, 0) {
  if (n > kMaxVertices) throw DimensionError("graph: at most 64 vertices are supported");
}

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : Graph(n) {
  for (const auto& [i, j] : edges) add_edge(i, j);
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g(n);
  if (n < 3) throw DimensionError("cycle needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto a : adj_) twice += static_cast<std::size_t>(std::popcount(a));
  return twice / 2;
}

void Graph::add_edge(std::size_t i, std::size_t j) {
  if (i >= n_ || j >= n_) throw ParseError("edge endpoint out of range");
  if (i == j) throw ParseError("self-loop at vertex " + std::to_string(i + 1));
  adj_[i] |= std::uint64_t{1} << j;
  adj_[j] |= std::uint64_t{1} << i;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

Graph complement(const Graph& g) {
  Graph c(g.n());
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = i + 1; j < g.n(); ++j)
      if (!g.adjacent(i, j)) c.add_edge(i, j);
  return c;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t m = h.n();
  Graph p(g.n() * m);
  for (std::size_t v = 0; v < g.n(); ++v)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t w = 0; w < g.n(); ++w)
        for (std::size_t b = 0; b < m; ++b) {
          const std::size_t x = v * m + a, y = w * m + b;
          if (x >= y) continue;
          if ((g.adjacent(v, w) && a == b) || (v == w && h.adjacent(a, b))) p.add_edge(x, y);
        }
  return p;
}

Graph categorical_product(const Graph& g, const Graph& h) {
  const std::size_t m = h.n();
  Graph p(g.n() * m);
  for (std::size_t v = 0; v < g.n(); ++v)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t w = 0; w < g.n(); ++w)
        for (std::size_t b = 0; b < m; ++b) {
          const std::size_t x = v * m + a, y = w * m + b;
          if (x < y && g.adjacent(v, w) && h.adjacent(a, b)) p.add_edge(x, y);
        }
  return p;
}

Graph relabel(const Graph& g, const std::vector<std::size_t>& sigma) {
  if (sigma.size() != g.n()) throw DimensionError("relabel: permutation has the wrong length");
  Graph r(g.n());
  for (const auto& [i, j] : g.edges()) r.add_edge(sigma[i], sigma[j]);
  return r;
}

namespace {

using Bits = std::uint64_t;

Bits low_bits(std::size_t n) { return n >= 64 ? ~Bits{0} : ((Bits{1} << n) - 1); }

// Maximum clique, branch and bound with a greedy colouring bound.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  bool run() {
    Bits all = low_bits(g_.n());
    std::vector<std::size_t> current;
    expand(current, all);
    return nodes_ <= budget_;
  }

  const std::vector<std::size_t>& best() const { return best_; }

 private:
  void expand(std::vector<std::size_t>& current, Bits cand) {
    if (++nodes_ > budget_) return;
    // Greedy colour classes over the candidates give the bound.
    std::vector<std::size_t> order;
    std::vector<int> bound;
    Bits uncoloured = cand;
    int colour = 0;
    while (uncoloured) {
      ++colour;
      Bits avail = uncoloured;
      while (avail) {
        const auto v = static_cast<std::size_t>(std::countr_zero(avail));
        avail &= ~(Bits{1} << v);
        avail &= ~g_.neighbours(v);
        uncoloured &= ~(Bits{1} << v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current.size() + static_cast<std::size_t>(bound[k]) <= best_.size()) return;
      const std::size_t v = order[k];
      current.push_back(v);
      const Bits next = cand & g_.neighbours(v);
      if (next == 0) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      cand &= ~(Bits{1} << v);
      if (nodes_ > budget_) return;
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> best_;
};

// DSATUR backtracking for the chromatic number.
class ColourSearch {
 public:
  ColourSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget), colour_(g.n(), -1) {}

  bool run(const std::vector<std::size_t>& clique, std::vector<int> initial, int initial_colours) {
    best_ = std::move(initial);
    best_k_ = initial_colours;
    for (std::size_t k = 0; k < clique.size(); ++k) colour_[clique[k]] = static_cast<int>(k);
    lower_ = static_cast<int>(clique.size());
    if (best_k_ > lower_) search(static_cast<int>(clique.size()), static_cast<int>(clique.size()));
    return nodes_ <= budget_;
  }

  int colours() const { return best_k_; }
  const std::vector<int>& colouring() const { return best_; }

 private:
  void search(std::size_t coloured, int used) {
    if (++nodes_ > budget_ || best_k_ == lower_) return;
    if (coloured == g_.n()) {
      if (used < best_k_) {
        best_k_ = used;
        best_ = colour_;
      }
      return;
    }
    // Pick the uncoloured vertex of maximum saturation, ties by degree.
    std::size_t pick = g_.n();
    int best_sat = -1, best_deg = -1;
    for (std::size_t v = 0; v < g_.n(); ++v) {
      if (colour_[v] >= 0) continue;
      Bits seen = 0;
      int deg = 0;
      for (std::size_t u = 0; u < g_.n(); ++u)
        if (g_.adjacent(v, u)) {
          if (colour_[u] >= 0) seen |= Bits{1} << colour_[u];
          else ++deg;
        }
      const int sat = std::popcount(seen);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    for (int c = 0; c <= used && c < best_k_ - 1; ++c) {
      bool ok = true;
      for (std::size_t u = 0; u < g_.n() && ok; ++u)
        if (g_.adjacent(pick, u) && colour_[u] == c) ok = false;
      if (!ok) continue;
      colour_[pick] = c;
      search(coloured + 1, std::max(used, c + 1));
      colour_[pick] = -1;
      if (nodes_ > budget_ || best_k_ == lower_) return;
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> colour_;
  std::vector<int> best_;
  int best_k_ = 0;
  int lower_ = 0;
};

std::vector<int> greedy_dsatur(const Graph& g, int& colours) {
  std::vector<int> colour(g.n(), -1);
  colours = 0;
  for (std::size_t step = 0; step < g.n(); ++step) {
    std::size_t pick = g.n();
    int best_sat = -1, best_deg = -1;
    for (std::size_t v = 0; v < g.n(); ++v) {
      if (colour[v] >= 0) continue;
      Bits seen = 0;
      int deg = 0;
      for (std::size_t u = 0; u < g.n(); ++u)
        if (g.adjacent(v, u)) {
          if (colour[u] >= 0) seen |= Bits{1} << colour[u];
          else ++deg;
        }
      const int sat = std::popcount(seen);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    Bits seen = 0;
    for (std::size_t u = 0; u < g.n(); ++u)
      if (g.adjacent(pick, u) && colour[u] >= 0) seen |= Bits{1} << colour[u];
    const int c = std::countr_one(seen);
    colour[pick] = c;
    colours = std::max(colours, c + 1);
  }
  return colour;
}

}  // namespace

ExactResult omega_exact(const Graph& g, std::uint64_t node_budget) {
  ExactResult r;
  if (g.n() > kExactVertexLimit) return r;
  if (g.n() == 0) {
    r.value = 0;
    return r;
  }
  CliqueSearch search(g, node_budget);
  if (!search.run()) return r;
  r.vertices = search.best();
  std::sort(r.vertices.begin(), r.vertices.end());
  r.value = static_cast<int>(r.vertices.size());
  return r;
}

ExactResult alpha_exact(const Graph& g, std::uint64_t node_budget) {
  return omega_exact(complement(g), node_budget);
}

ExactResult chi_exact(const Graph& g, std::uint64_t node_budget) {
  ExactResult r;
  if (g.n() > kExactVertexLimit) return r;
  if (g.n() == 0) {
    r.value = 0;
    return r;
  }
  const auto clique = omega_exact(g, node_budget);
  if (!clique.value) return r;
  int greedy_k = 0;
  auto greedy = greedy_dsatur(g, greedy_k);
  ColourSearch search(g, node_budget);
  if (!search.run(clique.vertices, std::move(greedy), greedy_k)) return r;
  r.value = search.colours();
  r.colouring = search.colouring();
  return r;
}

bool is_proper_colouring(const Graph& g, const std::vector<int>& colour) {
  if (colour.size() != g.n()) return false;
  for (const auto& [i, j] : g.edges())
    if (colour[i] == colour[j]) return false;
  return std::all_of(colour.begin(), colour.end(), [](int c) { return c >= 0; });
}

bool is_independent(const Graph& g, const std::vector<std::size_t>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a] == vertices[b] || g.adjacent(vertices[a], vertices[b])) return false;
  return true;
}

ParsedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      const auto first = out.find_first_not_of(" \t\r");
      if (first == std::string::npos || out[first] == '#' || out[first] == 'c') continue;
      return true;
    }
    return false;
  };
  if (!next_line(line)) throw ParseError("graph: missing header line");
  long long n = -1, m = -1;
  {
    std::istringstream h(line);
    std::string extra;
    if (!(h >> n >> m) || (h >> extra) || n < 0 || m < 0) throw ParseError("graph: malformed header '" + line + "'");
  }
  if (static_cast<std::size_t>(n) > Graph::kMaxVertices) throw ParseError("graph: too many vertices");
  ParsedGraph out{Graph(static_cast<std::size_t>(n)), {}};
  for (long long e = 0; e < m; ++e) {
    if (!next_line(line)) throw ParseError("graph: expected " + std::to_string(m) + " edge lines");
    std::istringstream l(line);
    long long i = 0, j = 0;
    std::string extra;
    if (!(l >> i >> j) || (l >> extra)) throw ParseError("graph: malformed edge line '" + line + "'");
    if (i < 1 || j < 1 || i > n || j > n) throw ParseError("graph: vertex out of range in '" + line + "'");
    if (i == j) throw ParseError("graph: loop at vertex " + std::to_string(i));
    const auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(j - 1);
    if (out.graph.adjacent(a, b)) {
      out.warnings.push_back("duplicate edge " + std::to_string(i) + " " + std::to_string(j) + " ignored");
      continue;
    }
    out.graph.add_edge(a, b);
  }
  if (next_line(line)) throw ParseError("graph: trailing content after edge list");
  return out;
}

std::string emit_graph(const Graph& g) {
  std::ostringstream out;
  const auto es = g.edges();
  out << g.n() << ' ' << es.size() << '\n';
  for (const auto& [i, j] : es) out << i + 1 << ' ' << j + 1 << '\n';
  return out.str();
}

std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.n();
  if (n > 7) throw DimensionError("canonical_code: n <= 7 only");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    int bit = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++bit)
        if (g.adjacent(perm[i], perm[j])) code |= std::uint64_t{1} << bit;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Graph> isomorphism_classes(std::size_t n) {
  if (n > 6) throw DimensionError("isomorphism_classes: n <= 6 only");
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::set<std::uint64_t> codes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g(n);
    int bit = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++bit)
        if ((mask >> bit) & 1U) g.add_edge(i, j);
    codes.insert(canonical_code(g));
  }
  std::vector<Graph> out;
  for (const auto code : codes) {
    Graph g(n);
    int bit = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++bit)
        if ((code >> bit) & 1U) g.add_edge(i, j);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace ncg
