#include "ncg/harness.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "ncg/homomorphism.hpp"
#include "ncg/io.hpp"
#include "ncg/kernels.hpp"
#include "ncg/ncgraph.hpp"
#include "ncg/parameters.hpp"
#include "ncg/relations.hpp"
#include "ncg/sdp.hpp"
#include "ncg/theta.hpp"

namespace ncg {

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SuiteRow& r) { return !r.pass; }));
}

Graph random_graph(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() >> 63) g.add_edge(i, j);
  return g;
}

std::vector<Graph> graph_suite(const HarnessOptions& o) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= o.max_class_n; ++n)
    for (auto& g : isomorphism_classes(n)) out.push_back(std::move(g));
  for (std::size_t k = 0; k < o.random_graphs; ++k) {
    const auto s = derive_seed(o.seed, 0x6a09e667ULL + k);
    out.push_back(random_graph(6 + (s & 1U), s >> 1));
  }
  return out;
}

std::vector<std::pair<std::string, Graph>> product_pool() {
  Graph k13(4);
  for (std::size_t j = 1; j < 4; ++j) k13.add_edge(0, j);
  return {{"K1", Graph::complete(1)}, {"K2", Graph::complete(2)}, {"E2", Graph(2)},
          {"P3", Graph::path(3)},     {"K3", Graph::complete(3)}, {"E3", Graph(3)},
          {"C4", Graph::cycle(4)},    {"P4", Graph::path(4)},     {"K4", Graph::complete(4)},
          {"K13", k13}};
}

namespace {

using nlohmann::json;

std::string graph_id(const Graph& g) {
  std::ostringstream s;
  s << "n" << g.n() << ":";
  bool first = true;
  for (const auto& [i, j] : g.edges()) {
    s << (first ? "" : ",") << i + 1 << "-" << j + 1;
    first = false;
  }
  return s.str();
}

// Collects named checks for one row.
struct Checks {
  json failed = json::array();
  void expect(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
  bool ok() const { return failed.empty(); }
};

bool exact_equals(const ParameterEstimate& e, int value) { return e.exact && e.lower == value && e.upper == value; }
bool brackets(const ParameterEstimate& e, int value) { return e.lower <= value && value <= e.upper; }

std::vector<Vector> columns(const ComplexMatrix& u) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < u.cols(); ++j) out.push_back(u.column(j));
  return out;
}

Colouring apply_to_basis(const ComplexMatrix& a, Colouring c) {
  for (auto& v : c.basis) v = a * v;
  return c;
}

std::size_t distinct_colours(const std::vector<int>& colour) {
  std::vector<int> c = colour;
  std::sort(c.begin(), c.end());
  return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

EstimateOptions light_options(std::uint64_t seed) {
  EstimateOptions opt;
  opt.search.starts = 8;
  opt.search.seed = seed;
  opt.theta.budget = 8;
  opt.theta.seed = seed;
  return opt;
}

template <class F>
std::vector<SuiteRow> rows_parallel(std::size_t count, F&& f) {
  return parallel_map(count, std::forward<F>(f));
}

}  // namespace

SuiteReport run_faithfulness(const HarnessOptions& o) {
  const auto graphs = graph_suite(o);
  SuiteReport rep{"faithfulness", {}};
  rep.rows = rows_parallel(graphs.size(), [&](std::size_t k) {
    const Graph& g = graphs[k];
    const std::size_t n = g.n();
    const int a = *alpha_exact(g).value, w = *omega_exact(g).value, c = *chi_exact(g).value;
    const auto s = system_from_graph(g);
    const auto j = traceless_from_graph(g);
    EstimateOptions opt;
    opt.search.seed = derive_seed(o.seed, k);
    Checks ck;

    for (const auto* x : {&s, &j}) {
      const std::string tag = x == &s ? "S_G" : "J_G";
      const auto ea = alpha_estimate(*x, opt);
      ck.expect(exact_equals(ea, a), "alpha(" + tag + ")");
      ck.expect(is_independent_set(*x, ea.family, false).ok, "alpha witness(" + tag + ")");
      const auto eo = omega_estimate(*x, opt);
      ck.expect(exact_equals(eo, w), "omega(" + tag + ")");
      ck.expect(is_clique(*x, eo.family).ok, "omega witness(" + tag + ")");
      const auto ec = chi_estimate(*x, opt);
      ck.expect(exact_equals(ec, c), "chi(" + tag + ")");
      ck.expect(ec.colouring && validate_colouring(*x, *ec.colouring, tol::orth).ok, "chi witness(" + tag + ")");
    }
    for (const auto& est : {strong_chi_estimate(j, opt), chi0_estimate(j, opt)}) {
      ck.expect(exact_equals(est, c), est.name + "(J_G)");
      const bool valid = est.colouring && validate_colouring(j, *est.colouring, tol::orth).ok;
      ck.expect(valid, est.name + " witness(J_G)");
      if (valid) {
        const auto colour = pull_back_colouring(*est.colouring);
        ck.expect(is_proper_colouring(g, colour), est.name + " pull-back");
      }
    }
    const auto co = chi_omega_product_check(j, opt);
    ck.expect(co.bound_holds && co.exact_holds, "chihat*omega >= n (J_G)");
    const auto co2 = chi_omega_product_check(perp(s), opt);
    ck.expect(co2.bound_holds && co2.exact_holds, "chihat*omega >= n (S_G^perp)");

    json unrec = nullptr;
    if (n <= o.unrecognized_max_n) {
      // Unitary copies defeat matrix-unit recognition; only brackets remain.
      const auto u = random_unitary(n, derive_seed(o.seed, 0x3c6ef372ULL + k));
      const auto su = conjugate(s, u);
      const auto ju = conjugate(j, u);
      const auto lopt = light_options(derive_seed(o.seed, k + 7));
      const auto ea = alpha_estimate(su, lopt);
      const auto ec = chi_estimate(su, lopt);
      const auto eh = strong_chi_estimate(ju, lopt);
      const auto ez = chi0_estimate(ju, lopt);
      ck.expect(brackets(ea, a), "alpha bracket(U S_G U*)");
      ck.expect(brackets(ec, c), "chi bracket(U S_G U*)");
      ck.expect(brackets(eh, c), "chihat bracket(U J_G U*)");
      ck.expect(brackets(ez, c), "chi0 bracket(U J_G U*)");
      ck.expect(is_independent_set(su, ea.family, false, tol::edge).ok, "alpha witness(U S_G U*)");
      for (const auto* e : {&eh, &ez}) {
        if (!e->colouring) continue;
        ck.expect(validate_colouring(ju, *e->colouring).ok, e->name + " witness(U J_G U*)");
        const auto colour = pull_back_colouring(apply_to_basis(u.adjoint(), *e->colouring));
        ck.expect(is_proper_colouring(g, colour) && distinct_colours(colour) <= e->colouring->colours(),
                  e->name + " pull-back(U J_G U*)");
      }
      unrec = {{"alpha", {number(ea.lower), number(ea.upper)}},
               {"chi", {number(ec.lower), number(ec.upper)}},
               {"chihat", {number(eh.lower), number(eh.upper)}},
               {"chi0", {number(ez.lower), number(ez.upper)}}};
    }
    json detail = {{"alpha", a}, {"omega", w}, {"chi", c}, {"failed", ck.failed}};
    if (!unrec.is_null()) detail["conjugated"] = unrec;
    return SuiteRow{graph_id(g), ck.ok(), detail};
  });
  return rep;
}

SuiteReport run_duality(const HarnessOptions& o) {
  const auto graphs = graph_suite(o);
  SuiteReport rep{"duality", {}};
  rep.rows = rows_parallel(graphs.size(), [&](std::size_t k) {
    const Graph& g = graphs[k];
    const Graph gc = complement(g);
    const double d1 = subspace_distance(perp(system_from_graph(g)), traceless_from_graph(gc));
    const double d2 = subspace_distance(perp(traceless_from_graph(g)), system_from_graph(gc));
    return SuiteRow{graph_id(g), d1 <= 1e-8 && d2 <= 1e-8,
                    {{"perp_S_vs_J_complement", d1}, {"perp_J_vs_S_complement", d2}}};
  });
  auto more = rows_parallel(o.random_subspaces, [&](std::size_t k) {
    const auto seed = derive_seed(o.seed, 0xbb67ae85ULL + k);
    const std::size_t dim = 1 + seed % 15;
    const auto big = random_unitary(16, seed);
    std::vector<ComplexMatrix> gens;
    for (std::size_t c = 0; c < dim; ++c) {
      const auto col = big.column(c);
      gens.emplace_back(4, 4, col);
    }
    const auto v = span(gens, 4, SpaceKind::plain);
    const double dist = subspace_distance(perp(perp(v)), v);
    return SuiteRow{"random-M4-" + std::to_string(k), dist <= 1e-8 && v.dim() == dim,
                    {{"dim", v.dim()}, {"perp_perp_distance", dist}}};
  });
  for (auto& r : more) rep.rows.push_back(std::move(r));
  return rep;
}

SuiteReport run_theta_oracle(const HarnessOptions& o) {
  SuiteReport rep{"theta", {}};
  {
    const double c = std::cos(std::numbers::pi / 5);
    const double closed = 5 * c / (1 + c);
    const double t = theta_classical(Graph::cycle(5));
    rep.rows.push_back({"C5", std::abs(t - closed) <= 1e-5 && std::abs(t - 2.2360680) <= 1e-5,
                        {{"theta", t}, {"closed_form", closed}}});
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    const double tk = theta_classical(Graph::complete(n));
    const double te = theta_classical(Graph(n));
    rep.rows.push_back({"K" + std::to_string(n), std::abs(tk - 1) <= 1e-6, {{"theta", tk}}});
    rep.rows.push_back({"E" + std::to_string(n), std::abs(te - static_cast<double>(n)) <= 1e-6, {{"theta", te}}});
  }
  auto more = rows_parallel(o.theta_random_graphs, [&](std::size_t k) {
    const auto seed = derive_seed(o.seed, 0x3c6ef372ULL ^ (k * 0x9e37ULL));
    const Graph g = random_graph(1 + seed % 7, seed >> 3);
    const double t = theta_classical(g);
    const int a = *alpha_exact(g).value;
    const int cb = *chi_exact(complement(g)).value;
    return SuiteRow{graph_id(g), a - 1e-6 <= t && t <= cb + 1e-6, {{"alpha", a}, {"theta", t}, {"chi_bar", cb}}};
  });
  for (auto& r : more) rep.rows.push_back(std::move(r));
  return rep;
}

namespace {

MatrixSubspace identity_plus_offdiagonal(std::size_t n) {
  std::vector<ComplexMatrix> gens{ComplexMatrix::identity(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) gens.push_back(ComplexMatrix::unit(n, i, j));
  return span(gens, n, SpaceKind::system);
}

ComplexMatrix delta(std::size_t n) {
  // Traceless: diag(n-1, -1, ..., -1).
  std::vector<double> d(n, -1.0);
  d[0] = static_cast<double>(n) - 1.0;
  return ComplexMatrix::diagonal(d);
}

}  // namespace

SuiteReport run_examples(const HarnessOptions& o) {
  SuiteReport rep{"examples", {}};
  for (std::size_t n = 3; n <= 5; ++n) {
    EstimateOptions opt;
    opt.search.seed = derive_seed(o.seed, 0xa54ff53aULL + n);
    opt.theta.seed = opt.search.seed;
    const double nd = static_cast<double>(n);
    {
      const auto s = identity_plus_offdiagonal(n);
      Checks ck;
      const auto ea = alpha_estimate(s, opt);
      const auto ec = chi_estimate(s, opt);
      const auto th = theta_system(s, opt.theta);
      ck.expect(exact_equals(ea, 1), "alpha = 1");
      ck.expect(exact_equals(ec, static_cast<int>(n)), "chi = n");
      ck.expect(th.lower >= nd - 1e-6 && th.upper <= nd + 1e-9, "theta = n");
      ck.expect(validate_theta_witness(th, perp(s)).ok, "theta witness");
      ThetaBracket diag;
      diag.lower = nd;
      diag.witness_t = delta(n);
      ck.expect(validate_theta_witness(diag, perp(s)).ok, "diagonal witness T");
      rep.rows.push_back({"identity+offdiagonal n=" + std::to_string(n), ck.ok(),
                          {{"alpha", to_json(ea)["upper"]},
                           {"chi", to_json(ec)["upper"]},
                           {"theta", {th.lower, th.upper}},
                           {"failed", ck.failed}}});
    }
    {
      const std::vector<ComplexMatrix> gens{delta(n)};
      const auto j = span(gens, n, SpaceKind::traceless);
      Checks ck;
      const auto tb = theta_bar(j, opt.theta);
      ck.expect(tb.lower >= nd - 1e-4 && tb.upper <= nd + 1e-9, "theta-bar = n");
      ck.expect(validate_theta_witness(tb, j).ok, "theta-bar witness");
      const auto eh = strong_chi_estimate(j, opt);
      ck.expect(exact_equals(eh, static_cast<int>(n)), "chihat = n");
      ck.expect(eh.colouring && validate_colouring(j, *eh.colouring).ok, "chihat witness");
      const auto co = chi_omega_product_check(j, opt);
      ck.expect(co.bound_holds && (!co.exact_known || co.exact_holds), "chihat*omega >= n");
      rep.rows.push_back({"span-delta n=" + std::to_string(n), ck.ok(),
                          {{"theta_bar", {tb.lower, tb.upper}}, {"chihat", to_json(eh)["upper"]}, {"failed", ck.failed}}});
    }
    {
      const auto j = perp(identity_plus_offdiagonal(n));
      Checks ck;
      std::vector<int> labels(n);
      for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(i);
      const auto roots = colouring_from_labels(fourier_basis(n), labels, ColouringMode::strong);
      ck.expect(validate_colouring(j, roots, tol::orth).ok, "roots-of-unity strong colouring");
      const auto eh = strong_chi_estimate(j, opt);
      ck.expect(exact_equals(eh, static_cast<int>(n)), "chihat = n");
      const auto co = chi_omega_product_check(j, opt);
      ck.expect(co.bound_holds && (!co.exact_known || co.exact_holds), "chihat*omega >= n");
      rep.rows.push_back({"traceless-diagonals n=" + std::to_string(n), ck.ok(),
                          {{"chihat", {number(eh.lower), number(eh.upper)}}, {"failed", ck.failed}}});
    }
  }
  return rep;
}

SuiteReport run_sandwich(const HarnessOptions& o) {
  const auto graphs = graph_suite(o);
  struct Job {
    std::size_t graph;
    std::size_t d;
  };
  std::vector<Job> jobs;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    jobs.push_back({k, 1});
    if (graphs[k].n() <= o.sandwich_d2_max_n) jobs.push_back({k, 2});
  }
  jobs.push_back({graphs.size(), 1});  // C5 equality chain
  SuiteReport rep{"sandwich", {}};
  rep.rows = rows_parallel(jobs.size(), [&](std::size_t k) {
    const bool c5 = jobs[k].graph == graphs.size();
    const Graph g = c5 ? Graph::cycle(5) : graphs[jobs[k].graph];
    EstimateOptions opt;
    opt.search.seed = derive_seed(o.seed, 0x510e527fULL + k);
    opt.theta.seed = opt.search.seed;
    const auto r = sandwich_check(system_from_graph(g), jobs[k].d, opt);
    bool pass = r.pass;
    if (c5) {
      pass = pass && exact_equals(r.alpha, 2) && exact_equals(r.chihat, 3) &&
             std::abs(r.theta.lower - std::sqrt(5.0)) <= 1e-6 && std::abs(r.theta.upper - std::sqrt(5.0)) <= 1e-6;
    }
    return SuiteRow{(c5 ? "C5-chain " : "") + graph_id(g) + " d=" + std::to_string(jobs[k].d), pass,
                    {{"alpha", {number(r.alpha.lower), number(r.alpha.upper)}},
                     {"theta", {r.theta.lower, r.theta.upper}},
                     {"chihat", {number(r.chihat.lower), number(r.chihat.upper)}}}};
  });
  return rep;
}

SuiteReport run_products(const HarnessOptions&) {
  const auto pool = product_pool();
  SuiteReport rep{"products", {}};
  rep.rows = rows_parallel(pool.size() * pool.size(), [&](std::size_t k) {
    const auto& [gn, g] = pool[k / pool.size()];
    const auto& [hn, h] = pool[k % pool.size()];
    const auto jg = traceless_from_graph(g);
    const auto jh = traceless_from_graph(h);
    const double box = subspace_distance(
        box_product(jg, jh, OrthonormalFamily::standard(g.n()), OrthonormalFamily::standard(h.n())),
        traceless_from_graph(cartesian_product(g, h)));
    const double ten = subspace_distance(tensor(jg, jh), traceless_from_graph(categorical_product(g, h)));
    return SuiteRow{gn + "," + hn, box <= 1e-8 && ten <= 1e-8, {{"box_distance", box}, {"tensor_distance", ten}}};
  });
  return rep;
}

SuiteReport run_sabidussi(const HarnessOptions& o) {
  const auto pool = product_pool();
  SuiteReport rep{"sabidussi", {}};
  rep.rows = rows_parallel(pool.size() * pool.size(), [&](std::size_t k) {
    const auto& [gn, g] = pool[k / pool.size()];
    const auto& [hn, h] = pool[k % pool.size()];
    const std::size_t n = g.n(), m = h.n();
    const auto cg = chi_exact(g), ch = chi_exact(h);
    const int c = std::max(*cg.value, *ch.value);
    Checks ck;
    ck.expect(*chi_exact(cartesian_product(g, h)).value == c, "classical chi(G box H) = max");

    const auto u = random_unitary(n, derive_seed(o.seed, 0x9b05688cULL + k));
    const auto w = random_unitary(m, derive_seed(o.seed, 0x1f83d9abULL + k));
    for (const bool conj : {false, true}) {
      const auto jg = conj ? conjugate(traceless_from_graph(g), u) : traceless_from_graph(g);
      const auto jh = conj ? conjugate(traceless_from_graph(h), w) : traceless_from_graph(h);
      const auto v = conj ? OrthonormalFamily::columns_of(u) : OrthonormalFamily::standard(n);
      const auto wf = conj ? OrthonormalFamily::columns_of(w) : OrthonormalFamily::standard(m);
      const auto box = box_product(jg, jh, v, wf);
      std::vector<Vector> basis;
      std::vector<int> label;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          basis.push_back(kron(v[i], wf[j]));
          label.push_back((cg.colouring[i] + ch.colouring[j]) % c);
        }
      const auto col = colouring_from_labels(std::move(basis), label, ColouringMode::strong);
      const std::string tag = conj ? " (conjugated)" : "";
      ck.expect(col.colours() <= static_cast<std::size_t>(c), "modular colouring size" + tag);
      ck.expect(validate_colouring(box, col, tol::orth).ok, "modular strong colouring" + tag);
      ck.expect(verify_hom(box_left_embedding(n, wf), jg, box).ok, "J -> box embedding" + tag);
      ck.expect(verify_hom(box_right_embedding(v, m), jh, box).ok, "K -> box embedding" + tag);
    }
    return SuiteRow{gn + "," + hn, ck.ok(), {{"c", c}, {"failed", ck.failed}}};
  });
  return rep;
}

namespace {

// A minimal colouring of a recognized graph-derived traceless space.
std::optional<Colouring> graph_colouring(const MatrixSubspace& x) {
  const auto e = chi0_estimate(x, EstimateOptions{});
  if (!e.exact || !e.colouring) return std::nullopt;
  return e.colouring;
}

}  // namespace

SuiteReport run_hedetniemi(const HarnessOptions&) {
  const auto pool = product_pool();
  SuiteReport rep{"hedetniemi", {}};
  rep.rows = rows_parallel(pool.size() * pool.size(), [&](std::size_t k) {
    const auto& [gn, g] = pool[k / pool.size()];
    const auto& [hn, h] = pool[k % pool.size()];
    const std::size_t n = g.n(), m = h.n();
    const int cg = *chi_exact(g).value, chh = *chi_exact(h).value;
    const int cx = *chi_exact(categorical_product(g, h)).value;
    Checks ck;
    ck.expect(cx <= std::min(cg, chh), "classical chi(G x H) <= min");
    const auto jg = traceless_from_graph(g);
    const auto jh = traceless_from_graph(h);
    const auto jx = tensor(jg, jh);
    json transported = json::array();
    // J (x) K -> K traces out the first factor (n Kraus operators), J (x) K -> J the second (m).
    const struct {
      KrausMap map;
      const MatrixSubspace* target;
      std::size_t d;
      int bound;
    } homs[] = {{partial_trace_first_map(n, m), &jh, n, chh}, {partial_trace_second_map(n, m), &jg, m, cg}};
    for (const auto& hm : homs) {
      const auto check = verify_hom(hm.map, jx, *hm.target);
      ck.expect(check.ok, "partial trace homomorphism");
      if (!check.ok) continue;
      const auto target = graph_colouring(amplify(*hm.target, hm.d));
      ck.expect(target.has_value(), "target colouring of M_d(K)");
      if (!target) continue;
      const auto pulled = transport_minimal_colouring(kraus_to_isometry(hm.map), *target);
      ck.expect(validate_colouring(jx, pulled).ok, "transported colouring validates");
      ck.expect(pulled.colours() <= static_cast<std::size_t>(hm.bound), "transported size <= chi0(M_d(K))");
      ck.expect(pulled.colours() >= static_cast<std::size_t>(cx), "transported size >= chi(G x H)");
      transported.push_back(pulled.colours());
    }
    return SuiteRow{gn + "," + hn, ck.ok(),
                    {{"chi_product", cx}, {"min", std::min(cg, chh)}, {"transported", transported}, {"failed", ck.failed}}};
  });
  return rep;
}

namespace {

struct HomInstance {
  std::string name;
  KrausMap map;
  MatrixSubspace from;
  MatrixSubspace to;
  std::optional<Colouring> target_colouring;  // minimal colouring of M_d(to), d = #Kraus
};

std::vector<HomInstance> hom_instances(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.n();
  const auto jg = traceless_from_graph(g);
  std::vector<HomInstance> out;
  auto add = [&](std::string name, KrausMap k, MatrixSubspace to, bool colour) {
    std::optional<Colouring> col;
    if (colour) col = graph_colouring(amplify(to, k.kraus.size()));
    out.push_back({std::move(name), std::move(k), jg, std::move(to), std::move(col)});
  };
  add("inclusion", identity_map(n), traceless_from_graph(Graph::complete(n)), true);
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = n - 1 - i;
  add("permutation", unitary_map(permutation_matrix(sigma)), traceless_from_graph(relabel(g, sigma)), true);
  {
    const auto u = random_unitary(n, seed);
    HomInstance h{"unitary", unitary_map(u), jg, conjugate(jg, u), std::nullopt};
    const auto base = chi_exact(g);
    h.target_colouring = colouring_from_labels(columns(u), base.colouring, ColouringMode::minimal);
    out.push_back(std::move(h));
  }
  add("embed-amplify d=2", embed_amplify(n, 2), amplify(jg, 2), true);
  {
    HomInstance h{"partial-trace d=2", partial_trace_first_map(2, n), amplify(jg, 2), jg, std::nullopt};
    h.target_colouring = graph_colouring(amplify(jg, 2));
    out.push_back(std::move(h));
  }
  const Graph p3 = Graph::path(3);
  const auto jp = traceless_from_graph(p3);
  const auto box_std = box_product(jg, jp, OrthonormalFamily::standard(n), OrthonormalFamily::standard(3));
  add("box-left standard", box_left_embedding(n, OrthonormalFamily::standard(3)), box_std, true);
  {
    const auto v = OrthonormalFamily::columns_of(random_unitary(n, derive_seed(seed, 1)));
    const auto w = OrthonormalFamily::columns_of(random_unitary(3, derive_seed(seed, 2)));
    const auto box = box_product(jg, jp, v, w);
    out.push_back({"box-left random bases", box_left_embedding(n, w), jg, box, std::nullopt});
    // K -> box with K = J_P3 on the right factor.
    out.push_back({"box-right random bases", box_right_embedding(v, 3), jp, box, std::nullopt});
  }
  return out;
}

}  // namespace

SuiteReport run_homomorphisms(const HarnessOptions& o) {
  const auto pool = product_pool();
  SuiteReport rep{"homomorphisms", {}};
  std::vector<std::vector<HomInstance>> per_graph = parallel_map(pool.size(), [&](std::size_t k) {
    return hom_instances(pool[k].second, derive_seed(o.seed, 0x5be0cd19ULL + k));
  });
  std::vector<const HomInstance*> flat;
  std::vector<std::string> owner;
  for (std::size_t k = 0; k < pool.size(); ++k)
    for (const auto& h : per_graph[k]) {
      flat.push_back(&h);
      owner.push_back(pool[k].first);
    }
  auto rows = rows_parallel(flat.size(), [&](std::size_t i) {
    const auto& h = *flat[i];
    Checks ck;
    const auto check = verify_hom(h.map, h.from, h.to);
    ck.expect(check.ok, "verify_hom");
    const auto iso = kraus_to_isometry(h.map);
    const auto back = certificate_from_json(parse_json(to_json(iso).dump()));
    ck.expect(verify_hom(back, h.from, h.to).ok, "isometry JSON round trip");
    const auto back2 = certificate_from_json(parse_json(to_json(h.map).dump()));
    ck.expect(verify_hom(back2, h.from, h.to).ok, "kraus JSON round trip");
    json transported = nullptr;
    if (h.target_colouring) {
      const auto pulled = transport_minimal_colouring(iso, *h.target_colouring);
      ck.expect(validate_colouring(h.from, pulled).ok, "transported colouring validates");
      ck.expect(pulled.colours() <= h.target_colouring->colours(), "chi0(J) <= chi0(M_d(K)) witness");
      transported = {pulled.colours(), h.target_colouring->colours()};
    }
    return SuiteRow{owner[i] + " " + h.name, ck.ok(),
                    {{"max_residual_ok", check.max_residual <= tol::orth}, {"transport", transported},
                     {"failed", ck.failed}}};
  });
  rep.rows = std::move(rows);
  // Single-entry mutations must be rejected.
  for (std::size_t t = 0; t < o.mutations && !flat.empty(); ++t) {
    const auto& h = *flat[(t * 7) % flat.size()];
    KrausMap bad = h.map;
    auto& e = bad.kraus[t % bad.kraus.size()];
    e((t * 5) % e.rows(), (t * 3) % e.cols()) += cplx(0.05, 0.05 * static_cast<double>(t % 3));
    const auto check = verify_hom(bad, h.from, h.to);
    rep.rows.push_back({"mutation-" + std::to_string(t) + " of " + owner[(t * 7) % flat.size()] + " " + h.name,
                        !check.ok, {{"rejected", !check.ok}, {"reason", check.reason}}});
  }
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"faithfulness", "duality",  "theta",      "examples",
                                                 "sandwich",     "products", "sabidussi", "hedetniemi",
                                                 "homomorphisms"};
  return names;
}

std::vector<SuiteReport> reproduce(std::string_view suite, const HarnessOptions& o) {
  std::vector<SuiteReport> out;
  auto run = [&](std::string_view name) {
    if (name == "faithfulness") out.push_back(run_faithfulness(o));
    else if (name == "duality") out.push_back(run_duality(o));
    else if (name == "theta") out.push_back(run_theta_oracle(o));
    else if (name == "examples") out.push_back(run_examples(o));
    else if (name == "sandwich") out.push_back(run_sandwich(o));
    else if (name == "products") out.push_back(run_products(o));
    else if (name == "sabidussi") out.push_back(run_sabidussi(o));
    else if (name == "hedetniemi") out.push_back(run_hedetniemi(o));
    else if (name == "homomorphisms") out.push_back(run_homomorphisms(o));
    else throw UsageError("unknown suite '" + std::string(name) + "'");
  };
  if (suite == "all")
    for (const auto& s : suite_names()) run(s);
  else
    run(suite);
  for (auto& r : out)
    std::stable_sort(r.rows.begin(), r.rows.end(), [](const SuiteRow& a, const SuiteRow& b) { return a.id < b.id; });
  return out;
}

std::string render(const std::vector<SuiteReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports)
    for (const auto& row : r.rows) {
      json line = {{"suite", r.suite}, {"id", row.id}, {"pass", row.pass}, {"detail", row.detail}};
      out << line.dump() << "\n";
    }
  out << "\n" << std::left << std::setw(16) << "suite" << std::right << std::setw(8) << "rows" << std::setw(10)
      << "failures" << "\n";
  std::size_t total = 0, failed = 0;
  for (const auto& r : reports) {
    out << std::left << std::setw(16) << r.suite << std::right << std::setw(8) << r.rows.size() << std::setw(10)
        << r.failures() << "\n";
    total += r.rows.size();
    failed += r.failures();
  }
  out << std::left << std::setw(16) << "total" << std::right << std::setw(8) << total << std::setw(10) << failed
      << "\n";
  return out.str();
}

}  // namespace ncg
