// ncgraph command-line front end.
//
// Exit codes: 0 success, 1 check failure, 2 parse error, 3 invariant or
// numerical failure, 4 usage error.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ncg/harness.hpp"
#include "ncg/homomorphism.hpp"
#include "ncg/io.hpp"
#include "ncg/ncgraph.hpp"
#include "ncg/parameters.hpp"
#include "ncg/sdp.hpp"
#include "ncg/theta.hpp"

using namespace ncg;

namespace {

constexpr int kCheckFailed = 1;
constexpr int kMaxBudget = 100000;

Graph load_graph(const std::string& path) {
  const auto text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(parse_json(text));
  auto parsed = parse_graph(text);
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
  return parsed.graph;
}

MatrixSubspace load_space(const std::string& path) { return subspace_from_json(parse_json(read_file(path))); }

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write '" + out + "'");
  f << j.dump(2) << "\n";
}

void check_budget(int budget) {
  if (budget < 1 || budget > kMaxBudget)
    throw UsageError("--budget must lie in [1, " + std::to_string(kMaxBudget) + "]");
}

void check_d(std::size_t d) {
  if (d < 1 || d > 8) throw UsageError("--d must lie in [1, 8]");
}

std::string bound(double x) {
  if (std::isinf(x)) return "inf";
  std::ostringstream s;
  s << std::setprecision(8) << x;
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-commutative graph toolkit"};
  app.require_subcommand(1);

  std::string graph_path, space_path, out_path, repr = "traceless";
  bool complement_flag = false;
  auto* build = app.add_subcommand("build", "graph -> operator system or traceless space");
  build->add_option("--graph", graph_path, "edge-list file")->required();
  build->add_option("--repr", repr)->check(CLI::IsMember({"system", "traceless"}));
  build->add_flag("--complement", complement_flag, "emit the orthogonal complement");
  build->add_option("-o,--output", out_path);

  std::string param = "all";
  std::size_t d = 1;
  int budget = 16;
  std::uint64_t seed = 0;
  bool as_json = false;
  auto* params = app.add_subcommand("params", "parameter brackets of a space");
  params->add_option("--space", space_path)->required();
  params->add_option("--param", param)->check(CLI::IsMember({"alpha", "omega", "chi", "chihat", "chi0", "all"}));
  params->add_option("--d", d);
  params->add_option("--budget", budget, "multistart count");
  params->add_option("--seed", seed);
  params->add_flag("--json", as_json);

  bool bar = false;
  auto* theta = app.add_subcommand("theta", "theta bracket of a space");
  theta->add_option("--space", space_path)->required();
  theta->add_flag("--bar", bar, "theta-bar of a traceless space");
  theta->add_option("--d", d);
  theta->add_option("--budget", budget);
  theta->add_option("--seed", seed);
  theta->add_flag("--json", as_json);

  auto* theta_cl = app.add_subcommand("theta-classical", "Lovasz theta of a graph");
  theta_cl->add_option("--graph", graph_path)->required();
  theta_cl->add_flag("--json", as_json);

  auto* sandwich = app.add_subcommand("sandwich", "alpha <= theta <= chihat(perp) chain");
  auto* sg = sandwich->add_option("--graph", graph_path);
  auto* ss = sandwich->add_option("--space", space_path);
  sg->excludes(ss);
  sandwich->add_option("--d", d);
  sandwich->add_option("--seed", seed);
  sandwich->add_flag("--json", as_json);

  std::string cert_path, from_path, to_path;
  auto* verify = app.add_subcommand("verify-hom", "check a homomorphism certificate");
  verify->add_option("--cert", cert_path)->required();
  verify->add_option("--from", from_path)->required();
  verify->add_option("--to", to_path)->required();

  std::string op, left_path, right_path, bases_path;
  auto* product = app.add_subcommand("product", "box or tensor product of traceless spaces");
  product->add_option("--op", op)->required()->check(CLI::IsMember({"box", "tensor"}));
  product->add_option("--left", left_path)->required();
  product->add_option("--right", right_path)->required();
  product->add_option("--bases", bases_path, "JSON {\"v\": [...], \"w\": [...]} for box");
  product->add_option("-o,--output", out_path);

  std::string suite = "all";
  HarnessOptions hopt;
  auto* repro = app.add_subcommand("reproduce", "run the check suites");
  repro->add_option("--suite", suite);
  repro->add_option("--seed", hopt.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 4;
  }

  try {
    if (*build) {
      const Graph g = load_graph(graph_path);
      auto x = repr == "system" ? system_from_graph(g) : traceless_from_graph(g);
      if (complement_flag) x = perp(x);
      emit(to_json(x), out_path);
      return 0;
    }
    if (*params) {
      check_budget(budget);
      check_d(d);
      const auto x = d == 1 ? load_space(space_path) : amplify(load_space(space_path), d);
      EstimateOptions opt;
      opt.search.starts = static_cast<std::size_t>(budget);
      opt.search.seed = seed;
      opt.theta.budget = budget;
      opt.theta.seed = seed;
      json out = json::object();
      auto want = [&](const char* name) { return param == "all" || param == name; };
      std::vector<ParameterEstimate> ests;
      if (want("alpha")) ests.push_back(alpha_estimate(x, opt));
      if (want("omega")) ests.push_back(omega_estimate(x, opt));
      if (want("chi")) ests.push_back(chi_estimate(x, opt));
      if (x.kind() == SpaceKind::traceless) {
        if (want("chihat")) ests.push_back(strong_chi_estimate(x, opt));
        if (want("chi0")) ests.push_back(chi0_estimate(x, opt));
      } else if (param == "chihat" || param == "chi0") {
        throw UsageError(param + " needs a traceless space");
      }
      for (const auto& e : ests) out[e.name] = to_json(e);
      if (as_json) {
        std::cout << (param == "all" ? out : out.begin().value()).dump() << "\n";
      } else {
        for (const auto& e : ests)
          std::cout << std::left << std::setw(8) << e.name << "[" << bound(e.lower) << ", " << bound(e.upper) << "]"
                    << (e.exact ? " exact" : "") << "  " << e.method << "\n";
      }
      return 0;
    }
    if (*theta) {
      check_budget(budget);
      check_d(d);
      const auto x = load_space(space_path);
      ThetaOptions opt;
      opt.budget = budget;
      opt.seed = seed;
      if (bar && x.kind() != SpaceKind::traceless) throw UsageError("--bar needs a traceless space");
      if (!bar && x.kind() != SpaceKind::system) throw UsageError("theta needs an operator system (use --bar)");
      const auto b = theta_d(x, d, bar, opt);
      if (as_json)
        std::cout << to_json(b).dump() << "\n";
      else
        std::cout << "[" << bound(b.lower) << ", " << bound(b.upper) << "]" << (b.exact ? " exact" : "") << "\n";
      return 0;
    }
    if (*theta_cl) {
      const auto r = theta_classical_full(load_graph(graph_path));
      if (r.solution.status != SdpStatus::optimal)
        throw ConvergenceError("theta SDP: " + std::string(to_string(r.solution.status)));
      if (as_json)
        std::cout << json{{"theta", r.value}, {"gap", r.solution.gap}}.dump() << "\n";
      else
        std::printf("%.6f\n", r.value);
      return 0;
    }
    if (*sandwich) {
      check_d(d);
      if (graph_path.empty() && space_path.empty()) throw UsageError("sandwich needs --graph or --space");
      const auto x = graph_path.empty() ? load_space(space_path) : system_from_graph(load_graph(graph_path));
      if (x.kind() != SpaceKind::system) throw UsageError("sandwich needs an operator system");
      EstimateOptions opt;
      opt.search.seed = seed;
      opt.theta.seed = seed;
      const auto r = sandwich_check(x, d, opt);
      if (as_json) {
        std::cout << json{{"pass", r.pass},
                          {"alpha", to_json(r.alpha)},
                          {"theta", to_json(r.theta)},
                          {"chihat", to_json(r.chihat)}}
                         .dump()
                  << "\n";
      } else {
        std::cout << (r.pass ? "PASS" : "FAIL") << " alpha [" << bound(r.alpha.lower) << ", " << bound(r.alpha.upper)
                  << "] theta [" << bound(r.theta.lower) << ", " << bound(r.theta.upper) << "] chihat(perp) ["
                  << bound(r.chihat.lower) << ", " << bound(r.chihat.upper) << "]\n";
      }
      return r.pass ? 0 : kCheckFailed;
    }
    if (*verify) {
      const auto k = certificate_from_json(parse_json(read_file(cert_path)));
      const auto r = verify_hom(k, load_space(from_path), load_space(to_path));
      std::cout << (r.ok ? "PASS" : "FAIL") << " max_residual " << bound(r.max_residual) << " tp_defect "
                << bound(r.tp_defect);
      if (!r.reason.empty()) std::cout << " (" << r.reason << ")";
      std::cout << "\n";
      return r.ok ? 0 : kCheckFailed;
    }
    if (*product) {
      const auto l = load_space(left_path);
      const auto r = load_space(right_path);
      if (op == "tensor") {
        emit(to_json(tensor(l, r)), out_path);
        return 0;
      }
      OrthonormalFamily v = OrthonormalFamily::standard(l.n()), w = OrthonormalFamily::standard(r.n());
      if (!bases_path.empty()) {
        const auto j = parse_json(read_file(bases_path));
        auto family = [](const json& arr, std::size_t n) {
          std::vector<Vector> vs;
          for (const auto& e : arr) vs.push_back(vector_from_json(e));
          return OrthonormalFamily(n, std::move(vs));
        };
        v = family(j.at("v"), l.n());
        w = family(j.at("w"), r.n());
      }
      emit(to_json(box_product(l, r, v, w)), out_path);
      return 0;
    }
    if (*repro) {
      const auto reports = reproduce(suite, hopt);
      std::cout << render(reports);
      std::size_t failures = 0;
      for (const auto& r : reports) failures += r.failures();
      return failures == 0 ? 0 : kCheckFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 4;
}
