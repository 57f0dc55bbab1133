#include "tcnet/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>

#include "tcnet/asymptotics.hpp"
#include "tcnet/compgraph.hpp"
#include "tcnet/distributions.hpp"
#include "tcnet/onecomp.hpp"
#include "tcnet/verify.hpp"
#include "tcnet/words.hpp"

namespace tcnet::cli {

using json = nlohmann::ordered_json;

void to_json(json& j, const OutputRecord& r) {
  j = json{{"command", r.command}, {"params", r.params}, {"method", r.method}, {"results", r.results}};
}

void from_json(const json& j, OutputRecord& r) {
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params");
  r.method = j.at("method").get<std::string>();
  r.results = j.at("results");
}

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json rational(const Ratio& r) {
  Ratio c = r;
  c.canonicalize();
  return json{{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
}

json log_real(const LogReal& v) {
  return json{{"log", fmt_double(v.log)},
              {"mantissa10", fmt_double(v.mantissa10())},
              {"exponent10", std::to_string(v.exponent10())}};
}

// Ceilings come from the environment only; everything else is a flag.
struct Ceilings {
  int word = words::kDefaultWordCeiling;
  compgraph::CompgraphCeilings graph;
  dist::DistCeilings dist;
};

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    std::size_t used = 0;
    const int x = std::stoi(v, &used);
    if (used != std::string(v).size() || x < 1) throw std::invalid_argument(name);
    return x;
  } catch (const std::exception&) {
    throw DomainError(std::string("environment variable ") + name + " must be a positive integer");
  }
}

Ceilings read_ceilings() {
  Ceilings c;
  c.word = env_int("TCNET_WORD_CEILING", c.word);
  c.graph.k_max = env_int("TCNET_COMPGRAPH_K_CEILING", c.graph.k_max);
  c.graph.n_max = env_int("TCNET_COMPGRAPH_N_CEILING", c.graph.n_max);
  c.dist.onecomp_n_max = env_int("TCNET_ONECOMP_N_CEILING", c.dist.onecomp_n_max);
  c.dist.general_n_max = env_int("TCNET_GENERAL_N_CEILING", c.dist.general_n_max);
  return c;
}

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Emitter {
  std::ostream& out;
  void operator()(const OutputRecord& r) const { out << json(r).dump() << '\n'; }
};

json dnk(int d, int n, std::optional<int> k) {
  json p{{"d", d}, {"n", n}};
  if (k) p["k"] = *k;
  return p;
}

// ---- count ----

struct CountArgs {
  std::string what;
  int d = 2;
  int n = 1;
  std::optional<int> k;
  std::string method;
};

using MethodFn = std::function<Count()>;

void emit_methods(const Emitter& emit, const CountArgs& a, const std::string& command,
                  const std::vector<std::pair<std::string, MethodFn>>& methods, const std::string& chosen) {
  std::vector<std::pair<std::string, Count>> values;
  for (const auto& [name, fn] : methods) {
    if (chosen != "all" && chosen != name) continue;
    values.emplace_back(name, fn());
  }
  if (values.empty()) {
    std::string known;
    for (const auto& [name, fn] : methods) known += (known.empty() ? "" : ", ") + name;
    throw DomainError("method '" + chosen + "' does not apply to '" + command + "' here (available: " + known +
                      ")");
  }
  bool agree = true;
  for (const auto& [name, v] : values) {
    agree = agree && v == values.front().second;
    OutputRecord r{command, dnk(a.d, a.n, a.k), name, json{{"value", v.get_str()}}};
    emit(r);
  }
  if (!agree) throw VerificationFailed("methods disagree for " + command);
}

void run_count(const Emitter& emit, const CountArgs& a, const Ceilings& c) {
  const std::string command = "count " + a.what;
  std::vector<std::pair<std::string, MethodFn>> methods;
  const int d = a.d, n = a.n;
  if (a.what == "tc") {
    if (!a.k) {
      methods.emplace_back("words", [=] { return words::count_tc_total(d, n); });
      emit_methods(emit, a, command, methods, a.method.empty() ? "words" : a.method);
      return;
    }
    const int k = *a.k;
    validate({d, n, k});
    methods.emplace_back("words", [=] { return words::count_tc_words({d, n, k}); });
    if (k <= c.graph.k_max && n <= c.graph.n_max) {
      methods.emplace_back("compgraph", [=] { return compgraph::count_tc_compgraph({d, n, k}, c.graph); });
    }
    if (k == 1 && n >= 2) methods.emplace_back("genfun", [=] { return compgraph::count_tc_genfun_k1(d, n); });
    if (k == 2 && n >= 3) methods.emplace_back("genfun", [=] { return compgraph::count_tc_genfun_k2(d, n); });
    if (k == 0) methods.emplace_back("closedform", [=] { return onecomp::count_phylo_trees(n); });
    if (d <= 3 && k == 1 && n >= 2) methods.emplace_back("closedform", [=] { return compgraph::closed_form_k1(d, n); });
    if (d <= 3 && k == 2 && n >= 3) methods.emplace_back("closedform", [=] { return compgraph::closed_form_k2(d, n); });
    if (n == 1) {
      methods.emplace_back("bruteforce", [] { return Count(1); });
    } else if (n - 1 <= c.word) {
      methods.emplace_back("bruteforce", [=] {
        return exact_div(factorial(n) * words::count_words_by_prefix_states(d, n - 1, k, c.word),
                         power(Count(2), static_cast<unsigned long>(n - k - 1)));
      });
    }
    emit_methods(emit, a, command, methods, a.method.empty() ? "words" : a.method);
  } else if (a.what == "otc") {
    if (!a.k) {
      methods.emplace_back("closedform", [=] { return onecomp::count_otc_total(d, n); });
    } else {
      const int k = *a.k;
      validate({d, n, k});
      methods.emplace_back("closedform", [=] { return onecomp::count_otc({d, n, k}); });
      // the step-by-step construction is a second exact route under the same tag
      methods.emplace_back("closedform", [=] { return onecomp::count_otc_direct({d, n, k}); });
    }
    const std::string chosen = a.method.empty() ? "closedform" : a.method;
    if (chosen == "closedform" && methods.size() == 2) {
      emit_methods(emit, a, command, {methods.front()}, chosen);
    } else {
      emit_methods(emit, a, command, methods, chosen);
    }
  } else if (a.what == "words") {
    if (!a.k) throw DomainError("count words needs --k");
    const int k = *a.k;
    methods.emplace_back("words", [=] { return words::count_words(d, n, k); });
    if (n <= c.word) {
      methods.emplace_back("bruteforce", [=] { return words::count_words_by_prefix_states(d, n, k, c.word); });
    }
    emit_methods(emit, a, command, methods, a.method.empty() ? "words" : a.method);
  } else if (a.what == "compgraphs") {
    // --n is the node count m, --k the sink count s
    const int m = n;
    if (a.k) {
      const int s = *a.k;
      methods.emplace_back("compgraph", [=] { return compgraph::count_component_graphs(d, m, s); });
      if (m <= compgraph::kDefaultGraphCeiling) {
        methods.emplace_back("bruteforce", [=] {
          Count cnt = 0;
          compgraph::enumerate_component_graphs(d, m, [&](const compgraph::ComponentGraph& g) {
            if (g.sink_count() == s) ++cnt;
          });
          return cnt;
        });
      }
    } else {
      methods.emplace_back("compgraph", [=] { return compgraph::count_component_graphs_total(d, m); });
      if (m <= compgraph::kDefaultGraphCeiling) {
        methods.emplace_back("bruteforce", [=] {
          return Count(std::to_string(compgraph::enumerate_component_graphs(d, m, [](const auto&) {})));
        });
      }
    }
    emit_methods(emit, a, command, methods, a.method.empty() ? "compgraph" : a.method);
  } else if (a.what == "star") {
    if (!a.k) throw DomainError("count star needs --k");
    const int k = *a.k;
    methods.emplace_back("compgraph", [=] { return compgraph::count_star({d, n, k}); });
    emit_methods(emit, a, command, methods, a.method.empty() ? "compgraph" : a.method);
  }
}

// ---- table ----

void run_table(std::ostream& out, const std::string& what, int d, int n_max, const std::string& format) {
  validate_dn(d, n_max);
  std::vector<std::vector<Count>> rows(static_cast<std::size_t>(n_max) + 1);
  std::string method;
  if (what == "tc") {
    method = "words";
    const words::TcTable tc(d, n_max);
    for (int n = 1; n <= n_max; ++n) {
      for (int k = 0; k < n; ++k) rows[n].push_back(tc.at(n, k));
    }
  } else {
    method = "closedform";
    for (int n = 1; n <= n_max; ++n) {
      for (int k = 0; k < n; ++k) rows[n].push_back(onecomp::count_otc({d, n, k}));
    }
  }
  if (format == "csv") {
    out << "n";
    for (int k = 0; k < n_max; ++k) out << "," << k;
    out << "\n";
    for (int n = 1; n <= n_max; ++n) {
      out << n;
      for (int k = 0; k < n_max; ++k) {
        out << ",";
        if (k < n) out << rows[n][k].get_str();
      }
      out << "\n";
    }
    return;
  }
  const Emitter emit{out};
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k < n; ++k) {
      emit(OutputRecord{"table " + what, dnk(d, n, k), method, json{{"value", rows[n][k].get_str()}}});
    }
  }
}

// ---- dist ----

void run_dist(const Emitter& emit, const std::string& family_s, int d, int n, const std::string& compare,
              const Ceilings& c) {
  const auto family = dist::parse_family(family_s);
  const auto pmf = dist::ret_pmf(family, d, n, c.dist);
  json masses = json::array();
  for (const auto& [k, m] : pmf.mass) {
    json e = rational(m);
    e["k"] = k;
    masses.push_back(e);
  }
  const auto flipped = dist::complement(pmf, n);
  json results{{"pmf", masses},
               {"mean", rational(dist::moment(pmf, 1))},
               {"mean_complement", rational(dist::moment(flipped, 1))}};
  json params{{"family", family_s}, {"d", d}, {"n", n}};
  if (!compare.empty()) {
    params["compare"] = compare;
    if (compare == "normal") {
      if (family != dist::Family::onecomp || d != 2) {
        throw DomainError("--compare normal applies to --family onecomp --d 2");
      }
      results["normal_cdf_gap"] = fmt_double(dist::normal_cdf_diagnostic(n, c.dist));
    } else {
      dist::Law law;
      if (compare == "poisson") law = dist::Law::poisson(Ratio(1, 2));
      if (compare == "bessel") law = dist::Law::bessel(1, 2);
      if (compare == "dirac") law = dist::Law::dirac(0);
      results["tv_complement_to_reference"] =
          fmt_double(dist::total_variation(flipped, dist::reference_pmf(law)));
    }
  }
  emit(OutputRecord{"dist ret", params, family == dist::Family::onecomp ? "closedform" : "words", results});
}

// ---- asymp ----

void run_asymp(const Emitter& emit, const std::string& what, int d, std::optional<int> n) {
  const std::string command = "asymp " + what;
  if (what == "params") {
    const auto p = asymp::params(d);
    emit(OutputRecord{command, json{{"d", d}}, "closedform",
                      json{{"alpha", rational(p.alpha)},
                           {"beta", fmt_double(p.beta)},
                           {"gamma", rational(p.gamma)},
                           {"lambda", rational(words::lambda(d))},
                           {"airy_a1", fmt_double(p.airy_a1)}}});
    return;
  }
  if (!n) throw DomainError(command + " needs --n");
  const json params{{"d", d}, {"n", *n}};
  if (what == "otc") {
    const auto est = asymp::otc_asymptotic(d, *n);
    const Count exact = onecomp::count_otc_total(d, *n);
    emit(OutputRecord{command, params, "closedform",
                      json{{"estimate", log_real(est)},
                           {"exact", exact.get_str()},
                           {"ratio", fmt_double(ratio(exact, est))}}});
  } else if (what == "tc-envelope") {
    const auto env = asymp::tc_envelope(d, *n);
    const auto r = asymp::tc_envelope_ratios(d, *n, *n);
    emit(OutputRecord{command, params, "words",
                      json{{"envelope", log_real(env)}, {"ratio_tc_max_k", fmt_double(r.front())}}});
  } else {
    const Ratio r = asymp::ratio_sqrt_e(d, *n);
    emit(OutputRecord{command, params, "words",
                      json{{"ratio", rational(r)},
                           {"ratio_float", fmt_double(to_double(r))},
                           {"limit", fmt_double(d == 2 ? std::sqrt(std::exp(1.0)) : 1.0)}}});
  }
}

// ---- verify ----

int run_verify(const Emitter& emit, const std::string& suite, std::optional<int> d, std::optional<int> n_max) {
  const auto checks = verify::run_suite(suite, {d, n_max});
  json params{{"suite", suite}};
  if (d) params["d"] = *d;
  if (n_max) params["n_max"] = *n_max;
  for (const auto& c : checks) {
    emit(OutputRecord{"verify", params, "all", json{{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}}});
  }
  return verify::all_passed(checks) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of d-combining tree-child networks", "tcnet"};
  app.require_subcommand(1);

  CountArgs ca;
  auto* count = app.add_subcommand("count", "Count networks, words, component graphs or star networks");
  count->add_option("what", ca.what, "tc | otc | words | compgraphs | star")
      ->required()
      ->check(CLI::IsMember({"tc", "otc", "words", "compgraphs", "star"}));
  count->add_option("--d", ca.d, "reticulation in-degree")->required();
  count->add_option("--n", ca.n, "leaves (letters for words, nodes for compgraphs)")->required();
  count->add_option("--k", ca.k, "reticulations (heavy letters for words, sinks for compgraphs)");
  count->add_option("--method", ca.method, "words | compgraph | genfun | closedform | bruteforce | all")
      ->check(CLI::IsMember({"words", "compgraph", "genfun", "closedform", "bruteforce", "all"}));

  std::string table_what, table_format = "csv";
  int table_d = 2, table_n = 1;
  auto* table = app.add_subcommand("table", "Print a TC or OTC table, rows n and columns k");
  table->add_option("what", table_what, "tc | otc")->required()->check(CLI::IsMember({"tc", "otc"}));
  table->add_option("--d", table_d)->required();
  table->add_option("--n-max", table_n)->required();
  table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

  std::string dist_what, dist_family, dist_compare;
  int dist_d = 2, dist_n = 1;
  auto* distc = app.add_subcommand("dist", "Exact law of the reticulation count");
  distc->add_option("what", dist_what, "ret")->required()->check(CLI::IsMember({"ret"}));
  distc->add_option("--family", dist_family)->required()->check(CLI::IsMember({"onecomp", "general"}));
  distc->add_option("--d", dist_d)->required();
  distc->add_option("--n", dist_n)->required();
  distc->add_option("--compare", dist_compare)->check(CLI::IsMember({"poisson", "bessel", "dirac", "normal"}));

  std::string asymp_what;
  int asymp_d = 2;
  std::optional<int> asymp_n;
  auto* asympc = app.add_subcommand("asymp", "Asymptotic parameters and estimates");
  asympc->add_option("what", asymp_what, "params | otc | tc-envelope | ratio")
      ->required()
      ->check(CLI::IsMember({"params", "otc", "tc-envelope", "ratio"}));
  asympc->add_option("--d", asymp_d)->required();
  asympc->add_option("--n", asymp_n);

  std::string suite;
  std::optional<int> verify_d, verify_n;
  auto* verifyc = app.add_subcommand("verify", "Run a self-check suite");
  verifyc->add_option("--suite", suite)->required()->check(CLI::IsMember(verify::suite_names()));
  verifyc->add_option("--d", verify_d);
  verifyc->add_option("--n-max", verify_n);

  std::vector<std::string> argv_store{"tcnet"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "tcnet: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const Emitter emit{out};
  try {
    const Ceilings ceilings = read_ceilings();
    if (count->parsed()) {
      run_count(emit, ca, ceilings);
    } else if (table->parsed()) {
      run_table(out, table_what, table_d, table_n, table_format);
    } else if (distc->parsed()) {
      run_dist(emit, dist_family, dist_d, dist_n, dist_compare, ceilings);
    } else if (asympc->parsed()) {
      run_asymp(emit, asymp_what, asymp_d, asymp_n);
    } else if (verifyc->parsed()) {
      return run_verify(emit, suite, verify_d, verify_n);
    }
  } catch (const VerificationFailed& e) {
    err << "tcnet: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::invalid_argument& e) {
    err << "tcnet: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "tcnet: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace tcnet::cli
