// psu3kit: command-line front end for the PSU_3(q) verification library.
//
// Exit codes: 0 when every check passes, 1 when a survivor, violation or
// computational failure is reported, 2 on usage errors.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "psu3/brute_group.hpp"
#include "psu3/case_engine.hpp"
#include "psu3/group_cache.hpp"
#include "psu3/group_orders.hpp"
#include "psu3/ntheory.hpp"
#include "psu3/prime_graph.hpp"
#include "psu3/report_io.hpp"

namespace {

using psu3::BigInt;
using psu3::Json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string format = "text";
  std::string cache_dir;
  unsigned workers = 1;
  bool inject_fault = false;
};

std::string join(const std::vector<std::uint64_t>& v, const char* sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string set_text(const std::vector<std::uint64_t>& v) { return "{" + join(v) + "}"; }

/// Emits a single versioned document, or the text rendering.
void emit(const RunConfig& cfg, const std::string& kind, Json body, const std::string& text) {
  if (cfg.format == "json") {
    Json doc;
    doc["version"] = psu3::kReportVersion;
    doc["command"] = kind;
    for (auto& [k, v] : body.items()) doc[k] = v;
    std::cout << psu3::dump_json(doc);
  } else {
    std::cout << text;
  }
}

psu3::PrimePower parse_q(std::uint64_t q) {
  auto pp = psu3::PrimePower::try_from_value(q);
  if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return *pp;
}

/// The embedded sporadic table with J4 replaced by a group that looks like PSU_3(4) arithmetically.
std::shared_ptr<const psu3::SporadicTable> faulty_sporadics() {
  auto table = std::make_shared<psu3::SporadicTable>(psu3::sporadic_table());
  for (auto& e : *table) {
    if (e.name == "J4") {
      e.order = {{2, 6}, {3, 1}, {5, 2}, {13, 1}};
      e.odd_components = {13};
    }
  }
  return table;
}

int cmd_orders(const RunConfig& cfg, std::uint64_t qv) {
  const auto q = parse_q(qv);
  const auto order = psu3::order_psu3(q);
  const auto comp = psu3::odd_component_psu3(q);
  const auto tori = psu3::maximal_tori_psu3(q);
  Json j;
  j["q"] = qv;
  j["d"] = tori.d;
  j["order"] = psu3::big_json(order.value());
  j["order_factored"] = order.to_string();
  j["pi"] = order.primes();
  j["odd_component"] = psu3::big_json(comp.value());
  j["odd_component_factored"] = comp.to_string();
  j["tori"] = tori.orders;
  std::ostringstream os;
  os << "|PSU_3(" << qv << ")| = " << order.value().str() << " = " << order.to_string() << "\n";
  os << "d = " << tori.d << "\n";
  os << "pi = " << set_text(order.primes()) << "\n";
  os << "odd component = " << comp.value().str() << " = " << comp.to_string() << "\n";
  os << "maximal tori = {" << tori.orders[0] << ", " << tori.orders[1] << ", " << tori.orders[2] << "}\n";
  emit(cfg, "orders", j, os.str());
  return kExitOk;
}

int cmd_graph(const RunConfig& cfg, std::uint64_t qv) {
  const auto q = parse_q(qv);
  const auto g = psu3::graph_psu3(q);
  const auto ind = psu3::independence(g, q.p);
  const auto conf = psu3::rho_conformance(q);
  Json j;
  j["q"] = qv;
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.first, e.second});
  j["edges"] = edges;
  j["components"] = g.components();
  j["rho"] = ind.rho;
  j["rho_p"] = ind.rho_p;
  j["rho_2"] = ind.rho_2;
  j["t"] = ind.t;
  j["t_p"] = ind.t_p;
  j["rho_conformance"] = {{"ok", conf.ok}, {"rho2_in_scope", conf.rho2_in_scope}, {"detail", conf.detail}};
  std::ostringstream os;
  os << g.serialize();
  os << "components:";
  for (const auto& c : g.components()) os << " " << set_text(c);
  os << "\nrho = " << set_text(ind.rho) << ", t = " << ind.t << "\n";
  os << "rho(" << q.p << ") = " << set_text(ind.rho_p) << ", t_p = " << ind.t_p << "\n";
  if (!ind.rho_2.empty()) os << "rho(2) = " << set_text(ind.rho_2) << "\n";
  os << "rho conformance: " << (conf.ok ? "ok" : "MISMATCH") << (conf.detail.empty() ? "" : " (" + conf.detail + ")")
     << "\n";
  emit(cfg, "graph", j, os.str());
  return conf.ok ? kExitOk : kExitFail;
}

int cmd_zsigmondy(const RunConfig& cfg, std::uint64_t p, unsigned n) {
  const auto primes = psu3::zsigmondy_primes(p, n);
  Json j;
  j["p"] = p;
  j["n"] = n;
  j["primitive_primes"] = primes;
  emit(cfg, "zsigmondy", j, "primitive prime divisors of " + std::to_string(p) + "^" + std::to_string(n) + " - 1: " +
                                set_text(primes) + "\n");
  return kExitOk;
}

int cmd_catalan(const RunConfig& cfg, std::uint64_t prime_bound, unsigned exp_bound) {
  const auto sols = psu3::catalan_search(prime_bound, exp_bound);
  const bool ok = sols == std::vector<psu3::CatalanSolution>{{3, 2, 2, 3}};
  Json arr = Json::array();
  std::ostringstream os;
  for (const auto& s : sols) {
    arr.push_back({{"p", s.p}, {"m", s.m}, {"q", s.q}, {"n", s.n}});
    os << s.p << "^" << s.m << " - " << s.q << "^" << s.n << " = 1\n";
  }
  os << (ok ? "only 3^2 - 2^3 = 1" : "UNEXPECTED solution set") << "\n";
  Json j;
  j["prime_bound"] = prime_bound;
  j["exponent_bound"] = exp_bound;
  j["solutions"] = arr;
  j["ok"] = ok;
  emit(cfg, "catalan", j, os.str());
  return ok ? kExitOk : kExitFail;
}

int cmd_nagell(const RunConfig& cfg, std::uint64_t prime_bound, unsigned exp_bound) {
  const auto sols = psu3::nagell_search(prime_bound, exp_bound);
  bool ok = true;
  std::size_t listed = 0;
  Json arr = Json::array();
  std::ostringstream os;
  for (const auto& s : sols) {
    if (s.is_listed_exception()) ++listed;
    if (!s.square_exponents() && !s.is_listed_exception()) ok = false;
    if (!s.satisfies_equation()) ok = false;
    if (!s.square_exponents()) {
      os << s.p << "^" << s.m << " - 2*" << s.q << "^" << s.n << " = " << s.sign << "\n";
    }
    arr.push_back({{"p", s.p}, {"m", s.m}, {"q", s.q}, {"n", s.n}, {"sign", s.sign}});
  }
  const bool both = listed == 2;
  ok = ok && (both || prime_bound < 239);
  os << sols.size() << " solutions, " << listed << " with exponents other than m = n = 2\n";
  Json j;
  j["prime_bound"] = prime_bound;
  j["exponent_bound"] = exp_bound;
  j["solutions"] = arr;
  j["ok"] = ok;
  emit(cfg, "nagell", j, os.str());
  return ok ? kExitOk : kExitFail;
}

struct CaseArgs {
  std::string selector;
  std::optional<std::uint64_t> q_max;
  std::optional<std::uint64_t> aux_max;
  std::optional<std::uint64_t> d;
  std::optional<std::uint64_t> degree;
  std::optional<std::string> branch;
  std::optional<std::uint64_t> budget;
};

psu3::CaseOptions case_options(const RunConfig& cfg, const CaseArgs& a, int n) {
  psu3::CaseOptions opt;
  opt.q_max = a.q_max.value_or(psu3::default_q_max(n));
  opt.aux_max = a.aux_max;
  opt.d_filter = a.d;
  opt.degree_filter = a.degree;
  opt.branch_filter = a.branch;
  if (a.budget) opt.budget = *a.budget;
  opt.workers = cfg.workers;
  if (cfg.inject_fault) opt.sporadic_override = faulty_sporadics();
  return opt;
}

int emit_reports(const RunConfig& cfg, const std::vector<psu3::CaseReport>& reports) {
  if (cfg.format == "json") {
    std::cout << psu3::dump_json(psu3::reports_document(reports));
  } else {
    for (const auto& r : reports) std::cout << psu3::case_report_text(r);
  }
  for (const auto& r : reports) {
    if (r.verdict != psu3::Verdict::NoSurvivor) return kExitFail;
  }
  return kExitOk;
}

int cmd_case(const RunConfig& cfg, const CaseArgs& a) {
  std::vector<int> cases;
  if (a.selector == "all") {
    for (int n = 1; n <= 11; ++n) cases.push_back(n);
  } else {
    int n = 0;
    try {
      std::size_t pos = 0;
      n = std::stoi(a.selector, &pos);
      if (pos != a.selector.size()) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n < 1 || n > 11) throw CLI::ValidationError("case", "expected 1..11 or 'all', got '" + a.selector + "'");
    cases.push_back(n);
  }
  std::vector<psu3::CaseReport> reports;
  for (int n : cases) reports.push_back(psu3::run_case(n, case_options(cfg, a, n)));
  return emit_reports(cfg, reports);
}

int cmd_u39(const RunConfig& cfg) { return emit_reports(cfg, {psu3::verify_u39()}); }

std::vector<std::uint64_t> default_tori(const psu3::GroupTable& g) {
  const auto q = g.q().value;
  if (psu3::kind_dimension(g.kind()) == 3) {
    const auto t = psu3::maximal_tori_psu3(g.q());
    return {t.orders.begin(), t.orders.end()};
  }
  // PSL_2(q) = PSU_2(q): cyclic tori of orders (q-1)/k and (q+1)/k
  const std::uint64_t k = (q % 2 == 1 && psu3::kind_projective(g.kind())) ? 2 : 1;
  return {(q - 1) / k, (q + 1) / k};
}

struct BruteArgs {
  std::uint64_t q = 0;
  std::string kind = "PSU3";
  bool mas = false;
  bool spectrum = false;
  bool graph = false;
  bool malle = false;
  std::uint64_t node_budget = psu3::kDefaultNodeBudget;
};

int cmd_brute(const RunConfig& cfg, const BruteArgs& a) {
  const auto q = parse_q(a.q);
  const auto kind = psu3::parse_group_kind(a.kind);
  psu3::GroupCache cache(cfg.cache_dir.empty() ? psu3::GroupCache::default_dir()
                                               : std::filesystem::path(cfg.cache_dir));
  const auto g = cache.group(kind, q);
  const bool all = !a.mas && !a.spectrum && !a.graph && !a.malle;
  bool ok = true;
  Json j;
  std::ostringstream os;
  j["group"] = g.name();
  j["order"] = g.size();
  os << g.name() << ": order " << g.size() << "\n";
  if (all || a.spectrum) {
    const auto s = psu3::spectrum(g);
    j["spectrum"] = s;
    os << "spectrum " << set_text(s) << "\n";
  }
  if (all || a.graph) {
    const auto pg = psu3::prime_graph_of(g);
    Json edges = Json::array();
    for (const auto& e : pg.edges()) edges.push_back({e.first, e.second});
    j["prime_graph"] = {{"vertices", pg.vertices()}, {"edges", edges}};
    os << pg.serialize();
    if (kind_dimension(kind) == 3) {
      const bool same = pg == psu3::graph_psu3(q);
      j["prime_graph_matches_formula"] = same;
      os << "prime graph " << (same ? "matches" : "DIFFERS FROM") << " the formula graph\n";
      ok = ok && same;
    }
  }
  if (all || a.mas || a.malle) {
    const auto cat = cache.catalog(g, a.node_budget);
    const auto orders = cat.orders();
    if (all || a.mas) {
      Json classes = Json::object();
      for (const auto& [ord, n] : cat.class_counts) classes[std::to_string(ord)] = n;
      j["maximal_abelian"] = {{"orders", orders}, {"classes", classes}, {"nodes", cat.nodes}};
      os << "M(G) = " << set_text(orders) << "\n";
      const auto omega = psu3::verify_omegakh(g, cat);
      j["element_orders_check"] = {{"violations", omega.violations}, {"ok", omega.ok()}};
      os << "every element order divides a member of M(G): " << (omega.ok() ? "yes" : "NO " + set_text(omega.violations))
         << "\n";
      ok = ok && omega.ok();
    }
    if (all || a.malle) {
      const auto tori = default_tori(g);
      const auto d = psu3::kind_dimension(kind) == 3 ? psu3::psu3_d(q.value) : 1;
      const auto rep = psu3::verify_malle(cat, q.value, d, tori);
      Json v = Json::array();
      for (const auto& x : rep.violations) {
        v.push_back({{"subgroup_order", x.subgroup_order}, {"coprime_order", x.hall_order}});
        os << "torus check: abelian subgroup of order " << x.subgroup_order << " has a part of order " << x.hall_order
           << " dividing no torus order in " << set_text(tori) << "\n";
      }
      j["torus_check"] = {{"tori", tori}, {"orders_checked", rep.subgroup_orders_checked}, {"violations", v}};
      os << "torus check: " << rep.subgroup_orders_checked << " orders, " << rep.violations.size() << " violations\n";
      ok = ok && rep.ok();
    }
  }
  emit(cfg, "brute", j, os.str());
  return ok ? kExitOk : kExitFail;
}

int cmd_classify(const RunConfig& cfg, std::uint64_t qv) {
  const auto q = parse_q(qv);
  const auto c = psu3::classify_extensions(q);
  Json j;
  j["q"] = qv;
  j["p"] = c.p;
  j["alpha"] = c.alpha;
  j["outcome"] = c.outcome;
  j["allowed_extension_orders"] = c.allowed;
  std::ostringstream os;
  os << "q = " << c.p << "^" << c.alpha << ": outcome " << c.outcome << ", allowed orders " << set_text(c.allowed)
     << "\n";
  Json ext = Json::array();
  for (auto ell : psu3::factorize(static_cast<std::uint64_t>(q.alpha)).primes()) {
    if (q.alpha == 1) break;
    const auto r = psu3::extension_graph_distinct(q, ell);
    Json e{{"ell", ell}, {"distinct", r.distinct}, {"detail", r.detail}};
    if (r.witness) e["witness_edge"] = {r.witness->first, r.witness->second};
    ext.push_back(e);
    os << "ell = " << ell << ": graph " << (r.distinct ? "changes" : "unchanged") << " (" << r.detail << ")\n";
  }
  j["field_extensions"] = ext;
  emit(cfg, "classify", j, os.str());
  return kExitOk;
}

int cmd_kernel(const RunConfig& cfg, std::uint64_t qv) {
  const auto k = psu3::kernel_obstruction_check(parse_q(qv));
  Json j;
  j["q"] = qv;
  j["odd_component"] = k.m;
  j["prime_power_divisors"] = k.prime_power_divisors;
  j["congruent_to_one"] = k.survivors;
  std::ostringstream os;
  os << "prime-power divisors of |PSU_3(" << qv << ")|: " << set_text(k.prime_power_divisors) << "\n";
  os << "congruent to 1 mod " << k.m << ": " << set_text(k.survivors) << "\n";
  emit(cfg, "kernel", j, os.str());
  return k.ok() ? kExitOk : kExitFail;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

int cmd_report(const RunConfig& cfg, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<psu3::CaseReport> reports;
  CaseArgs none;
  for (int n = 1; n <= 11; ++n) reports.push_back(psu3::run_case(n, case_options(cfg, none, n)));
  reports.push_back(psu3::verify_u39());
  bool ok = true;
  std::ostringstream summary;
  for (const auto& r : reports) {
    const std::string stem = r.case_id == "u39" ? "u39" : (r.case_id.size() == 1 ? "case_0" : "case_") + r.case_id;
    write_text(std::filesystem::path(out_dir) / (stem + ".json"), psu3::dump_json(psu3::reports_document({r})));
    write_text(std::filesystem::path(out_dir) / (stem + ".txt"), psu3::case_report_text(r));
    summary << stem << ": " << psu3::verdict_name(r.verdict) << ", " << r.near_misses.size() << " near-misses\n";
    ok = ok && r.verdict == psu3::Verdict::NoSurvivor;
  }
  std::cout << summary.str();
  return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"psu3kit: bounded verification toolkit for PSU_3(q) and its prime graph"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", cfg.cache_dir, std::string("Group cache directory (default $") + psu3::kCacheDirEnv +
                                                   " or the per-user cache)");
  app.add_option("--workers", cfg.workers, "Concurrent search workers")->check(CLI::PositiveNumber);
  app.add_flag("--inject-fault", cfg.inject_fault, "Corrupt one embedded sporadic constant (self-test of the search)");

  std::uint64_t q = 0;
  auto* orders = app.add_subcommand("orders", "Order, odd component and maximal tori of PSU_3(q)");
  orders->add_option("q", q, "Prime power q")->required();
  auto* graph = app.add_subcommand("graph", "Prime graph and independence data of PSU_3(q)");
  graph->add_option("q", q, "Prime power q")->required();

  std::uint64_t zp = 0;
  unsigned zn = 0;
  auto* zsig = app.add_subcommand("zsigmondy", "Primitive prime divisors of p^n - 1");
  zsig->add_option("p", zp, "Prime p")->required()->check(CLI::PositiveNumber);
  zsig->add_option("n", zn, "Exponent n")->required()->check(CLI::PositiveNumber);

  std::uint64_t prime_bound = 1000;
  unsigned exp_bound = 30;
  auto* catalan = app.add_subcommand("catalan", "Bounded search for p^m - q^n = 1");
  catalan->add_option("--prime-bound", prime_bound, "Largest prime")->check(CLI::Range(2ULL, 1ULL << 32));
  catalan->add_option("--exp-bound", exp_bound, "Largest exponent")->check(CLI::Range(2U, 64U));
  std::uint64_t nprime_bound = 1000;
  unsigned nexp_bound = 10;
  auto* nagell = app.add_subcommand("nagell", "Bounded search for p^m - 2 q^n = +-1");
  nagell->add_option("--prime-bound", nprime_bound, "Largest prime")->check(CLI::Range(2ULL, 1ULL << 32));
  nagell->add_option("--exp-bound", nexp_bound, "Largest exponent")->check(CLI::Range(2U, 64U));

  CaseArgs ca;
  auto* kase = app.add_subcommand("case", "Run one case (1..11) of the component analysis, or 'all'");
  kase->add_option("case", ca.selector, "Case number or 'all'")->required();
  kase->add_option("--q-max", ca.q_max, "Largest q")->check(CLI::Range(16ULL, 1ULL << 20));
  kase->add_option("--aux-max", ca.aux_max, "Bound on the comparison-group parameter");
  kase->add_option("--d", ca.d, "Restrict to d = (3, q+1)")->check(CLI::IsMember({1, 3}));
  kase->add_option("--degree", ca.degree, "Restrict the degree p'");
  kase->add_option("--branch", ca.branch, "Restrict to one family branch");
  kase->add_option("--budget", ca.budget, "Cap on candidate evaluations");

  auto* u39 = app.add_subcommand("u39", "Checks for M(G) = M(PSU_3(9))");

  BruteArgs ba;
  auto* brute = app.add_subcommand("brute", "Brute-force checks on an explicit matrix group");
  brute->add_option("q", ba.q, "Prime power q <= 11")->required();
  brute->add_option("--kind", ba.kind, "SU2, PSU2, SU3 or PSU3")->check(CLI::IsMember({"SU2", "PSU2", "SU3", "PSU3"}));
  brute->add_flag("--mas", ba.mas, "Maximal abelian subgroup orders");
  brute->add_flag("--spectrum", ba.spectrum, "Element orders");
  brute->add_flag("--graph", ba.graph, "Prime graph");
  brute->add_flag("--malle", ba.malle, "Abelian subgroups against maximal torus orders");
  brute->add_option("--node-budget", ba.node_budget, "Search node budget for --mas");

  auto* classify = app.add_subcommand("classify", "Field-automorphism extensions with the same M(G)");
  classify->add_option("q", q, "Prime power q")->required();
  auto* kernel = app.add_subcommand("kernel", "Prime-power divisors r^g of |PSU_3(q)| with m | r^g - 1");
  kernel->add_option("q", q, "Prime power q")->required();

  bool report_all = false;
  std::string out_dir;
  auto* report = app.add_subcommand("report", "Write every case report to a directory");
  report->add_flag("--all", report_all, "All cases and the PSU_3(9) checks")->required();
  report->add_option("--out", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*orders) return cmd_orders(cfg, q);
    if (*graph) return cmd_graph(cfg, q);
    if (*zsig) return cmd_zsigmondy(cfg, zp, zn);
    if (*catalan) return cmd_catalan(cfg, prime_bound, exp_bound);
    if (*nagell) return cmd_nagell(cfg, nprime_bound, nexp_bound);
    if (*kase) return cmd_case(cfg, ca);
    if (*u39) return cmd_u39(cfg);
    if (*brute) return cmd_brute(cfg, ba);
    if (*classify) return cmd_classify(cfg, q);
    if (*kernel) return cmd_kernel(cfg, q);
    if (*report) return cmd_report(cfg, out_dir);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
