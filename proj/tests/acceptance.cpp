// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "psu3/brute_group.hpp"
#include "psu3/case_engine.hpp"
#include "psu3/prime_graph.hpp"

using namespace psu3;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int n, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    o.ok = false;
    o.detail += " (time limit " + std::to_string(limit_s) + " s exceeded)";
  }
  if (!o.ok) ++failures;
  std::printf("%s criterion %d: %s [%.2f s] %s\n", o.ok ? "PASS" : "FAIL", n, name.c_str(), secs, o.detail.c_str());
  std::fflush(stdout);
}

const GroupTable& group(GroupKind kind, std::uint64_t q) {
  static std::map<std::pair<int, std::uint64_t>, GroupTable> memo;
  const auto key = std::make_pair(static_cast<int>(kind), q);
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, build_group(kind, PrimePower::from_value(q))).first;
  return it->second;
}

const MaximalAbelianCatalog& catalog(GroupKind kind, std::uint64_t q) {
  static std::map<std::pair<int, std::uint64_t>, MaximalAbelianCatalog> memo;
  const auto key = std::make_pair(static_cast<int>(kind), q);
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, maximal_abelian_orders(group(kind, q))).first;
  return it->second;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

int main() {
  criterion(1, "PSU_3(9) order, prime set and components", 1.0, [] {
    const auto q = PrimePower::from_value(9);
    const auto order = order_psu3(q);
    const auto comps = graph_psu3(q).components();
    const bool ok = order.to_string() == "2^5 * 3^6 * 5^2 * 73" &&
                    order.primes() == std::vector<std::uint64_t>{2, 3, 5, 73} &&
                    comps == std::vector<std::vector<std::uint64_t>>{{2, 3, 5}, {73}};
    return Outcome{ok, order.to_string() + ", " + std::to_string(comps.size()) + " components"};
  });

  criterion(2, "Catalan and Nagell-Ljunggren bounded searches", 10.0, [] {
    const auto cat = catalan_search(1000, 30);
    bool ok = cat == std::vector<CatalanSolution>{{3, 2, 2, 3}};
    std::size_t exceptional = 0;
    bool others_square = true, found_539 = false, found_239 = false;
    for (const auto& s : nagell_search(1000, 10)) {
      if (s.square_exponents()) continue;
      ++exceptional;
      found_539 |= s == ExceptionalSolution{3, 5, 11, 2, 1};
      found_239 |= s == ExceptionalSolution{239, 2, 13, 4, -1};
      others_square &= s.is_listed_exception();
    }
    ok = ok && exceptional == 2 && found_539 && found_239 && others_square;
    return Outcome{ok, std::to_string(cat.size()) + " Catalan solution(s), " + std::to_string(exceptional) +
                           " non-square Nagell solutions"};
  });

  criterion(3, "Case 2 replica p'=5, d=1, q<157, q'<=34", 1.0, [] {
    const auto r = case2_gap_replica(157, 34);
    return Outcome{r.solutions.empty() && r.pairs_checked > 0,
                   std::to_string(r.pairs_checked) + " pairs, " + std::to_string(r.solutions.size()) + " solutions"};
  });

  criterion(4, "brute-force group sizes", 300.0, [] {
    const std::vector<std::pair<GroupKind, std::uint64_t>> cases{
        {GroupKind::SU3, 3}, {GroupKind::PSU3, 4}, {GroupKind::PSU3, 5}, {GroupKind::PSU2, 5}};
    const std::vector<std::size_t> expect{6048, 62400, 126000, 60};
    std::vector<std::size_t> got;
    for (auto [k, q] : cases) got.push_back(group(k, q).size());
    return Outcome{got == expect, join(got)};
  });

  criterion(5, "formula prime graph equals brute-force graph for q = 3, 4, 5", 0, [] {
    bool ok = true;
    for (std::uint64_t q : {3ULL, 4ULL, 5ULL}) ok &= prime_graph_of(group(GroupKind::PSU3, q)) == graph_psu3(PrimePower::from_value(q));
    return Outcome{ok, ok ? "3 graphs equal" : "mismatch"};
  });

  criterion(6, "PSU_2(5) has a maximal abelian subgroup of order 4", 0, [] {
    const auto orders = catalog(GroupKind::PSU2, 5).orders();
    const bool has4 = std::find(orders.begin(), orders.end(), 4) != orders.end();
    const auto rep = verify_malle(catalog(GroupKind::PSU2, 5), 5, 1, {2, 3});
    const bool escapes = 2 % 4 != 0 && 3 % 4 != 0 && !rep.ok();
    return Outcome{has4 && escapes, "orders {" + join(orders) + "}, tori {2,3}"};
  });

  criterion(7, "abelian subgroups against tori for q = 3, 4, 5", 0, [] {
    std::size_t violations = 0;
    for (std::uint64_t q : {3ULL, 4ULL, 5ULL}) {
      violations += verify_malle(group(GroupKind::PSU3, q), catalog(GroupKind::PSU3, q)).violations.size();
    }
    return Outcome{violations == 0, std::to_string(violations) + " violations"};
  });

  criterion(8, "element orders divide maximal abelian subgroup orders", 0, [] {
    std::size_t violations = 0;
    for (auto [k, q] : std::vector<std::pair<GroupKind, std::uint64_t>>{
             {GroupKind::PSU3, 3}, {GroupKind::PSU3, 4}, {GroupKind::PSU3, 5}, {GroupKind::PSU2, 5}}) {
      violations += verify_omegakh(group(k, q), catalog(k, q)).violations.size();
    }
    return Outcome{violations == 0, std::to_string(violations) + " violations"};
  });

  criterion(9, "all cases: no survivor, required near-misses present", 300.0, [] {
    const auto reports = run_all_cases(CaseOptions{});
    bool ok = true;
    std::size_t misses = 0;
    for (const auto& r : reports) {
      ok &= r.verdict == Verdict::NoSurvivor;
      for (const auto& nm : r.near_misses) {
        ok &= nm.eliminated() && reverify_near_miss(nm).empty();
        ++misses;
      }
    }
    auto find = [&](int c, std::uint64_t q, const std::string& name, const std::string& branch = "") {
      for (const auto& nm : reports[c - 1].near_misses) {
        if (nm.q == q && nm.group.name() == name && (branch.empty() || nm.branch == branch)) return &nm;
      }
      return static_cast<const NearMiss*>(nullptr);
    };
    const auto* j4 = find(11, 11, "J4");
    const auto* a1 = find(6, 8, "PSL_2(19)");
    const auto* e8 = find(8, 32, "E_8(2)", "E_8(q'):Phi_30");
    ok = ok && j4 && a1 && e8;
    if (ok) {
      const auto& w = j4->primary()->witness_primes;
      ok &= std::find(w.begin(), w.end(), 43) != w.end();
      ok &= a1->primary()->witness_primes == std::vector<std::uint64_t>{5};
      ok &= e8->primary()->reason == EliminationReason::SpectrumMembership;
    }
    for (int c : {4, 5}) {
      std::size_t fermat = 0;
      for (const auto& nm : reports[c - 1].near_misses) {
        if (nm.q == 5) fermat += nm.primary()->reason == EliminationReason::ExcludedFermat;
      }
      ok &= fermat > 0;
    }
    return Outcome{ok, std::to_string(misses) + " near-misses eliminated and reverified"};
  });

  criterion(10, "field-automorphism classification table and exclusivity", 0, [] {
    auto cls = [](std::uint64_t q) { return classify_extensions(PrimePower::from_value(q)); };
    using V = std::vector<std::uint64_t>;
    bool ok = cls(16807).allowed == V{1} && cls(125).allowed == V{1, 3} && cls(64).allowed == V{1, 3} &&
              cls(49).allowed == V{1, 2} && cls(729).outcome == 9 && cls(729).allowed == V{1, 2, 3, 6} &&
              cls(531441).outcome == 10;
    std::size_t checked = 0;
    for (const auto& q : prime_power_range(1'000'000)) {
      if (q.value <= 2 || is_fermat_prime(q.value)) continue;
      ok &= extension_items_matching(q).size() == 1;
      ++checked;
    }
    return Outcome{ok, std::to_string(checked) + " prime powers with exactly one item"};
  });

  criterion(11, "rho-set conformance for non-Fermat 3 <= q <= 1000, q != 9", 0, [] {
    std::size_t checked = 0, bad = 0;
    std::string first;
    for (const auto& q : prime_power_range(1000)) {
      if (q.value < 3 || q.value == 9 || is_fermat_prime(q.value)) continue;
      const auto r = rho_conformance(q);
      ++checked;
      if (!r.ok) {
        if (bad++ == 0) first = r.detail;
      }
    }
    return Outcome{checked == 187 && bad == 0, std::to_string(checked) + " values, " + std::to_string(bad) + " failures " + first};
  });

  std::printf("%s: %d criterion failure(s)\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
