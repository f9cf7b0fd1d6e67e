#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "psu3/prime_graph.hpp"

using namespace psu3;

namespace {

bool contains(const std::vector<std::uint64_t>& v, std::uint64_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

/**
 * Adjacency in Gamma(PSU_3(q)) from case rules on the prime classes:
 * A = primes of q-1, B = primes of q+1, C = primes of (q^2-q+1)/d.
 */
bool rule_adjacent(const PrimePower& q, std::uint64_t r, std::uint64_t s) {
  const std::uint64_t v = q.value, p = q.p, d = std::gcd<std::uint64_t>(3, v + 1);
  const auto A = factorize(v - 1).primes(), B = factorize(v + 1).primes();
  const auto C = factorize((v * v - v + 1) / d).primes();
  if (contains(C, r) || contains(C, s)) return contains(C, r) && contains(C, s);
  if (r == p || s == p) {
    const std::uint64_t o = r == p ? s : r;
    return ((v + 1) / d) % o == 0;
  }
  // both in A or B: only 3 (from B, with (q+1)_3 = 3 and d = 3) fails to meet odd primes of q-1 alone
  for (auto [x, y] : {std::pair{r, s}, std::pair{s, r}}) {
    if (x == 3 && d == 3 && p_part(v + 1, 3) == 3 && y != 2 && contains(A, y) && !contains(B, y)) return false;
  }
  return true;
}

std::vector<std::uint64_t> best_independent(const std::vector<std::uint64_t>& verts, const PrimeGraph& g,
                                            std::optional<std::uint64_t> required) {
  // brute force over subsets; ties broken by the lexicographically least sorted vertex list
  std::vector<std::uint64_t> best;
  bool found = false;
  const std::size_t n = verts.size();
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    std::vector<std::uint64_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(verts[i]);
    }
    if (required && !contains(s, *required)) continue;
    if (!g.is_independent(s)) continue;
    if (!found || s.size() > best.size() || (s.size() == best.size() && s < best)) {
      best = s;
      found = true;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("graph_psu3 agrees with the class rules", "[prime_graph][property]") {
  for (const auto& q : prime_power_range(3000)) {
    if (q.value < 3) continue;
    const auto g = graph_psu3(q);
    const auto& v = g.vertices();
    REQUIRE(v == order_psu3(q).primes());
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        INFO("q = " << q.value << ", pair " << v[i] << "," << v[j]);
        REQUIRE(g.adjacent(v[i], v[j]) == rule_adjacent(q, v[i], v[j]));
      }
    }
  }
}

TEST_CASE("components of PSU_3(q) are pi_1 and pi_2", "[prime_graph][property]") {
  for (const auto& q : prime_power_range(2000)) {
    if (q.value < 3) continue;
    const auto g = graph_psu3(q);
    const auto [pi1, pi2] = psu3_pi_split(q);
    const auto comps = g.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == pi1);
    CHECK(comps[1] == pi2);
    CHECK(g.is_clique(pi2));
  }
  const auto g9 = graph_psu3(PrimePower::from_value(9));
  CHECK(g9.components() == std::vector<std::vector<std::uint64_t>>{{2, 3, 5}, {73}});
  CHECK(g9.is_clique({2, 3, 5}));
  CHECK(g9.serialize() == "2: 3 5\n3: 2 5\n5: 2 3\n73:\n");
}

TEST_CASE("independence data is a maximum independent set", "[prime_graph][property]") {
  std::mt19937_64 rng(7);
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % primes.size();
    std::vector<std::uint64_t> verts(primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(n));
    PrimeGraph g(verts);
    const double density = (rng() % 100) / 100.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if ((rng() % 1000) / 1000.0 < density) g.add_edge(verts[i], verts[j]);
      }
    }
    const std::uint64_t req = verts[rng() % n];
    const auto data = independence(g, req);
    const auto oracle = best_independent(verts, g, std::nullopt);
    const auto oracle_p = best_independent(verts, g, req);
    REQUIRE(data.t == oracle.size());
    CHECK(data.rho == oracle);
    REQUIRE(data.t_p == oracle_p.size());
    CHECK(data.rho_p == oracle_p);
    CHECK(g.is_independent(data.rho));
    CHECK(contains(data.rho_p, req));
    if (g.has_vertex(2)) {
      const auto oracle_2 = best_independent(verts, g, 2);
      CHECK(data.rho_2 == oracle_2);
    }
  }
}

TEST_CASE("rho-set conformance for q <= 1000", "[prime_graph]") {
  std::size_t checked = 0;
  for (const auto& q : prime_power_range(1000)) {
    if (q.value < 3 || q.value == 9 || is_fermat_prime(q.value)) continue;
    const auto r = rho_conformance(q);
    INFO("q = " << q.value << ": " << r.detail);
    REQUIRE(r.ok);
    CHECK(r.rho2_in_scope == (q.p != 2));
    ++checked;
  }
  CHECK(checked == 187);
}

TEST_CASE("graph construction errors", "[prime_graph]") {
  PrimeGraph g({2, 3, 5});
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(2, 7), std::invalid_argument);
  CHECK_THROWS_AS(diagonal_extension_graph(PrimePower::from_value(4)), std::invalid_argument);
  CHECK_THROWS_AS(field_extension_adjacencies(PrimePower::from_value(8), 2), std::invalid_argument);
  CHECK_THROWS_AS(witness_set(PrimePower::from_value(2)), std::invalid_argument);
}

TEST_CASE("diagonal extension adds 3 to every torus", "[prime_graph]") {
  const auto q = PrimePower::from_value(8);
  const auto base = graph_psu3(q);
  const auto ext = diagonal_extension_graph(q);
  CHECK(base.vertices() == ext.vertices());
  for (const auto& e : base.edges()) CHECK(ext.adjacent(e.first, e.second));
  CHECK(ext.adjacent(3, 19));  // 3 meets the odd component (q^2-q+1)/3 = 19
  CHECK_FALSE(base.adjacent(3, 19));
}

TEST_CASE("field automorphism adjacencies", "[prime_graph]") {
  const auto q = PrimePower::from_value(64);
  const auto pairs3 = field_extension_adjacencies(q, 3);
  for (auto x : {2ULL, 5ULL, 13ULL}) CHECK(pairs3.count(make_pair_sorted(3, x)) == 1);
  const auto pairs2 = field_extension_adjacencies(q, 2);
  CHECK(pairs2 == std::set<PrimePair>{{2, 3}, {2, 7}});
  const auto odd = field_extension_adjacencies(PrimePower::from_value(49), 2);
  CHECK(odd.count({2, 7}) == 1);
  CHECK(odd.count({2, 3}) == 1);
  CHECK(odd.count({2, 5}) == 1);
}
