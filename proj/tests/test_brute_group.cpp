#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <vector>

#include "catch_amalgamated.hpp"
#include "psu3/brute_group.hpp"
#include "psu3/group_cache.hpp"
#include "psu3/prime_graph.hpp"

using namespace psu3;

namespace {

GroupTable make(GroupKind kind, std::uint64_t q) { return build_group(kind, PrimePower::from_value(q)); }

/// Groups are built once per test binary.
const GroupTable& cached(GroupKind kind, std::uint64_t q) {
  static std::map<std::pair<int, std::uint64_t>, GroupTable> memo;
  auto key = std::make_pair(static_cast<int>(kind), q);
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, make(kind, q)).first;
  return it->second;
}

const MaximalAbelianCatalog& cached_catalog(GroupKind kind, std::uint64_t q) {
  static std::map<std::pair<int, std::uint64_t>, MaximalAbelianCatalog> memo;
  auto key = std::make_pair(static_cast<int>(kind), q);
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, maximal_abelian_orders(cached(kind, q))).first;
  return it->second;
}

Subgroup closure(const GroupTable& g, const std::vector<ElemIndex>& gens) {
  std::set<ElemIndex> seen{g.identity()};
  std::vector<ElemIndex> frontier{g.identity()};
  while (!frontier.empty()) {
    const auto x = frontier.back();
    frontier.pop_back();
    for (auto s : gens) {
      const auto y = g.mul(x, s);
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

/**
 * Maximal abelian subgroups generated by at most two elements, by direct
 * search over commuting pairs, counted up to conjugacy.
 */
std::map<std::uint64_t, std::size_t> two_generated_maximal_abelian(const GroupTable& g) {
  std::set<Subgroup> found;
  for (ElemIndex a = 0; a < g.size(); ++a) {
    for (ElemIndex b = a; b < g.size(); ++b) {
      if (!g.commute(a, b)) continue;
      const auto A = closure(g, {a, b});
      std::size_t centralizer = 0;
      for (ElemIndex x = 0; x < g.size(); ++x) centralizer += g.commute(x, a) && g.commute(x, b);
      if (centralizer == A.size()) found.insert(A);
    }
  }
  std::set<Subgroup> canon;
  for (const auto& A : found) {
    Subgroup best;
    for (ElemIndex x = 0; x < g.size(); ++x) {
      Subgroup c;
      for (auto a : A) c.push_back(g.conj(a, x));
      std::sort(c.begin(), c.end());
      if (best.empty() || c < best) best = c;
    }
    canon.insert(best);
  }
  std::map<std::uint64_t, std::size_t> counts;
  for (const auto& A : canon) ++counts[A.size()];
  return counts;
}

}  // namespace

TEST_CASE("closure sizes equal the order formulas", "[brute_group]") {
  CHECK(cached(GroupKind::SU3, 3).size() == 6048);
  CHECK(cached(GroupKind::PSU3, 3).size() == 6048);
  CHECK(cached(GroupKind::PSU3, 4).size() == 62400);
  CHECK(cached(GroupKind::PSU3, 5).size() == 126000);
  CHECK(cached(GroupKind::PSU2, 5).size() == 60);
  CHECK(cached(GroupKind::SU2, 5).size() == 120);
  CHECK(make(GroupKind::SU2, 3).size() == 24);
  CHECK(make(GroupKind::SU3, 2).size() == 216);
}

TEST_CASE("every element is unitary with determinant 1", "[brute_group]") {
  for (auto [kind, q] : {std::pair{GroupKind::SU3, 3ULL}, std::pair{GroupKind::SU2, 5ULL}}) {
    const auto& g = cached(kind, q);
    for (ElemIndex i = 0; i < g.size(); ++i) {
      REQUIRE(g.is_unitary(g.key(i)));
      REQUIRE(g.determinant(g.key(i)) == 1);
    }
  }
}

TEST_CASE("group axioms on the multiplication table", "[brute_group][property]") {
  const auto& g = cached(GroupKind::PSU2, 5);
  for (ElemIndex a = 0; a < g.size(); ++a) {
    REQUIRE(g.mul(a, g.inv(a)) == g.identity());
    REQUIRE(g.mul(a, g.identity()) == a);
    for (ElemIndex b = 0; b < g.size(); ++b) {
      for (ElemIndex c = 0; c < g.size(); c += 7) REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
  }
}

TEST_CASE("spectra", "[brute_group]") {
  CHECK(spectrum(cached(GroupKind::PSU2, 5)) == std::vector<std::uint64_t>{1, 2, 3, 5});
  CHECK(spectrum(cached(GroupKind::PSU3, 3)) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 7, 8, 12});
  CHECK(spectrum(cached(GroupKind::PSU3, 4)) == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 10, 13, 15});
  CHECK(spectrum(cached(GroupKind::PSU3, 5)) == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 10});
  const auto classes = conjugacy_classes(cached(GroupKind::PSU2, 5));
  CHECK(*std::max_element(classes.begin(), classes.end()) + 1 == 5);  // A_5 has five classes
}

TEST_CASE("brute-force prime graphs equal the formula graphs", "[brute_group]") {
  for (std::uint64_t q : {3ULL, 4ULL, 5ULL}) {
    INFO("q = " << q);
    CHECK(prime_graph_of(cached(GroupKind::PSU3, q)) == graph_psu3(PrimePower::from_value(q)));
  }
}

TEST_CASE("maximal abelian catalog of PSU_2(5) matches direct search", "[brute_group]") {
  for (auto [kind, q] : {std::pair{GroupKind::PSU2, 5ULL}, std::pair{GroupKind::SU2, 5ULL}, std::pair{GroupKind::SU2, 3ULL}}) {
    const auto g = make(kind, q);
    const auto cat = maximal_abelian_orders(g);
    INFO(g.name());
    CHECK(cat.class_counts == two_generated_maximal_abelian(g));
  }
  CHECK(cached_catalog(GroupKind::PSU2, 5).orders() == std::vector<std::uint64_t>{3, 4, 5});
}

TEST_CASE("catalog representatives are abelian and self-centralizing", "[brute_group][property]") {
  for (auto [kind, q] : {std::pair{GroupKind::PSU3, 3ULL}, std::pair{GroupKind::PSU3, 4ULL}}) {
    const auto& g = cached(kind, q);
    const auto& cat = cached_catalog(kind, q);
    for (const auto& A : cat.representatives) {
      for (auto a : A) {
        for (auto b : A) REQUIRE(g.commute(a, b));
      }
      std::size_t centralizer = 0;
      for (ElemIndex x = 0; x < g.size(); ++x) {
        centralizer += std::all_of(A.begin(), A.end(), [&](auto a) { return g.commute(x, a); });
      }
      REQUIRE(centralizer == A.size());
    }
  }
  CHECK(cached_catalog(GroupKind::PSU3, 3).orders() == std::vector<std::uint64_t>{7, 8, 9, 12, 16});
  CHECK(cached_catalog(GroupKind::PSU3, 4).orders() == std::vector<std::uint64_t>{13, 15, 16, 20, 25});
  CHECK(cached_catalog(GroupKind::PSU3, 5).orders() == std::vector<std::uint64_t>{7, 8, 9, 10, 12, 25});
}

TEST_CASE("abelian subgroups against maximal torus orders", "[brute_group]") {
  for (std::uint64_t q : {3ULL, 4ULL, 5ULL}) {
    const auto rep = verify_malle(cached(GroupKind::PSU3, q), cached_catalog(GroupKind::PSU3, q));
    INFO("q = " << q);
    CHECK(rep.ok());
    CHECK(rep.subgroup_orders_checked > 0);
  }
  // PSU_2(5) with the torus orders (q-1)/2 = 2 and (q+1)/2 = 3: the Klein four-group escapes
  const auto rep = verify_malle(cached_catalog(GroupKind::PSU2, 5), 5, 1, {2, 3});
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].subgroup_order == 4);
  CHECK(rep.violations[0].hall_order == 4);
  CHECK_THROWS_AS(verify_malle(cached(GroupKind::PSU2, 5), cached_catalog(GroupKind::PSU2, 5)), std::invalid_argument);
}

TEST_CASE("every element order divides a maximal abelian subgroup order", "[brute_group]") {
  for (auto [kind, q] : {std::pair{GroupKind::PSU3, 3ULL}, std::pair{GroupKind::PSU3, 4ULL},
                         std::pair{GroupKind::PSU3, 5ULL}, std::pair{GroupKind::PSU2, 5ULL}}) {
    const auto rep = verify_omegakh(cached(kind, q), cached_catalog(kind, q));
    INFO(cached(kind, q).name());
    CHECK(rep.ok());
  }
}

TEST_CASE("node budget is enforced", "[brute_group]") {
  CHECK_THROWS_AS(maximal_abelian_orders(cached(GroupKind::PSU3, 3), 5), NodeBudgetExceeded);
}

TEST_CASE("construction errors", "[brute_group]") {
  CHECK_THROWS_AS(make(GroupKind::PSU3, 13), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_kind("SO3"), std::invalid_argument);
  CHECK(parse_group_kind("PSU2") == GroupKind::PSU2);
}

TEST_CASE("cache round-trips groups and catalogs", "[brute_group][cache]") {
  const auto dir = std::filesystem::temp_directory_path() / "psu3kit-cache-test";
  std::filesystem::remove_all(dir);
  GroupCache cache(dir);
  const auto q = PrimePower::from_value(5);
  const auto g1 = cache.group(GroupKind::PSU2, q);
  const auto path = cache.group_path(GroupKind::PSU2, q, g1.field().modulus_code());
  REQUIRE(std::filesystem::exists(path));
  const auto g2 = cache.group(GroupKind::PSU2, q);
  CHECK(g1.keys() == g2.keys());
  CHECK(g1.generator_keys() == g2.generator_keys());
  const auto c1 = cache.catalog(g1);
  const auto c2 = cache.catalog(g2);
  CHECK(c1.class_counts == c2.class_counts);
  CHECK(c1.representatives == c2.representatives);

  const auto bytes = serialize_group(g1);
  CHECK(deserialize_group(bytes).keys() == g1.keys());
  auto stale = bytes;
  stale[8] = static_cast<char>(kCacheFormatVersion + 1);
  CHECK_THROWS_AS(deserialize_group(stale), std::runtime_error);
  CHECK_THROWS_AS(deserialize_group(bytes.substr(0, bytes.size() - 3)), std::runtime_error);
  CHECK_THROWS_AS(deserialize_catalog(g1, bytes), std::runtime_error);

  // a corrupt file is rebuilt transparently
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << "garbage";
  }
  CHECK(cache.group(GroupKind::PSU2, q).keys() == g1.keys());
  CHECK(std::filesystem::file_size(path) == bytes.size());
  std::filesystem::remove_all(dir);
}
