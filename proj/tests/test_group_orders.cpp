#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "psu3/group_orders.hpp"

using namespace psu3;

namespace {

BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

// Textbook order formulas, written out independently of family_order.
BigInt linear_order(unsigned n, std::uint64_t q) {
  const BigInt Q = q;
  BigInt out = ipow(Q, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i) out *= ipow(Q, i) - 1;
  return out / big_gcd(n, Q - 1);
}

BigInt unitary_order(unsigned n, std::uint64_t q) {
  const BigInt Q = q;
  BigInt out = ipow(Q, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i) out *= ipow(Q, i) - (i % 2 == 0 ? 1 : -1);
  return out / big_gcd(n, Q + 1);
}

BigInt symplectic_order(unsigned n, std::uint64_t q) {
  const BigInt Q = q;
  BigInt out = ipow(Q, n * n);
  for (unsigned i = 1; i <= n; ++i) out *= ipow(Q, 2 * i) - 1;
  return out / big_gcd(2, Q - 1);
}

BigInt orthogonal_plus_order(unsigned n, std::uint64_t q) {
  const BigInt Q = q;
  BigInt out = ipow(Q, n * (n - 1)) * (ipow(Q, n) - 1);
  for (unsigned i = 1; i < n; ++i) out *= ipow(Q, 2 * i) - 1;
  return out / big_gcd(4, ipow(Q, n) - 1);
}

BigInt orthogonal_minus_order(unsigned n, std::uint64_t q) {
  const BigInt Q = q;
  BigInt out = ipow(Q, n * (n - 1)) * (ipow(Q, n) + 1);
  for (unsigned i = 1; i < n; ++i) out *= ipow(Q, 2 * i) - 1;
  return out / big_gcd(4, ipow(Q, n) + 1);
}

}  // namespace

TEST_CASE("PSU_3(q) order matches the direct formula", "[group_orders][property]") {
  for (const auto& q : prime_power_range(1000)) {
    if (q.value < 3) continue;
    const BigInt Q = q.value;
    const std::uint64_t d = std::gcd<std::uint64_t>(3, q.value + 1);
    const BigInt direct = Q * Q * Q * (Q * Q * Q + 1) * (Q * Q - 1) / d;
    REQUIRE(order_psu3(q).value() == direct);
    REQUIRE(order_psu3(q).value() == unitary_order(3, q.value));
    const BigInt m = (Q * Q - Q + 1) / d;
    REQUIRE(BigInt(odd_component_value(q.value)) == m);
    REQUIRE(big_gcd(m, direct / m) == 1);
    const auto tori = maximal_tori_psu3(q);
    CHECK(tori.d == d);
    CHECK(BigInt(tori.orders[0]) == (Q * Q - 1) / d);
    CHECK(BigInt(tori.orders[1]) == (Q + 1) * (Q + 1) / d);
    CHECK(BigInt(tori.orders[2]) == m);
    for (auto t : tori.orders) CHECK(direct % t == 0);
  }
}

TEST_CASE("PSU_3(9) invariants", "[group_orders]") {
  const auto q = PrimePower::from_value(9);
  CHECK(order_psu3(q).to_string() == "2^5 * 3^6 * 5^2 * 73");
  CHECK(pi_of_group(SimpleGroupId::psu(3, 9)) == std::vector<std::uint64_t>{2, 3, 5, 73});
  CHECK(odd_component_value(9) == 73);
}

TEST_CASE("classical orders match textbook formulas", "[group_orders][property]") {
  for (const auto& q : prime_power_range(16)) {
    for (unsigned n = 2; n <= 6; ++n) {
      const auto l = SimpleGroupId::psl(n, q.value);
      if (!l.existence_violation()) REQUIRE(family_order(l).value() == linear_order(n, q.value));
      const auto u = SimpleGroupId::psu(n, q.value);
      if (!u.existence_violation()) REQUIRE(family_order(u).value() == unitary_order(n, q.value));
      const auto c = SimpleGroupId::cn(n, q.value);
      if (!c.existence_violation()) REQUIRE(family_order(c).value() == symplectic_order(n, q.value));
      const auto b = SimpleGroupId::bn(n, q.value);
      if (!b.existence_violation() && q.value % 2 == 1) REQUIRE(family_order(b).value() == symplectic_order(n, q.value));
    }
    for (unsigned n = 4; n <= 7; ++n) {
      REQUIRE(family_order(SimpleGroupId::dn(n, q.value)).value() == orthogonal_plus_order(n, q.value));
      REQUIRE(family_order(SimpleGroupId::twisted_dn(n, q.value)).value() == orthogonal_minus_order(n, q.value));
    }
  }
}

TEST_CASE("orders agree with published values", "[group_orders]") {
  CHECK(family_order(SimpleGroupId::psl(2, 19)).value() == 3420);
  CHECK(family_order(SimpleGroupId::alternating(7)).value() == 2520);
  CHECK(family_order(SimpleGroupId::alternating(5)).value() == 60);
  CHECK(family_order(SimpleGroupId::psl(3, 4)).value() == 20160);
  CHECK(family_order(SimpleGroupId::psu(4, 2)).value() == 25920);
  CHECK(family_order(SimpleGroupId::g2(3)).value() == 4245696);
  CHECK(family_order(SimpleGroupId::suzuki(8)).value() == 29120);
  CHECK(family_order(SimpleGroupId::ree2g2(27)).value() == BigInt("10073444472"));
  CHECK(family_order(SimpleGroupId::trid4(2)).value() == 211341312);
  CHECK(family_order(SimpleGroupId::f4(2)).value() == BigInt("3311126603366400"));
  CHECK(family_order(SimpleGroupId::e6(2)).value() == BigInt("214841575522005575270400"));
  CHECK(family_order(SimpleGroupId::twisted_e6(2)).value() == BigInt("76532479683774853939200"));
  CHECK(family_order(SimpleGroupId::e8(2)).to_string() ==
        "2^120 * 3^13 * 5^5 * 7^4 * 11^2 * 13^2 * 17^2 * 19 * 31^2 * 41 * 43 * 73 * 127 * 151 * 241 * 331");
  CHECK(family_order(SimpleGroupId::sporadic_group("J4")).value() == BigInt("86775571046077562880"));
  CHECK(family_order(SimpleGroupId::sporadic_group("M")).value() ==
        BigInt("808017424794512875886459904961710757005754368000000000"));
  CHECK(family_order(SimpleGroupId::sporadic_group("2F4(2)'")).value() == 17971200);
}

TEST_CASE("existence constraints", "[group_orders]") {
  CHECK(SimpleGroupId::alternating(4).existence_violation());
  CHECK(SimpleGroupId::psl(2, 3).existence_violation());
  CHECK_FALSE(SimpleGroupId::psl(2, 4).existence_violation());
  CHECK(SimpleGroupId::psu(3, 2).existence_violation());
  CHECK(SimpleGroupId::suzuki(2).existence_violation());
  CHECK(SimpleGroupId::ree2g2(3).existence_violation());
  CHECK(SimpleGroupId::g2(2).existence_violation());
  CHECK(SimpleGroupId::cn(2, 2).existence_violation());
  CHECK(SimpleGroupId::dn(3, 5).existence_violation());
  CHECK_FALSE(SimpleGroupId::e8(2).existence_violation());
  CHECK_THROWS_AS(family_odd_components(SimpleGroupId::psu(3, 2)), std::invalid_argument);
}

TEST_CASE("odd components are exact coprime divisors of the order", "[group_orders][property]") {
  std::vector<SimpleGroupId> ids;
  for (unsigned n = 5; n <= 60; ++n) ids.push_back(SimpleGroupId::alternating(n));
  for (const auto& q : prime_power_range(64)) {
    if (q.value >= 4) ids.push_back(SimpleGroupId::psl(2, q.value));
    for (unsigned p : {3U, 5U, 7U}) {
      ids.push_back(SimpleGroupId::psl(p, q.value));
      if (!(p == 3 && q.value == 2)) ids.push_back(SimpleGroupId::psu(p, q.value));
    }
    if (q.value > 2) ids.push_back(SimpleGroupId::g2(q.value));
    ids.push_back(SimpleGroupId::e6(q.value));
    ids.push_back(SimpleGroupId::twisted_e6(q.value));
    ids.push_back(SimpleGroupId::f4(q.value));
    ids.push_back(SimpleGroupId::trid4(q.value));
    ids.push_back(SimpleGroupId::e8(q.value));
    ids.push_back(SimpleGroupId::cn(4, q.value));
    ids.push_back(SimpleGroupId::twisted_dn(4, q.value));
    if (q.value % 2 == 1) ids.push_back(SimpleGroupId::bn(4, q.value));
  }
  for (std::uint64_t q : {8ULL, 32ULL, 128ULL}) {
    ids.push_back(SimpleGroupId::suzuki(q));
    ids.push_back(SimpleGroupId::ree2f4(q));
  }
  ids.push_back(SimpleGroupId::ree2g2(27));
  ids.push_back(SimpleGroupId::ree2g2(243));
  for (const auto& e : sporadic_table()) ids.push_back(SimpleGroupId::sporadic_group(std::string(e.name)));
  for (const auto& id : ids) {
    INFO(id.name());
    const BigInt order = family_order(id).value();
    const auto comps = family_odd_components(id).values;
    // a connected prime graph (A_10, for instance) has no odd component
    if (id.family != Family::Alt) REQUIRE_FALSE(comps.empty());
    for (const auto& c : comps) {
      CHECK(c % 2 == 1);
      REQUIRE(order % c == 0);
      CHECK(big_gcd(c, order / c) == 1);
    }
  }
}

TEST_CASE("E_8(2) components", "[group_orders]") {
  const auto v = family_odd_components(SimpleGroupId::e8(2)).values;
  CHECK(v == std::vector<BigInt>{151, 241, 331});
  const auto e = e8_case_expressions(2);
  CHECK(e[0] == 241);
  CHECK(e[1] == 151);
  CHECK(e[2] == 331);
  CHECK(e[3] == 205);
}

TEST_CASE("sporadic table and K3 groups", "[group_orders]") {
  CHECK(sporadic_table().size() == 27);
  CHECK(find_sporadic("J4")->odd_components == std::vector<std::uint64_t>{23, 29, 31, 37, 43});
  CHECK(find_sporadic("Fi24'")->odd_components == std::vector<std::uint64_t>{23, 29});
  CHECK(find_sporadic("nope") == nullptr);
  REQUIRE(k3_groups().size() == 8);
  for (const auto& k : k3_groups()) CHECK(factorize(k.order).primes().size() == 3);
}

TEST_CASE("alternating components", "[group_orders]") {
  CHECK(alternating_odd_components(5) == std::vector<BigInt>{3, 5});
  CHECK(alternating_odd_components(6) == std::vector<BigInt>{5, 9});
  CHECK(alternating_odd_components(9) == std::vector<BigInt>{7});
  CHECK(alternating_odd_components(10).empty());
  CHECK(alternating_odd_components(13) == std::vector<BigInt>{11, 13});
  CHECK_THROWS_AS(alternating_odd_components(4), std::invalid_argument);
}
