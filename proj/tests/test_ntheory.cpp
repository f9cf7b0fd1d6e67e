#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "psu3/ntheory.hpp"

using namespace psu3;

namespace {

// Independent oracles: plain trial division and a naive multiplicative order.
std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t naive_order(std::uint64_t r, std::uint64_t q) {
  std::uint64_t x = q % r, m = 1;
  while (x != 1) {
    x = x * (q % r) % r;
    ++m;
  }
  return m;
}

}  // namespace

TEST_CASE("factorize reproduces the order of PSU_3(9)", "[ntheory]") {
  auto f = factorize(42573600);
  CHECK(f.to_string() == "2^5 * 3^6 * 5^2 * 73");
  CHECK(f.primes() == std::vector<std::uint64_t>{2, 3, 5, 73});
  CHECK(factorize(62400).to_string() == "2^6 * 3 * 5^2 * 13");
}

TEST_CASE("factorize agrees with trial division", "[ntheory][property]") {
  std::mt19937_64 rng(20261018);
  std::uniform_int_distribution<std::uint64_t> dist(1, 50'000'000);
  for (int i = 0; i < 2000; ++i) {
    const auto n = dist(rng);
    const auto f = factorize(n);
    const auto oracle = trial_factor(n);
    REQUIRE(f.factors().size() == oracle.size());
    for (std::size_t k = 0; k < oracle.size(); ++k) {
      CHECK(f.factors()[k].prime == oracle[k].first);
      CHECK(f.factors()[k].exponent == oracle[k].second);
    }
    CHECK(f.value() == n);
  }
}

TEST_CASE("factorize handles integers beyond trial division", "[ntheory]") {
  const BigInt f64 = ipow(BigInt(2), 64) + 1;  // 274177 * 67280421310721
  auto f = factorize(f64);
  CHECK(f.primes() == std::vector<std::uint64_t>{274177, 67280421310721ULL});
  const BigInt semi = BigInt(1000000007) * BigInt(998244353);
  CHECK(factorize(semi).primes() == std::vector<std::uint64_t>{998244353, 1000000007});
  CHECK(factorize(1).is_one());
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(factorize(-4), std::invalid_argument);
}

TEST_CASE("is_prime agrees with trial division and rejects pseudoprimes", "[ntheory][property]") {
  for (std::uint64_t n = 0; n < 100000; ++n) REQUIRE(is_prime(n) == naive_prime(n));
  for (std::uint64_t c : {561ULL, 1105ULL, 1729ULL, 3215031751ULL, 3825123056546413051ULL}) CHECK_FALSE(is_prime(c));
  CHECK(is_prime((1ULL << 61) - 1));
  CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));  // 2^127 - 1
  CHECK_FALSE(is_prime(BigInt("170141183460469231731687303715884105729")));
}

TEST_CASE("prime powers", "[ntheory]") {
  std::size_t naive_count = 0;
  for (std::uint64_t n = 2; n <= 5000; ++n) {
    const bool pp = trial_factor(n).size() == 1;
    naive_count += pp;
    REQUIRE(is_prime_power(n) == pp);
  }
  CHECK(prime_power_range(5000).size() == naive_count);
  auto q = PrimePower::from_value(729);
  CHECK(q.p == 3);
  CHECK(q.alpha == 6);
  CHECK_THROWS_AS(PrimePower::from_value(6), std::invalid_argument);
  CHECK_THROWS_AS(PrimePower::of(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(prime_power_range(1), std::invalid_argument);
  CHECK(is_fermat_prime(257));
  CHECK_FALSE(is_fermat_prime(9));
  CHECK(is_mersenne_prime(127));
  CHECK_FALSE(is_mersenne_prime(15));
}

TEST_CASE("p_part", "[ntheory]") {
  CHECK(p_part(std::uint64_t{126}, 3) == 9);
  CHECK(p_part(std::uint64_t{65}, 3) == 1);
  CHECK(p_part(BigInt(1) << 70, 2) == (BigInt(1) << 70));
}

TEST_CASE("mult_order matches the naive order", "[ntheory][property]") {
  for (auto r : primes_up_to(300)) {
    if (r == 2) continue;
    for (std::uint64_t q = 2; q < 400; ++q) {
      if (q % r == 0) continue;
      REQUIRE(mult_order(r, q) == naive_order(r, q));
    }
  }
  CHECK(mult_order(2, 5) == 1);
  CHECK(mult_order(2, 7) == 2);
  CHECK_THROWS_AS(mult_order(3, 6), std::invalid_argument);
}

TEST_CASE("cyclotomic values multiply to x^n - 1", "[ntheory][property]") {
  for (std::uint64_t x = 2; x <= 7; ++x) {
    for (unsigned n = 1; n <= 30; ++n) {
      BigInt prod = 1;
      for (auto d : divisors(n)) prod *= cyclotomic_value(d, BigInt(x));
      REQUIRE(prod == ipow(BigInt(x), n) - 1);
    }
  }
  for (std::uint64_t n = 1; n <= 500; ++n) {
    int s = 0;
    for (auto d : divisors(n)) s += moebius(d);
    REQUIRE(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("zsigmondy_primes matches the definition", "[ntheory][property]") {
  for (auto p : primes_up_to(40)) {
    for (unsigned n = 1; n <= 24; ++n) {
      if (!fits_u64(ipow(BigInt(p), n))) break;  // keep the oracle's factorizations within 64 bits
      // oracle: primes of p^n - 1 dividing no p^m - 1 with m < n
      std::vector<std::uint64_t> expected;
      const BigInt pn = ipow(BigInt(p), n) - 1;
      if (pn > 1) {
        for (auto r : factorize(pn).primes()) {
          bool primitive = true;
          for (unsigned m = 1; m < n && primitive; ++m) primitive = (ipow(BigInt(p), m) - 1) % r != 0;
          if (primitive) expected.push_back(r);
        }
      }
      INFO("p = " << p << ", n = " << n);
      REQUIRE(zsigmondy_primes(p, n) == expected);
      // Zsigmondy's exceptions are the only empty cases
      const bool exception = (p == 2 && (n == 1 || n == 6)) || (n == 2 && ((p + 1) & p) == 0);
      if (!exception) CHECK_FALSE(expected.empty());
    }
  }
  CHECK(zsigmondy_primes(2, 6).empty());
  CHECK(zsigmondy_primes(3, 2).empty());
  CHECK_THROWS_AS(zsigmondy_primes(4, 2), std::invalid_argument);
}

TEST_CASE("catalan_search finds only 3^2 - 2^3 = 1", "[ntheory]") {
  const auto sols = catalan_search(1000, 30);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == CatalanSolution{3, 2, 2, 3});
  CHECK_THROWS_AS(catalan_search(1, 30), std::invalid_argument);
}

TEST_CASE("nagell_search: two exceptional solutions, otherwise squares", "[ntheory]") {
  const auto sols = nagell_search(1000, 10);
  std::vector<ExceptionalSolution> odd;
  for (const auto& s : sols) {
    REQUIRE(s.satisfies_equation());
    if (!s.square_exponents()) odd.push_back(s);
  }
  REQUIRE(odd.size() == 2);
  CHECK(odd[0] == ExceptionalSolution{3, 5, 11, 2, 1});
  CHECK(odd[1] == ExceptionalSolution{239, 2, 13, 4, -1});
  CHECK(std::all_of(odd.begin(), odd.end(), [](const auto& s) { return s.is_listed_exception(); }));
  CHECK(std::any_of(sols.begin(), sols.end(), [](const auto& s) { return s.square_exponents(); }));
}
