#ifndef PSU3_GROUP_ORDERS_HPP_
#define PSU3_GROUP_ORDERS_HPP_

/**
 * @file group_orders.hpp
 * @brief Orders, odd order components and maximal tori of finite simple
 * groups.
 *
 * PSU_3(q) gets the full treatment (order, odd component, the three maximal
 * torus orders). The comparison families only get what the component
 * equations of the recognition argument need: the exact order (standard
 * formulas, factored through cyclotomic values so that huge orders such as
 * |E_8(5)| never have to be factored as a whole) and the odd order
 * components for the parameter shapes in which those families have a
 * disconnected prime graph.
 */

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psu3/ntheory.hpp"

namespace psu3 {

enum class Family {
  Alt,
  PSL,
  PSU,
  Suzuki,
  Ree2G2,
  Ree2F4,
  G2,
  Bn,
  Cn,
  Dn,
  TwistedDn,
  E6,
  TwistedE6,
  E7,
  E8,
  F4,
  TriD4,
  Sporadic,
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Alt: return "Alt";
    case Family::PSL: return "PSL";
    case Family::PSU: return "PSU";
    case Family::Suzuki: return "Suzuki";
    case Family::Ree2G2: return "Ree2G2";
    case Family::Ree2F4: return "Ree2F4";
    case Family::G2: return "G2";
    case Family::Bn: return "Bn";
    case Family::Cn: return "Cn";
    case Family::Dn: return "Dn";
    case Family::TwistedDn: return "TwistedDn";
    case Family::E6: return "E6";
    case Family::TwistedE6: return "TwistedE6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::TriD4: return "TriD4";
    case Family::Sporadic: return "Sporadic";
  }
  return "?";
}

/**
 * Names one finite simple group: a family plus its parameters.
 *
 * Construction never validates, so that the case searches can talk about
 * parameter values that fail an existence constraint; existence_violation()
 * reports the failed constraint and family_order() refuses such ids.
 */
struct SimpleGroupId {
  Family family = Family::Sporadic;
  unsigned n = 0;        // degree or Lie rank; 0 when the family has none
  std::uint64_t q = 0;   // field size; 0 for Alt and Sporadic
  std::string sporadic;  // Atlas name for Sporadic

  static SimpleGroupId alternating(unsigned n) { return {Family::Alt, n, 0, {}}; }
  static SimpleGroupId psl(unsigned n, std::uint64_t q) { return {Family::PSL, n, q, {}}; }
  static SimpleGroupId psu(unsigned n, std::uint64_t q) { return {Family::PSU, n, q, {}}; }
  static SimpleGroupId suzuki(std::uint64_t q) { return {Family::Suzuki, 0, q, {}}; }
  static SimpleGroupId ree2g2(std::uint64_t q) { return {Family::Ree2G2, 0, q, {}}; }
  static SimpleGroupId ree2f4(std::uint64_t q) { return {Family::Ree2F4, 0, q, {}}; }
  static SimpleGroupId g2(std::uint64_t q) { return {Family::G2, 0, q, {}}; }
  static SimpleGroupId bn(unsigned n, std::uint64_t q) { return {Family::Bn, n, q, {}}; }
  static SimpleGroupId cn(unsigned n, std::uint64_t q) { return {Family::Cn, n, q, {}}; }
  static SimpleGroupId dn(unsigned n, std::uint64_t q) { return {Family::Dn, n, q, {}}; }
  static SimpleGroupId twisted_dn(unsigned n, std::uint64_t q) { return {Family::TwistedDn, n, q, {}}; }
  static SimpleGroupId e6(std::uint64_t q) { return {Family::E6, 0, q, {}}; }
  static SimpleGroupId twisted_e6(std::uint64_t q) { return {Family::TwistedE6, 0, q, {}}; }
  static SimpleGroupId e7(std::uint64_t q) { return {Family::E7, 0, q, {}}; }
  static SimpleGroupId e8(std::uint64_t q) { return {Family::E8, 0, q, {}}; }
  static SimpleGroupId f4(std::uint64_t q) { return {Family::F4, 0, q, {}}; }
  static SimpleGroupId trid4(std::uint64_t q) { return {Family::TriD4, 0, q, {}}; }
  static SimpleGroupId sporadic_group(std::string name) { return {Family::Sporadic, 0, 0, std::move(name)}; }

  /// Conventional name, e.g. "PSU_3(9)", "A_7", "2G_2(27)", "J4".
  std::string name() const {
    auto qs = std::to_string(q);
    auto ns = std::to_string(n);
    switch (family) {
      case Family::Alt: return "A_" + ns;
      case Family::PSL: return "PSL_" + ns + "(" + qs + ")";
      case Family::PSU: return "PSU_" + ns + "(" + qs + ")";
      case Family::Suzuki: return "2B_2(" + qs + ")";
      case Family::Ree2G2: return "2G_2(" + qs + ")";
      case Family::Ree2F4: return "2F_4(" + qs + ")";
      case Family::G2: return "G_2(" + qs + ")";
      case Family::Bn: return "B_" + ns + "(" + qs + ")";
      case Family::Cn: return "C_" + ns + "(" + qs + ")";
      case Family::Dn: return "D_" + ns + "(" + qs + ")";
      case Family::TwistedDn: return "2D_" + ns + "(" + qs + ")";
      case Family::E6: return "E_6(" + qs + ")";
      case Family::TwistedE6: return "2E_6(" + qs + ")";
      case Family::E7: return "E_7(" + qs + ")";
      case Family::E8: return "E_8(" + qs + ")";
      case Family::F4: return "F_4(" + qs + ")";
      case Family::TriD4: return "3D_4(" + qs + ")";
      case Family::Sporadic: return sporadic;
    }
    return "?";
  }

  /// The failed existence constraint, or nullopt when the group exists and is simple.
  std::optional<std::string> existence_violation() const;

  friend bool operator==(const SimpleGroupId&, const SimpleGroupId&) = default;
};

// ---------------------------------------------------------------------------
// Embedded Atlas data
// ---------------------------------------------------------------------------

struct SporadicEntry {
  std::string_view name;
  std::vector<PrimeFactor> order;
  std::vector<std::uint64_t> odd_components;
};

/// The 26 sporadic groups and the Tits group, with factored orders and the
/// odd order components of their prime graphs.
inline const std::vector<SporadicEntry>& sporadic_table() {
  // Orders: Atlas of Finite Groups. Odd components: Williams / Kondrat'ev tables.
  static const std::vector<SporadicEntry> table = {
      {"M11", {{2, 4}, {3, 2}, {5, 1}, {11, 1}}, {5, 11}},
      {"M12", {{2, 6}, {3, 3}, {5, 1}, {11, 1}}, {11}},
      {"M22", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}, {5, 7, 11}},
      {"M23", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}, {11, 23}},
      {"M24", {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}, {11, 23}},
      {"J1", {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}}, {7, 11, 19}},
      {"J2", {{2, 7}, {3, 3}, {5, 2}, {7, 1}}, {7}},
      {"J3", {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}}, {17, 19}},
      {"J4",
       {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1}, {31, 1}, {37, 1}, {43, 1}},
       {23, 29, 31, 37, 43}},
      {"HS", {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}}, {7, 11}},
      {"McL", {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}}, {7, 11}},
      {"Suz", {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}, {11, 13}},
      {"Co1", {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}, {23}},
      {"Co2", {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}, {11, 23}},
      {"Co3", {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}, {23}},
      {"He", {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}}, {17}},
      {"Ly", {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1}, {67, 1}}, {31, 37, 67}},
      {"Ru", {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}}, {29}},
      {"ON", {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}}, {11, 19, 31}},
      {"HN", {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}}, {19}},
      {"Th", {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}}, {19, 31}},
      {"Fi22", {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}, {13}},
      {"Fi23", {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}}, {17, 23}},
      {"Fi24'",
       {{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1}, {17, 1}, {23, 1}, {29, 1}},
       {23, 29}},
      {"B",
       {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {31, 1}, {47, 1}},
       {47}},
      {"M",
       {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1}, {23, 1}, {29, 1},
        {31, 1}, {41, 1}, {47, 1}, {59, 1}, {71, 1}},
       {41, 59, 71}},
      {"2F4(2)'", {{2, 11}, {3, 3}, {5, 2}, {13, 1}}, {13}},
  };
  return table;
}

inline const SporadicEntry* find_sporadic(std::string_view name) {
  for (const auto& e : sporadic_table()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

struct K3Entry {
  std::string_view name;
  std::uint64_t order;
};

/// The eight simple groups whose order has exactly three prime divisors.
inline const std::vector<K3Entry>& k3_groups() {
  // Atlas of Finite Groups; the list is complete by Herzog's theorem.
  static const std::vector<K3Entry> table = {
      {"A5", 60},        {"A6", 360},        {"L2(7)", 168},  {"L2(8)", 504},
      {"L2(17)", 2448},  {"L3(3)", 5616},    {"U3(3)", 6048}, {"U4(2)", 25920},
  };
  return table;
}

// ---------------------------------------------------------------------------
// Factored building blocks
// ---------------------------------------------------------------------------

namespace detail {

inline FactoredInteger factored_prime_power(const PrimePower& q, unsigned k) {
  if (k == 0) return {};
  return FactoredInteger::from_factors({{q.p, q.alpha * k}});
}

/// q^i - 1 as the product of Phi_d(q) over d | i.
inline FactoredInteger factored_q_minus(std::uint64_t q, unsigned i) {
  FactoredInteger out;
  for (auto d : divisors(i)) out *= factorize(cyclotomic_value(d, BigInt(q)));
  return out;
}

/// q^i + 1 as the product of Phi_d(q) over d | 2i with d not dividing i.
inline FactoredInteger factored_q_plus(std::uint64_t q, unsigned i) {
  FactoredInteger out;
  for (auto d : divisors(2ULL * i)) {
    if (i % d == 0) continue;
    out *= factorize(cyclotomic_value(d, BigInt(q)));
  }
  return out;
}

inline FactoredInteger factored_gcd(std::uint64_t a, const BigInt& b) {
  return factorize(BigInt(boost::multiprecision::gcd(BigInt(a), b)));
}

inline std::optional<unsigned> odd_power_exponent(std::uint64_t q, std::uint64_t base) {
  auto pp = PrimePower::try_from_value(q);
  if (!pp || pp->p != base || pp->alpha % 2 == 0) return std::nullopt;
  return (pp->alpha - 1) / 2;
}

inline bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace detail

inline std::optional<std::string> SimpleGroupId::existence_violation() const {
  if (family == Family::Sporadic) {
    if (find_sporadic(sporadic) == nullptr) return "unknown sporadic group '" + sporadic + "'";
    return std::nullopt;
  }
  if (family == Family::Alt) {
    if (n < 5) return "alternating degree must be >= 5";
    return std::nullopt;
  }
  if (!PrimePower::try_from_value(q)) return "q=" + std::to_string(q) + " is not a prime power";
  switch (family) {
    case Family::PSL:
      if (n < 2) return "PSL needs n >= 2";
      if (n == 2 && q < 4) return "PSL_2(q) needs q >= 4";
      break;
    case Family::PSU:
      if (n < 3) return "PSU needs n >= 3";
      if (n == 3 && q == 2) return "PSU_3(2) is solvable";
      break;
    case Family::Suzuki:
      if (!detail::odd_power_exponent(q, 2) || q < 8) return "2B_2 needs q = 2^(2m+1) > 2";
      break;
    case Family::Ree2G2:
      if (!detail::odd_power_exponent(q, 3) || q < 27) return "2G_2 needs q = 3^(2m+1) > 3";
      break;
    case Family::Ree2F4:
      if (!detail::odd_power_exponent(q, 2) || q < 8) return "2F_4 needs q = 2^(2m+1) > 2";
      break;
    case Family::G2:
      if (q == 2) return "G_2(2) is not simple";
      break;
    case Family::Bn:
    case Family::Cn:
      if (n < 2) return "B_n/C_n need n >= 2";
      if (n == 2 && q == 2) return "C_2(2) is not simple";
      break;
    case Family::Dn:
    case Family::TwistedDn:
      if (n < 4) return "D_n/2D_n need n >= 4";
      break;
    default:
      break;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// PSU_3(q)
// ---------------------------------------------------------------------------

/// d = (3, q+1).
inline std::uint64_t psu3_d(std::uint64_t q) { return std::gcd<std::uint64_t>(3, q + 1); }

inline FactoredInteger order_psu3(const PrimePower& q) {
  if (q.value < 2) throw std::invalid_argument("order_psu3: q must be >= 2");
  // q^3 (q^2-1)(q^3+1) / d
  FactoredInteger out = detail::factored_prime_power(q, 3);
  out *= detail::factored_q_minus(q.value, 2);
  out *= detail::factored_q_plus(q.value, 3);
  return out.divided_by(factorize(psu3_d(q.value)));
}

inline constexpr std::uint64_t kMaxComponentQ = 1ULL << 30;

/// (q^2 - q + 1) / (3, q+1).
inline std::uint64_t odd_component_value(std::uint64_t q) {
  if (q >= kMaxComponentQ) throw std::overflow_error("q too large for 64-bit component");
  return (q * q - q + 1) / psu3_d(q);
}

inline FactoredInteger odd_component_psu3(const PrimePower& q) {
  if (q.value < 3) throw std::invalid_argument("odd_component_psu3: q must be >= 3");
  return factorize(odd_component_value(q.value));
}

struct TorusOrders {
  std::uint64_t q = 0;
  std::uint64_t d = 0;
  std::array<std::uint64_t, 3> orders{};  // (q^2-1)/d, (q+1)^2/d, (q^2-q+1)/d
};

inline TorusOrders maximal_tori_psu3(const PrimePower& q) {
  if (q.value < 2) throw std::invalid_argument("maximal_tori_psu3: q must be >= 2");
  if (q.value >= kMaxComponentQ) throw std::overflow_error("q too large for 64-bit tori");
  const std::uint64_t v = q.value, d = psu3_d(v);
  return {v, d, {(v * v - 1) / d, (v + 1) * (v + 1) / d, (v * v - v + 1) / d}};
}

// ---------------------------------------------------------------------------
// Family orders
// ---------------------------------------------------------------------------

namespace detail {

inline FactoredInteger alternating_order(unsigned n) {
  // n!/2 by Legendre's formula
  std::vector<PrimeFactor> f;
  for (auto p : primes_up_to(n)) {
    unsigned e = 0;
    for (std::uint64_t pk = p; pk <= n; pk *= p) e += static_cast<unsigned>(n / pk);
    if (p == 2) --e;
    f.push_back({p, e});
  }
  return FactoredInteger::from_factors(std::move(f));
}

/// q^N * prod (q^i - 1) over `minus` * prod (q^i + 1) over `plus`, divided by `divisor`.
inline FactoredInteger lie_order(const PrimePower& q, unsigned N, std::initializer_list<unsigned> minus,
                                 std::initializer_list<unsigned> plus, std::uint64_t divisor) {
  FactoredInteger out = factored_prime_power(q, N);
  for (auto i : minus) out *= factored_q_minus(q.value, i);
  for (auto i : plus) out *= factored_q_plus(q.value, i);
  return out.divided_by(factorize(divisor));
}

}  // namespace detail

/// Exact order of a valid simple group, factored.
inline FactoredInteger family_order(const SimpleGroupId& id) {
  if (auto why = id.existence_violation()) {
    throw std::invalid_argument("family_order: " + id.name() + ": " + *why);
  }
  if (id.family == Family::Sporadic) {
    return FactoredInteger::from_factors(find_sporadic(id.sporadic)->order);
  }
  if (id.family == Family::Alt) return detail::alternating_order(id.n);

  const PrimePower q = PrimePower::from_value(id.q);
  const std::uint64_t v = q.value;
  const unsigned n = id.n;
  auto g = [](std::uint64_t a, const BigInt& b) {
    return boost::multiprecision::gcd(BigInt(a), b).convert_to<std::uint64_t>();
  };
  FactoredInteger out;
  switch (id.family) {
    case Family::PSL:
    case Family::PSU: {
      const bool unitary = id.family == Family::PSU;
      out = detail::factored_prime_power(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) {
        out *= (unitary && i % 2 == 1) ? detail::factored_q_plus(v, i) : detail::factored_q_minus(v, i);
      }
      return out.divided_by(factorize(g(n, unitary ? BigInt(v) + 1 : BigInt(v) - 1)));
    }
    case Family::Suzuki: return detail::lie_order(q, 2, {1}, {2}, 1);
    case Family::Ree2G2: return detail::lie_order(q, 3, {1}, {3}, 1);
    case Family::Ree2F4: return detail::lie_order(q, 12, {4, 1}, {6, 3}, 1);
    case Family::G2: return detail::lie_order(q, 6, {6, 2}, {}, 1);
    case Family::Bn:
    case Family::Cn: {
      out = detail::factored_prime_power(q, n * n);
      for (unsigned i = 1; i <= n; ++i) out *= detail::factored_q_minus(v, 2 * i);
      return out.divided_by(factorize(g(2, BigInt(v) - 1)));
    }
    case Family::Dn:
    case Family::TwistedDn: {
      const bool twisted = id.family == Family::TwistedDn;
      out = detail::factored_prime_power(q, n * (n - 1));
      out *= twisted ? detail::factored_q_plus(v, n) : detail::factored_q_minus(v, n);
      for (unsigned i = 1; i < n; ++i) out *= detail::factored_q_minus(v, 2 * i);
      BigInt qn = ipow(v, n);
      return out.divided_by(factorize(g(4, twisted ? BigInt(qn + 1) : BigInt(qn - 1))));
    }
    case Family::E6: return detail::lie_order(q, 36, {12, 9, 8, 6, 5, 2}, {}, g(3, BigInt(v) - 1));
    case Family::TwistedE6: return detail::lie_order(q, 36, {12, 8, 6, 2}, {9, 5}, g(3, BigInt(v) + 1));
    case Family::E7: return detail::lie_order(q, 63, {18, 14, 12, 10, 8, 6, 2}, {}, g(2, BigInt(v) - 1));
    case Family::E8: return detail::lie_order(q, 120, {30, 24, 20, 18, 14, 12, 8, 2}, {}, 1);
    case Family::F4: return detail::lie_order(q, 24, {12, 8, 6, 2}, {}, 1);
    case Family::TriD4: {
      // q^12 (q^8 + q^4 + 1)(q^6 - 1)(q^2 - 1); q^8+q^4+1 = Phi_3 Phi_6 Phi_12
      out = detail::lie_order(q, 12, {6, 2}, {}, 1);
      for (unsigned d : {3U, 6U, 12U}) out *= factorize(cyclotomic_value(d, BigInt(v)));
      return out;
    }
    default: break;
  }
  throw std::logic_error("family_order: unhandled family");
}

inline std::vector<std::uint64_t> pi_of_group(const SimpleGroupId& id) { return family_order(id).primes(); }

// ---------------------------------------------------------------------------
// Odd order components
// ---------------------------------------------------------------------------

struct OddComponentSet {
  SimpleGroupId group;
  std::vector<BigInt> values;  // ascending, deduplicated
};

class OutOfScopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Odd components of A_n: the odd primes r with n-2 <= r <= n, plus the A_5 and A_6 specials.
inline std::vector<BigInt> alternating_odd_components(unsigned n) {
  if (n < 5) throw std::invalid_argument("alternating_odd_components: n must be >= 5");
  if (n == 5) return {3, 5};
  if (n == 6) return {5, 9};
  std::vector<BigInt> out;
  for (unsigned r = n - 2; r <= n; ++r) {
    if (r % 2 == 1 && is_prime(static_cast<std::uint64_t>(r))) out.emplace_back(r);
  }
  return out;
}

/// Values of the four E_8 expressions the recognition argument equates
/// with (q^2-q+1)/d: Phi_24, Phi_15, Phi_30 and Phi_20 at q'.
inline std::array<BigInt, 4> e8_case_expressions(std::uint64_t qp) {
  return {cyclotomic_value(24, BigInt(qp)), cyclotomic_value(15, BigInt(qp)),
          cyclotomic_value(30, BigInt(qp)), cyclotomic_value(20, BigInt(qp))};
}

/**
 * Odd order components of the comparison families, for the parameter
 * shapes in which the recognition argument meets them.
 *
 * Throws OutOfScopeError for any other (family, parameter) pair and
 * std::invalid_argument when the id fails its existence constraint.
 */
inline OddComponentSet family_odd_components(const SimpleGroupId& id) {
  if (auto why = id.existence_violation()) {
    throw std::invalid_argument("family_odd_components: " + id.name() + ": " + *why);
  }
  auto out_of_scope = [&]() -> OutOfScopeError {
    return OutOfScopeError("family_odd_components: " + id.name() + " is outside the supported shapes");
  };
  const BigInt Q = id.q;
  const unsigned n = id.n;
  std::vector<BigInt> v;
  auto gcd_small = [](std::uint64_t a, const BigInt& b) { return BigInt(boost::multiprecision::gcd(BigInt(a), b)); };
  auto pow = [&](unsigned e) { return ipow(Q, e); };
  const bool n_prime = is_prime(static_cast<std::uint64_t>(n));
  const bool n1_prime = n >= 1 && is_prime(static_cast<std::uint64_t>(n - 1));

  switch (id.family) {
    case Family::Sporadic:
      for (auto c : find_sporadic(id.sporadic)->odd_components) v.emplace_back(c);
      break;
    case Family::Alt:
      v = alternating_odd_components(n);
      break;
    case Family::PSU:
      if (n == 4 && id.q == 2) {
        v = {5};
      } else if (n == 4 && id.q == 3) {
        v = {5, 7};
      } else if (n == 6 && id.q == 2) {
        v = {11};
      } else if (n % 2 == 1 && n_prime) {
        v = {(pow(n) + 1) / ((Q + 1) * gcd_small(n, Q + 1))};
      } else if (n1_prime && n - 1 >= 3 && n % (id.q + 1) == 0) {
        v = {(pow(n - 1) + 1) / (Q + 1)};
      } else {
        throw out_of_scope();
      }
      break;
    case Family::PSL:
      if (n == 2) {
        if (id.q % 2 == 0) {
          v = {Q - 1, Q + 1};
        } else {
          const int eps = (id.q % 4 == 1) ? 1 : -1;
          v = {Q, (Q + eps) / 2};
        }
      } else if (n == 3 && id.q == 2) {
        v = {3, 7};
      } else if (n == 3 && id.q == 4) {
        v = {5, 7, 9};
      } else if (n % 2 == 1 && n_prime) {
        v = {(pow(n) - 1) / ((Q - 1) * gcd_small(n, Q - 1))};
      } else if (n1_prime && n - 1 >= 3 && n % (id.q - 1) == 0) {
        v = {(pow(n - 1) - 1) / (Q - 1)};
      } else {
        throw out_of_scope();
      }
      break;
    case Family::Ree2G2: {
      const unsigned m = *detail::odd_power_exponent(id.q, 3);
      const BigInt s = ipow(3, m + 1);  // sqrt(3q')
      v = {Q - s + 1, Q + s + 1};
      break;
    }
    case Family::Suzuki: {
      const unsigned m = *detail::odd_power_exponent(id.q, 2);
      const BigInt s = ipow(2, m + 1);  // sqrt(2q')
      v = {Q - s + 1, Q + s + 1, Q - 1};
      break;
    }
    case Family::Ree2F4: {
      const unsigned m = *detail::odd_power_exponent(id.q, 2);
      const BigInt s = ipow(2, m + 1), s3 = ipow(2, 3 * m + 2);  // sqrt(2q'), sqrt(2q'^3)
      v = {Q * Q + s3 + Q + s + 1, Q * Q - s3 + Q - s + 1};
      break;
    }
    case Family::G2:
      if (id.q % 3 == 0) {
        v = {Q * Q - Q + 1, Q * Q + Q + 1};
      } else {
        v = {id.q % 3 == 1 ? BigInt(Q * Q - Q + 1) : BigInt(Q * Q + Q + 1)};
      }
      break;
    case Family::Bn:
      if (detail::is_power_of_two(n) && n >= 4 && id.q % 2 == 1) {
        v = {(pow(n) + 1) / 2};
      } else if (n % 2 == 1 && n_prime && id.q == 3) {
        v = {(pow(n) - 1) / 2};
      } else {
        throw out_of_scope();
      }
      break;
    case Family::Cn:
      if (detail::is_power_of_two(n)) {
        v = {(pow(n) + 1) / gcd_small(2, Q - 1)};
      } else if (n % 2 == 1 && n_prime && (id.q == 2 || id.q == 3)) {
        v = {(pow(n) - 1) / gcd_small(2, Q - 1)};
      } else {
        throw out_of_scope();
      }
      break;
    case Family::Dn:
      if (n % 2 == 0 && n1_prime && (id.q == 2 || id.q == 3)) {
        v = {(pow(n - 1) - 1) / gcd_small(2, Q - 1)};
      } else if (n % 2 == 1 && n_prime && n >= 5 && (id.q == 2 || id.q == 3 || id.q == 5)) {
        v = {(pow(n) - 1) / (Q - 1)};
      } else {
        throw out_of_scope();
      }
      break;
    case Family::TwistedDn:
      if (detail::is_power_of_two(n)) {
        v = {(pow(n) + 1) / gcd_small(2, Q + 1)};
      } else if (id.q == 2 && detail::is_power_of_two(n - 1) && n >= 5) {
        v = {pow(n - 1) + 1};
      } else if (id.q == 3 && detail::is_power_of_two(n - 1) && n >= 5) {
        v = {(pow(n - 1) + 1) / 2};
      } else if (id.q == 3 && n_prime && n >= 5) {
        v = {(pow(n) + 1) / 4};
      } else {
        throw out_of_scope();
      }
      break;
    case Family::E6:
      v = {(pow(6) + pow(3) + 1) / gcd_small(3, Q - 1)};
      break;
    case Family::TwistedE6:
      if (id.q == 2) {
        v = {13, 17, 19};
      } else {
        v = {(pow(6) - pow(3) + 1) / gcd_small(3, Q + 1)};
      }
      break;
    case Family::E7:
      if (id.q == 2) {
        v = {73, 127};
      } else if (id.q == 3) {
        v = {757, 1093};
      } else {
        throw out_of_scope();
      }
      break;
    case Family::E8: {
      const auto e = e8_case_expressions(id.q);
      v = {e[0], e[1], e[2]};
      // Phi_20(q') is a component only when q' is not +-2 mod 5
      if (id.q % 5 != 2 && id.q % 5 != 3) v.push_back(e[3]);
      break;
    }
    case Family::F4:
      v = {pow(4) - pow(2) + 1};
      if (id.q % 2 == 0) v.push_back(pow(4) + 1);
      break;
    case Family::TriD4:
      v = {pow(4) - pow(2) + 1};
      break;
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return {id, std::move(v)};
}

}  // namespace psu3

#endif  // PSU3_GROUP_ORDERS_HPP_
