#ifndef PSU3_NTHEORY_HPP_
#define PSU3_NTHEORY_HPP_

/**
 * @file ntheory.hpp
 * @brief Exact integer number theory used throughout the toolkit.
 *
 * Primality, factorization, prime-power recognition, p-parts,
 * multiplicative orders, cyclotomic values, primitive prime divisors and
 * the two bounded exponential-equation searches (p^m - q^n = 1 and
 * p^m - 2 q^n = +-1).
 *
 * Values that may exceed 64 bits are held as BigInt (boost cpp_int);
 * individual primes always fit in 64 bits.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

namespace psu3 {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline BigInt ipow(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

inline bool fits_u64(const BigInt& n) {
  return n >= 0 && n <= BigInt(std::numeric_limits<std::uint64_t>::max());
}

inline std::uint64_t to_u64(const BigInt& n) {
  if (!fits_u64(n)) {
    throw std::overflow_error("value does not fit in 64 bits: " + n.str());
  }
  return n.convert_to<std::uint64_t>();
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

inline bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

inline BigInt powmod_big(BigInt base, BigInt exp, const BigInt& m) {
  return boost::multiprecision::powm(base, exp, m);
}

}  // namespace detail

/// Deterministic for every 64-bit input (witness set covers n < 3.3e24).
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : small) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (auto a : small) {
    if (!detail::miller_rabin_round(n, a, d, s)) return false;
  }
  return true;
}

/// Deterministic below 3.3e24; beyond that a strong probable-prime test.
inline bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime(n.convert_to<std::uint64_t>());
  static constexpr unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (auto p : small) {
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : small) {
    BigInt x = detail::powmod_big(BigInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  static const BigInt deterministic_limit("3317044064679887385961981");
  if (n < deterministic_limit) return true;
  return boost::multiprecision::miller_rabin_test(n, 25);
}

struct PrimeFactor {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/**
 * A positive integer together with its canonical prime factorization.
 *
 * Factors are sorted by prime, exponents are positive and the product of
 * prime^exponent always equals value().
 */
class FactoredInteger {
 public:
  FactoredInteger() = default;

  static FactoredInteger from_factors(std::vector<PrimeFactor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const PrimeFactor& a, const PrimeFactor& b) { return a.prime < b.prime; });
    FactoredInteger out;
    for (const auto& f : factors) {
      if (f.exponent == 0) continue;
      if (!is_prime(f.prime)) {
        throw std::invalid_argument("factor " + std::to_string(f.prime) + " is not prime");
      }
      if (!out.factors_.empty() && out.factors_.back().prime == f.prime) {
        out.factors_.back().exponent += f.exponent;
      } else {
        out.factors_.push_back(f);
      }
      out.value_ *= ipow(f.prime, f.exponent);
    }
    return out;
  }

  const BigInt& value() const { return value_; }
  std::span<const PrimeFactor> factors() const { return factors_; }

  /// pi(n): the sorted set of prime divisors.
  std::vector<std::uint64_t> primes() const {
    std::vector<std::uint64_t> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(f.prime);
    return out;
  }

  unsigned exponent_of(std::uint64_t p) const {
    for (const auto& f : factors_) {
      if (f.prime == p) return f.exponent;
    }
    return 0;
  }

  bool has_prime(std::uint64_t p) const { return exponent_of(p) > 0; }

  BigInt p_part(std::uint64_t p) const { return ipow(p, exponent_of(p)); }

  bool is_one() const { return factors_.empty(); }

  bool divides(const FactoredInteger& other) const {
    return std::all_of(factors_.begin(), factors_.end(), [&](const PrimeFactor& f) {
      return other.exponent_of(f.prime) >= f.exponent;
    });
  }

  FactoredInteger& operator*=(const FactoredInteger& rhs) {
    std::vector<PrimeFactor> merged(factors_);
    merged.insert(merged.end(), rhs.factors_.begin(), rhs.factors_.end());
    *this = from_factors(std::move(merged));
    return *this;
  }

  friend FactoredInteger operator*(FactoredInteger lhs, const FactoredInteger& rhs) {
    lhs *= rhs;
    return lhs;
  }

  /// Exact quotient; throws std::domain_error unless rhs divides *this.
  FactoredInteger divided_by(const FactoredInteger& rhs) const {
    if (!rhs.divides(*this)) {
      throw std::domain_error(rhs.to_string() + " does not divide " + to_string());
    }
    std::vector<PrimeFactor> out;
    for (const auto& f : factors_) {
      unsigned e = f.exponent - rhs.exponent_of(f.prime);
      if (e > 0) out.push_back({f.prime, e});
    }
    return from_factors(std::move(out));
  }

  /// "2^5 * 3^6 * 5^2 * 73"; "1" for the empty product.
  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) os << " * ";
      os << factors_[i].prime;
      if (factors_[i].exponent > 1) os << '^' << factors_[i].exponent;
    }
    return os.str();
  }

  friend bool operator==(const FactoredInteger& a, const FactoredInteger& b) {
    return a.factors_ == b.factors_;
  }

 private:
  BigInt value_ = 1;
  std::vector<PrimeFactor> factors_;
};

namespace detail {

inline std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_u64_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = pollard_brent(n);
  factor_u64_into(d, out);
  factor_u64_into(n / d, out);
}

inline BigInt pollard_rho_big(const BigInt& n) {
  if (n % 2 == 0) return 2;
  for (unsigned c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = boost::multiprecision::gcd(x > y ? BigInt(x - y) : BigInt(y - x), n);
    }
    if (d != n) return d;
  }
}

inline void factor_big_into(const BigInt& n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (fits_u64(n)) {
    factor_u64_into(n.convert_to<std::uint64_t>(), out);
    return;
  }
  if (is_prime(n)) {
    throw std::overflow_error("prime factor exceeds 64 bits: " + n.str());
  }
  BigInt d = pollard_rho_big(n);
  factor_big_into(d, out);
  factor_big_into(n / d, out);
}

}  // namespace detail

inline constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

/// Canonical factorization: trial division up to 10^6, Pollard rho beyond.
inline FactoredInteger factorize(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::map<std::uint64_t, unsigned> found;
  BigInt rest = n;
  auto strip = [&](std::uint64_t p) {
    while (rest % p == 0) {
      rest /= p;
      ++found[p];
    }
  };
  strip(2);
  for (std::uint64_t p = 3; p <= kTrialDivisionLimit; p += 2) {
    if (rest == 1) break;
    if (BigInt(p) * p > rest) break;
    strip(p);
  }
  if (rest > 1) detail::factor_big_into(rest, found);
  std::vector<PrimeFactor> factors;
  for (auto [p, e] : found) factors.push_back({p, e});
  return FactoredInteger::from_factors(std::move(factors));
}

inline FactoredInteger factorize(std::uint64_t n) { return factorize(BigInt(n)); }
inline FactoredInteger factorize(int n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  return factorize(BigInt(n));
}

inline std::vector<std::uint64_t> prime_divisors(const BigInt& n) { return factorize(n).primes(); }

/// (m)_p, the largest power of p dividing m.
inline BigInt p_part(const BigInt& m, std::uint64_t p) {
  if (m < 1) throw std::invalid_argument("p_part: m must be positive");
  if (!is_prime(p)) throw std::invalid_argument("p_part: p must be prime");
  BigInt part = 1;
  BigInt rest = m;
  while (rest % p == 0) {
    rest /= p;
    part *= p;
  }
  return part;
}

inline std::uint64_t p_part(std::uint64_t m, std::uint64_t p) {
  return to_u64(p_part(BigInt(m), p));
}

/**
 * q = p^alpha with p prime and alpha >= 1.
 */
struct PrimePower {
  std::uint64_t p = 0;
  unsigned alpha = 0;
  std::uint64_t value = 0;

  static PrimePower of(std::uint64_t p, unsigned alpha) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (alpha == 0) throw std::invalid_argument("prime power exponent must be positive");
    return {p, alpha, to_u64(ipow(p, alpha))};
  }

  /// Recognizes n as a prime power; throws std::invalid_argument otherwise.
  static PrimePower from_value(std::uint64_t n) {
    auto pp = try_from_value(n);
    if (!pp) throw std::invalid_argument(std::to_string(n) + " is not a prime power");
    return *pp;
  }

  static std::optional<PrimePower> try_from_value(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    auto f = factorize(n);
    if (f.factors().size() != 1) return std::nullopt;
    return PrimePower{f.factors()[0].prime, f.factors()[0].exponent, n};
  }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
  friend auto operator<=>(const PrimePower& a, const PrimePower& b) { return a.value <=> b.value; }
};

inline bool is_prime_power(const BigInt& n) {
  if (n < 2) return false;
  return factorize(n).factors().size() == 1;
}

inline bool is_fermat_prime(std::uint64_t q) {
  if (!is_prime(q)) return false;
  std::uint64_t m = q - 1;
  return m > 0 && (m & (m - 1)) == 0;
}

inline bool is_mersenne_prime(std::uint64_t q) {
  if (!is_prime(q)) return false;
  std::uint64_t m = q + 1;
  return (m & (m - 1)) == 0;
}

/// Sieve of Eratosthenes; all primes <= limit.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

/// Every prime power <= limit, ascending.
inline std::vector<PrimePower> prime_power_range(std::uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("prime_power_range: limit must be >= 2");
  std::vector<PrimePower> out;
  for (auto p : primes_up_to(limit)) {
    std::uint64_t v = p;
    for (unsigned a = 1;; ++a) {
      out.push_back({p, a, v});
      if (v > limit / p) break;
      v *= p;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

/**
 * e(r, q): least m >= 1 with q^m = 1 (mod r).
 *
 * For r = 2 the convention e(2, q) = 1 when q = 1 (mod 4) and 2 when
 * q = -1 (mod 4) applies.
 */
inline std::uint64_t mult_order(std::uint64_t r, const BigInt& q) {
  if (!is_prime(r)) throw std::invalid_argument("mult_order: r must be prime");
  if (q < 1) throw std::invalid_argument("mult_order: q must be positive");
  if (q % r == 0) {
    throw std::invalid_argument("mult_order: gcd(r, q) != 1");
  }
  if (r == 2) return (q % 4 == 1) ? 1 : 2;
  std::uint64_t base = (q % r).convert_to<std::uint64_t>();
  std::uint64_t order = r - 1;
  const auto fr = factorize(r - 1);
  for (const auto& f : fr.factors()) {
    for (unsigned i = 0; i < f.exponent; ++i) {
      if (detail::powmod(base, order / f.prime, r) == 1) {
        order /= f.prime;
      } else {
        break;
      }
    }
  }
  return order;
}

inline std::uint64_t mult_order(std::uint64_t r, std::uint64_t q) { return mult_order(r, BigInt(q)); }

/// Moebius function.
inline int moebius(std::uint64_t n) {
  int sign = 1;
  const auto fn = factorize(n);
  for (const auto& f : fn.factors()) {
    if (f.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  const auto fn = factorize(n);
  for (const auto& f : fn.factors()) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned e = 1; e <= f.exponent; ++e) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Phi_n(x), the n-th cyclotomic polynomial evaluated at integer x >= 2.
inline BigInt cyclotomic_value(std::uint64_t n, const BigInt& x) {
  if (n == 0) throw std::invalid_argument("cyclotomic_value: n must be positive");
  BigInt num = 1, den = 1;
  for (auto d : divisors(n)) {
    int mu = moebius(n / d);
    if (mu == 0) continue;
    BigInt term = boost::multiprecision::pow(x, static_cast<unsigned>(d)) - 1;
    (mu > 0 ? num : den) *= term;
  }
  return num / den;
}

/**
 * Primitive prime divisors of p^n - 1: primes dividing p^n - 1 but no
 * p^m - 1 with 1 <= m < n.
 */
inline std::vector<std::uint64_t> zsigmondy_primes(std::uint64_t p, unsigned n) {
  if (!is_prime(p)) throw std::invalid_argument("zsigmondy_primes: p must be prime");
  if (n == 0) throw std::invalid_argument("zsigmondy_primes: n must be positive");
  BigInt phi = cyclotomic_value(n, BigInt(p));
  std::vector<std::uint64_t> out;
  if (phi == 1) return out;
  for (auto r : factorize(phi).primes()) {
    // 2 divides p - 1 for odd p, so it is primitive only at n = 1
    bool primitive = (r == 2) ? (n == 1) : (mult_order(r, BigInt(p)) == n);
    if (primitive) out.push_back(r);
  }
  return out;
}

struct CatalanSolution {
  std::uint64_t p = 0;
  unsigned m = 0;
  std::uint64_t q = 0;
  unsigned n = 0;

  friend bool operator==(const CatalanSolution&, const CatalanSolution&) = default;
  friend auto operator<=>(const CatalanSolution&, const CatalanSolution&) = default;
};

namespace detail {

/// All p^m with p <= prime_bound prime and 2 <= m <= exponent_bound.
inline std::map<BigInt, std::pair<std::uint64_t, unsigned>> higher_prime_powers(
    std::uint64_t prime_bound, unsigned exponent_bound) {
  std::map<BigInt, std::pair<std::uint64_t, unsigned>> table;
  for (auto p : primes_up_to(prime_bound)) {
    BigInt v = BigInt(p) * p;
    for (unsigned m = 2; m <= exponent_bound; ++m, v *= p) table.emplace(v, std::make_pair(p, m));
  }
  return table;
}

}  // namespace detail

/// Every solution of p^m - q^n = 1 (p, q prime, m, n > 1) within the bounds.
inline std::vector<CatalanSolution> catalan_search(std::uint64_t prime_bound, unsigned exponent_bound) {
  if (prime_bound < 2 || exponent_bound < 2) {
    throw std::invalid_argument("catalan_search: bounds must be >= 2");
  }
  const auto table = detail::higher_prime_powers(prime_bound, exponent_bound);
  std::vector<CatalanSolution> out;
  for (const auto& [value, pm] : table) {
    auto it = table.find(value - 1);
    if (it != table.end()) out.push_back({pm.first, pm.second, it->second.first, it->second.second});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/**
 * A solution of p^m - 2 q^n = sign with p, q prime and m, n > 1.
 */
struct ExceptionalSolution {
  std::uint64_t p = 0;
  unsigned m = 0;
  std::uint64_t q = 0;
  unsigned n = 0;
  int sign = 0;

  bool square_exponents() const { return m == 2 && n == 2; }

  /// One of 239^2 - 2*13^4 = -1 and 3^5 - 2*11^2 = 1.
  bool is_listed_exception() const {
    return (p == 239 && m == 2 && q == 13 && n == 4 && sign == -1) ||
           (p == 3 && m == 5 && q == 11 && n == 2 && sign == 1);
  }

  bool satisfies_equation() const { return ipow(p, m) - 2 * ipow(q, n) == sign; }

  friend bool operator==(const ExceptionalSolution&, const ExceptionalSolution&) = default;
  friend auto operator<=>(const ExceptionalSolution&, const ExceptionalSolution&) = default;
};

inline std::vector<ExceptionalSolution> nagell_search(std::uint64_t prime_bound, unsigned exponent_bound) {
  if (prime_bound < 2 || exponent_bound < 2) {
    throw std::invalid_argument("nagell_search: bounds must be >= 2");
  }
  const auto table = detail::higher_prime_powers(prime_bound, exponent_bound);
  std::vector<ExceptionalSolution> out;
  for (const auto& [value, pm] : table) {
    for (int sign : {-1, 1}) {
      BigInt twice = value - sign;
      if (twice % 2 != 0) continue;
      auto it = table.find(twice / 2);
      if (it == table.end()) continue;
      out.push_back({pm.first, pm.second, it->second.first, it->second.second, sign});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace psu3

#endif  // PSU3_NTHEORY_HPP_
