#ifndef PSU3_FINITE_FIELD_HPP_
#define PSU3_FINITE_FIELD_HPP_

/**
 * @file finite_field.hpp
 * @brief Small finite fields GF(p^k) with table-driven arithmetic.
 *
 * An element is the integer a_0 + a_1 p + ... + a_{k-1} p^{k-1} encoding the
 * residue a_0 + a_1 x + ... modulo the defining polynomial. The modulus is
 * the lexicographically least monic irreducible polynomial of degree k,
 * where polynomials are compared through that same integer encoding of
 * their non-leading coefficients.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "psu3/ntheory.hpp"

namespace psu3 {

class FiniteField {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint64_t kMaxOrder = 1ULL << 16;
  static constexpr std::uint64_t kAddTableLimit = 256;

  FiniteField() = default;

  static FiniteField build(std::uint64_t p, unsigned k) {
    if (!is_prime(p)) throw std::invalid_argument("build_field: " + std::to_string(p) + " is not prime");
    if (k == 0) throw std::invalid_argument("build_field: degree must be positive");
    const BigInt order = ipow(p, k);
    if (order > kMaxOrder) throw std::invalid_argument("build_field: p^k exceeds 2^16");
    FiniteField f;
    f.p_ = static_cast<Elem>(p);
    f.k_ = k;
    f.order_ = order.convert_to<Elem>();
    f.modulus_ = least_irreducible(f.p_, k);
    f.build_tables();
    return f;
  }

  Elem p() const { return p_; }
  unsigned k() const { return k_; }
  Elem order() const { return order_; }
  /// Coefficients of the monic modulus, constant term first; back() == 1.
  const std::vector<Elem>& modulus() const { return modulus_; }
  /// Integer encoding of the modulus' non-leading coefficients.
  std::uint64_t modulus_code() const { return encode_poly(modulus_, p_, k_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem primitive() const { return exp_[1]; }

  Elem add(Elem a, Elem b) const {
    if (!add_table_.empty()) return add_table_[a * order_ + b];
    return digit_op(a, b, [this](Elem x, Elem y) { return (x + y) % p_; });
  }

  Elem neg(Elem a) const {
    return digit_op(a, 0, [this](Elem x, Elem) { return (p_ - x) % p_; });
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (order_ - 1)];
  }

  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("FiniteField: inverse of zero");
    return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::int64_t e) const {
    if (a == 0) {
      if (e <= 0) throw std::domain_error("FiniteField: nonpositive power of zero");
      return 0;
    }
    const std::int64_t n = order_ - 1;
    std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (e % n)) % n;
    if (r < 0) r += n;
    return exp_[r];
  }

  /// x -> x^(p^e), the e-th power of the Frobenius automorphism.
  Elem frobenius(Elem a, unsigned e = 1) const {
    Elem r = a;
    for (unsigned i = 0; i < e; ++i) r = pow(r, p_);
    return r;
  }

  /// Multiplicative order of a nonzero element.
  std::uint64_t element_order(Elem a) const {
    if (a == 0) throw std::domain_error("FiniteField: zero has no multiplicative order");
    const std::uint64_t n = order_ - 1;
    return n / std::gcd<std::uint64_t>(n, log_[a]);
  }

  /// Discrete logarithm to the base primitive().
  std::uint32_t log(Elem a) const {
    if (a == 0) throw std::domain_error("FiniteField: log of zero");
    return log_[a];
  }

  /// e.g. "2x^2+x+1"; "0" for zero.
  std::string to_string(Elem a) const {
    if (a == 0) return "0";
    std::string out;
    auto digits = to_digits(a);
    for (int i = static_cast<int>(k_) - 1; i >= 0; --i) {
      const Elem c = digits[i];
      if (c == 0) continue;
      if (!out.empty()) out += '+';
      if (i == 0 || c != 1) out += std::to_string(c);
      if (i >= 1) out += 'x';
      if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
  }

  static std::vector<Elem> least_irreducible(Elem p, unsigned k) {
    const std::uint64_t count = ipow(p, k).convert_to<std::uint64_t>();
    for (std::uint64_t code = 0; code < count; ++code) {
      auto poly = decode_poly(code, p, k);
      if (is_irreducible(poly, p)) return poly;
    }
    throw std::logic_error("least_irreducible: no irreducible polynomial found");
  }

  /// Brute-force irreducibility: no monic factor of degree 1..deg/2.
  static bool is_irreducible(const std::vector<Elem>& poly, Elem p) {
    const unsigned deg = static_cast<unsigned>(poly.size() - 1);
    if (deg <= 1) return deg == 1;
    for (unsigned d = 1; d <= deg / 2; ++d) {
      const std::uint64_t count = ipow(p, d).convert_to<std::uint64_t>();
      for (std::uint64_t code = 0; code < count; ++code) {
        if (poly_mod(poly, decode_poly(code, p, d), p).empty()) return false;
      }
    }
    return true;
  }

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

 private:
  template <typename Op>
  Elem digit_op(Elem a, Elem b, Op op) const {
    Elem out = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      out += op(a % p_, b % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }

  std::vector<Elem> to_digits(Elem a) const {
    std::vector<Elem> d(k_);
    for (unsigned i = 0; i < k_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }

  static std::uint64_t encode_poly(const std::vector<Elem>& poly, Elem p, unsigned k) {
    std::uint64_t code = 0;
    for (int i = static_cast<int>(k) - 1; i >= 0; --i) code = code * p + poly[i];
    return code;
  }

  /// Monic degree-k polynomial whose lower coefficients encode `code`.
  static std::vector<Elem> decode_poly(std::uint64_t code, Elem p, unsigned k) {
    std::vector<Elem> poly(k + 1);
    for (unsigned i = 0; i < k; ++i) {
      poly[i] = static_cast<Elem>(code % p);
      code /= p;
    }
    poly[k] = 1;
    return poly;
  }

  /// Remainder of a modulo monic b over GF(p), trailing zeros trimmed.
  static std::vector<Elem> poly_mod(std::vector<Elem> a, const std::vector<Elem>& b, Elem p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
      const Elem lead = a.back();
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
      a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
  }

  /// Polynomial product reduced modulo the field modulus; used to seed the log tables.
  Elem slow_mul(Elem a, Elem b) const {
    auto x = to_digits(a), y = to_digits(b);
    std::vector<Elem> prod(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
      for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    auto r = poly_mod(prod, modulus_, p_);
    r.resize(k_, 0);
    return static_cast<Elem>(encode_poly(r, p_, k_));
  }

  void build_tables() {
    const Elem n = order_ - 1;
    exp_.assign(n, 0);
    log_.assign(order_, 0);
    for (Elem g = 1; g < order_; ++g) {
      // a generator has n distinct powers
      Elem x = 1;
      Elem i = 0;
      for (; i < n; ++i) {
        if (i > 0 && x == 1) break;
        exp_[i] = x;
        x = slow_mul(x, g);
      }
      if (i == n && x == 1) break;
    }
    for (Elem i = 0; i < n; ++i) log_[exp_[i]] = i;
    if (order_ <= kAddTableLimit) {
      add_table_.resize(static_cast<std::size_t>(order_) * order_);
      for (Elem a = 0; a < order_; ++a) {
        for (Elem b = 0; b < order_; ++b) {
          add_table_[a * order_ + b] = digit_op(a, b, [this](Elem x, Elem y) { return (x + y) % p_; });
        }
      }
    }
  }

  Elem p_ = 0;
  unsigned k_ = 0;
  Elem order_ = 0;
  std::vector<Elem> modulus_;
  std::vector<Elem> exp_;
  std::vector<Elem> log_;
  std::vector<Elem> add_table_;
};

inline FiniteField build_field(std::uint64_t p, unsigned k) { return FiniteField::build(p, k); }

}  // namespace psu3

#endif  // PSU3_FINITE_FIELD_HPP_
