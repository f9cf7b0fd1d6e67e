#ifndef PSU3_BRUTE_GROUP_HPP_
#define PSU3_BRUTE_GROUP_HPP_

/**
 * @file brute_group.hpp
 * @brief Explicit SU_2(q), PSU_2(q), SU_3(q) and PSU_3(q) for tiny q.
 *
 * Matrices live over GF(q^2) and preserve the hermitian form with Gram
 * matrix J = antidiag(1, ..., 1). A matrix is packed into one 64-bit key,
 * seven bits per entry with entry (0,0) most significant, so integer order
 * on keys is lexicographic order on entries. Projective groups store the
 * least key in each coset of the scalar centre.
 *
 * On top of the element table this header computes spectra, prime graphs,
 * conjugacy classes and a catalog of maximal abelian subgroups (up to
 * conjugacy), and runs the desk-scale torus and element-order checks.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "psu3/finite_field.hpp"
#include "psu3/group_orders.hpp"
#include "psu3/ntheory.hpp"
#include "psu3/prime_graph.hpp"

namespace psu3 {

enum class GroupKind { SU2, PSU2, SU3, PSU3 };

inline std::string group_kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::SU2: return "SU2";
    case GroupKind::PSU2: return "PSU2";
    case GroupKind::SU3: return "SU3";
    case GroupKind::PSU3: return "PSU3";
  }
  return "?";
}

inline GroupKind parse_group_kind(const std::string& s) {
  for (auto k : {GroupKind::SU2, GroupKind::PSU2, GroupKind::SU3, GroupKind::PSU3}) {
    if (group_kind_name(k) == s) return k;
  }
  throw std::invalid_argument("unknown group kind '" + s + "' (expected SU2, PSU2, SU3 or PSU3)");
}

inline unsigned kind_dimension(GroupKind k) { return (k == GroupKind::SU2 || k == GroupKind::PSU2) ? 2 : 3; }
inline bool kind_projective(GroupKind k) { return k == GroupKind::PSU2 || k == GroupKind::PSU3; }

/// Closed-form order of the brute-force families.
inline BigInt kind_order(GroupKind kind, const PrimePower& q) {
  const BigInt v = q.value;
  if (kind_dimension(kind) == 2) {
    BigInt su = v * (v * v - 1);
    return kind_projective(kind) ? BigInt(su / boost::multiprecision::gcd(BigInt(2), v + 1)) : su;
  }
  BigInt su = v * v * v * (v * v - 1) * (v * v * v + 1);
  return kind_projective(kind) ? BigInt(su / psu3_d(q.value)) : su;
}

using ElemIndex = std::uint32_t;
using Matrix = std::array<FiniteField::Elem, 9>;

/**
 * An explicitly enumerated group of unitary matrices (or centre cosets).
 */
class GroupTable {
 public:
  static constexpr unsigned kBits = 7;
  static constexpr std::uint64_t kMaxQ = 11;

  GroupTable() = default;

  static GroupTable build(GroupKind kind, const PrimePower& q) {
    if (q.value > kMaxQ) throw std::invalid_argument("build_group: q must be <= 11 for packed matrices");
    GroupTable g;
    g.kind_ = kind;
    g.q_ = q;
    g.n_ = kind_dimension(kind);
    g.field_ = FiniteField::build(q.p, 2 * q.alpha);
    g.init_center();
    // Two generators suffice except in a few tiny groups, where extra
    // unipotent elements are added one at a time until the closure is complete.
    auto [gens, extra] = g.standard_generators();
    g.gen_keys_ = std::move(gens);
    std::size_t used = 0;
    while (!g.close()) {
      if (used == extra.size()) {
        throw std::runtime_error("build_group: closure of " + g.name() + " has " + std::to_string(g.keys_.size()) +
                                 " elements, formula says " + kind_order(kind, q).str());
      }
      g.gen_keys_.push_back(extra[used++]);
    }
    return g;
  }

  /// Rebuilds the index from a stored element list (cache loading).
  static GroupTable from_keys(GroupKind kind, const PrimePower& q, std::vector<std::uint64_t> generators,
                              std::vector<std::uint64_t> keys) {
    GroupTable g;
    g.kind_ = kind;
    g.q_ = q;
    g.n_ = kind_dimension(kind);
    g.field_ = FiniteField::build(q.p, 2 * q.alpha);
    g.init_center();
    g.gen_keys_ = std::move(generators);
    g.keys_ = std::move(keys);
    g.index_.reserve(g.keys_.size() * 2);
    for (ElemIndex i = 0; i < g.keys_.size(); ++i) g.index_.emplace(g.keys_[i], i);
    if (BigInt(g.keys_.size()) != kind_order(kind, q) || g.keys_.empty() || g.keys_[0] != g.identity_key()) {
      throw std::runtime_error("GroupTable: stored element list is inconsistent with " + g.name());
    }
    g.finish();
    return g;
  }

  GroupKind kind() const { return kind_; }
  const PrimePower& q() const { return q_; }
  const FiniteField& field() const { return field_; }
  unsigned dimension() const { return n_; }
  std::size_t size() const { return keys_.size(); }
  std::string name() const { return group_kind_name(kind_) + "(" + std::to_string(q_.value) + ")"; }

  ElemIndex identity() const { return 0; }
  std::uint64_t key(ElemIndex i) const { return keys_[i]; }
  const std::vector<std::uint64_t>& keys() const { return keys_; }
  const std::vector<std::uint64_t>& generator_keys() const { return gen_keys_; }
  const std::vector<ElemIndex>& generators() const { return gens_; }
  /// Number of scalar matrices identified in each element.
  std::size_t center_size() const { return center_.size(); }

  std::optional<ElemIndex> index_of(std::uint64_t key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Matrix matrix(ElemIndex i) const { return unpack(keys_[i]); }

  ElemIndex mul(ElemIndex a, ElemIndex b) const { return lookup(canonical(multiply(unpack(keys_[a]), unpack(keys_[b])))); }

  ElemIndex inv(ElemIndex a) const { return inverse_[a]; }

  /// b^-1 a b
  ElemIndex conj(ElemIndex a, ElemIndex b) const { return mul(mul(inverse_[b], a), b); }

  bool commute(ElemIndex a, ElemIndex b) const { return mul(a, b) == mul(b, a); }

  std::uint64_t element_order(ElemIndex a) const { return orders_[a]; }

  /// M^dagger J M == J for a packed matrix.
  bool is_unitary(std::uint64_t key) const {
    const Matrix m = unpack(key);
    return multiply(multiply(dagger(m), antidiag()), m) == antidiag();
  }

  FiniteField::Elem determinant(std::uint64_t key) const {
    const Matrix m = unpack(key);
    const auto& f = field_;
    if (n_ == 2) return f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2]));
    auto e = [&](unsigned r, unsigned c) { return m[r * 3 + c]; };
    auto minor = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
      return f.sub(f.mul(e(1, a), e(2, b)), f.mul(e(1, c), e(2, d)));
    };
    FiniteField::Elem det = f.mul(e(0, 0), minor(1, 2, 2, 1));
    det = f.sub(det, f.mul(e(0, 1), minor(0, 2, 2, 0)));
    return f.add(det, f.mul(e(0, 2), minor(0, 1, 1, 0)));
  }

  std::string matrix_string(std::uint64_t key) const {
    const Matrix m = unpack(key);
    std::ostringstream os;
    os << '[';
    for (unsigned r = 0; r < n_; ++r) {
      if (r) os << "; ";
      for (unsigned c = 0; c < n_; ++c) {
        if (c) os << ' ';
        os << field_.to_string(m[r * n_ + c]);
      }
    }
    os << ']';
    return os.str();
  }

 private:
  std::uint64_t pack(const Matrix& m) const {
    std::uint64_t k = 0;
    for (unsigned i = 0; i < n_ * n_; ++i) k = (k << kBits) | m[i];
    return k;
  }

  Matrix unpack(std::uint64_t k) const {
    Matrix m{};
    for (int i = static_cast<int>(n_ * n_) - 1; i >= 0; --i) {
      m[i] = static_cast<FiniteField::Elem>(k & ((1U << kBits) - 1));
      k >>= kBits;
    }
    return m;
  }

  Matrix multiply(const Matrix& a, const Matrix& b) const {
    Matrix c{};
    for (unsigned r = 0; r < n_; ++r) {
      for (unsigned s = 0; s < n_; ++s) {
        FiniteField::Elem acc = 0;
        for (unsigned t = 0; t < n_; ++t) acc = field_.add(acc, field_.mul(a[r * n_ + t], b[t * n_ + s]));
        c[r * n_ + s] = acc;
      }
    }
    return c;
  }

  /// Conjugate transpose; conjugation is x -> x^q.
  Matrix dagger(const Matrix& a) const {
    Matrix c{};
    for (unsigned r = 0; r < n_; ++r) {
      for (unsigned s = 0; s < n_; ++s) c[r * n_ + s] = field_.frobenius(a[s * n_ + r], q_.alpha);
    }
    return c;
  }

  Matrix antidiag(FiniteField::Elem mid = 1) const {
    Matrix m{};
    for (unsigned r = 0; r < n_; ++r) m[r * n_ + (n_ - 1 - r)] = 1;
    if (n_ == 3) m[4] = mid;
    return m;
  }

  Matrix diag(std::initializer_list<FiniteField::Elem> d) const {
    Matrix m{};
    unsigned i = 0;
    for (auto x : d) {
      m[i * n_ + i] = x;
      ++i;
    }
    return m;
  }

  Matrix scale(const Matrix& a, FiniteField::Elem s) const {
    Matrix c = a;
    for (unsigned i = 0; i < n_ * n_; ++i) c[i] = field_.mul(c[i], s);
    return c;
  }

  std::uint64_t canonical(const Matrix& m) const {
    std::uint64_t best = pack(m);
    for (std::size_t i = 1; i < center_.size(); ++i) best = std::min(best, pack(scale(m, center_[i])));
    return best;
  }

  ElemIndex lookup(std::uint64_t key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw std::logic_error(name() + ": product left the element table");
    return it->second;
  }

  std::uint64_t identity_key() const {
    Matrix id{};
    for (unsigned i = 0; i < n_; ++i) id[i * n_ + i] = 1;
    return canonical(id);
  }

  /// Scalars lambda with lambda^(q+1) = 1 and lambda^n = 1, identity first.
  void init_center() {
    center_.clear();
    center_.push_back(1);
    if (!kind_projective(kind_)) return;
    for (FiniteField::Elem x = 2; x < field_.order(); ++x) {
      if (field_.pow(x, static_cast<std::int64_t>(q_.value + 1)) == 1 && field_.pow(x, n_) == 1) center_.push_back(x);
    }
  }

  /**
   * A diagonal torus generator and a non-diagonal unitary matrix w*u, with
   * w a Weyl element (antidiag(1,-1,1) in dimension 3) and u the least
   * unitary upper unitriangular matrix with nonzero (0,1) entry.
   */
  /// A diagonal element and w*u, plus fallback generators (w and every unitary unipotent).
  std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> standard_generators() const {
    const auto& f = field_;
    const FiniteField::Elem mu = f.primitive();
    const auto qv = static_cast<std::int64_t>(q_.value);
    Matrix t{};
    if (n_ == 3) {
      t = diag({mu, f.pow(mu, qv - 1), f.pow(mu, -qv)});
    } else {
      const FiniteField::Elem lambda = f.pow(mu, qv + 1);  // generates GF(q)*
      t = diag({lambda, f.inv(lambda)});
    }
    Matrix w = antidiag();
    if (n_ == 3) {
      w[4] = f.neg(1);
    } else {
      // antidiag(a, -1/a) is unitary iff a^(q-1) = -1; a = 1 in characteristic 2
      const FiniteField::Elem a = q_.p == 2 ? 1 : f.pow(mu, (qv + 1) / 2);
      w[1] = a;
      w[2] = f.neg(f.inv(a));
    }

    std::vector<Matrix> unipotents;
    const FiniteField::Elem Q = f.order();
    if (n_ == 3) {
      for (FiniteField::Elem a = 1; a < Q; ++a) {
        for (FiniteField::Elem b = 0; b < Q; ++b) {
          for (FiniteField::Elem c = 0; c < Q; ++c) {
            Matrix m = diag({1, 1, 1});
            m[1] = a;
            m[2] = b;
            m[5] = c;
            if (is_unitary(pack(m))) unipotents.push_back(m);
          }
        }
      }
    } else {
      for (FiniteField::Elem a = 1; a < Q; ++a) {
        Matrix m = diag({1, 1});
        m[1] = a;
        if (is_unitary(pack(m))) unipotents.push_back(m);
      }
    }
    if (unipotents.empty()) throw std::logic_error(name() + ": no unitary unipotent element found");
    std::vector<std::uint64_t> extra{canonical(w)};
    for (std::size_t i = 1; i < unipotents.size(); ++i) extra.push_back(canonical(unipotents[i]));
    return {{canonical(t), canonical(multiply(w, unipotents[0]))}, extra};
  }

  /// Closes the generator set; false when the closure falls short of the group order.
  bool close() {
    keys_.clear();
    index_.clear();
    const std::uint64_t id = identity_key();
    keys_.push_back(id);
    index_.emplace(id, 0);
    std::vector<Matrix> gm;
    for (auto k : gen_keys_) {
      if (!is_unitary(k) || determinant(k) != 1) {
        throw std::logic_error(name() + ": generator is not unitary");
      }
      gm.push_back(unpack(k));
    }
    const BigInt expected = kind_order(kind_, q_);
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      const Matrix m = unpack(keys_[i]);
      for (const auto& g : gm) {
        const std::uint64_t k = canonical(multiply(m, g));
        if (index_.emplace(k, static_cast<ElemIndex>(keys_.size())).second) {
          keys_.push_back(k);
          if (BigInt(keys_.size()) > expected) break;
        }
      }
      if (BigInt(keys_.size()) > expected) break;
    }
    if (BigInt(keys_.size()) > expected) {
      throw std::logic_error("build_group: closure of " + name() + " exceeds the group order " + expected.str());
    }
    if (BigInt(keys_.size()) < expected) return false;
    finish();
    return true;
  }

  void finish() {
    gens_.clear();
    for (auto k : gen_keys_) gens_.push_back(lookup(k));
    const Matrix J = antidiag();
    inverse_.resize(keys_.size());
    for (ElemIndex i = 0; i < keys_.size(); ++i) {
      const Matrix m = unpack(keys_[i]);
      if (multiply(multiply(dagger(m), J), m) != J) throw std::logic_error(name() + ": non-unitary element");
      if (determinant(keys_[i]) != 1) throw std::logic_error(name() + ": det != 1");
      inverse_[i] = lookup(canonical(multiply(multiply(J, dagger(m)), J)));
    }
    orders_.assign(keys_.size(), 0);
    for (ElemIndex i = 0; i < keys_.size(); ++i) {
      std::uint64_t ord = 1;
      for (ElemIndex x = i; x != 0; x = mul(x, i)) ++ord;
      orders_[i] = ord;
    }
  }

  GroupKind kind_ = GroupKind::SU3;
  PrimePower q_{};
  unsigned n_ = 3;
  FiniteField field_;
  std::vector<FiniteField::Elem> center_;
  std::vector<std::uint64_t> gen_keys_;
  std::vector<ElemIndex> gens_;
  std::vector<std::uint64_t> keys_;
  std::unordered_map<std::uint64_t, ElemIndex> index_;
  std::vector<ElemIndex> inverse_;
  std::vector<std::uint64_t> orders_;
};

inline GroupTable build_group(GroupKind kind, const PrimePower& q) { return GroupTable::build(kind, q); }

// ---------------------------------------------------------------------------
// Spectrum, prime graph, classes
// ---------------------------------------------------------------------------

inline std::vector<std::uint64_t> spectrum(const GroupTable& g) {
  std::set<std::uint64_t> s;
  for (ElemIndex i = 0; i < g.size(); ++i) s.insert(g.element_order(i));
  return {s.begin(), s.end()};
}

/// Graph of the spectrum: r ~ s iff some element order is divisible by r*s.
inline PrimeGraph prime_graph_of(const GroupTable& g) {
  const auto spec = spectrum(g);
  return graph_from_witnesses(factorize(kind_order(g.kind(), g.q())).primes(), spec);
}

/// Conjugacy class id of every element; ids are numbered by least member.
inline std::vector<std::uint32_t> conjugacy_classes(const GroupTable& g) {
  constexpr std::uint32_t kUnset = ~0U;
  std::vector<std::uint32_t> cls(g.size(), kUnset);
  std::uint32_t next = 0;
  for (ElemIndex i = 0; i < g.size(); ++i) {
    if (cls[i] != kUnset) continue;
    std::vector<ElemIndex> stack{i};
    cls[i] = next;
    while (!stack.empty()) {
      const ElemIndex x = stack.back();
      stack.pop_back();
      for (auto gen : g.generators()) {
        const ElemIndex y = g.conj(x, gen);
        if (cls[y] == kUnset) {
          cls[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return cls;
}

// ---------------------------------------------------------------------------
// Maximal abelian subgroups
// ---------------------------------------------------------------------------

using Subgroup = std::vector<ElemIndex>;  // sorted element indices

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const {
    // FNV-1a over the sorted index list; order-independent because the list is sorted
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : s) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

struct MaximalAbelianCatalog {
  GroupKind kind = GroupKind::SU3;
  std::uint64_t q = 0;
  std::map<std::uint64_t, std::size_t> class_counts;  // order -> number of conjugacy classes
  std::vector<Subgroup> representatives;              // one per class, ordered by discovery
  std::uint64_t nodes = 0;

  std::vector<std::uint64_t> orders() const {
    std::vector<std::uint64_t> out;
    for (const auto& [o, c] : class_counts) out.push_back(o);
    return out;
  }
};

class NodeBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

namespace detail {

class AbelianCatalogSearch {
 public:
  AbelianCatalogSearch(const GroupTable& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  MaximalAbelianCatalog run() {
    MaximalAbelianCatalog cat;
    cat.kind = g_.kind();
    cat.q = g_.q().value;
    if (g_.size() == 1) {
      cat.class_counts[1] = 1;
      cat.representatives.push_back({0});
      return cat;
    }
    const auto cls = conjugacy_classes(g_);
    std::set<std::uint32_t> seen_class;
    for (ElemIndex x = 1; x < g_.size(); ++x) {
      if (!seen_class.insert(cls[x]).second) continue;
      Subgroup a = cyclic(x);
      if (!visit(a)) continue;
      Subgroup c;
      for (ElemIndex y = 0; y < g_.size(); ++y) {
        if (g_.commute(x, y)) c.push_back(y);
      }
      grow(a, c, cat);
    }
    cat.nodes = nodes_;
    return cat;
  }

 private:
  Subgroup cyclic(ElemIndex x) const {
    Subgroup s{0};
    for (ElemIndex y = x; y != 0; y = g_.mul(y, x)) s.push_back(y);
    std::sort(s.begin(), s.end());
    return s;
  }

  /// Marks the whole conjugacy orbit of `a` as visited; false if it already was.
  bool visit(const Subgroup& a) {
    if (memo_.count(a)) return false;
    if (++nodes_ > budget_) {
      throw NodeBudgetExceeded("maximal_abelian_orders: node budget " + std::to_string(budget_) +
                               " exceeded on " + g_.name() + "; catalog would not be exhaustive");
    }
    std::vector<Subgroup> stack{a};
    memo_.insert(a);
    while (!stack.empty()) {
      Subgroup s = std::move(stack.back());
      stack.pop_back();
      for (auto gen : g_.generators()) {
        Subgroup t;
        t.reserve(s.size());
        for (auto e : s) t.push_back(g_.conj(e, gen));
        std::sort(t.begin(), t.end());
        if (memo_.insert(t).second) stack.push_back(std::move(t));
      }
    }
    return true;
  }

  /// a is abelian, c = C_G(a) (restricted from the parent's centralizer).
  void grow(const Subgroup& a, const Subgroup& c, MaximalAbelianCatalog& cat) {
    if (c.size() == a.size()) {
      for (auto x : a) {
        for (auto y : a) {
          if (!g_.commute(x, y)) throw std::logic_error("catalog leaf is not abelian");
        }
      }
      ++cat.class_counts[a.size()];
      cat.representatives.push_back(a);
      return;
    }
    std::unordered_set<ElemIndex> covered(a.begin(), a.end());
    for (auto h : c) {
      if (covered.count(h)) continue;
      for (auto x : a) covered.insert(g_.mul(x, h));
      Subgroup next = extend(a, h);
      if (!visit(next)) continue;
      Subgroup cn;
      for (auto y : c) {
        if (g_.commute(h, y)) cn.push_back(y);
      }
      grow(next, cn, cat);
    }
  }

  /// <a, h> = { x h^k } for abelian a and h centralizing a.
  Subgroup extend(const Subgroup& a, ElemIndex h) const {
    std::unordered_set<ElemIndex> in(a.begin(), a.end());
    Subgroup out(a);
    ElemIndex hk = h;
    while (!in.count(hk)) {
      for (auto x : a) {
        const ElemIndex y = g_.mul(x, hk);
        if (in.insert(y).second) out.push_back(y);
      }
      hk = g_.mul(hk, h);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const GroupTable& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::unordered_set<Subgroup, SubgroupHash> memo_;
};

}  // namespace detail

/**
 * M(G) with class counts, by centralizer growth: from one cyclic subgroup
 * per element class, repeatedly adjoin an element of C_G(A) \ A until
 * C_G(A) = A. Subgroups already reached up to conjugacy are skipped.
 */
inline MaximalAbelianCatalog maximal_abelian_orders(const GroupTable& g,
                                                    std::uint64_t node_budget = kDefaultNodeBudget) {
  return detail::AbelianCatalogSearch(g, node_budget).run();
}

// ---------------------------------------------------------------------------
// Desk-scale verifications
// ---------------------------------------------------------------------------

struct MalleViolation {
  std::size_t class_index = 0;  // index into catalog.representatives
  std::uint64_t subgroup_order = 0;
  std::uint64_t hall_order = 0;  // order of the abelian subgroup coprime to q*d
};

struct MalleReport {
  std::uint64_t q = 0;
  std::uint64_t d = 0;
  std::vector<std::uint64_t> tori;
  std::size_t subgroup_orders_checked = 0;
  std::vector<MalleViolation> violations;
  bool ok() const { return violations.empty(); }
};

/**
 * For every maximal abelian subgroup A and every order of a subgroup of A
 * coprime to q*d (an abelian group has subgroups of each order dividing
 * |A|), checks that the order divides one of the given torus orders.
 */
inline MalleReport verify_malle(const MaximalAbelianCatalog& cat, std::uint64_t q, std::uint64_t d,
                                const std::vector<std::uint64_t>& tori) {
  MalleReport out{q, d, tori, 0, {}};
  const std::uint64_t qd = q * d;
  for (std::size_t i = 0; i < cat.representatives.size(); ++i) {
    const std::uint64_t order = cat.representatives[i].size();
    std::uint64_t hall = order;
    for (auto r : factorize(qd).primes()) hall /= p_part(hall, r);
    bool flagged = false;
    for (auto div : divisors(hall)) {
      ++out.subgroup_orders_checked;
      const bool fits = std::any_of(tori.begin(), tori.end(), [&](auto t) { return t % div == 0; });
      if (!fits && !flagged) {
        out.violations.push_back({i, order, div});
        flagged = true;
      }
    }
  }
  return out;
}

inline MalleReport verify_malle(const GroupTable& g, const MaximalAbelianCatalog& cat) {
  if (kind_dimension(g.kind()) != 3) {
    throw std::invalid_argument("verify_malle: torus orders are only derived for SU3/PSU3; pass them explicitly");
  }
  const auto t = maximal_tori_psu3(g.q());
  return verify_malle(cat, g.q().value, t.d, {t.orders.begin(), t.orders.end()});
}

struct OmegaReport {
  std::vector<std::uint64_t> spectrum;
  std::vector<std::uint64_t> abelian_orders;
  std::vector<std::uint64_t> violations;  // element orders dividing no member of M(G)
  bool ok() const { return violations.empty(); }
};

/// Every element order must divide the order of some maximal abelian subgroup.
inline OmegaReport verify_omegakh(const GroupTable& g, const MaximalAbelianCatalog& cat) {
  OmegaReport out{spectrum(g), cat.orders(), {}};
  for (auto m : out.spectrum) {
    if (std::none_of(out.abelian_orders.begin(), out.abelian_orders.end(), [&](auto n) { return n % m == 0; })) {
      out.violations.push_back(m);
    }
  }
  return out;
}

}  // namespace psu3

#endif  // PSU3_BRUTE_GROUP_HPP_
