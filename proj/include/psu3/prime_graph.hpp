#ifndef PSU3_PRIME_GRAPH_HPP_
#define PSU3_PRIME_GRAPH_HPP_

/**
 * @file prime_graph.hpp
 * @brief Prime graphs of PSU_3(q) and of its diagonal and field extensions.
 *
 * The graph of PSU_3(q) is built from a small set of element-order
 * witnesses: r ~ s exactly when r*s divides one of them. The witness set
 * is checked edge-for-edge against brute-force spectra for q in {3,4,5}
 * and against the published rho-set description for every q <= 1000.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "psu3/group_orders.hpp"
#include "psu3/ntheory.hpp"

namespace psu3 {

using PrimePair = std::pair<std::uint64_t, std::uint64_t>;

inline PrimePair make_pair_sorted(std::uint64_t a, std::uint64_t b) {
  return a < b ? PrimePair{a, b} : PrimePair{b, a};
}

/**
 * Simple undirected graph on a set of primes.
 */
class PrimeGraph {
 public:
  PrimeGraph() = default;

  explicit PrimeGraph(std::vector<std::uint64_t> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  }

  const std::vector<std::uint64_t>& vertices() const { return vertices_; }
  const std::set<PrimePair>& edges() const { return edges_; }

  bool has_vertex(std::uint64_t r) const { return std::binary_search(vertices_.begin(), vertices_.end(), r); }

  void add_edge(std::uint64_t r, std::uint64_t s) {
    if (r == s) throw std::invalid_argument("prime graph has no self-loops");
    if (!has_vertex(r) || !has_vertex(s)) {
      throw std::invalid_argument("edge endpoint " + std::to_string(has_vertex(r) ? s : r) + " is not a vertex");
    }
    edges_.insert(make_pair_sorted(r, s));
  }

  bool adjacent(std::uint64_t r, std::uint64_t s) const {
    return r != s && edges_.count(make_pair_sorted(r, s)) > 0;
  }

  std::vector<std::uint64_t> neighbours(std::uint64_t r) const {
    std::vector<std::uint64_t> out;
    for (auto s : vertices_) {
      if (adjacent(r, s)) out.push_back(s);
    }
    return out;
  }

  /// Connected components, each sorted, ordered by least vertex.
  std::vector<std::vector<std::uint64_t>> components() const {
    std::vector<std::vector<std::uint64_t>> out;
    std::set<std::uint64_t> seen;
    for (auto start : vertices_) {
      if (seen.count(start)) continue;
      std::vector<std::uint64_t> comp;
      std::vector<std::uint64_t> stack{start};
      seen.insert(start);
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (auto w : neighbours(v)) {
          if (seen.insert(w).second) stack.push_back(w);
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  bool is_clique(const std::vector<std::uint64_t>& set) const {
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        if (!adjacent(set[i], set[j])) return false;
      }
    }
    return true;
  }

  bool is_independent(const std::vector<std::uint64_t>& set) const {
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        if (adjacent(set[i], set[j])) return false;
      }
    }
    return true;
  }

  /// One line per vertex, "r: s1 s2 ...", vertices and neighbours ascending.
  std::string serialize() const {
    std::ostringstream os;
    for (auto r : vertices_) {
      os << r << ':';
      for (auto s : neighbours(r)) os << ' ' << s;
      os << '\n';
    }
    return os.str();
  }

  friend bool operator==(const PrimeGraph&, const PrimeGraph&) = default;

 private:
  std::vector<std::uint64_t> vertices_;
  std::set<PrimePair> edges_;
};

// ---------------------------------------------------------------------------
// Independence
// ---------------------------------------------------------------------------

struct IndependenceData {
  std::vector<std::uint64_t> rho;
  std::optional<std::uint64_t> required;
  std::vector<std::uint64_t> rho_p;  // empty unless `required` is set
  std::vector<std::uint64_t> rho_2;  // empty unless 2 is a vertex
  std::size_t t = 0;
  std::size_t t_p = 0;
};

namespace detail {

class MaxIndependentSearch {
 public:
  MaxIndependentSearch(const PrimeGraph& g, std::optional<std::uint64_t> forced) : g_(g) {
    const auto& v = g.vertices();
    if (forced) {
      chosen_.push_back(*forced);
      for (auto x : v) {
        if (x != *forced && !g.adjacent(x, *forced)) pool_.push_back(x);
      }
    } else {
      pool_ = v;
    }
  }

  /// Lexicographically least maximum independent set. Branching includes
  /// the smaller vertex first and only strict improvements replace the
  /// incumbent, so the first maximum found is the least one.
  std::vector<std::uint64_t> run() {
    best_.clear();
    have_best_ = false;
    recurse(0);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void recurse(std::size_t i) {
    if (have_best_ && chosen_.size() + (pool_.size() - i) <= best_.size()) return;
    if (i == pool_.size()) {
      best_ = chosen_;
      have_best_ = true;
      return;
    }
    const auto x = pool_[i];
    bool ok = std::none_of(chosen_.begin(), chosen_.end(), [&](auto c) { return g_.adjacent(c, x); });
    if (ok) {
      chosen_.push_back(x);
      recurse(i + 1);
      chosen_.pop_back();
    }
    recurse(i + 1);
  }

  const PrimeGraph& g_;
  std::vector<std::uint64_t> pool_;
  std::vector<std::uint64_t> chosen_;
  std::vector<std::uint64_t> best_;
  bool have_best_ = false;
};

}  // namespace detail

/// Maximum independent sets; ties broken towards the lexicographically least set.
inline IndependenceData independence(const PrimeGraph& g, std::optional<std::uint64_t> required = std::nullopt) {
  if (required && !g.has_vertex(*required)) {
    throw std::invalid_argument("independence: required prime " + std::to_string(*required) + " is not a vertex");
  }
  IndependenceData out;
  out.rho = detail::MaxIndependentSearch(g, std::nullopt).run();
  out.t = out.rho.size();
  out.required = required;
  if (required) {
    out.rho_p = detail::MaxIndependentSearch(g, required).run();
    out.t_p = out.rho_p.size();
  }
  if (g.has_vertex(2)) out.rho_2 = detail::MaxIndependentSearch(g, 2).run();
  return out;
}

// ---------------------------------------------------------------------------
// PSU_3(q)
// ---------------------------------------------------------------------------

struct WitnessSet {
  std::uint64_t q = 0;
  std::vector<std::uint64_t> witnesses;  // u_p, p(q+1)/d, q+1, (q^2-1)/d, (q^2-q+1)/d
};

inline WitnessSet witness_set(const PrimePower& q) {
  if (q.value < 3) throw std::invalid_argument("witness_set: q must be >= 3");
  if (q.value >= kMaxComponentQ) throw std::overflow_error("witness_set: q too large");
  const std::uint64_t v = q.value, p = q.p, d = psu3_d(v);
  const std::uint64_t u = p == 2 ? 4 : (p == 3 ? 9 : p);
  return {v, {u, p * (v + 1) / d, v + 1, (v * v - 1) / d, (v * v - v + 1) / d}};
}

/// Graph on `vertices` with r ~ s iff r*s divides some witness.
inline PrimeGraph graph_from_witnesses(const std::vector<std::uint64_t>& vertices,
                                       const std::vector<std::uint64_t>& witnesses) {
  PrimeGraph g(vertices);
  const auto& v = g.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const std::uint64_t rs = v[i] * v[j];
      if (std::any_of(witnesses.begin(), witnesses.end(), [&](auto w) { return w % rs == 0; })) {
        g.add_edge(v[i], v[j]);
      }
    }
  }
  return g;
}

inline PrimeGraph graph_psu3(const PrimePower& q) {
  return graph_from_witnesses(order_psu3(q).primes(), witness_set(q).witnesses);
}

/// pi_1 = pi(q(q^2-1)) and pi_2 = pi((q^2-q+1)/d).
inline std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> psu3_pi_split(const PrimePower& q) {
  auto pi1 = factorize(BigInt(q.value) * (BigInt(q.value) * q.value - 1)).primes();
  auto pi2 = odd_component_psu3(q).primes();
  return {pi1, pi2};
}

/// Graph of PSU_3(q).d: every torus picks up the diagonal factor 3.
inline PrimeGraph diagonal_extension_graph(const PrimePower& q) {
  if (q.value < 3) throw std::invalid_argument("diagonal_extension_graph: q must be >= 3");
  if (psu3_d(q.value) != 3) {
    throw std::invalid_argument("diagonal_extension_graph: (3, q+1) = 1, no diagonal automorphism");
  }
  auto ws = witness_set(q).witnesses;
  const std::size_t n = ws.size();
  for (std::size_t i = 0; i < n; ++i) ws.push_back(ws[i] * 3);
  return graph_from_witnesses(order_psu3(q).primes(), ws);
}

/**
 * Adjacencies forced in PSU_3(q).<f> for a field automorphism f of prime
 * order ell.
 *
 * Odd ell: f centralizes PSU_3(q^(1/ell)), so ell meets every prime of that
 * subgroup. ell = 2 with q odd: the new abelian subgroups have orders
 * 2q, 2(q-1), 2(q+1). ell = 2 with q even: 2 meets every prime of q-1.
 */
inline std::set<PrimePair> field_extension_adjacencies(const PrimePower& q, std::uint64_t ell) {
  if (!is_prime(ell) || q.alpha % ell != 0) {
    throw std::invalid_argument("field_extension_adjacencies: " + std::to_string(ell) +
                                " does not divide alpha=" + std::to_string(q.alpha));
  }
  std::set<PrimePair> out;
  if (ell != 2) {
    const auto q0 = PrimePower::of(q.p, q.alpha / static_cast<unsigned>(ell));
    for (auto x : order_psu3(q0).primes()) {
      if (x != ell) out.insert(make_pair_sorted(ell, x));
    }
    return out;
  }
  if (q.p != 2) {
    for (BigInt w : {BigInt(2) * q.value, BigInt(2) * (q.value - 1), BigInt(2) * (q.value + 1)}) {
      auto ps = factorize(w).primes();
      for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) out.insert({ps[i], ps[j]});
      }
    }
    return out;
  }
  for (auto r : factorize(q.value - 1).primes()) out.insert(make_pair_sorted(2, r));
  return out;
}

// ---------------------------------------------------------------------------
// rho-set conformance
// ---------------------------------------------------------------------------

struct RhoConformance {
  std::uint64_t q = 0;
  bool ok = false;
  bool rho2_in_scope = false;  // the published rho(2,G) statement covers q odd only
  std::vector<std::uint64_t> expected_fixed;  // primes that must appear literally
  IndependenceData data;
  std::string detail;
};

/**
 * Checks the independence data of graph_psu3(q) against the published
 * description: rho(G) = rho(p,G) = {p, 3, r_1, r_6} with 3 present iff
 * (q+1)_3 = 3 and r_1 present iff q-1 has an odd prime divisor; for q odd,
 * rho(2,G) = {2, r_6}. r_1 and r_6 are matched by class (any odd prime of
 * q-1, any prime of the odd component).
 */
inline RhoConformance rho_conformance(const PrimePower& q) {
  RhoConformance out;
  out.q = q.value;
  const auto g = graph_psu3(q);
  out.data = independence(g, q.p);
  const auto pi2 = odd_component_psu3(q).primes();
  std::vector<std::uint64_t> odd_r1;
  for (auto r : factorize(q.value - 1).primes()) {
    if (r != 2) odd_r1.push_back(r);
  }
  const bool want3 = q.p != 3 && p_part(q.value + 1, 3) == 3;
  out.expected_fixed = {q.p};
  if (want3) out.expected_fixed.push_back(3);

  auto in = [](const std::vector<std::uint64_t>& s, std::uint64_t x) {
    return std::find(s.begin(), s.end(), x) != s.end();
  };
  auto count_in = [&](const std::vector<std::uint64_t>& s, const std::vector<std::uint64_t>& cls,
                      std::uint64_t skip) {
    return std::count_if(s.begin(), s.end(), [&](auto x) { return x != skip && in(cls, x); });
  };
  std::ostringstream why;
  auto check_rho = [&](const std::vector<std::uint64_t>& rho, const char* label) {
    bool good = true;
    const std::size_t expected_size = 1 + (want3 ? 1 : 0) + (odd_r1.empty() ? 0 : 1) + 1;
    if (rho.size() != expected_size) {
      why << label << " has size " << rho.size() << ", expected " << expected_size << "; ";
      good = false;
    }
    for (auto f : out.expected_fixed) {
      if (!in(rho, f)) {
        why << label << " misses " << f << "; ";
        good = false;
      }
    }
    // 3 may itself be an odd prime of q-1; it is then counted as r_1
    const std::uint64_t skip = want3 ? 3 : 0;
    if (!odd_r1.empty() && count_in(rho, odd_r1, skip) != 1) {
      why << label << " lacks exactly one r_1; ";
      good = false;
    }
    if (count_in(rho, pi2, 0) != 1) {
      why << label << " lacks exactly one r_6; ";
      good = false;
    }
    return good;
  };
  bool ok = check_rho(out.data.rho, "rho") && check_rho(out.data.rho_p, "rho_p");
  out.rho2_in_scope = q.p != 2;
  if (out.rho2_in_scope) {
    const auto& r2 = out.data.rho_2;
    if (r2.size() != 2 || r2[0] != 2 || !in(pi2, r2[1])) {
      why << "rho_2 is not {2, r_6}; ";
      ok = false;
    }
  }
  out.ok = ok;
  out.detail = why.str();
  return out;
}

}  // namespace psu3

#endif  // PSU3_PRIME_GRAPH_HPP_
