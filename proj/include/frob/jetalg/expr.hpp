#pragma once

// Hash-consed expression DAG over the generators u_i, u_i^(p), h_i, gamma_ij.
//
// Node forms: rational constant, generator, linear combination
// c0 + sum c_k e_k, and monomial prod e_k^(n_k) with nonzero integer
// exponents (quotients are negative exponents). Children always have smaller
// ids than their parents, so increasing id order is a topological order.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frob/exact/rational.hpp"

namespace frob::jet {

enum class GenKind : std::uint8_t { U, Jet, H, Gamma };

/// Indices are 0-based. Jet carries its order in `j` (p >= 1); Gamma keeps i < j.
struct Generator {
  GenKind kind;
  int i;
  int j;
  friend bool operator==(const Generator& a, const Generator& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j;
  }
};

enum class NodeKind : std::uint8_t { Const, Gen, Sum, Prod };

struct Node {
  NodeKind kind;
  Rational value;  // Const: the value; Sum: the constant term
  Generator gen{GenKind::U, 0, 0};
  std::vector<std::pair<std::uint32_t, Rational>> terms;  // Sum
  std::vector<std::pair<std::uint32_t, int>> factors;     // Prod
  std::size_t hash = 0;
};

/// Thrown when an expression would divide by a structurally zero quantity,
/// e.g. u_aa or gamma_aa in a denominator.
class StructuralZeroDivision : public std::domain_error {
public:
  StructuralZeroDivision() : std::domain_error("division by a structurally zero expression") {}
};

class Store;

class Expr {
public:
  Expr() = default;
  Expr(Store* s, std::uint32_t id) : s_(s), id_(id) {}
  std::uint32_t id() const { return id_; }
  Store* store() const { return s_; }
  bool valid() const { return s_ != nullptr; }
  bool is_zero() const;
  bool is_constant() const;
  friend bool operator==(const Expr& a, const Expr& b) { return a.s_ == b.s_ && a.id_ == b.id_; }
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

private:
  Store* s_ = nullptr;
  std::uint32_t id_ = 0;
};

class Store {
public:
  explicit Store(int n, int max_jet = 4) : n_(n), max_jet_(max_jet) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    zero_ = intern_const(Rational(0));
    one_ = intern_const(Rational(1));
  }
  Store(const Store&) = delete;
  Store& operator=(const Store&) = delete;

  int n() const { return n_; }
  int max_jet() const { return max_jet_; }
  void set_max_jet(int p) { max_jet_ = p; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::uint32_t id) const { return nodes_[id]; }
  const Node& node(Expr e) const { return nodes_[e.id()]; }

  Expr zero() { return {this, zero_}; }
  Expr one() { return {this, one_}; }
  Expr constant(const Rational& q) { return {this, intern_const(q)}; }
  Expr constant(long v) { return constant(Rational(v)); }

  Expr u(int i) { check_index(i); return gen({GenKind::U, i, 0}); }
  /// u_i^(p); p = 0 gives u_i.
  Expr jet(int i, int p) {
    check_index(i);
    if (p == 0) return u(i);
    if (p < 0 || p > max_jet_) throw std::out_of_range("jet order " + std::to_string(p) + " exceeds maximum " + std::to_string(max_jet_));
    return gen({GenKind::Jet, i, p});
  }
  Expr ux(int i) { return jet(i, 1); }
  Expr h(int i) { check_index(i); return gen({GenKind::H, i, 0}); }
  /// gamma_ij = gamma_ji; gamma_ii is the constant zero.
  Expr gamma(int i, int j) {
    check_index(i);
    check_index(j);
    if (i == j) return zero();
    if (i > j) std::swap(i, j);
    return gen({GenKind::Gamma, i, j});
  }
  Expr generator(const Generator& g) {
    switch (g.kind) {
      case GenKind::U: return u(g.i);
      case GenKind::Jet: return jet(g.i, g.j);
      case GenKind::H: return h(g.i);
      case GenKind::Gamma: return gamma(g.i, g.j);
    }
    return zero();
  }

  // ---- arithmetic -------------------------------------------------------

  Expr lincomb(const std::vector<std::pair<Expr, Rational>>& items, const Rational& c0 = Rational(0)) {
    Rational constant_term = c0;
    std::vector<std::pair<std::uint32_t, Rational>> terms;
    terms.reserve(items.size());
    for (const auto& [e, c] : items) {
      if (sgn(c) == 0) continue;
      const Node& nd = nodes_[e.id()];
      if (nd.kind == NodeKind::Const) {
        constant_term += c * nd.value;
      } else if (nd.kind == NodeKind::Sum) {
        constant_term += c * nd.value;
        for (const auto& [child, cc] : nd.terms) terms.emplace_back(child, c * cc);
      } else {
        terms.emplace_back(e.id(), c);
      }
    }
    return {this, make_sum(std::move(constant_term), std::move(terms))};
  }

  Expr add(Expr a, Expr b) { return lincomb({{a, Rational(1)}, {b, Rational(1)}}); }
  Expr sub(Expr a, Expr b) { return lincomb({{a, Rational(1)}, {b, Rational(-1)}}); }
  Expr neg(Expr a) { return lincomb({{a, Rational(-1)}}); }
  Expr scale(Expr a, const Rational& c) { return lincomb({{a, c}}); }
  Expr sum(const std::vector<Expr>& es) {
    std::vector<std::pair<Expr, Rational>> items;
    items.reserve(es.size());
    for (const auto& e : es) items.emplace_back(e, Rational(1));
    return lincomb(items);
  }

  Expr mul(Expr a, Expr b) { return product({{a, 1}, {b, 1}}); }
  Expr div(Expr a, Expr b) { return product({{a, 1}, {b, -1}}); }
  Expr pow(Expr a, int e) { return product({{a, e}}); }
  Expr product(const std::vector<Expr>& es) {
    std::vector<std::pair<Expr, int>> items;
    items.reserve(es.size());
    for (const auto& e : es) items.emplace_back(e, 1);
    return product(items);
  }

  /// prod a_k^(e_k), normalized: constants collected into a scalar factor.
  Expr product(const std::vector<std::pair<Expr, int>>& items) {
    Rational coef = 1;
    std::vector<std::pair<std::uint32_t, int>> factors;
    for (const auto& [e, ex] : items) {
      if (ex == 0) continue;
      const Node* nd = &nodes_[e.id()];
      std::uint32_t id = e.id();
      if (nd->kind == NodeKind::Sum && sgn(nd->value) == 0 && nd->terms.size() == 1) {
        if (ex < 0 && sgn(nd->terms[0].second) == 0) throw StructuralZeroDivision();
        coef *= rational_pow(nd->terms[0].second, ex);
        id = nd->terms[0].first;
        nd = &nodes_[id];
      }
      if (nd->kind == NodeKind::Const) {
        if (ex < 0 && sgn(nd->value) == 0) throw StructuralZeroDivision();
        coef *= rational_pow(nd->value, ex);
      } else if (nd->kind == NodeKind::Prod) {
        for (const auto& [child, cex] : nd->factors) factors.emplace_back(child, cex * ex);
      } else {
        factors.emplace_back(id, ex);
      }
    }
    if (sgn(coef) == 0) return zero();
    std::sort(factors.begin(), factors.end());
    std::vector<std::pair<std::uint32_t, int>> merged;
    for (const auto& f : factors) {
      if (!merged.empty() && merged.back().first == f.first) {
        merged.back().second += f.second;
      } else {
        if (!merged.empty() && merged.back().second == 0) merged.pop_back();
        merged.push_back(f);
      }
    }
    if (!merged.empty() && merged.back().second == 0) merged.pop_back();
    std::uint32_t mono;
    if (merged.empty()) return constant(coef);
    if (merged.size() == 1 && merged[0].second == 1) {
      mono = merged[0].first;
    } else {
      mono = make_prod(std::move(merged));
    }
    if (coef == 1) return {this, mono};
    return {this, make_sum(Rational(0), {{mono, coef}})};
  }

  // ---- derivations ------------------------------------------------------

  /// Applies the derivation defined on generators by `rule`, extended by
  /// linearity and the Leibniz rule. Results are memoized under `code`, so a
  /// given code must always be used with the same rule.
  Expr derive(Expr e, std::uint64_t code, const std::function<Expr(const Generator&)>& rule) {
    auto key = [code](std::uint32_t id) { return (code << 32) | id; };
    if (auto it = memo_.find(key(e.id())); it != memo_.end()) return {this, it->second};
    // Collect unmemoized reachable nodes.
    std::vector<std::uint32_t> todo;
    std::vector<std::uint32_t> stack{e.id()};
    std::unordered_map<std::uint32_t, bool> seen;
    while (!stack.empty()) {
      std::uint32_t id = stack.back();
      stack.pop_back();
      if (seen.count(id) || memo_.count(key(id))) continue;
      seen[id] = true;
      todo.push_back(id);
      const Node& nd = nodes_[id];
      if (nd.kind == NodeKind::Sum) {
        for (const auto& t : nd.terms) stack.push_back(t.first);
      } else if (nd.kind == NodeKind::Prod) {
        for (const auto& f : nd.factors) stack.push_back(f.first);
      }
    }
    std::sort(todo.begin(), todo.end());
    for (std::uint32_t id : todo) {
      std::uint32_t result;
      NodeKind kind = nodes_[id].kind;
      if (kind == NodeKind::Const) {
        result = zero_;
      } else if (kind == NodeKind::Gen) {
        Generator g = nodes_[id].gen;
        result = rule(g).id();
      } else if (kind == NodeKind::Sum) {
        std::vector<std::pair<Expr, Rational>> items;
        auto terms = nodes_[id].terms;
        for (const auto& [child, c] : terms) items.emplace_back(Expr(this, memo_.at(key(child))), c);
        result = lincomb(items).id();
      } else {
        auto factors = nodes_[id].factors;
        std::vector<std::pair<Expr, Rational>> items;
        for (const auto& [child, ex] : factors) {
          std::uint32_t d = memo_.at(key(child));
          if (d == zero_) continue;
          items.emplace_back(product({{Expr(this, id), 1}, {Expr(this, child), -1}, {Expr(this, d), 1}}), Rational(ex));
        }
        result = lincomb(items).id();
      }
      memo_[key(id)] = result;
    }
    return {this, memo_.at(key(e.id()))};
  }

  /// d/du_k with the rotation-coefficient rules of a semisimple Frobenius
  /// manifold; jets are independent of u.
  Expr partial_u(Expr e, int k) {
    check_index(k);
    return derive(e, 0x100000ULL + static_cast<std::uint64_t>(k), [this, k](const Generator& g) { return partial_u_generator(g, k); });
  }

  /// d/du_i^(p), every jet independent; p = 0 is partial_u.
  Expr partial_jet(Expr e, int i, int p) {
    check_index(i);
    if (p == 0) return partial_u(e, i);
    Generator target{GenKind::Jet, i, p};
    return derive(e, 0x200000ULL + static_cast<std::uint64_t>(i) * 1024 + static_cast<std::uint64_t>(p),
                  [this, target](const Generator& g) { return g == target ? one() : zero(); });
  }

  /// Total x-derivative: sum_i d/du_i * u_i' + sum_{i,p} d/du_i^(p) * u_i^(p+1).
  Expr total_x(Expr e) {
    return derive(e, 0x300000ULL, [this](const Generator& g) -> Expr {
      switch (g.kind) {
        case GenKind::U: return jet(g.i, 1);
        case GenKind::Jet: return jet(g.i, g.j + 1);
        default: {
          std::vector<std::pair<Expr, Rational>> items;
          Expr ge = generator(g);
          for (int k = 0; k < n_; ++k) items.emplace_back(mul(partial_u(ge, k), ux(k)), Rational(1));
          return lincomb(items);
        }
      }
    });
  }

  Expr partial_u_generator(const Generator& g, int k) {
    switch (g.kind) {
      case GenKind::U: return g.i == k ? one() : zero();
      case GenKind::Jet: return zero();
      case GenKind::H: {
        int j = g.i;
        if (k != j) return mul(gamma(k, j), h(k));
        std::vector<std::pair<Expr, Rational>> items;
        for (int l = 0; l < n_; ++l)
          if (l != j) items.emplace_back(mul(gamma(j, l), h(l)), Rational(-1));
        return lincomb(items);
      }
      case GenKind::Gamma: {
        int i = g.i, j = g.j;
        if (k != i && k != j) return mul(gamma(i, k), gamma(k, j));
        if (k == j) std::swap(i, j);
        // d gamma_ij / d u_i = (sum_l (u_j - u_l) gamma_il gamma_lj - gamma_ij) / (u_i - u_j)
        std::vector<std::pair<Expr, Rational>> items;
        for (int l = 0; l < n_; ++l) {
          if (l == i || l == j) continue;
          items.emplace_back(product({{sub(u(j), u(l)), 1}, {gamma(i, l), 1}, {gamma(l, j), 1}}), Rational(1));
        }
        items.emplace_back(gamma(i, j), Rational(-1));
        return div(lincomb(items), sub(u(i), u(j)));
      }
    }
    return zero();
  }

  /// Largest jet order occurring in e (0 when e has no jets).
  int jet_order(Expr e) const {
    int best = 0;
    for_each_reachable(e, [&](std::uint32_t id) {
      const Node& nd = nodes_[id];
      if (nd.kind == NodeKind::Gen && nd.gen.kind == GenKind::Jet) best = std::max(best, nd.gen.j);
    });
    return best;
  }

  /// Calls f on every node reachable from e, each once.
  template <class F>
  void for_each_reachable(Expr e, F&& f) const {
    std::vector<std::uint32_t> stack{e.id()};
    std::vector<bool> seen(nodes_.size(), false);
    while (!stack.empty()) {
      std::uint32_t id = stack.back();
      stack.pop_back();
      if (seen[id]) continue;
      seen[id] = true;
      f(id);
      const Node& nd = nodes_[id];
      for (const auto& t : nd.terms) stack.push_back(t.first);
      for (const auto& fc : nd.factors) stack.push_back(fc.first);
    }
  }

  std::size_t reachable_count(Expr e) const {
    std::size_t c = 0;
    for_each_reachable(e, [&](std::uint32_t) { ++c; });
    return c;
  }

  // ---- raw node construction (used by parsers) ---------------------------

  std::uint32_t make_sum(Rational c0, std::vector<std::pair<std::uint32_t, Rational>> terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::uint32_t, Rational>> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
      if (!merged.empty() && merged.back().first == t.first) {
        merged.back().second += t.second;
      } else {
        if (!merged.empty() && sgn(merged.back().second) == 0) merged.pop_back();
        merged.push_back(std::move(t));
      }
    }
    if (!merged.empty() && sgn(merged.back().second) == 0) merged.pop_back();
    if (merged.empty()) return intern_const(c0);
    if (sgn(c0) == 0 && merged.size() == 1 && merged[0].second == 1) return merged[0].first;
    Node nd;
    nd.kind = NodeKind::Sum;
    nd.value = std::move(c0);
    nd.terms = std::move(merged);
    return intern(std::move(nd));
  }

  std::uint32_t make_prod(std::vector<std::pair<std::uint32_t, int>> factors) {
    Node nd;
    nd.kind = NodeKind::Prod;
    nd.factors = std::move(factors);
    return intern(std::move(nd));
  }

private:
  void check_index(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("index " + std::to_string(i) + " outside dimension " + std::to_string(n_));
  }

  Expr gen(const Generator& g) {
    Node nd;
    nd.kind = NodeKind::Gen;
    nd.gen = g;
    return {this, intern(std::move(nd))};
  }

  std::uint32_t intern_const(const Rational& q) {
    Node nd;
    nd.kind = NodeKind::Const;
    nd.value = q;
    return intern(std::move(nd));
  }

  static std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

  static std::size_t hash_node(const Node& nd) {
    std::size_t h = static_cast<std::size_t>(nd.kind) * 0x100000001b3ULL;
    switch (nd.kind) {
      case NodeKind::Const: h = mix(h, hash_rational(nd.value)); break;
      case NodeKind::Gen:
        h = mix(h, static_cast<std::size_t>(nd.gen.kind));
        h = mix(h, static_cast<std::size_t>(nd.gen.i));
        h = mix(h, static_cast<std::size_t>(nd.gen.j));
        break;
      case NodeKind::Sum:
        h = mix(h, hash_rational(nd.value));
        for (const auto& [c, q] : nd.terms) h = mix(mix(h, c), hash_rational(q));
        break;
      case NodeKind::Prod:
        for (const auto& [c, e] : nd.factors) h = mix(mix(h, c), static_cast<std::size_t>(e + 1000003));
        break;
    }
    return h;
  }

  static bool same(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case NodeKind::Const: return a.value == b.value;
      case NodeKind::Gen: return a.gen == b.gen;
      case NodeKind::Sum: return a.value == b.value && a.terms == b.terms;
      case NodeKind::Prod: return a.factors == b.factors;
    }
    return false;
  }

  std::uint32_t intern(Node nd) {
    nd.hash = hash_node(nd);
    auto range = index_.equal_range(nd.hash);
    for (auto it = range.first; it != range.second; ++it)
      if (same(nodes_[it->second], nd)) return it->second;
    auto id = static_cast<std::uint32_t>(nodes_.size());
    index_.emplace(nd.hash, id);
    nodes_.push_back(std::move(nd));
    return id;
  }

  int n_;
  int max_jet_;
  std::vector<Node> nodes_;
  std::unordered_multimap<std::size_t, std::uint32_t> index_;
  std::unordered_map<std::uint64_t, std::uint32_t> memo_;
  std::uint32_t zero_ = 0;
  std::uint32_t one_ = 0;
};

inline bool Expr::is_zero() const { return s_ && s_->node(id_).kind == NodeKind::Const && sgn(s_->node(id_).value) == 0; }
inline bool Expr::is_constant() const { return s_ && s_->node(id_).kind == NodeKind::Const; }

inline Expr operator+(Expr a, Expr b) { return a.store()->add(a, b); }
inline Expr operator-(Expr a, Expr b) { return a.store()->sub(a, b); }
inline Expr operator-(Expr a) { return a.store()->neg(a); }
inline Expr operator*(Expr a, Expr b) { return a.store()->mul(a, b); }
inline Expr operator/(Expr a, Expr b) { return a.store()->div(a, b); }
inline Expr operator*(const Rational& c, Expr a) { return a.store()->scale(a, c); }
inline Expr operator*(Expr a, const Rational& c) { return a.store()->scale(a, c); }
inline Expr operator/(Expr a, const Rational& c) { return a.store()->scale(a, 1 / c); }
inline Expr operator+(Expr a, const Rational& c) { return a.store()->lincomb({{a, Rational(1)}}, c); }
inline Expr operator-(Expr a, const Rational& c) { return a.store()->lincomb({{a, Rational(1)}}, -c); }
inline Expr& operator+=(Expr& a, Expr b) { return a = a + b; }
inline Expr& operator-=(Expr& a, Expr b) { return a = a - b; }
inline Expr& operator*=(Expr& a, Expr b) { return a = a * b; }
inline Expr pow(Expr a, int e) { return a.store()->pow(a, e); }

}  // namespace frob::jet
