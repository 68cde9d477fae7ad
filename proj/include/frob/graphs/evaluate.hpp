#pragma once

// Diagram rules: each genus-zero vertex contributes a C-correlator and each
// genus-one vertex a D-correlator of its incident indices; legs are summed
// over 1..n, edges carry a shared index j with weight 1/(h_j^2 u_{j,x}).

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "frob/correlators/table.hpp"
#include "frob/graphs/dual_graph.hpp"

namespace frob::graphs {

using corr::CorrelatorTable;
using jet::Expr;

class GraphEvaluator {
public:
  explicit GraphEvaluator(CorrelatorTable& table) : t_(table), s_(table.store()) {}

  CorrelatorTable& table() { return t_; }

  /// Vertex correlator with `legs` extra indices summed over 1..n.
  Expr leg_summed(int genus, std::vector<int> idx, int legs) {
    std::sort(idx.begin(), idx.end());
    auto key = std::make_tuple(genus, idx, legs);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Expr r;
    if (legs == 0) {
      r = genus == 0 ? t_.correlator_C(idx) : t_.correlator_D(idx);
    } else {
      std::vector<std::pair<Expr, Rational>> items;
      for (int i = 0; i < t_.n(); ++i) {
        std::vector<int> more = idx;
        more.push_back(i);
        Expr x = leg_summed(genus, more, legs - 1);
        if (!x.is_zero()) items.emplace_back(x, Rational(1));
      }
      r = s_.lincomb(items);
    }
    memo_.emplace(key, r);
    return r;
  }

  static void check_supported(const DualGraph& g) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      int k = g.valence(static_cast<int>(v));
      if (g.genus[v] == 0 && (k < 3 || k > static_cast<int>(CorrelatorTable::kMaxC)))
        throw std::out_of_range("genus-zero vertex valence " + std::to_string(k) + " outside 3..6");
      if (g.genus[v] == 1 && (k < 1 || k > static_cast<int>(CorrelatorTable::kMaxD)))
        throw std::out_of_range("genus-one vertex valence " + std::to_string(k) + " outside 1..3");
      if (g.genus[v] != 0 && g.genus[v] != 1) throw std::out_of_range("vertex genus must be 0 or 1");
    }
  }

  /// The full index sum of a graph.
  Expr function(const DualGraph& g) {
    check_supported(g);
    std::size_t nv = g.vertex_count();
    std::vector<std::vector<std::size_t>> incident(nv);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      incident[static_cast<std::size_t>(g.edges[e].first)].push_back(e);
      incident[static_cast<std::size_t>(g.edges[e].second)].push_back(e);
    }
    int n = t_.n();
    std::size_t ne = g.edges.size();
    std::vector<int> a(ne, 0);
    std::vector<std::pair<Expr, Rational>> items;
    for (;;) {
      std::vector<Expr> factors;
      bool zero = false;
      for (std::size_t v = 0; v < nv && !zero; ++v) {
        std::vector<int> idx;
        for (std::size_t e : incident[v]) idx.push_back(a[e]);
        Expr x = leg_summed(g.genus[v], idx, g.legs[v]);
        if (x.is_zero()) zero = true;
        factors.push_back(x);
      }
      if (!zero) {
        for (std::size_t e = 0; e < ne; ++e) factors.push_back(t_.edge_weight(a[e]));
        items.emplace_back(s_.product(factors), Rational(1));
      }
      std::size_t k = 0;
      while (k < ne && ++a[k] == n) a[k++] = 0;
      if (k == ne) break;
    }
    return s_.lincomb(items);
  }

private:
  CorrelatorTable& t_;
  jet::Store& s_;
  std::map<std::tuple<int, std::vector<int>, int>, Expr> memo_;
};

}  // namespace frob::graphs
