#pragma once

// Genus-labelled multigraphs with legs, their canonical forms, the
// x-derivative calculus and the enumeration of genus-two graphs.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"

namespace frob::graphs {

struct DualGraph {
  std::vector<int> genus;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> legs;

  std::size_t vertex_count() const { return genus.size(); }
  int leg_count() const { return std::accumulate(legs.begin(), legs.end(), 0); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  /// Number of half-edges and legs at v.
  int valence(int v) const {
    int k = legs[static_cast<std::size_t>(v)];
    for (const auto& [a, b] : edges) k += (a == v) + (b == v);
    return k;
  }

  int genus_sum() const { return std::accumulate(genus.begin(), genus.end(), 0); }

  /// First Betti number N_e - N_v + 1 (for connected graphs).
  int betti() const { return edge_count() - static_cast<int>(vertex_count()) + 1; }
  int arithmetic_genus() const { return genus_sum() + betti(); }

  void normalize_edges() {
    for (auto& e : edges)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
  }

  friend bool operator==(const DualGraph& a, const DualGraph& b) {
    return a.genus == b.genus && a.edges == b.edges && a.legs == b.legs;
  }
  friend bool operator<(const DualGraph& a, const DualGraph& b) {
    return std::tie(a.genus, a.legs, a.edges) < std::tie(b.genus, b.legs, b.edges);
  }

  bool connected(int skip_edge = -1) const {
    std::size_t nv = vertex_count();
    if (nv == 0) return true;
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (int e = 0; e < edge_count(); ++e) {
      if (e == skip_edge) continue;
      parent[static_cast<std::size_t>(find(edges[static_cast<std::size_t>(e)].first))] = find(edges[static_cast<std::size_t>(e)].second);
    }
    int root = find(0);
    for (std::size_t v = 1; v < nv; ++v)
      if (find(static_cast<int>(v)) != root) return false;
    return true;
  }

  std::string str() const {
    std::ostringstream os;
    os << "V[";
    for (std::size_t v = 0; v < vertex_count(); ++v) os << (v ? " " : "") << "g" << genus[v] << "l" << legs[v];
    os << "] E[";
    for (std::size_t e = 0; e < edges.size(); ++e) os << (e ? " " : "") << edges[e].first << "-" << edges[e].second;
    os << "]";
    return os.str();
  }
};

/// Stability 2g-2+n > 0 at every vertex.
inline bool is_stable(const DualGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (2 * g.genus[v] - 2 + g.valence(static_cast<int>(v)) <= 0) return false;
  return true;
}

/// Cutting any single edge between two distinct genus-zero vertices keeps
/// the graph connected.
inline bool is_one_particle_irreducible(const DualGraph& g) {
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edges[static_cast<std::size_t>(e)];
    if (a == b || g.genus[static_cast<std::size_t>(a)] != 0 || g.genus[static_cast<std::size_t>(b)] != 0) continue;
    if (!g.connected(e)) return false;
  }
  return true;
}

/// At most one vertex has valence 3 - 2g; when some genus-one vertex is
/// present, none does.
inline bool satisfies_valence_rule(const DualGraph& g) {
  int minimal = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.valence(static_cast<int>(v)) == 3 - 2 * g.genus[v]) ++minimal;
  int g1 = static_cast<int>(std::count(g.genus.begin(), g.genus.end(), 1));
  if (g1 == 1) return minimal == 0;
  return minimal <= 1;
}

/// Jet degree: N_e must equal N_l.
inline bool has_degree_two(const DualGraph& g) { return g.edge_count() == g.leg_count(); }

inline bool is_admissible(const DualGraph& g) {
  return g.vertex_count() > 0 && g.connected() && is_stable(g) && g.arithmetic_genus() == 2 && has_degree_two(g) &&
         is_one_particle_irreducible(g) && satisfies_valence_rule(g);
}

namespace detail {

inline DualGraph permuted(const DualGraph& g, const std::vector<int>& perm) {
  // perm[new] = old
  std::vector<int> inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) inv[static_cast<std::size_t>(perm[k])] = static_cast<int>(k);
  DualGraph r;
  r.genus.resize(g.vertex_count());
  r.legs.resize(g.vertex_count());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    r.genus[k] = g.genus[static_cast<std::size_t>(perm[k])];
    r.legs[k] = g.legs[static_cast<std::size_t>(perm[k])];
  }
  for (const auto& [a, b] : g.edges) r.edges.emplace_back(inv[static_cast<std::size_t>(a)], inv[static_cast<std::size_t>(b)]);
  r.normalize_edges();
  return r;
}

}  // namespace detail

/// Removes every genus-zero trivalent vertex with one leg that subdivides an
/// edge (two half-edges on non-loop edges), merging its two edges.
inline DualGraph remove_subdivisions(DualGraph g) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int w = 0; w < static_cast<int>(g.vertex_count()); ++w) {
      std::size_t wz = static_cast<std::size_t>(w);
      if (g.genus[wz] != 0 || g.legs[wz] != 1 || g.valence(w) != 3 || g.vertex_count() == 1) continue;
      std::vector<int> ends;
      std::vector<std::size_t> idx;
      bool loop = false;
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [a, b] = g.edges[e];
        if (a == w && b == w) loop = true;
        if (a == w || b == w) {
          ends.push_back(a == w ? b : a);
          idx.push_back(e);
        }
      }
      if (loop || ends.size() != 2) continue;
      std::vector<std::pair<int, int>> edges;
      for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (e != idx[0] && e != idx[1]) edges.push_back(g.edges[e]);
      edges.emplace_back(ends[0], ends[1]);
      DualGraph r;
      for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
        if (v == w) continue;
        r.genus.push_back(g.genus[static_cast<std::size_t>(v)]);
        r.legs.push_back(g.legs[static_cast<std::size_t>(v)]);
      }
      for (auto [a, b] : edges) r.edges.emplace_back(a - (a > w), b - (b > w));
      r.normalize_edges();
      g = std::move(r);
      changed = true;
      break;
    }
  }
  return g;
}

/// The lexicographically least relabelling over all vertex permutations.
inline DualGraph canonical_labeling(const DualGraph& g) {
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  DualGraph best = detail::permuted(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    DualGraph c = detail::permuted(g, perm);
    if (c < best) best = std::move(c);
  }
  return best;
}

inline DualGraph canonicalize(const DualGraph& g) { return canonical_labeling(remove_subdivisions(g)); }

inline bool isomorphic(const DualGraph& a, const DualGraph& b) {
  return canonical_labeling(a) == canonical_labeling(b);
}

/// One term of an x-derivative.
struct SignedGraph {
  int sign;
  DualGraph graph;
};

/// Adds a leg at each vertex (+) and splits each edge by a new genus-zero
/// vertex carrying two legs (-).
inline std::vector<SignedGraph> graph_x_derivative(const DualGraph& g) {
  std::vector<SignedGraph> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    DualGraph h = g;
    ++h.legs[v];
    out.push_back({1, h});
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    DualGraph h = g;
    auto [a, b] = g.edges[e];
    int w = static_cast<int>(g.vertex_count());
    h.edges.erase(h.edges.begin() + static_cast<std::ptrdiff_t>(e));
    h.genus.push_back(0);
    h.legs.push_back(2);
    h.edges.emplace_back(a, w);
    h.edges.emplace_back(w, b);
    h.normalize_edges();
    out.push_back({-1, h});
  }
  return out;
}

/// Collects equal canonical forms, dropping zero totals.
inline std::vector<std::pair<int, DualGraph>> collect_terms(const std::vector<SignedGraph>& terms) {
  std::map<DualGraph, int> acc;
  for (const auto& t : terms) acc[canonical_labeling(t.graph)] += t.sign;
  std::vector<std::pair<int, DualGraph>> out;
  for (const auto& [g, c] : acc)
    if (c) out.emplace_back(c, g);
  return out;
}

namespace detail {

// All multisets of `count` unordered vertex pairs over nv vertices.
inline void edge_multisets(int nv, int count, std::size_t start, std::vector<std::pair<int, int>>& pool,
                           std::vector<std::pair<int, int>>& cur, std::vector<std::vector<std::pair<int, int>>>& out) {
  if (count == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = start; k < pool.size(); ++k) {
    cur.push_back(pool[k]);
    edge_multisets(nv, count - 1, k, pool, cur, out);
    cur.pop_back();
  }
}

inline void leg_distributions(std::size_t nv, int total, std::size_t v, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (v + 1 == nv) {
    cur[v] = total;
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= total; ++k) {
    cur[v] = k;
    leg_distributions(nv, total - k, v + 1, cur, out);
  }
}

}  // namespace detail

/// Canonical representatives of the admissible genus-two graphs, modulo
/// isomorphism and the removal of subdividing one-leg trivalent vertices.
/// Vertex genera are 0 or 1.
inline std::vector<DualGraph> enumerate_admissible() {
  std::set<DualGraph> found;
  // sum g + B1 = 2 and N_e = N_l = N_v + B1 - 1. Summing valences,
  // 3 N_e >= 4 (N_v - g1) - 1 + g1 when at most one vertex is minimal,
  // which gives N_v <= 4.
  for (int b1 = 0; b1 <= 2; ++b1) {
    for (int nv = 1; nv <= 4; ++nv) {
      int ne = nv + b1 - 1;
      if (ne < 0) continue;
      int g1 = 2 - b1;
      if (g1 > nv) continue;
      std::vector<std::pair<int, int>> pool;
      for (int a = 0; a < nv; ++a)
        for (int b = a; b < nv; ++b) pool.emplace_back(a, b);
      std::vector<std::vector<std::pair<int, int>>> edge_sets;
      std::vector<std::pair<int, int>> cur;
      detail::edge_multisets(nv, ne, 0, pool, cur, edge_sets);
      std::vector<std::vector<int>> legsets;
      std::vector<int> lc(static_cast<std::size_t>(nv));
      detail::leg_distributions(static_cast<std::size_t>(nv), ne, 0, lc, legsets);
      for (int gmask = 0; gmask < (1 << nv); ++gmask) {
        if (__builtin_popcount(static_cast<unsigned>(gmask)) != g1) continue;
        std::vector<int> genus(static_cast<std::size_t>(nv));
        for (int v = 0; v < nv; ++v) genus[static_cast<std::size_t>(v)] = (gmask >> v) & 1;
        for (const auto& es : edge_sets) {
          for (const auto& ls : legsets) {
            DualGraph g{genus, es, ls};
            if (!is_admissible(g)) continue;
            found.insert(canonicalize(g));
          }
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

/// All connected stable genus-two graphs of degree two (as many legs as
/// edges) with vertex genera 0 and 1 and at most max_vertices vertices,
/// up to isomorphism. Subdivisions are kept: these are graphs, not classes.
inline std::vector<DualGraph> enumerate_degree_two(int max_vertices) {
  std::set<DualGraph> found;
  for (int b1 = 0; b1 <= 2; ++b1) {
    for (int nv = 1; nv <= max_vertices; ++nv) {
      int ne = nv + b1 - 1;
      int g1 = 2 - b1;
      if (ne < 0 || g1 > nv) continue;
      std::vector<std::pair<int, int>> pool;
      for (int a = 0; a < nv; ++a)
        for (int b = a; b < nv; ++b) pool.emplace_back(a, b);
      std::vector<std::vector<std::pair<int, int>>> edge_sets;
      std::vector<std::pair<int, int>> cur;
      detail::edge_multisets(nv, ne, 0, pool, cur, edge_sets);
      std::vector<std::vector<int>> legsets;
      std::vector<int> lc(static_cast<std::size_t>(nv));
      detail::leg_distributions(static_cast<std::size_t>(nv), ne, 0, lc, legsets);
      for (int gmask = 0; gmask < (1 << nv); ++gmask) {
        if (__builtin_popcount(static_cast<unsigned>(gmask)) != g1) continue;
        std::vector<int> genus(static_cast<std::size_t>(nv));
        for (int v = 0; v < nv; ++v) genus[static_cast<std::size_t>(v)] = (gmask >> v) & 1;
        for (const auto& es : edge_sets)
          for (const auto& ls : legsets) {
            DualGraph g{genus, es, ls};
            g.normalize_edges();
            if (g.connected() && is_stable(g)) found.insert(canonical_labeling(g));
          }
      }
    }
  }
  return {found.begin(), found.end()};
}

inline nlohmann::json to_json(const DualGraph& g) {
  nlohmann::json e = nlohmann::json::array();
  for (const auto& [a, b] : g.edges) e.push_back({a, b});
  return {{"vertices", g.genus}, {"edges", e}, {"legs", g.legs}};
}

inline DualGraph from_json(const nlohmann::json& j) {
  DualGraph g;
  g.genus = j.at("vertices").get<std::vector<int>>();
  g.legs = j.at("legs").get<std::vector<int>>();
  if (g.legs.size() != g.genus.size()) throw std::invalid_argument("graph json: legs and vertices differ in length");
  for (const auto& e : j.at("edges")) {
    int a = e.at(0).get<int>(), b = e.at(1).get<int>();
    if (a < 0 || b < 0 || a >= static_cast<int>(g.genus.size()) || b >= static_cast<int>(g.genus.size()))
      throw std::invalid_argument("graph json: edge endpoint out of range");
    g.edges.emplace_back(a, b);
  }
  for (int x : g.genus)
    if (x != 0 && x != 1) throw std::invalid_argument("graph json: vertex genus must be 0 or 1");
  g.normalize_edges();
  return g;
}

/// DOT rendering: filled circles for genus 0, open circles for genus 1,
/// legs as small point nodes.
inline std::string to_dot(const DualGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [shape=circle, label=\"\"" << (g.genus[v] == 0 ? ", style=filled, fillcolor=black" : "")
       << ", width=0.25];\n";
    for (int l = 0; l < g.legs[v]; ++l) {
      os << "  l" << v << "_" << l << " [shape=point, width=0.05];\n";
      os << "  v" << v << " -- l" << v << "_" << l << ";\n";
    }
  }
  for (const auto& [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace frob::graphs
