#pragma once

// Named graphs: the sixteen genus-two graphs Q1..Q16, the degree-one graphs
// P1..P5 and the degree-zero graphs O1, O2.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "frob/exact/rational.hpp"
#include "frob/graphs/dual_graph.hpp"

namespace frob::graphs {

namespace detail {

inline DualGraph make(std::vector<int> genus, std::vector<std::pair<int, int>> edges, std::vector<int> legs) {
  DualGraph g{std::move(genus), std::move(edges), std::move(legs)};
  g.normalize_edges();
  return g;
}

inline const std::map<std::string, DualGraph>& catalog_map() {
  static const std::map<std::string, DualGraph> m = [] {
    std::map<std::string, DualGraph> c;
    // genus-zero vertex with two loops and two legs
    c["Q1"] = make({0}, {{0, 0}, {0, 0}}, {2});
    // triple edge between a one-leg and a two-leg vertex
    c["Q2"] = make({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {1, 2});
    c["Q3"] = make({0, 0}, {{0, 0}, {0, 1}, {0, 1}}, {1, 2});
    c["Q4"] = make({0, 0, 0}, {{0, 1}, {0, 1}, {1, 2}, {0, 2}}, {1, 1, 2});
    c["Q5"] = make({0, 0}, {{0, 0}, {0, 1}, {0, 1}}, {0, 3});
    c["Q6"] = make({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {0, 3});
    c["Q7"] = make({0, 0, 0}, {{0, 1}, {0, 1}, {1, 2}, {1, 2}}, {2, 0, 2});
    c["Q8"] = make({0, 0, 0}, {{0, 1}, {0, 1}, {1, 2}, {0, 2}}, {0, 1, 3});
    c["Q9"] = make({0, 0, 0}, {{0, 0}, {0, 1}, {1, 2}, {0, 2}}, {0, 2, 2});
    c["Q10"] = make({0, 0, 0}, {{0, 1}, {0, 1}, {1, 2}, {0, 2}}, {0, 2, 2});
    // theta graph with paths of lengths 1, 1, 3
    c["Q11"] = make({0, 0, 0, 0}, {{0, 1}, {0, 1}, {0, 2}, {2, 3}, {1, 3}}, {0, 1, 2, 2});
    // K4 minus one edge
    c["Q12"] = make({0, 0, 0, 0}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, {0, 1, 2, 2});
    // two-leg genus-zero vertex doubly joined to a genus-one vertex
    c["Q13"] = make({0, 1}, {{0, 1}, {0, 1}}, {2, 0});
    // genus-one vertex with a loop and a leg
    c["Q14"] = make({1}, {{0, 0}}, {1});
    c["Q15"] = make({0, 1}, {{0, 0}, {0, 1}}, {1, 1});
    c["Q16"] = make({1, 1}, {{0, 1}}, {1, 0});

    c["P1"] = make({0}, {{0, 0}, {0, 0}}, {1});
    c["P2"] = make({0, 0}, {{0, 0}, {0, 1}, {0, 1}}, {0, 2});
    c["P3"] = make({0, 0, 0}, {{0, 1}, {0, 1}, {1, 2}, {0, 2}}, {1, 0, 2});
    c["P4"] = make({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {2, 0});
    c["P5"] = make({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {1, 1});

    c["O1"] = make({0}, {{0, 0}, {0, 0}}, {0});
    c["O2"] = make({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {1, 0});
    return c;
  }();
  return m;
}

}  // namespace detail

inline DualGraph builtin(const std::string& name) {
  const auto& m = detail::catalog_map();
  auto it = m.find(name);
  if (it == m.end()) throw std::out_of_range("unknown graph name: " + name);
  return it->second;
}

inline std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : detail::catalog_map()) out.push_back(k);
  return out;
}

/// The names Q1..Q16 in order.
inline std::vector<std::string> q_names() {
  std::vector<std::string> out;
  for (int p = 1; p <= 16; ++p) out.push_back("Q" + std::to_string(p));
  return out;
}

/// The constants c_1..c_16 paired with Q1..Q16.
inline std::vector<Rational> q_coefficients() {
  return {Rational(0),       Rational(-1, 960), Rational(1, 5760), Rational(1, 1152),
          Rational(1, 2880), Rational(0),       Rational(1, 1920), Rational(-1, 2880),
          Rational(-1, 1920), Rational(1, 1920), Rational(1, 1920), Rational(-1, 960),
          Rational(-1, 60),  Rational(1, 48),   Rational(-7, 240), Rational(7, 10)};
}

/// The catalog name of a graph, matched up to canonical form; empty if none.
inline std::string catalog_name(const DualGraph& g) {
  DualGraph c = canonicalize(g);
  for (const auto& [k, v] : detail::catalog_map())
    if (canonicalize(v) == c) return k;
  return "";
}

}  // namespace frob::graphs
