#pragma once

// The genus-two expressions of one dimension n: the free energy F2, the
// G-function G2, the sixteen graph functions and the derived identities.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "frob/correlators/table.hpp"
#include "frob/genus2/f2_table.hpp"
#include "frob/genus2/g2_table.hpp"
#include "frob/genus2/terms.hpp"
#include "frob/graphs/catalog.hpp"
#include "frob/graphs/evaluate.hpp"

namespace frob::g2 {

class Workbench {
public:
  explicit Workbench(int n, TableOptions opts = {})
      : store_(std::make_unique<Store>(n, 4)), table_(std::make_unique<corr::CorrelatorTable>(*store_)),
        graphs_(std::make_unique<graphs::GraphEvaluator>(*table_)),
        expander_(std::make_unique<TableExpander>(*store_, std::move(opts))) {}

  int n() const { return store_->n(); }
  Store& store() { return *store_; }
  corr::CorrelatorTable& table() { return *table_; }
  graphs::GraphEvaluator& graph_evaluator() { return *graphs_; }

  /// H_i = 1/2 sum_{j != i} u_ij gamma_ij^2.
  Expr h_function(int i) { return expander_->builder().h_function(i); }

  Expr f2_reference() {
    if (!f2_.valid()) f2_ = expander_->table_sum(f2_sections());
    return f2_;
  }

  Expr g2_function() {
    if (!g2_.valid()) g2_ = expander_->table_sum(g2_sections());
    return g2_;
  }

  /// One section of G2 (G, Gij, P or Q), multiplier included.
  Expr g2_section(const std::string& name) {
    for (const auto& sec : g2_sections())
      if (sec.name == name) return expander_->section_sum(sec);
    throw std::out_of_range("no G2 section " + name);
  }

  Expr graph(const graphs::DualGraph& g) { return graphs_->function(g); }

  Expr graph(const std::string& name) {
    if (auto it = named_.find(name); it != named_.end()) return it->second;
    Expr e = graphs_->function(graphs::builtin(name));
    named_.emplace(name, e);
    return e;
  }

  /// sum_p coeffs[p] Q_{p+1}.
  Expr q_combination(const std::vector<Rational>& coeffs) {
    auto names = graphs::q_names();
    std::vector<std::pair<Expr, Rational>> items;
    for (std::size_t p = 0; p < coeffs.size() && p < names.size(); ++p)
      if (sgn(coeffs[p])) items.emplace_back(graph(names[p]), coeffs[p]);
    return store_->lincomb(items);
  }

  /// F2 - sum c_p Q_p - G2.
  Expr decomposition_residual(const std::vector<Rational>& coeffs = graphs::q_coefficients()) {
    std::string key = "decomposition";
    for (const auto& c : coeffs) key += " " + to_string(c);
    return cached(key, [&] { return f2_reference() - q_combination(coeffs) - g2_function(); });
  }

  /// dG/du_i for all i.
  const std::vector<Expr>& g_gradients() {
    if (grads_.empty())
      for (int i = 0; i < n(); ++i) grads_.push_back(table_->g_gradient(i));
    return grads_;
  }

  /// (Q1-Q6) + 2(Q7-Q5) + 3(Q8-Q2) + 4(Q9-Q3) + 6(Q4+Q10-Q11-Q12).
  Expr relation_lhs() {
    return cached("relation_lhs", [&] {
      std::vector<Rational> c(16, Rational(0));
      auto set = [&](int p, long v) { c[static_cast<std::size_t>(p - 1)] += v; };
      set(1, 1), set(6, -1), set(7, 2), set(5, -2), set(8, 3), set(2, -3), set(9, 4), set(3, -4);
      set(4, 6), set(10, 6), set(11, -6), set(12, -6);
      return q_combination(c);
    });
  }

  Expr o_difference_graphs() {
    return cached("odiff_graphs", [&] { return graph("O1") - graph("O2"); });
  }

  /// sum_{i<j} gamma_ij (h_i^2 + h_j^2)^2 / (h_i^3 h_j^3).
  Expr o_difference_closed() {
    return cached("odiff_closed", [&] {
      Store& s = *store_;
      std::vector<std::pair<Expr, Rational>> items;
      for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
          items.emplace_back(s.product({{s.gamma(i, j), 1}, {pow(s.h(i), 2) + pow(s.h(j), 2), 2}, {s.h(i), -3}, {s.h(j), -3}}),
                             Rational(1));
      return s.lincomb(items);
    });
  }

  /// The expanded forms of O1 and O2 in terms of gamma, h and u-jets.
  Expr o1_expanded() {
    return cached("o1_expanded", [&] {
      Store& s = *store_;
      std::vector<std::pair<Expr, Rational>> items;
      for (int i = 0; i < n(); ++i) {
        for (int j = i + 1; j < n(); ++j) {
          Expr hi2 = pow(s.h(i), 2), hj2 = pow(s.h(j), 2);
          Expr num = pow(hi2 * s.ux(j) + hj2 * s.ux(i), 2) - (pow(hi2, 2) + pow(hj2, 2)) * pow(s.ux(i) - s.ux(j), 2);
          items.emplace_back(s.product({{s.gamma(i, j), 1}, {num, 1}, {s.h(i), -3}, {s.h(j), -3}, {s.ux(i), -1}, {s.ux(j), -1}}),
                             Rational(1));
        }
        items.emplace_back(s.product({{s.jet(i, 2), 1}, {s.h(i), -2}, {s.ux(i), -2}}), Rational(1));
      }
      return s.lincomb(items);
    });
  }

  Expr o2_expanded() {
    return cached("o2_expanded", [&] {
      Store& s = *store_;
      std::vector<std::pair<Expr, Rational>> items;
      for (int i = 0; i < n(); ++i) {
        for (int j = i + 1; j < n(); ++j) {
          Expr num = (pow(s.h(i), 4) * s.ux(i) - pow(s.h(j), 4) * s.ux(j)) * (s.ux(j) - s.ux(i));
          items.emplace_back(s.product({{s.gamma(i, j), 1}, {num, 1}, {s.h(i), -3}, {s.h(j), -3}, {s.ux(i), -1}, {s.ux(j), -1}}),
                             Rational(1));
        }
        items.emplace_back(s.product({{s.jet(i, 2), 1}, {s.h(i), -2}, {s.ux(i), -2}}), Rational(1));
      }
      return s.lincomb(items);
    });
  }

  /// d_x^2 (O1 - O2) from the graph functions.
  Expr relation_rhs() {
    return cached("relation_rhs", [&] { return store_->total_x(store_->total_x(o_difference_graphs())); });
  }

  /// The four-graph free energy of the two-dimensional A-type model:
  /// Q1/1152 - Q2/360 - Q3/1152 + Q4/360.
  Expr a2_formula() {
    return cached("a2_formula", [&] {
      return store_->lincomb({{graph("Q1"), Rational(1, 1152)},
                              {graph("Q2"), Rational(-1, 360)},
                              {graph("Q3"), Rational(-1, 1152)},
                              {graph("Q4"), Rational(1, 360)}});
    });
  }

  /// The seven-graph form of the affine A1 free energy for given W1, W2, W3:
  /// the four-graph formula - W1/480 + 7 W2/5760 + 11 W3/5760.
  Expr affine_a1_formula(const graphs::DualGraph& w1, const graphs::DualGraph& w2, const graphs::DualGraph& w3) {
    return store_->lincomb({{a2_formula(), Rational(1)},
                            {graph(w1), Rational(-1, 480)},
                            {graph(w2), Rational(7, 5760)},
                            {graph(w3), Rational(11, 5760)}});
  }

  static const std::vector<Section>& f2_sections() {
    static const std::vector<Section> s = parse_table(kF2Table);
    return s;
  }
  static const std::vector<Section>& g2_sections() {
    static const std::vector<Section> s = parse_table(kG2Table);
    return s;
  }

  TableExpander& expander() { return *expander_; }

  /// Builds once and memoizes; later calls only read, so evaluation may fan
  /// out across threads after a warm-up call.
  template <class F>
  Expr cached(const std::string& key, F&& build) {
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Expr e = build();
    cache_.emplace(key, e);
    return e;
  }

private:
  std::unique_ptr<Store> store_;
  std::unique_ptr<corr::CorrelatorTable> table_;
  std::unique_ptr<graphs::GraphEvaluator> graphs_;
  std::unique_ptr<TableExpander> expander_;
  Expr f2_, g2_;
  std::map<std::string, Expr> named_;
  std::map<std::string, Expr> cache_;
  std::vector<Expr> grads_;
};

}  // namespace frob::g2
