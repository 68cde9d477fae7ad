#pragma once

// Deterministic S-expression text form of an expression DAG.
//
//   (dag
//    (c 3/4)            constant
//    (u 1) (j 1 2)      u_1, u_1''
//    (h 2) (g 1 2)      h_2, gamma_12
//    (sum c0 (k0 c) ...) c0 + sum c * node k
//    (prod (k e) ...)   prod node_k ^ e
//    )
//
// Nodes are numbered locally in store order and the last node is the root.
// Indices in the text are 1-based.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "frob/jetalg/expr.hpp"

namespace frob::jet {

inline std::string dump_sexpr(const Store& s, Expr e) {
  std::vector<std::uint32_t> ids;
  s.for_each_reachable(e, [&](std::uint32_t id) { ids.push_back(id); });
  std::sort(ids.begin(), ids.end());
  std::unordered_map<std::uint32_t, std::size_t> local;
  for (std::size_t k = 0; k < ids.size(); ++k) local[ids[k]] = k;
  std::ostringstream os;
  os << "(dag\n";
  for (std::uint32_t id : ids) {
    const Node& nd = s.node(id);
    os << " ";
    switch (nd.kind) {
      case NodeKind::Const: os << "(c " << nd.value.get_str() << ")"; break;
      case NodeKind::Gen:
        switch (nd.gen.kind) {
          case GenKind::U: os << "(u " << nd.gen.i + 1 << ")"; break;
          case GenKind::Jet: os << "(j " << nd.gen.i + 1 << " " << nd.gen.j << ")"; break;
          case GenKind::H: os << "(h " << nd.gen.i + 1 << ")"; break;
          case GenKind::Gamma: os << "(g " << nd.gen.i + 1 << " " << nd.gen.j + 1 << ")"; break;
        }
        break;
      case NodeKind::Sum:
        os << "(sum " << nd.value.get_str();
        for (const auto& [c, q] : nd.terms) os << " (" << local.at(c) << " " << q.get_str() << ")";
        os << ")";
        break;
      case NodeKind::Prod:
        os << "(prod";
        for (const auto& [c, ex] : nd.factors) os << " (" << local.at(c) << " " << ex << ")";
        os << ")";
        break;
    }
    os << "\n";
  }
  os << ")\n";
  return os.str();
}

namespace detail {

class SexprLexer {
public:
  explicit SexprLexer(const std::string& text) : t_(text) {}
  std::string next() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    if (pos_ >= t_.size()) return "";
    char ch = t_[pos_];
    if (ch == '(' || ch == ')') {
      ++pos_;
      return std::string(1, ch);
    }
    std::size_t start = pos_;
    while (pos_ < t_.size() && !std::isspace(static_cast<unsigned char>(t_[pos_])) && t_[pos_] != '(' && t_[pos_] != ')') ++pos_;
    return t_.substr(start, pos_ - start);
  }
  void expect(const std::string& tok) {
    std::string got = next();
    if (got != tok) throw std::invalid_argument("sexpr: expected '" + tok + "', got '" + got + "'");
  }

private:
  const std::string& t_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Rebuilds a dumped DAG inside `s`; returns the root.
inline Expr parse_sexpr(Store& s, const std::string& text) {
  detail::SexprLexer lx(text);
  lx.expect("(");
  lx.expect("dag");
  std::vector<std::uint32_t> ids;
  auto node_ref = [&](const std::string& tok) {
    std::size_t k = std::stoul(tok);
    if (k >= ids.size()) throw std::invalid_argument("sexpr: forward reference");
    return ids[k];
  };
  for (;;) {
    std::string tok = lx.next();
    if (tok == ")") break;
    if (tok != "(") throw std::invalid_argument("sexpr: expected node");
    std::string head = lx.next();
    std::uint32_t id;
    if (head == "c") {
      id = s.constant(parse_rational(lx.next())).id();
      lx.expect(")");
    } else if (head == "u" || head == "h") {
      int i = std::stoi(lx.next()) - 1;
      id = (head == "u" ? s.u(i) : s.h(i)).id();
      lx.expect(")");
    } else if (head == "j" || head == "g") {
      int a = std::stoi(lx.next());
      int b = std::stoi(lx.next());
      id = (head == "j" ? s.jet(a - 1, b) : s.gamma(a - 1, b - 1)).id();
      lx.expect(")");
    } else if (head == "sum") {
      Rational c0 = parse_rational(lx.next());
      std::vector<std::pair<std::uint32_t, Rational>> terms;
      for (std::string t = lx.next(); t != ")"; t = lx.next()) {
        if (t != "(") throw std::invalid_argument("sexpr: bad sum term");
        std::uint32_t child = node_ref(lx.next());
        terms.emplace_back(child, parse_rational(lx.next()));
        lx.expect(")");
      }
      id = s.make_sum(c0, std::move(terms));
    } else if (head == "prod") {
      std::vector<std::pair<std::uint32_t, int>> factors;
      for (std::string t = lx.next(); t != ")"; t = lx.next()) {
        if (t != "(") throw std::invalid_argument("sexpr: bad prod factor");
        std::uint32_t child = node_ref(lx.next());
        factors.emplace_back(child, std::stoi(lx.next()));
        lx.expect(")");
      }
      std::sort(factors.begin(), factors.end());
      id = s.make_prod(std::move(factors));
    } else {
      throw std::invalid_argument("sexpr: unknown node '" + head + "'");
    }
    ids.push_back(id);
  }
  if (ids.empty()) throw std::invalid_argument("sexpr: empty dag");
  return Expr(&s, ids.back());
}

}  // namespace frob::jet
