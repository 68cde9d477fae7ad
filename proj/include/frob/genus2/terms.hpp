#pragma once

// Term tables: summed index expressions written in a small infix language.
//
// Atoms (index letters are single lowercase letters):
//   u[i]            canonical coordinate u_i
//   u1[i] .. u9[i]  jets u_i', u_i'', ...
//   h[i]            Lame coefficient
//   g[i,j]          rotation coefficient gamma_ij
//   V[i,j]          (u_j - u_i) gamma_ij
//   D[i,j]          u_ij = u_i - u_j
//   H[i]            1/2 sum_{j != i} u_ij gamma_ij^2
//   d[k](e)         partial derivative of e in u_k
//   dx(e)           total x-derivative of e
// Operators + - * / and ^ with an integer exponent; integers are exact.
//
// A table is a list of sections. Each section carries the letters bound
// outside the records, distinctness constraints among them, and a factor
// multiplied onto every record:
//
//   @section P
//   @outer i j
//   @distinct i j
//   @factor 1/2*u1[i]*u1[j]
//   <one record per line>
//
// Every letter occurring in a record or in the factor ranges over 1..n.
// Index tuples for which a denominator becomes structurally zero (u_aa) are
// skipped.

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "frob/jetalg/expr.hpp"

namespace frob::g2 {

using jet::Expr;
using jet::Store;

struct AstNode {
  enum Kind { Number, Atom, Add, Sub, Mul, Div, Neg, Pow, Partial, TotalX } kind;
  Rational number;
  std::string name;
  std::vector<char> indices;
  std::vector<std::unique_ptr<AstNode>> kids;
  int exponent = 0;
};

using AstPtr = std::unique_ptr<AstNode>;

class TermSyntaxError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class TermParser {
public:
  explicit TermParser(std::string text) : t_(std::move(text)) {}

  AstPtr parse() {
    AstPtr e = expr();
    skip();
    if (pos_ != t_.size()) fail("trailing input");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw TermSyntaxError("term syntax error (" + why + ") at offset " + std::to_string(pos_) + " in: " + t_);
  }
  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < t_.size() && t_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  static AstPtr make(AstNode::Kind k) {
    auto n = std::make_unique<AstNode>();
    n->kind = k;
    return n;
  }
  static AstPtr binary(AstNode::Kind k, AstPtr a, AstPtr b) {
    auto n = make(k);
    n->kids.push_back(std::move(a));
    n->kids.push_back(std::move(b));
    return n;
  }

  AstPtr expr() {
    AstPtr a = term();
    for (;;) {
      if (accept('+')) {
        a = binary(AstNode::Add, std::move(a), term());
      } else if (accept('-')) {
        a = binary(AstNode::Sub, std::move(a), term());
      } else {
        return a;
      }
    }
  }
  AstPtr term() {
    AstPtr a = unary();
    for (;;) {
      if (accept('*')) {
        a = binary(AstNode::Mul, std::move(a), unary());
      } else if (accept('/')) {
        a = binary(AstNode::Div, std::move(a), unary());
      } else {
        return a;
      }
    }
  }
  AstPtr unary() {
    if (accept('-')) {
      auto n = make(AstNode::Neg);
      n->kids.push_back(unary());
      return n;
    }
    return power();
  }
  AstPtr power() {
    AstPtr a = atom();
    if (accept('^')) {
      skip();
      bool neg = accept('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent");
      auto n = make(AstNode::Pow);
      n->exponent = std::stoi(t_.substr(start, pos_ - start)) * (neg ? -1 : 1);
      n->kids.push_back(std::move(a));
      return n;
    }
    return a;
  }
  std::vector<char> index_list() {
    std::vector<char> idx;
    expect('[');
    do {
      skip();
      if (pos_ >= t_.size() || !std::islower(static_cast<unsigned char>(t_[pos_]))) fail("index letter");
      idx.push_back(t_[pos_++]);
    } while (accept(','));
    expect(']');
    return idx;
  }
  AstPtr atom() {
    skip();
    if (pos_ >= t_.size()) fail("unexpected end");
    char c = t_[pos_];
    if (c == '(') {
      ++pos_;
      AstPtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
      auto n = make(AstNode::Number);
      n->number = Rational(t_.substr(start, pos_ - start));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < t_.size() && std::isalnum(static_cast<unsigned char>(t_[pos_]))) ++pos_;
      std::string name = t_.substr(start, pos_ - start);
      if (name == "dx") {
        expect('(');
        auto n = make(AstNode::TotalX);
        n->kids.push_back(expr());
        expect(')');
        return n;
      }
      if (name == "d") {
        auto n = make(AstNode::Partial);
        n->indices = index_list();
        if (n->indices.size() != 1) fail("d[k] takes one index");
        expect('(');
        n->kids.push_back(expr());
        expect(')');
        return n;
      }
      auto n = make(AstNode::Atom);
      n->name = name;
      n->indices = index_list();
      static const std::map<std::string, std::size_t> arity = {
          {"u", 1}, {"h", 1}, {"H", 1}, {"g", 2}, {"V", 2}, {"D", 2}};
      bool jet = name.size() == 2 && name[0] == 'u' && std::isdigit(static_cast<unsigned char>(name[1])) && name[1] != '0';
      std::size_t want = jet ? 1 : (arity.count(name) ? arity.at(name) : 0);
      if (want == 0) fail("unknown symbol " + name);
      if (n->indices.size() != want) fail("wrong number of indices for " + name);
      return n;
    }
    fail("unexpected character");
  }

  std::string t_;
  std::size_t pos_ = 0;
};

inline void collect_letters(const AstNode& n, std::set<char>& out) {
  for (char c : n.indices) out.insert(c);
  for (const auto& k : n.kids) collect_letters(*k, out);
}

/// Builds the expression of an AST under a letter -> index binding.
/// Jet degree of a term: u^(p) counts p, d_x adds one, every other atom
/// counts zero. Empty when a sum mixes degrees.
inline std::optional<int> jet_degree(const AstNode& n) {
  auto kid = [&](std::size_t k) { return jet_degree(*n.kids[k]); };
  switch (n.kind) {
    case AstNode::Number: return 0;
    case AstNode::Add:
    case AstNode::Sub: {
      auto a = kid(0), b = kid(1);
      if (!a || !b) return std::nullopt;
      // a bare constant in a sum has no degree of its own
      if (n.kids[0]->kind == AstNode::Number) return b;
      if (n.kids[1]->kind == AstNode::Number) return a;
      if (*a != *b) return std::nullopt;
      return a;
    }
    case AstNode::Mul:
    case AstNode::Div: {
      auto a = kid(0), b = kid(1);
      if (!a || !b) return std::nullopt;
      return n.kind == AstNode::Mul ? *a + *b : *a - *b;
    }
    case AstNode::Neg: return kid(0);
    case AstNode::Pow: {
      auto a = kid(0);
      if (!a) return std::nullopt;
      return *a * n.exponent;
    }
    case AstNode::Partial: return kid(0);
    case AstNode::TotalX: {
      auto a = kid(0);
      if (!a) return std::nullopt;
      return *a + 1;
    }
    case AstNode::Atom:
      if (n.name.size() == 2 && n.name[0] == 'u' && std::isdigit(static_cast<unsigned char>(n.name[1]))) return n.name[1] - '0';
      return 0;
  }
  return std::nullopt;
}

class TermBuilder {
public:
  explicit TermBuilder(Store& s) : s_(s) {}

  Expr h_function(int i) {
    std::vector<std::pair<Expr, Rational>> items;
    for (int j = 0; j < s_.n(); ++j)
      if (j != i) items.emplace_back((s_.u(i) - s_.u(j)) * pow(s_.gamma(i, j), 2), Rational(1, 2));
    return s_.lincomb(items);
  }

  Expr build(const AstNode& n, const std::map<char, int>& bind) {
    auto idx = [&](std::size_t k) { return bind.at(n.indices[k]); };
    switch (n.kind) {
      case AstNode::Number: return s_.constant(n.number);
      case AstNode::Add: return build(*n.kids[0], bind) + build(*n.kids[1], bind);
      case AstNode::Sub: return build(*n.kids[0], bind) - build(*n.kids[1], bind);
      case AstNode::Mul: return build(*n.kids[0], bind) * build(*n.kids[1], bind);
      case AstNode::Div: return build(*n.kids[0], bind) / build(*n.kids[1], bind);
      case AstNode::Neg: return -build(*n.kids[0], bind);
      case AstNode::Pow: return pow(build(*n.kids[0], bind), n.exponent);
      case AstNode::Partial: return s_.partial_u(build(*n.kids[0], bind), idx(0));
      case AstNode::TotalX: return s_.total_x(build(*n.kids[0], bind));
      case AstNode::Atom: {
        const std::string& nm = n.name;
        if (nm == "u") return s_.u(idx(0));
        if (nm == "h") return s_.h(idx(0));
        if (nm == "H") {
          int i = idx(0);
          if (auto it = h_cache_.find(i); it != h_cache_.end()) return it->second;
          return h_cache_[i] = h_function(i);
        }
        if (nm == "g") return s_.gamma(idx(0), idx(1));
        if (nm == "V") return (s_.u(idx(1)) - s_.u(idx(0))) * s_.gamma(idx(0), idx(1));
        if (nm == "D") return s_.u(idx(0)) - s_.u(idx(1));
        return s_.jet(idx(0), nm[1] - '0');
      }
    }
    throw std::logic_error("bad term node");
  }

private:
  Store& s_;
  std::map<int, Expr> h_cache_;
};

struct Record {
  std::string source;
  AstPtr ast;
  int line = 0;
};

struct Section {
  std::string name;
  std::vector<char> outer;
  std::vector<std::pair<char, char>> distinct;
  std::string factor_source = "1";
  AstPtr factor;
  std::vector<Record> records;
};

/// Parses a table text into sections.
inline std::vector<Section> parse_table(const std::string& text) {
  std::vector<Section> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto words = [](const std::string& s) {
    std::istringstream ws(s);
    std::vector<std::string> w;
    for (std::string x; ws >> x;) w.push_back(x);
    return w;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    line = line.substr(a);
    if (line[0] == '@') {
      auto w = words(line);
      if (w[0] == "@section") {
        out.emplace_back();
        out.back().name = w.size() > 1 ? w[1] : "";
        out.back().factor = TermParser("1").parse();
        continue;
      }
      if (out.empty()) throw TermSyntaxError("directive before @section at line " + std::to_string(lineno));
      Section& sec = out.back();
      if (w[0] == "@outer") {
        for (std::size_t k = 1; k < w.size(); ++k) sec.outer.push_back(w[k][0]);
      } else if (w[0] == "@distinct") {
        if (w.size() != 3) throw TermSyntaxError("@distinct takes two letters");
        sec.distinct.emplace_back(w[1][0], w[2][0]);
      } else if (w[0] == "@factor") {
        sec.factor_source = line.substr(7);
        sec.factor = TermParser(sec.factor_source).parse();
      } else {
        throw TermSyntaxError("unknown directive " + w[0]);
      }
      continue;
    }
    if (out.empty()) throw TermSyntaxError("record before @section at line " + std::to_string(lineno));
    Record r;
    r.source = line;
    r.ast = TermParser(line).parse();
    r.line = lineno;
    out.back().records.push_back(std::move(r));
  }
  return out;
}

/// Options for evaluating a table.
struct TableOptions {
  /// Extra distinctness constraints per section name, e.g. {"P", {'i','j'}}.
  std::multimap<std::string, std::pair<char, char>> extra_distinct;
};

/// Expands sections into one summed expression per record.
class TableExpander {
public:
  TableExpander(Store& s, TableOptions opts = {}) : s_(s), builder_(s), opts_(std::move(opts)) {}

  /// The full sum of one record (factor included) over all index tuples.
  Expr record_sum(const Section& sec, const Record& rec) {
    std::set<char> letters;
    collect_letters(*rec.ast, letters);
    collect_letters(*sec.factor, letters);
    for (char c : sec.outer) letters.insert(c);
    std::vector<char> ls(letters.begin(), letters.end());
    std::vector<std::pair<char, char>> distinct = sec.distinct;
    auto range = opts_.extra_distinct.equal_range(sec.name);
    for (auto it = range.first; it != range.second; ++it) distinct.push_back(it->second);
    std::vector<std::pair<Expr, Rational>> items;
    std::map<char, int> bind;
    int n = s_.n();
    std::vector<int> cur(ls.size(), 0);
    for (;;) {
      for (std::size_t k = 0; k < ls.size(); ++k) bind[ls[k]] = cur[k];
      bool ok = true;
      for (const auto& [a, b] : distinct)
        if (bind.count(a) && bind.count(b) && bind[a] == bind[b]) ok = false;
      if (ok) {
        try {
          Expr e = builder_.build(*rec.ast, bind) * builder_.build(*sec.factor, bind);
          if (!e.is_zero()) items.emplace_back(e, Rational(1));
        } catch (const jet::StructuralZeroDivision&) {
          // denominator vanishes for this tuple: skipped by convention
        }
      }
      std::size_t k = 0;
      while (k < cur.size() && ++cur[k] == n) cur[k++] = 0;
      if (k == cur.size()) break;
    }
    return s_.lincomb(items);
  }

  Expr section_sum(const Section& sec) {
    std::vector<std::pair<Expr, Rational>> items;
    for (const auto& r : sec.records) items.emplace_back(record_sum(sec, r), Rational(1));
    return s_.lincomb(items);
  }

  Expr table_sum(const std::vector<Section>& secs) {
    std::vector<std::pair<Expr, Rational>> items;
    for (const auto& sec : secs) items.emplace_back(section_sum(sec), Rational(1));
    return s_.lincomb(items);
  }

  TermBuilder& builder() { return builder_; }

private:
  Store& s_;
  TermBuilder builder_;
  TableOptions opts_;
};

}  // namespace frob::g2
