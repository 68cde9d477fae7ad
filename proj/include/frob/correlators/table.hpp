#pragma once

// Genus-zero and genus-one correlators in canonical coordinates, built as
// expressions over the jet algebra.
//
// C_t and D_t denote the derivatives of F_0 and F_1 along t^{alpha,0}
// contracted with dv^alpha/du_{t_1} ... dv^alpha/du_{t_m}. They obey
//   X_{t,j} = (sum_{k,p} U^{k,p}_j d/du_k^(p)) X_t
//             - sum_pos sum_s X_{t[pos -> s]} Gamma^s_{t_pos j} u_{j,x},
// with C_iii = h_i^2 u_{i,x} and D_i = u_{i,x} dG/du_i + sum_k U^{k,1}_i / (24 u_{k,x}).

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "frob/jetalg/christoffel.hpp"
#include "frob/jetalg/expr.hpp"

namespace frob::corr {

using jet::Expr;
using jet::Generator;
using jet::GenKind;
using jet::Store;

using IndexTuple = std::vector<int>;

class CorrelatorTable {
public:
  static constexpr std::size_t kMaxC = 6;
  static constexpr std::size_t kMaxD = 3;

  explicit CorrelatorTable(Store& s) : s_(s), n_(s.n()) {}

  Store& store() { return s_; }
  int n() const { return n_; }

  /// Gamma^k_ij.
  Expr christoffel(int k, int i, int j) { return jet::christoffel(s_, k, i, j); }

  /// U^{i,p}_j: the t^{alpha,0}-derivative of u_i^(p) contracted with dv^alpha/du_j.
  Expr u_jet_coeff(int i, int p, int j) {
    auto key = std::make_tuple(i, p, j);
    if (auto it = u_.find(key); it != u_.end()) return it->second;
    Expr r;
    if (p == 0) {
      r = i == j ? s_.ux(j) : s_.zero();
    } else {
      std::vector<std::pair<Expr, Rational>> items;
      items.emplace_back(s_.total_x(u_jet_coeff(i, p - 1, j)), Rational(1));
      for (int k = 0; k < n_; ++k) {
        for (int sdx = 0; sdx < n_; ++sdx) {
          Expr g = christoffel(sdx, k, j);
          if (g.is_zero()) continue;
          Expr prev = u_jet_coeff(i, p - 1, sdx);
          if (prev.is_zero()) continue;
          items.emplace_back(s_.product({g, s_.ux(k), prev}), Rational(-1));
        }
      }
      r = s_.lincomb(items);
    }
    u_.emplace(key, r);
    return r;
  }

  /// The derivation sum_{k,p} U^{k,p}_j d/du_k^(p) (derivative along
  /// t^{alpha,0} contracted with dv^alpha/du_j).
  Expr t_derivative(Expr e, int j) {
    return s_.derive(e, 0x400000ULL + static_cast<std::uint64_t>(j), [this, j](const Generator& g) -> Expr {
      switch (g.kind) {
        case GenKind::U: return g.i == j ? s_.ux(j) : s_.zero();
        case GenKind::Jet: return u_jet_coeff(g.i, g.j, j);
        default: return s_.mul(s_.ux(j), s_.partial_u(s_.generator(g), j));
      }
    });
  }

  /// dG/du_i = 1/2 sum_{j != i} (u_i - u_j) gamma_ij^2 - 1/24 sum_{k != i} gamma_ik (h_i/h_k - h_k/h_i).
  Expr g_gradient(int i) {
    std::vector<std::pair<Expr, Rational>> items;
    for (int j = 0; j < n_; ++j) {
      if (j == i) continue;
      items.emplace_back((s_.u(i) - s_.u(j)) * pow(s_.gamma(i, j), 2), Rational(1, 2));
      items.emplace_back(s_.gamma(i, j) * (s_.h(i) / s_.h(j) - s_.h(j) / s_.h(i)), Rational(-1, 24));
    }
    return s_.lincomb(items);
  }

  /// The same gradient written through Gamma_ki = Gamma^k_ki:
  /// 1/2 sum (u_i - u_k) Gamma_ki Gamma_ik - 1/24 sum (Gamma_ki - Gamma_ik).
  Expr g_gradient_christoffel_form(int i) {
    std::vector<std::pair<Expr, Rational>> items;
    for (int k = 0; k < n_; ++k) {
      if (k == i) continue;
      Expr gki = christoffel(k, k, i);
      Expr gik = christoffel(i, i, k);
      items.emplace_back((s_.u(i) - s_.u(k)) * gki * gik, Rational(1, 2));
      items.emplace_back(gki - gik, Rational(-1, 24));
    }
    return s_.lincomb(items);
  }

  /// 1 / (h_j^2 u_{j,x}): the canonical weight of one inverse-matrix edge.
  Expr edge_weight(int j) { return s_.product({{s_.h(j), -2}, {s_.ux(j), -1}}); }

  /// Genus-zero correlator, 3 <= length <= 6.
  Expr correlator_C(IndexTuple t) {
    if (t.size() < 3 || t.size() > kMaxC) throw std::out_of_range("C correlator length must be in 3..6");
    check(t);
    std::sort(t.begin(), t.end());
    return build(c_, t, true);
  }

  /// Genus-one correlator, 1 <= length <= 3.
  Expr correlator_D(IndexTuple t) {
    if (t.empty() || t.size() > kMaxD) throw std::out_of_range("D correlator length must be in 1..3");
    check(t);
    std::sort(t.begin(), t.end());
    return build(d_, t, false);
  }

  /// One recursion step for C_{head, j} (genus zero) or D_{head, j}: the
  /// derivative along j of the head correlator, without reordering. Equal
  /// to correlator_C / correlator_D for any ordering.
  Expr correlator_step(IndexTuple head, int j, bool genus0) {
    head.push_back(j);
    std::size_t lo = genus0 ? 4 : 2, hi = genus0 ? kMaxC : kMaxD;
    if (head.size() < lo || head.size() > hi) throw std::out_of_range("correlator step length out of range");
    check(head);
    return step(genus0 ? c_ : d_, head, genus0);
  }

private:
  void check(const IndexTuple& t) const {
    for (int i : t)
      if (i < 0 || i >= n_) throw std::out_of_range("correlator index outside dimension");
  }

  Expr build(std::map<IndexTuple, Expr>& memo, const IndexTuple& t, bool genus0) {
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    Expr r;
    if (genus0 && t.size() == 3) {
      r = (t[0] == t[1] && t[1] == t[2]) ? s_.pow(s_.h(t[0]), 2) * s_.ux(t[0]) : s_.zero();
    } else if (!genus0 && t.size() == 1) {
      int i = t[0];
      std::vector<std::pair<Expr, Rational>> items;
      items.emplace_back(s_.ux(i) * g_gradient(i), Rational(1));
      for (int k = 0; k < n_; ++k) {
        Expr uk = u_jet_coeff(k, 1, i);
        if (!uk.is_zero()) items.emplace_back(uk / s_.ux(k), Rational(1, 24));
      }
      r = s_.lincomb(items);
    } else {
      r = step(memo, t, genus0);
    }
    memo.emplace(t, r);
    return r;
  }

  /// The recursion with t.back() as the derivative direction.
  Expr step(std::map<IndexTuple, Expr>& memo, const IndexTuple& t, bool genus0) {
    IndexTuple head(t.begin(), t.end() - 1);
    std::sort(head.begin(), head.end());
    int j = t.back();
    std::vector<std::pair<Expr, Rational>> items;
    items.emplace_back(t_derivative(build(memo, head, genus0), j), Rational(1));
    for (std::size_t pos = 0; pos < head.size(); ++pos) {
      for (int sdx = 0; sdx < n_; ++sdx) {
        Expr g = christoffel(sdx, head[pos], j);
        if (g.is_zero()) continue;
        IndexTuple other = head;
        other[pos] = sdx;
        std::sort(other.begin(), other.end());
        Expr x = build(memo, other, genus0);
        if (x.is_zero()) continue;
        items.emplace_back(s_.product({x, g, s_.ux(j)}), Rational(-1));
      }
    }
    return s_.lincomb(items);
  }

  Store& s_;
  int n_;
  std::map<std::tuple<int, int, int>, Expr> u_;
  std::map<IndexTuple, Expr> c_;
  std::map<IndexTuple, Expr> d_;
};

}  // namespace frob::corr
