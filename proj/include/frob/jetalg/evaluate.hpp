#pragma once

// Evaluation of expression DAGs at a point.

#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

#include "frob/exact/scalar.hpp"
#include "frob/jetalg/expr.hpp"

namespace frob::jet {

/// Values of all generators at one point. Indices are 0-based; jets[i][p]
/// holds u_i^(p) for p >= 1 (jets[i][0] is unused).
template <class T>
struct EvalContext {
  int n = 0;
  std::vector<T> u;
  std::vector<T> h;
  std::vector<std::vector<T>> gamma;
  std::vector<std::vector<T>> jets;

  explicit EvalContext(int dim = 0, int max_jet = 0)
      : n(dim), u(static_cast<std::size_t>(dim), T(0)), h(static_cast<std::size_t>(dim), T(0)),
        gamma(static_cast<std::size_t>(dim), std::vector<T>(static_cast<std::size_t>(dim), T(0))),
        jets(static_cast<std::size_t>(dim), std::vector<T>(static_cast<std::size_t>(max_jet) + 1, T(0))) {}

  int max_jet() const { return jets.empty() ? 0 : static_cast<int>(jets[0].size()) - 1; }

  const T& value(const Generator& g) const {
    switch (g.kind) {
      case GenKind::U: return u[static_cast<std::size_t>(g.i)];
      case GenKind::Jet:
        if (g.j > max_jet()) throw std::out_of_range("jet u_" + std::to_string(g.i + 1) + "^(" + std::to_string(g.j) + ") not assigned");
        return jets[static_cast<std::size_t>(g.i)][static_cast<std::size_t>(g.j)];
      case GenKind::H: return h[static_cast<std::size_t>(g.i)];
      case GenKind::Gamma: return gamma[static_cast<std::size_t>(g.i)][static_cast<std::size_t>(g.j)];
    }
    throw std::logic_error("bad generator");
  }

  void set_gamma(int i, int j, const T& v) {
    gamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    gamma[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
  }
};

/// Exact division by zero: the sample point is degenerate and should be redrawn.
class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero during evaluation (resample)") {}
};

/// Evaluates expressions of one store at one point, caching node values.
/// In numeric mode it records the largest binary exponent of any summand,
/// the reference for relative zero tests.
template <class T>
class Evaluator {
public:
  Evaluator(const Store& store, const EvalContext<T>& ctx) : store_(store), ctx_(ctx) {}

  T operator()(Expr e) { return evaluate(e); }

  T evaluate(Expr e) {
    ensure(e.id());
    return values_[e.id()];
  }

  long max_exponent() const { return max_exp_; }
  void reset_max_exponent() { max_exp_ = LONG_MIN; }

private:
  void ensure(std::uint32_t root) {
    if (root < have_.size() && have_[root]) return;
    if (values_.size() < store_.size()) {
      values_.resize(store_.size(), T(0));
      have_.resize(store_.size(), 0);
    }
    std::vector<std::uint32_t> todo;
    std::vector<std::uint32_t> stack{root};
    while (!stack.empty()) {
      std::uint32_t id = stack.back();
      stack.pop_back();
      if (have_[id] == 1 || have_[id] == 2) continue;
      have_[id] = 2;
      todo.push_back(id);
      const Node& nd = store_.node(id);
      for (const auto& t : nd.terms) stack.push_back(t.first);
      for (const auto& f : nd.factors) stack.push_back(f.first);
    }
    std::sort(todo.begin(), todo.end());
    for (std::uint32_t id : todo) {
      values_[id] = compute(store_.node(id));
      have_[id] = 1;
    }
  }

  void track(const T& v) {
    if constexpr (!ScalarTraits<T>::exact) {
      long e = ScalarTraits<T>::exponent(v);
      if (e > max_exp_) max_exp_ = e;
    }
  }

  T power(const T& x, int e) {
    if (e < 0) {
      if (ScalarTraits<T>::is_zero(x)) throw DivisionByZero();
      return power(T(1) / x, -e);
    }
    T r(1);
    T b = x;
    bool first = true;
    while (e) {
      if (e & 1) {
        r = first ? b : r * b;
        first = false;
      }
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  T compute(const Node& nd) {
    switch (nd.kind) {
      case NodeKind::Const: return ScalarTraits<T>::from_rational(nd.value);
      case NodeKind::Gen: return ctx_.value(nd.gen);
      case NodeKind::Sum: {
        T acc = ScalarTraits<T>::from_rational(nd.value);
        track(acc);
        for (const auto& [child, c] : nd.terms) {
          const T& v = values_[child];
          T term = (c == 1) ? v : (c == -1 ? T(-v) : T(ScalarTraits<T>::from_rational(c) * v));
          track(term);
          acc = acc + term;
        }
        return acc;
      }
      case NodeKind::Prod: {
        T acc(1);
        bool first = true;
        for (const auto& [child, ex] : nd.factors) {
          T f = (ex == 1) ? values_[child] : power(values_[child], ex);
          acc = first ? f : acc * f;
          first = false;
        }
        return acc;
      }
    }
    throw std::logic_error("bad node");
  }

  const Store& store_;
  const EvalContext<T>& ctx_;
  std::vector<T> values_;
  std::vector<std::uint8_t> have_;
  long max_exp_ = LONG_MIN;
};

template <class T>
T evaluate(const Store& store, Expr e, const EvalContext<T>& ctx) {
  Evaluator<T> ev(store, ctx);
  return ev.evaluate(e);
}

}  // namespace frob::jet
