#pragma once

// A sample point of a family: canonical coordinates, Lame and rotation
// coefficients and jets, plus family-internal data kept for the checks.

#include <climits>
#include <string>
#include <vector>

#include "frob/exact/random.hpp"
#include "frob/exact/scalar.hpp"
#include "frob/families/spec.hpp"
#include "frob/jetalg/evaluate.hpp"
#include "json.hpp"

namespace frob::fam {

template <class T>
struct SamplePoint {
  int n = 0;
  std::vector<T> u;
  std::vector<T> h;
  std::vector<std::vector<T>> gamma;
  std::vector<std::vector<T>> jets;  // jets[i][p], p = 1..max_jet
  std::vector<T> eta;                // eta_ii = h_i^2
  std::vector<T> dlog_tn;            // d log t_n / du_i, where defined
  FamilySpec spec;
  std::uint64_t seed = 0;
  nlohmann::json params;             // family parameters
  long consistency_exponent = LONG_MIN;  // log2 of the sampler self-check residual

  jet::EvalContext<T> context() const {
    int mj = jets.empty() ? 0 : static_cast<int>(jets[0].size()) - 1;
    jet::EvalContext<T> c(n, mj);
    c.u = u;
    c.h = h;
    c.gamma = gamma;
    c.jets = jets;
    return c;
  }

  /// The same point with all jets replaced by the given ones (u_x, u_xx, ...).
  SamplePoint with_jets(std::vector<std::vector<T>> new_jets) const {
    SamplePoint s = *this;
    s.jets = std::move(new_jets);
    return s;
  }
};

/// The same point with every scalar mapped to a working-precision complex.
template <class T>
SamplePoint<Complex> to_numeric(const SamplePoint<T>& s) {
  auto conv = [](const std::vector<T>& v) {
    std::vector<Complex> out;
    for (const auto& x : v) out.push_back(ScalarTraits<T>::to_complex(x));
    return out;
  };
  SamplePoint<Complex> c;
  c.n = s.n;
  c.u = conv(s.u);
  c.h = conv(s.h);
  for (const auto& row : s.gamma) c.gamma.push_back(conv(row));
  for (const auto& row : s.jets) c.jets.push_back(conv(row));
  c.eta = conv(s.eta);
  c.dlog_tn = conv(s.dlog_tn);
  c.spec = s.spec;
  c.seed = s.seed;
  c.params = s.params;
  c.consistency_exponent = s.consistency_exponent;
  return c;
}

/// Random nonzero rational jets u_i^(p), p = 1..max_jet.
template <class T>
std::vector<std::vector<T>> random_jets(int n, int max_jet, Rng& rng, std::int64_t height = 50) {
  std::vector<std::vector<T>> j(static_cast<std::size_t>(n), std::vector<T>(static_cast<std::size_t>(max_jet) + 1, T(0)));
  for (auto& row : j)
    for (int p = 1; p <= max_jet; ++p) row[static_cast<std::size_t>(p)] = ScalarTraits<T>::from_rational(rng.nonzero_rational(height));
  return j;
}

/// The small phase space restriction u_x = 1, u_xx = ... = 0.
template <class T>
std::vector<std::vector<T>> small_phase_jets(int n, int max_jet) {
  std::vector<std::vector<T>> j(static_cast<std::size_t>(n), std::vector<T>(static_cast<std::size_t>(max_jet) + 1, T(0)));
  for (auto& row : j)
    if (max_jet >= 1) row[1] = T(1);
  return j;
}

inline std::string scalar_json(const RadicalNumber& x) { return x.str(); }
inline std::string scalar_json(const Rational& x) { return x.get_str(); }
inline std::string scalar_json(const Complex& x) {
  long bits = static_cast<long>(x.precision());
  return x.str(static_cast<int>(bits * 0.30103) + 1);
}

template <class T>
nlohmann::json to_json(const SamplePoint<T>& s) {
  nlohmann::json j;
  j["family"] = s.spec.name();
  j["n"] = s.n;
  j["seed"] = s.seed;
  j["params"] = s.params;
  auto list = [](const std::vector<T>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(scalar_json(x));
    return a;
  };
  j["u"] = list(s.u);
  j["h"] = list(s.h);
  nlohmann::json g = nlohmann::json::array();
  for (int i = 0; i < s.n; ++i)
    for (int k = i + 1; k < s.n; ++k)
      g.push_back({{"i", i + 1}, {"j", k + 1}, {"value", scalar_json(s.gamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])}});
  j["gamma"] = g;
  nlohmann::json jets = nlohmann::json::array();
  for (const auto& row : s.jets) {
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t p = 1; p < row.size(); ++p) r.push_back(scalar_json(row[p]));
    jets.push_back(r);
  }
  j["jets"] = jets;
  return j;
}

}  // namespace frob::fam
