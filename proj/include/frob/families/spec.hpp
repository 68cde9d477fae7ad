#pragma once

// Family descriptors: which Frobenius manifold a sample point is drawn from.

#include <stdexcept>
#include <string>

#include "frob/exact/rational.hpp"

namespace frob::fam {

enum class Kind { An, Dn, E6, E7, E8, Apq, Dr, TwoDim };

struct FamilySpec {
  Kind kind = Kind::An;
  int n = 0;           // An, Dn
  int p = 0, q = 0;    // Apq
  int r = 0;           // Dr
  Rational mu = 0;     // TwoDim

  static FamilySpec an(int n) { return checked({Kind::An, n}); }
  static FamilySpec dn(int n) { return checked({Kind::Dn, n}); }
  static FamilySpec e6() { return {Kind::E6, 6}; }
  static FamilySpec e7() { return {Kind::E7, 7}; }
  static FamilySpec e8() { return {Kind::E8, 8}; }
  static FamilySpec apq(int p, int q) { return checked({Kind::Apq, p + q, p, q}); }
  static FamilySpec dr(int r) { return checked({Kind::Dr, r + 3, 0, 0, r}); }
  static FamilySpec two_dim(const Rational& mu) { return checked({Kind::TwoDim, 2, 0, 0, 0, mu}); }

  int dimension() const { return n; }

  /// Exact-with-radicals families; the rest are sampled numerically.
  bool exact() const { return kind == Kind::An || kind == Kind::Dn || kind == Kind::TwoDim; }

  bool is_ade() const {
    return kind == Kind::An || kind == Kind::Dn || kind == Kind::E6 || kind == Kind::E7 || kind == Kind::E8;
  }

  std::string name() const {
    switch (kind) {
      case Kind::An: return "A" + std::to_string(n);
      case Kind::Dn: return "D" + std::to_string(n);
      case Kind::E6: return "E6";
      case Kind::E7: return "E7";
      case Kind::E8: return "E8";
      case Kind::Apq: return "Apq(" + std::to_string(p) + "," + std::to_string(q) + ")";
      case Kind::Dr: return "Dr(" + std::to_string(r) + ")";
      case Kind::TwoDim: return "2D(mu=" + to_string(mu) + ")";
    }
    return "?";
  }

  static FamilySpec checked(FamilySpec s) {
    switch (s.kind) {
      case Kind::An:
        if (s.n < 1) throw std::invalid_argument("A_n needs n >= 1");
        break;
      case Kind::Dn:
        if (s.n < 3) throw std::invalid_argument("D_n needs n >= 3");
        break;
      case Kind::Apq:
        if (s.p < 1 || s.q < 1) throw std::invalid_argument("Apq needs p, q >= 1");
        break;
      case Kind::Dr:
        if (s.r < 1) throw std::invalid_argument("Dr needs r >= 1");
        break;
      case Kind::TwoDim:
        if (sgn(s.mu) == 0) throw std::invalid_argument("2D family needs mu != 0");
        break;
      default: break;
    }
    return s;
  }
};

/// Parses the family names used on the command line: an, dn, e6, e7, e8,
/// apq, dr, 2d.
inline FamilySpec parse_family(const std::string& name, int n, int p, int q, int r, const Rational& mu) {
  if (name == "an") return FamilySpec::an(n);
  if (name == "dn") return FamilySpec::dn(n);
  if (name == "e6") return FamilySpec::e6();
  if (name == "e7") return FamilySpec::e7();
  if (name == "e8") return FamilySpec::e8();
  if (name == "apq") return FamilySpec::apq(p, q);
  if (name == "dr") return FamilySpec::dr(r);
  if (name == "2d") return FamilySpec::two_dim(mu);
  throw std::invalid_argument("unknown family: " + name);
}

}  // namespace frob::fam
