#pragma once

// Verification reports: one record per trial plus a verdict, serialized as
// JSON lines followed by a summary object.

#include <chrono>
#include <climits>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "frob/exact/scalar.hpp"
#include "json.hpp"

namespace frob {

/// Default numeric tolerance: residual below 2^-128 of the largest term.
inline constexpr long kToleranceBits = 128;

struct ZeroTest {
  bool pass = false;
  std::string residual;       // value (exact) or magnitude (numeric)
  long relative_exponent = LONG_MIN;  // log2 |r| - log2 reference (numeric only)
};

/// Zero test of a value: exact scalars must vanish identically; numeric
/// ones must lie below 2^(reference - bits).
template <class T>
ZeroTest zero_test(const T& value, long reference_exponent, long bits = kToleranceBits) {
  ZeroTest z;
  if constexpr (ScalarTraits<T>::exact) {
    z.pass = ScalarTraits<T>::is_zero(value);
    z.residual = ScalarTraits<T>::str(value);
  } else {
    long e = ScalarTraits<T>::exponent(value);
    z.pass = negligible(value, reference_exponent, bits);
    if (e == LONG_MIN) {
      z.residual = "0";
    } else {
      z.relative_exponent = reference_exponent == LONG_MIN ? e : e - reference_exponent;
      z.residual = "2^" + std::to_string(e) + " (relative 2^" + std::to_string(z.relative_exponent) + ")";
    }
  }
  return z;
}

struct TrialResult {
  int index = 0;
  std::uint64_t seed = 0;
  std::string point_digest;
  std::string residual;
  bool pass = false;
  nlohmann::json detail = nlohmann::json::object();

  nlohmann::json to_json() const {
    nlohmann::json j{{"trial", index}, {"seed", seed}, {"point_digest", point_digest}, {"residual", residual}, {"pass", pass}};
    if (!detail.empty()) j["detail"] = detail;
    return j;
  }
};

struct VerificationReport {
  std::string command;
  int n = 0;
  std::string family = "free";
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
  long precision = 0;  // 0 in exact mode
  std::string mode = "exact";
  std::vector<TrialResult> trials;
  bool verdict = false;
  double wall_time = 0;
  nlohmann::json extra = nlohmann::json::object();

  std::string tolerance() const {
    return mode == "exact" ? std::string("exact zero") : "2^-" + std::to_string(kToleranceBits) + " relative to largest term";
  }

  void finish() {
    verdict = !trials.empty();
    for (const auto& t : trials) verdict = verdict && t.pass;
  }

  nlohmann::json summary() const {
    nlohmann::json j{{"command", command}, {"n", n},           {"family", family},
                     {"params", params},   {"seed", seed},     {"precision", precision},
                     {"mode", mode},       {"tolerance", tolerance()},
                     {"trials", static_cast<int>(trials.size())},
                     {"passed", static_cast<int>(std::count_if(trials.begin(), trials.end(), [](const TrialResult& t) { return t.pass; }))},
                     {"verdict", verdict ? "pass" : "fail"}, {"wall_time", wall_time}};
    if (!extra.empty()) j["extra"] = extra;
    return j;
  }

  nlohmann::json to_json() const {
    nlohmann::json j = summary();
    nlohmann::json t = nlohmann::json::array();
    for (const auto& x : trials) t.push_back(x.to_json());
    j["trials"] = t;
    return j;
  }

  /// JSON lines: one per trial, then the summary.
  std::string json_lines() const {
    std::string out;
    for (const auto& t : trials) out += t.to_json().dump() + "\n";
    out += summary().dump() + "\n";
    return out;
  }
};

/// FNV-1a digest of a serialized point.
inline std::string digest(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class Stopwatch {
public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

}  // namespace frob
