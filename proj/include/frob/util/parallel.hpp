#pragma once

// Fan-out of independent trials over a fixed worker count; results are
// returned in trial order regardless of completion order.

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "frob/exact/real.hpp"

namespace frob {

inline constexpr const char* kWorkersEnv = "FROB_WORKERS";

/// Worker count from FROB_WORKERS; defaults to 1.
inline int worker_count() {
  const char* v = std::getenv(kWorkersEnv);
  if (!v || !*v) return 1;
  int w = std::atoi(v);
  if (w <= 0) w = static_cast<int>(std::thread::hardware_concurrency());
  return w <= 0 ? 1 : w;
}

template <class R>
std::vector<R> parallel_map(int count, const std::function<R(int)>& fn, int workers = worker_count()) {
  std::vector<R> out(static_cast<std::size_t>(count));
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    return out;
  }
  mpfr_prec_t bits = default_precision_bits;
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex m;
  std::vector<std::thread> pool;
  for (int w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      PrecisionScope scope(bits);
      for (int i; (i = next++) < count;) {
        try {
          out[static_cast<std::size_t>(i)] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(m);
          if (!err) err = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace frob
