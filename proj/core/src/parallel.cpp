#include "hopf/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace hopf {

int worker_count() {
  if (const char* env = std::getenv("HOPF_THREADS")) {
    try {
      const int requested = std::stoi(env);
      if (requested > 0) return requested;
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int count, const std::function<void(int)>& body) {
  if (count <= 0) return;
  const int workers = std::min(worker_count(), count);
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    const int begin = static_cast<int>(static_cast<long long>(count) * t / workers);
    const int end = static_cast<int>(static_cast<long long>(count) * (t + 1) / workers);
    pool.emplace_back([&, begin, end] {
      try {
        for (int i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

double ordered_sum(int count, const std::function<double(int)>& term) {
  std::vector<double> partial(std::max(count, 0), 0.0);
  parallel_for(count, [&](int i) { partial[i] = term(i); });
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

std::vector<double> ordered_sum(int count, int length,
                                const std::function<void(int, double*)>& term) {
  std::vector<double> partial(static_cast<size_t>(std::max(count, 0)) * length, 0.0);
  parallel_for(count, [&](int i) { term(i, partial.data() + static_cast<size_t>(i) * length); });
  std::vector<double> total(length, 0.0);
  for (int i = 0; i < count; ++i)
    for (int c = 0; c < length; ++c) total[c] += partial[static_cast<size_t>(i) * length + c];
  return total;
}

}  // namespace hopf
