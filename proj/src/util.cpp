#include "superschur/util.hpp"

#include <atomic>
#include <exception>
#include <mutex>

namespace superschur {

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  unsigned max_threads) {
  if (count == 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  unsigned workers = max_threads ? max_threads : (hw ? hw : 1);
  workers = unsigned(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(err_mu);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace superschur
