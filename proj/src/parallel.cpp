#include "scenebias/parallel.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace scenebias {

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<std::optional<std::string>> parallel_for(std::size_t count, int jobs,
                                                     const std::function<void(std::size_t)>& fn) {
  std::vector<std::optional<std::string>> errors(count);
  if (count == 0) return errors;

  const int workers = std::min<std::size_t>(resolve_jobs(jobs), count);
  auto run_item = [&](std::size_t i) {
    try {
      fn(i);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    } catch (...) {
      errors[i] = "unknown error";
    }
  };

  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) run_item(i);
    return errors;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        run_item(i);
      }
    });
  }
  for (auto& th : pool) th.join();
  return errors;
}

}  // namespace scenebias
