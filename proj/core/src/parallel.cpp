#include "srf/parallel.hpp"

namespace srf {

namespace {
std::atomic<std::size_t> g_threads{0};
}

std::size_t thread_count() {
  const std::size_t n = g_threads.load();
  if (n != 0) return n;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void set_thread_count(std::size_t n) { g_threads = n; }

}  // namespace srf
