#include "wilf/threads.hpp"

#include <cstdlib>
#include <thread>

namespace wilf {

int thread_cap() {
  if (const char* env = std::getenv("WILF_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace wilf
