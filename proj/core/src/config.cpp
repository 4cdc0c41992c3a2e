#include "bdecat/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace bdecat {

namespace {
std::atomic<bool> g_parallel{false};
}

int max_points() {
  const char* env = std::getenv("BDECAT_MAX_POINTS");
  if (env == nullptr || *env == '\0') return 12;
  try {
    int v = std::stoi(env);
    return v > 0 ? v : 12;
  } catch (...) {
    return 12;
  }
}

void set_parallel(bool on) { g_parallel = on; }
bool parallel_enabled() { return g_parallel; }

}  // namespace bdecat
