#include "hfm/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hfm {

int worker_count() {
  if (const char* env = std::getenv("HFM_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace hfm
