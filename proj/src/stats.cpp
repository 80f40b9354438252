#include "linjac/stats.hpp"

namespace linjac {

namespace {
thread_local OpStats tls_stats;
}

OpStats& stats() noexcept { return tls_stats; }

OpStats take_stats() noexcept {
  OpStats out = tls_stats;
  tls_stats = OpStats{};
  return out;
}

}  // namespace linjac
