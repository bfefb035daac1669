#include "sigmaperm/errors.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace sigmaperm {

std::size_t order_cap() {
  const char* env = std::getenv("SIGMAPERM_ORDER_CAP");
  if (env == nullptr || *env == '\0') {
    return kDefaultOrderCap;
  }
  std::size_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) {
    return kDefaultOrderCap;
  }
  return value;
}

}  // namespace sigmaperm
