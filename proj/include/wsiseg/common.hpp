#pragma once

#include <opencv2/core.hpp>

#include <cstdint>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <string>

namespace wsiseg {

namespace fs = std::filesystem;

/// Error type thrown for all contract violations in this library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline void fmt_parts(std::ostringstream&) {}
template <class T, class... Rest>
void fmt_parts(std::ostringstream& os, const T& v, const Rest&... rest) {
  os << v;
  fmt_parts(os, rest...);
}
}  // namespace detail

template <class... Parts>
[[noreturn]] void fail(const Parts&... parts) {
  std::ostringstream os;
  detail::fmt_parts(os, parts...);
  throw error(os.str());
}

template <class... Parts>
void require(bool cond, const Parts&... parts) {
  if (!cond) fail(parts...);
}

/// Rectangular window on one pyramid level, pixel units of that level.
struct Region {
  int level = 0;
  int x = 0, y = 0;
  int w = 0, h = 0;

  cv::Rect rect() const { return {x, y, w, h}; }
  bool operator==(const Region&) const = default;
};

inline Region make_region(int level, cv::Rect r) { return {level, r.x, r.y, r.width, r.height}; }

/// FNV-1a, used to fingerprint checkpoint headers.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace wsiseg
