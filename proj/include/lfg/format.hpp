#ifndef LFG_FORMAT_HPP
#define LFG_FORMAT_HPP

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace lfg {

/// Shortest "%.12g" rendering: 12 significant digits.
inline std::string sig12(double x) {
  if (x == 0) x = 0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// x rounded to 12 significant digits, for JSON emitters that print the
/// shortest round-tripping form of a double.
inline double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(sig12(x).c_str(), nullptr);
}

}  // namespace lfg

#endif
