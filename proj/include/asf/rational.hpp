#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace asf {

/// Arbitrary-precision integers and rationals. All algebra in this library is
/// exact; fixed-width arithmetic would overflow through the 1/k! and 1/alpha(h)
/// divisions that the solvers perform.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline void internal_check(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error(msg);
}

/// Canonical reduced string: "p" when the denominator is 1, otherwise "p/q"
/// with q > 0 and gcd(p, q) = 1.
inline std::string rat_str(const Rat& r) { return r.str(); }

/// Parses "p" or "p/q". Signs may appear on either part; the result is
/// canonicalized. Throws std::invalid_argument on malformed input.
inline Rat rat_parse(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num) / Rat(den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: \"" + s + "\"");
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: \"" + s + "\"");
  }
}

}  // namespace asf
