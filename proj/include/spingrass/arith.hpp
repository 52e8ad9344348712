#pragma once

// Exact integer and rational helpers shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spingrass {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Raised when an operation is called outside its documented domain.
class precondition_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two independent computations of the same quantity disagree.
class consistency_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw precondition_error(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw consistency_error(what);
}

/// C(n, m), zero whenever m < 0, n < 0 or m > n.
inline BigInt binomial(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0 || m > n) return 0;
  if (m > n - m) m = n - m;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= m; ++i) {
    r *= n - m + i;
    r /= i;
  }
  return r;
}

inline BigInt factorial(std::int64_t n) {
  if (n < 0) throw precondition_error("factorial of a negative number");
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt pow2(std::int64_t e) {
  if (e < 0) throw precondition_error("negative power of two");
  BigInt r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

inline BigInt ipow(const BigInt& base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

/// Converts an exactly integral rational; throws otherwise.
inline BigInt to_integer(const BigRational& q, const std::string& context) {
  if (denominator(q) != 1) {
    throw consistency_error(context + ": non-integral value " + q.str());
  }
  return numerator(q);
}

/// "p/q" or "p" when the denominator is one.
inline std::string to_string(const BigRational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const BigInt& n) { return n.str(); }

/// Parses "p/q", "p" or "-p/q".
inline BigRational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw precondition_error("zero denominator in '" + text + "'");
    return BigRational(num, den);
  } catch (const std::runtime_error&) {
    throw precondition_error("not a rational number: '" + text + "'");
  }
}

}  // namespace spingrass
