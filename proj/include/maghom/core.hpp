/// Exact arithmetic aliases and small shared utilities.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace maghom {

namespace mp = boost::multiprecision;

// Plain value semantics (no expression templates): results of arithmetic are
// always materialized, which keeps generic code and containers predictable.
using Int = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rat = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

/// Thrown when a mathematical invariant that the library itself guarantees is
/// observed to fail (e.g. a boundary composition that is not zero).
class invariant_error : public std::logic_error {
 public:
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

/// Thrown when a requested computation would materialize more basis paths
/// than the configured cap allows.
class cap_exceeded : public std::runtime_error {
 public:
  cap_exceeded(int degree, std::string length, std::uint64_t count)
      : std::runtime_error("path cap exceeded at degree " + std::to_string(degree) +
                           (length.empty() ? "" : ", length " + length) + " (" +
                           std::to_string(count) + " paths)"),
        degree(degree),
        length(std::move(length)),
        count(count) {}
  int degree;
  std::string length;  // empty when the overflow is degree-wide
  std::uint64_t count;
};

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(num, den);
}

/// Parses "p", "-p" or "p/q" into an exact rational. Rejects anything else,
/// in particular decimal notation: inputs are exact or refused.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  auto check_int = [](const std::string& t) {
    if (t.empty()) throw std::invalid_argument("bad rational literal");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("bad rational literal: '" + t + "'");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        throw std::invalid_argument("bad rational literal: '" + t + "'");
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rat(Int(s));
  }
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  return make_rat(Int(num), Int(den));
}

/// Lowest-terms "p" or "p/q" rendering; the inverse of parse_rat.
inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string int_to_string(const Int& v) { return v.str(); }

}  // namespace maghom
