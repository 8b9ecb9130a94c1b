#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using RVec = std::vector<Rat>;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct dimension_error : error {
  using error::error;
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline int sign(const Int& x) { return x.sign(); }
inline int sign(const Rat& x) { return x.sign(); }

inline Int gcd_all(const IVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

inline bool is_primitive(const IVec& v) { return gcd_all(v) == 1; }

inline Int dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw dimension_error("dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const RVec& a, const IVec& b) {
  if (a.size() != b.size()) throw dimension_error("dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

inline Rat dot(const IVec& a, const RVec& b) { return dot(b, a); }

inline IVec add(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw dimension_error("add: size mismatch");
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IVec sub(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw dimension_error("sub: size mismatch");
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IVec neg(const IVec& a) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline bool is_zero(const IVec& a) {
  for (const auto& x : a) if (x != 0) return false;
  return true;
}

/// Floor of an exact rational (toward -infinity).
inline Int rat_floor(const Rat& q) {
  Int n = boost::multiprecision::numerator(q);
  Int d = boost::multiprecision::denominator(q);
  Int quo = n / d;
  if (n % d != 0 && n.sign() < 0) --quo;
  return quo;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

/// Checked narrowing for JSON output; catalog-scale values always fit.
inline std::int64_t to_i64(const Int& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw error("integer too large for 64-bit serialization");
  return static_cast<std::int64_t>(x);
}

inline std::string to_string(const Int& x) { return x.str(); }
inline std::string to_string(const Rat& x) { return x.str(); }

}  // namespace fano
