#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace twonormal {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt vector_gcd(const std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const BigInt& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

// Divides out the content; the zero vector is left alone.
inline void make_primitive(std::vector<BigInt>& v) {
  BigInt g = vector_gcd(v);
  if (g > 1)
    for (BigInt& x : v) x /= g;
}

// Checked narrowing for export to record fields.
long long to_int64(const BigInt& x);

}  // namespace twonormal
