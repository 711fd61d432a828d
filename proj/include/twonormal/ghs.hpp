#pragma once

#include <set>
#include <string>
#include <vector>

namespace twonormal {

// A surface recorded by the Euler characteristics of its components.
using SurfaceComplexity = std::multiset<long long>;

// Sum of (2 - chi)^2 over the components; zero exactly for sphere unions.
long long complexity_measure(const SurfaceComplexity& s);

// Compress a component of Euler characteristic chi along a disk whose
// boundary does not separate the component: chi rises by two.
SurfaceComplexity compress_nonseparating(SurfaceComplexity s, long long chi);

// Compress along a separating disk boundary: the component splits into
// parts with chi1 + chi2 = chi + 2, neither part a sphere.
SurfaceComplexity compress_separating(SurfaceComplexity s, long long chi,
                                      long long chi1, long long chi2);

// A generalized splitting recorded symbolically: one complexity per
// thick level, in sweep order.
struct SymbolicGHS {
  std::vector<SurfaceComplexity> levels;
};

// Width order: per-level measures sorted non-increasing, compared
// lexicographically; a strict prefix precedes any extension.
// Returns -1, 0 or 1.
int compare_ghs(const SymbolicGHS& a, const SymbolicGHS& b);

// Text form: components joined by ',', levels by ';'. "-2;0,0" is a
// genus-two level followed by a level of two tori.
std::string format_complexity(const SurfaceComplexity& s);
std::string format_ghs(const SymbolicGHS& g);
SurfaceComplexity parse_complexity(const std::string& text);
SymbolicGHS parse_ghs(const std::string& text);

}  // namespace twonormal
