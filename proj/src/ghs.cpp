#include "twonormal/ghs.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace twonormal {

long long complexity_measure(const SurfaceComplexity& s) {
  long long total = 0;
  for (long long chi : s) total += (2 - chi) * (2 - chi);
  return total;
}

namespace {

void check_compressible(const SurfaceComplexity& s, long long chi) {
  if (!s.count(chi))
    throw std::invalid_argument("no component with that Euler characteristic");
  if (chi == 2) throw std::invalid_argument("sphere has no compression");
  if (chi > 2)
    throw std::invalid_argument("no surface has Euler characteristic above 2");
  if (chi > 0)
    throw std::invalid_argument(
        "component with positive Euler characteristic admits no essential "
        "compression");
}

}  // namespace

SurfaceComplexity compress_nonseparating(SurfaceComplexity s, long long chi) {
  check_compressible(s, chi);
  s.erase(s.find(chi));
  s.insert(chi + 2);
  // Drop in measure is (2-chi)^2 - chi^2 = 4 - 4 chi, at least 4 here.
  assert(chi <= 0);
  return s;
}

SurfaceComplexity compress_separating(SurfaceComplexity s, long long chi,
                                      long long chi1, long long chi2) {
  check_compressible(s, chi);
  if (chi1 + chi2 != chi + 2)
    throw std::invalid_argument(
        "split parts must have Euler characteristics summing to chi + 2");
  if (chi1 > 1 || chi2 > 1)
    throw std::invalid_argument(
        "splitting off a sphere does not reduce complexity");
  s.erase(s.find(chi));
  s.insert(chi1);
  s.insert(chi2);
  // With a = 2-chi1 >= 1 and b = 2-chi2 >= 1 the measure drops by 2ab >= 2.
  return s;
}

int compare_ghs(const SymbolicGHS& a, const SymbolicGHS& b) {
  auto widths = [](const SymbolicGHS& g) {
    std::vector<long long> w;
    w.reserve(g.levels.size());
    for (const SurfaceComplexity& s : g.levels)
      w.push_back(complexity_measure(s));
    std::sort(w.begin(), w.end(), std::greater<>());
    return w;
  };
  std::vector<long long> wa = widths(a);
  std::vector<long long> wb = widths(b);
  if (wa < wb) return -1;
  if (wb < wa) return 1;
  return 0;
}

std::string format_complexity(const SurfaceComplexity& s) {
  std::string out;
  for (long long chi : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(chi);
  }
  return out;
}

std::string format_ghs(const SymbolicGHS& g) {
  std::string out;
  for (const SurfaceComplexity& s : g.levels) {
    if (!out.empty()) out += ';';
    out += format_complexity(s);
  }
  return out;
}

namespace {

long long parse_int(const std::string& tok) {
  size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad Euler characteristic '" + tok + "'");
  }
  while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used])))
    ++used;
  if (used != tok.size())
    throw std::invalid_argument("bad Euler characteristic '" + tok + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

SurfaceComplexity parse_complexity(const std::string& text) {
  SurfaceComplexity s;
  for (const std::string& tok : split(text, ','))
    s.insert(parse_int(tok));
  return s;
}

SymbolicGHS parse_ghs(const std::string& text) {
  SymbolicGHS g;
  for (const std::string& level : split(text, ';'))
    g.levels.push_back(parse_complexity(level));
  return g;
}

}  // namespace twonormal
