#include "twonormal/triangulation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace twonormal {

const char* const kBuiltinSingle = "tet 0: - - - -\n";
const char* const kBuiltinDouble2 =
    "tet 0: 1:0123 1:0123 1:0123 1:0123\n"
    "tet 1: 0:0123 0:0123 0:0123 0:0123\n";

const char* builtin_triangulation(std::string_view name) {
  if (name == "single") return kBuiltinSingle;
  if (name == "double2") return kBuiltinDouble2;
  return nullptr;
}

Triangulation::Triangulation(int tet_count) : glu_(tet_count) {
  if (tet_count < 0)
    throw std::invalid_argument("negative tetrahedron count");
}

const std::optional<Gluing>& Triangulation::gluing(int tet, int face) const {
  assert(tet >= 0 && tet < tet_count() && face >= 0 && face < 4);
  return glu_[tet][face];
}

void Triangulation::set_gluing(int tet, int face, std::optional<Gluing> g) {
  assert(tet >= 0 && tet < tet_count() && face >= 0 && face < 4);
  glu_[tet][face] = g;
}

bool Triangulation::closed() const {
  for (int t = 0; t < tet_count(); ++t)
    for (int f = 0; f < 4; ++f)
      if (!glu_[t][f]) return false;
  return true;
}

void Triangulation::validate() const {
  for (int t = 0; t < tet_count(); ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = glu_[t][f];
      if (!g) continue;
      if (g->tet < 0 || g->tet >= tet_count())
        throw std::invalid_argument("tet " + std::to_string(t) + " face " +
                                    std::to_string(f) +
                                    ": target tetrahedron out of range");
      int f2 = (g->perm)(f);
      if (g->tet == t && f2 == f)
        throw std::invalid_argument("tet " + std::to_string(t) + " face " +
                                    std::to_string(f) + ": glued to itself");
      const auto& back = glu_[g->tet][f2];
      if (!back || back->tet != t || !(back->perm == g->perm.inverse()))
        throw std::invalid_argument("tet " + std::to_string(t) + " face " +
                                    std::to_string(f) +
                                    ": gluing is not involutive");
    }
  }
}

std::string Triangulation::serialize() const {
  std::ostringstream out;
  for (int t = 0; t < tet_count(); ++t) {
    out << "tet " << t << ":";
    for (int f = 0; f < 4; ++f) {
      const auto& g = glu_[t][f];
      if (!g)
        out << " -";
      else
        out << ' ' << g->tet << ':' << g->perm.str();
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Triangulation Triangulation::parse(std::string_view text) {
  struct Entry {
    int line;
    std::array<std::optional<Gluing>, 4> faces;
    std::array<int, 4> face_lines;
  };
  std::map<int, Entry> tets;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto toks = split_ws(raw);
    if (toks.empty()) continue;
    if (toks[0] != "tet")
      throw ParseError(lineno, "expected 'tet', got '" + toks[0] + "'");
    if (toks.size() != 6)
      throw ParseError(lineno, "expected 'tet <i>: <g0> <g1> <g2> <g3>'");
    std::string idx = toks[1];
    if (!idx.empty() && idx.back() == ':') idx.pop_back();
    int tet = -1;
    try {
      size_t used = 0;
      tet = std::stoi(idx, &used);
      if (used != idx.size()) throw std::invalid_argument(idx);
    } catch (const std::exception&) {
      throw ParseError(lineno, "bad tetrahedron index '" + toks[1] + "'");
    }
    if (tet < 0) throw ParseError(lineno, "negative tetrahedron index");
    if (tets.count(tet))
      throw ParseError(lineno, "duplicate tetrahedron " + std::to_string(tet));

    Entry e;
    e.line = lineno;
    e.face_lines.fill(lineno);
    for (int f = 0; f < 4; ++f) {
      const std::string& tok = toks[2 + f];
      if (tok == "-") continue;
      auto colon = tok.find(':');
      if (colon == std::string::npos)
        throw ParseError(lineno, "bad gluing '" + tok + "' (want <tet>:<perm>)");
      int target = -1;
      try {
        size_t used = 0;
        target = std::stoi(tok.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad gluing target in '" + tok + "'");
      }
      auto perm = Permutation4::parse(tok.substr(colon + 1));
      if (!perm)
        throw ParseError(lineno, "bad permutation in '" + tok +
                                     "' (want 4 digits 0-3, a bijection)");
      e.faces[f] = Gluing{target, *perm};
    }
    tets.emplace(tet, std::move(e));
  }

  int n = static_cast<int>(tets.size());
  if (n == 0) throw ParseError(lineno, "no tetrahedra");
  for (const auto& [idx, e] : tets)
    if (idx >= n)
      throw ParseError(e.line, "tetrahedron indices must be 0.." +
                                   std::to_string(n - 1) + ", got " +
                                   std::to_string(idx));

  Triangulation tri(n);
  for (const auto& [idx, e] : tets)
    for (int f = 0; f < 4; ++f) {
      if (e.faces[f] && e.faces[f]->tet >= n)
        throw ParseError(e.face_lines[f],
                         "dangling tetrahedron index " +
                             std::to_string(e.faces[f]->tet));
      tri.set_gluing(idx, f, e.faces[f]);
    }

  // Re-check involutivity with line numbers attached.
  for (const auto& [idx, e] : tets)
    for (int f = 0; f < 4; ++f) {
      const auto& g = e.faces[f];
      if (!g) continue;
      int f2 = (g->perm)(f);
      if (g->tet == idx && f2 == f)
        throw ParseError(e.face_lines[f], "tet " + std::to_string(idx) +
                                              " face " + std::to_string(f) +
                                              " glued to itself");
      const auto& back = tri.gluing(g->tet, f2);
      if (!back || back->tet != idx || !(back->perm == g->perm.inverse()))
        throw ParseError(e.face_lines[f],
                         "gluing of tet " + std::to_string(idx) + " face " +
                             std::to_string(f) + " is not involutive");
    }

  return tri;
}

}  // namespace twonormal
