#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twonormal/tetra.hpp"

namespace twonormal {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

// One side of a face identification: face f of some tetrahedron is glued to
// face perm(f) of tetrahedron tet, where perm maps the vertex labels of the
// source tetrahedron to those of the target.
struct Gluing {
  int tet;
  Permutation4 perm;
  bool operator==(const Gluing&) const = default;
};

class Triangulation {
 public:
  explicit Triangulation(int tet_count);

  int tet_count() const { return static_cast<int>(glu_.size()); }
  const std::optional<Gluing>& gluing(int tet, int face) const;
  void set_gluing(int tet, int face, std::optional<Gluing> g);

  bool closed() const;

  // Structural checks: gluings are involutive and no face is glued to itself.
  // Throws std::invalid_argument on violation.
  void validate() const;

  std::string serialize() const;

  // Text format, one line per tetrahedron:
  //   tet <i>: <g0> <g1> <g2> <g3>
  // where <gk> is "-" (boundary face) or "<j>:<perm>" with <perm> the image
  // of 0,1,2,3 as a 4-character string.  '#' starts a comment.
  static Triangulation parse(std::string_view text);

 private:
  std::vector<std::array<std::optional<Gluing>, 4>> glu_;
};

// Built-in example inputs, usable as CLI arguments in place of a file path.
extern const char* const kBuiltinSingle;   // one unglued tetrahedron
extern const char* const kBuiltinDouble2;  // two tetrahedra glued along all four faces

const char* builtin_triangulation(std::string_view name);  // nullptr if unknown

}  // namespace twonormal
