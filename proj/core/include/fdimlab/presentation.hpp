#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fdimlab/element.hpp"

namespace fdimlab {

// Syntax or semantic error in an algebra-description document, with 1-based
// position information.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + msg),
        line(line), col(col) {}
  int line;
  int col;
};

// A bound quiver algebra kQ/I given by generators: the quiver, the ground
// field, and uniform relations whose paths all have length >= 2.
struct PathAlgebraPresentation {
  Quiver quiver;
  Field field = Field::rationals();
  std::vector<AlgebraElement> relations;
  std::string name;

  bool relations_homogeneous() const;
  int max_relation_length() const;
};

// Parses the line-oriented algebra-description format:
//
//   # comment
//   field QQ            (or: field GF(p))
//   vertices v1 v2 ... vn
//   arrow name : src -> tgt
//   relations:
//   expr; expr; ...
//
// An expression is a signed sum of terms; a term is an optional integer
// coefficient and a right-to-left product of arrow names joined by '*'; the
// trivial path at v is written e(v). Non-uniform expressions are split into
// their uniform components, each becoming one relation.
PathAlgebraPresentation parse_algebra_spec(const std::string& text);

// Canonical document form; parse(pretty_print(p)) reproduces p, and
// pretty_print is the identity on its own output.
std::string pretty_print(const PathAlgebraPresentation& p);

// Parses a relation-style expression against an existing presentation
// (used for CLI-provided ideal generators).
AlgebraElement parse_element(const PathAlgebraPresentation& p, const std::string& expr);

}  // namespace fdimlab
