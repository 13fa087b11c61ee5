#pragma once

#include <string>
#include <vector>

namespace fdimlab::demo {

// Built-in algebra-description documents used by the demos, the regression
// suites, and the CLI examples. All parse through the standard grammar.

// Three-cycle 1 -> 2 -> 3 -> 1 with the single zero relation a3*a2*a1.
std::string c3();
// The five-arrow quiver on vertices 1..4 with relations
// b*a - d*g; e*d; g*e; a*e*b.
std::string d4();
// Hereditary A2: 1 -> 2.
std::string a2();
// Hereditary A3: 1 -> 2 -> 3.
std::string a3();
// Semisimple: two vertices, no arrows.
std::string semisimple2();
// A4 with one zero relation c*b; the relations avoid both the arrow a and
// the vertex 1.
std::string a4rel();

struct Fixture {
  std::string key;
  std::string doc;
};
std::vector<Fixture> all_fixtures();
std::string fixture(const std::string& key);  // throws on unknown key

}  // namespace fdimlab::demo
