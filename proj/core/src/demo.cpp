#include "fdimlab/demo.hpp"

#include "fdimlab/scalar.hpp"

namespace fdimlab::demo {

std::string c3() {
  return "# three-cycle with one zero relation of length 3\n"
         "field QQ\n"
         "vertices 1 2 3\n"
         "arrow a1 : 1 -> 2\n"
         "arrow a2 : 2 -> 3\n"
         "arrow a3 : 3 -> 1\n"
         "relations:\n"
         "a3*a2*a1\n";
}

std::string d4() {
  return "# four vertices, five arrows, one commutativity and three zero relations\n"
         "field QQ\n"
         "vertices 1 2 3 4\n"
         "arrow a : 1 -> 2\n"
         "arrow b : 2 -> 4\n"
         "arrow g : 1 -> 3\n"
         "arrow d : 3 -> 4\n"
         "arrow e : 4 -> 1\n"
         "relations:\n"
         "b*a - d*g; e*d; g*e; a*e*b\n";
}

std::string a2() {
  return "field QQ\n"
         "vertices 1 2\n"
         "arrow a : 1 -> 2\n";
}

std::string a3() {
  return "field QQ\n"
         "vertices 1 2 3\n"
         "arrow a : 1 -> 2\n"
         "arrow b : 2 -> 3\n";
}

std::string semisimple2() {
  return "field QQ\n"
         "vertices 1 2\n";
}

std::string a4rel() {
  return "field QQ\n"
         "vertices 1 2 3 4\n"
         "arrow a : 1 -> 2\n"
         "arrow b : 2 -> 3\n"
         "arrow c : 3 -> 4\n"
         "relations:\n"
         "c*b\n";
}

std::vector<Fixture> all_fixtures() {
  return {
      {"c3", c3()},       {"d4", d4()},
      {"a2", a2()},       {"a3", a3()},
      {"ss2", semisimple2()}, {"a4rel", a4rel()},
  };
}

std::string fixture(const std::string& key) {
  for (const auto& f : all_fixtures())
    if (f.key == key) return f.doc;
  throw domain_error("unknown fixture: " + key);
}

}  // namespace fdimlab::demo
