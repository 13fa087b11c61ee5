#include "fdimlab/modspec.hpp"

#include <algorithm>

namespace fdimlab {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

// "P(v)" -> v; throws on anything else.
std::string inner_name(const std::string& s, char head, const std::string& what) {
  std::string t = strip(s);
  if (t.size() < 4 || t[0] != head || t[1] != '(' || t.back() != ')')
    throw domain_error("bad " + what + " spec: " + s);
  return strip(t.substr(2, t.size() - 3));
}

}  // namespace

NamedModule parse_module_spec(const AlgebraPipeline& p, const std::string& spec0) {
  std::string spec = strip(spec0);
  AlgebraPtr a = p.alg;

  if (spec.rfind("rad", 0) == 0) {
    std::string v = inner_name(spec.substr(3), 'P', "rad P(v)");
    FDModule proj = projective_module(a, p.vertex_ordinal(v));
    return NamedModule{"rad P(" + v + ")", structure_parts(proj).radical, ""};
  }
  if (auto pos = spec.find("/soc"); pos != std::string::npos) {
    std::string v = inner_name(spec.substr(0, pos), 'P', "P(v)/soc");
    FDModule proj = projective_module(a, p.vertex_ordinal(v));
    StructureParts parts = structure_parts(proj);
    return NamedModule{"P(" + v + ")/soc",
                       quotient_module(proj, parts.socle_incl.m), ""};
  }
  if (spec.rfind("coker", 0) == 0) {
    std::string rest = strip(spec.substr(5));
    auto arrow = rest.find("->");
    if (arrow == std::string::npos)
      throw domain_error("bad coker spec (expected coker P(u)->P(v)): " + spec);
    std::string u = inner_name(rest.substr(0, arrow), 'P', "coker source");
    std::string v = inner_name(rest.substr(arrow + 2), 'P', "coker target");
    int uo = p.vertex_ordinal(u), vo = p.vertex_ordinal(v);
    FDModule pu = projective_module(a, uo);
    FDModule pv = projective_module(a, vo);
    std::vector<Mat> h = hom_space(pu, pv);
    if (h.empty())
      throw domain_error("Hom(P(" + u + "), P(" + v + ")) = 0; cokernel is P(" + v + ")");
    Mat generic = h[0];
    for (std::size_t i = 1; i < h.size(); ++i) generic = generic + h[i];
    FDModule coker = quotient_module(pv, generic);
    std::string note;
    if (h.size() > 1) {
      note = "dim Hom = " + std::to_string(h.size()) +
             "; generic element used (sum of the basis)";
      for (std::size_t i = 0; i < h.size(); ++i) {
        FDModule alt = quotient_module(pv, h[i]);
        if (alt.dim_vector() != coker.dim_vector()) {
          note += "; WARNING: basis choice " + std::to_string(i) +
                  " yields a different cokernel (dim " + alt.dims_str() + ")";
        }
      }
    }
    return NamedModule{"coker P(" + u + ")->P(" + v + ")", std::move(coker), note};
  }
  if (!spec.empty() && spec[0] == 'S') {
    std::string v = inner_name(spec, 'S', "S(v)");
    return NamedModule{"S(" + v + ")", simple_module(a, p.vertex_ordinal(v)), ""};
  }
  if (!spec.empty() && spec[0] == 'P') {
    std::string v = inner_name(spec, 'P', "P(v)");
    return NamedModule{"P(" + v + ")", projective_module(a, p.vertex_ordinal(v)), ""};
  }
  throw domain_error("unrecognized module spec: " + spec);
}

}  // namespace fdimlab
