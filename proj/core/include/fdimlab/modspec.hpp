#pragma once

#include "fdimlab/checks.hpp"

namespace fdimlab {

// Module-spec mini-language:
//   S(v)                 simple at v
//   P(v)                 indecomposable projective at v
//   rad P(v)             its radical
//   P(v)/soc             quotient by the socle
//   coker P(u)->P(v)     cokernel of the generic map P(u) -> P(v)
// The generic map is the sum of the hom-space basis (right multiplications
// by the normal words from v to u); when dim Hom > 1 all basis choices are
// compared and a discrepancy in cokernel dimensions is reported in note.
struct NamedModule {
  std::string name;
  FDModule mod;
  std::string note;
};
NamedModule parse_module_spec(const AlgebraPipeline& p, const std::string& spec);

}  // namespace fdimlab
