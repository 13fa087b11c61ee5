#pragma once

#include "fdimlab/module.hpp"

namespace fdimlab {

// F = Hom_A(A(1-e), -), realized as the corner (1-e)M with the corner-algebra
// action.
FDModule functor_F(const CornerReduction& cr, const FDModule& m);

// G = A(1-e) (x)_Gamma -, computed as the cokernel of the bilinearity
// relations inside A(1-e) (x)_k X, with A acting on the left factor.
FDModule functor_G(const CornerReduction& cr, const FDModule& x);

// The unit X -> F(G(X)) of the adjunction as an explicit matrix; Lemma-style
// checks invert it. Returns the map together with both modules.
struct UnitOfAdjunction {
  FDModule gx;       // over the big algebra
  FDModule fgx;      // over the corner
  Mat eta;           // fgx.dim x x.dim
  bool natural_iso;  // eta is an invertible intertwiner
};
UnitOfAdjunction unit_of_adjunction(const CornerReduction& cr, const FDModule& x);

}  // namespace fdimlab
