#pragma once

// Brute-force oracles, deliberately independent of the Groebner engine: they
// enumerate raw quiver walks and row-reduce spanning sets of the ideal. Used
// to cross-check normal-basis sizes, ideal membership, and reductions.

#include "fdimlab/presentation.hpp"
#include "fdimlab/linalg.hpp"

#include <map>
#include <vector>

namespace fdimlab::oracle {

// All paths of exactly length len (written words), in structural order.
std::vector<Path> paths_of_length(const Quiver& q, int len);

// Dimension of (kQ/I) in each path-length degree 0..maxlen, by row reduction
// of the spanning set { p * r * q } of I. Requires length-homogeneous
// relations (every fixture's are).
std::vector<int> quotient_dims_by_length(const PathAlgebraPresentation& pres,
                                         int maxlen);

// Membership of a length-homogeneous element in I, decided degreewise by row
// reduction at the element's degree.
bool in_ideal_homogeneous(const PathAlgebraPresentation& pres,
                          const AlgebraElement& x);

// Monomial-ideal normal-word count: walks avoiding every forbidden subword.
int count_subword_free_walks(const Quiver& q,
                             const std::vector<std::vector<int>>& forbidden,
                             int maxlen);

}  // namespace fdimlab::oracle
