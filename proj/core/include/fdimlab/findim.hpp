#pragma once

#include <cstdint>

#include "fdimlab/resolution.hpp"

namespace fdimlab {

// Certified lower bound for the finitistic dimension, with a re-checkable
// witness. exact is set only when a finite global dimension pins the value.
struct FindimEstimate {
  int value = 0;
  bool exhaustive = false;
  bool exact = false;
  int dim_cap = 0;
  Field field = Field::rationals();
  std::string witness;
  PdResult witness_pd;
  long candidates = 0;
  long finite_count = 0;
  long infinite_count = 0;
  long unknown_count = 0;
  std::string note;
};

enum class FindimMode { Exhaustive, Curated, Sampled };

struct FindimOptions {
  int dim_cap = 4;
  std::uint64_t seed = 1;
  int samples = 32;
  long budget = 1L << 22;  // enumeration size guard
  int resolution_cap = -1; // -1: default for the algebra
  std::vector<std::pair<std::string, FDModule>> curated;
};

// Bounded findim search. Exhaustive mode enumerates every module structure
// of total dimension <= dim_cap over GF(p) (generator matrices blockwise,
// the first non-loop generator reduced to rank normal form); curated mode
// evaluates the provided modules; sampled mode draws random cokernels of
// maps between projectives. The estimate never decreases in dim_cap.
FindimEstimate findim_bounded(AlgebraPtr a, FindimMode mode,
                              const FindimOptions& opts);

// Builds the module given by blockwise generator matrices (entries row-major
// per generator, sizes dim_tgt x dim_src); nullopt when the assignment does
// not satisfy the multiplication table.
std::optional<FDModule> module_from_generator_matrices(
    AlgebraPtr a, const std::vector<int>& dims,
    const std::vector<std::vector<std::uint32_t>>& gen_entries);

// All isomorphism classes of indecomposable modules of total dimension
// <= dim_cap over a GF(p) algebra, with projective dimensions. Desk-scale
// only (every candidate is decomposed and deduplicated exactly).
struct IndecClass {
  FDModule rep;
  PdResult pd;
  std::vector<std::size_t> dims;  // dimension vector
};
std::vector<IndecClass> indecomposable_classes(AlgebraPtr a, int dim_cap,
                                               long budget = 1L << 22);

}  // namespace fdimlab
