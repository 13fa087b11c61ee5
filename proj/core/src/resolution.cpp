#include "fdimlab/resolution.hpp"

#include <algorithm>

namespace fdimlab {

std::string PdResult::str() const {
  switch (kind) {
    case Kind::Finite:
      return std::to_string(value);
    case Kind::InfiniteCertified:
      return "infinite (Omega^" + std::to_string(rep_j) + " ~ Omega^" +
             std::to_string(rep_i) + ")";
    default:
      return "unknown at cap " + std::to_string(cap);
  }
}

int default_resolution_cap(const FDAlgebra& a) {
  return 2 * static_cast<int>(a.dim()) + 4;
}

Resolution minimal_resolution(const FDModule& m, int cap,
                              bool detect_periodicity) {
  if (cap < 0) throw domain_error("resolution cap must be nonnegative");
  Resolution r;
  r.module = std::make_shared<FDModule>(m);
  r.pd.cap = cap;

  if (m.is_zero()) {
    r.pd = PdResult::finite(0);
    r.augmentation = Mat(m.algebra()->field(), 0, 0);
    // The zero module gets the empty resolution by convention.
    return r;
  }

  FDModule cur = m;
  Mat prev_syz_incl;  // Omega^step as a subspace of P_{step-1}
  for (int step = 0; step <= cap; ++step) {
    Cover c = projective_cover(cur);
    r.term_mults.push_back(c.p.mults);
    if (step == 0)
      r.augmentation = c.epi;
    else
      r.diffs.push_back(prev_syz_incl * c.epi);
    r.terms.push_back(c.p);
    prev_syz_incl = c.syz_incl;
    FDModule omega = c.syzygy;
    if (omega.is_zero()) {
      r.pd = PdResult::finite(step);
      return r;
    }
    r.syzygies.push_back(omega);
    if (detect_periodicity) {
      int j = static_cast<int>(r.syzygies.size());  // omega = Omega^j
      for (int i = 1; i < j; ++i) {
        const FDModule& earlier = r.syzygies[i - 1];
        if (earlier.dim() != omega.dim()) continue;
        IsoResult iso = is_isomorphic(earlier, omega);
        if (iso.verdict == Tristate::Yes) {
          r.pd.kind = PdResult::Kind::InfiniteCertified;
          r.pd.rep_i = i;
          r.pd.rep_j = j;
          r.truncated = true;
          return r;
        }
      }
    }
    cur = std::move(omega);
  }
  r.truncated = true;
  r.pd.kind = PdResult::Kind::UnknownAtCap;
  return r;
}

PdResult projective_dimension(const FDModule& m, int cap) {
  return minimal_resolution(m, cap).pd;
}

bool is_projective(const FDModule& m) {
  if (m.is_zero()) return true;
  Cover c = projective_cover(m);
  return c.syzygy.is_zero();
}

int ext_dim(const Resolution& r, int simple_ordinal, int degree) {
  if (degree < 0) throw domain_error("ext degree must be nonnegative");
  if (degree >= static_cast<int>(r.term_mults.size())) {
    if (r.pd.is_finite()) return 0;  // resolution ended before this degree
    throw domain_error("resolution truncated before degree " +
                       std::to_string(degree));
  }
  return r.term_mults[degree].at(simple_ordinal);
}

int ext_dim_hom_complex(const Resolution& r, int simple_ordinal, int degree) {
  if (degree < 0) throw domain_error("ext degree must be nonnegative");
  if (degree >= static_cast<int>(r.term_mults.size())) {
    if (r.pd.is_finite()) return 0;
    throw domain_error("resolution truncated before degree " +
                       std::to_string(degree));
  }
  AlgebraPtr a = r.module->algebra();
  FDModule s = simple_module(a, simple_ordinal);
  // Hom(P_i, S): dimensions and differential matrices by composition.
  auto hom_basis = [&](int i) {
    return hom_space(*r.terms[i].mod, s);
  };
  auto dstar = [&](int i) {
    // d_i : P_i -> P_{i-1} induces Hom(P_{i-1}, S) -> Hom(P_i, S).
    std::vector<Mat> from = hom_basis(i - 1);
    std::vector<Mat> to = hom_basis(i);
    const Field& f = a->field();
    SpanBuilder sp(f, s.dim() * r.terms[i].mod->dim());
    auto flat = [&](const Mat& x) {
      Vec v = zero_vector(f, x.rows() * x.cols());
      for (std::size_t p = 0; p < x.rows(); ++p)
        for (std::size_t q = 0; q < x.cols(); ++q) v[p * x.cols() + q] = x.at(p, q);
      return v;
    };
    for (const Mat& t : to) sp.add(flat(t));
    Mat d(f, to.size(), from.size());
    const Mat& di = r.diffs[i - 1];
    for (std::size_t j = 0; j < from.size(); ++j) {
      auto coords = sp.coordinates(flat(from[j] * di));
      if (!coords) throw domain_error("internal: hom complex not closed");
      for (std::size_t t = 0; t < to.size(); ++t) d.at(t, j) = (*coords)[t];
    }
    return d;
  };
  std::size_t dim_here = hom_basis(degree).size();
  std::size_t rank_in = 0, rank_out = 0;
  if (degree >= 1) rank_in = dstar(degree).rank();
  if (degree + 1 < static_cast<int>(r.term_mults.size()))
    rank_out = dstar(degree + 1).rank();
  // dim ker(out) - rank(in); when out is absent the whole space is kernel.
  std::size_t kernel = dim_here - rank_out;
  return static_cast<int>(kernel - rank_in);
}

PdResult global_dimension(AlgebraPtr a, int cap) {
  PdResult best = PdResult::finite(0);
  best.cap = cap;
  bool any_unknown = false;
  for (int v = 0; v < a->idempotent_count(); ++v) {
    PdResult p = projective_dimension(simple_module(a, v), cap);
    if (p.kind == PdResult::Kind::InfiniteCertified) {
      p.cap = cap;
      return p;
    }
    if (p.kind == PdResult::Kind::UnknownAtCap) {
      any_unknown = true;
      continue;
    }
    if (p.value > best.value) best = p;
  }
  if (any_unknown) {
    PdResult u;
    u.kind = PdResult::Kind::UnknownAtCap;
    u.cap = cap;
    return u;
  }
  best.cap = cap;
  return best;
}

}  // namespace fdimlab
