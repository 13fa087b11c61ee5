#include "fdimlab/functors.hpp"

namespace fdimlab {

namespace {

Mat corner_block_basis(const CornerReduction& cr, const FDModule& m) {
  const FDAlgebra& big = *cr.big;
  Mat u(big.field(), m.dim(), 0);
  for (int v : cr.kept_idems) {
    const Mat& pv = m.act(big.idempotent_basis_index(v));
    u = Mat::hstack(u, pv.select_columns(pv.independent_columns()));
  }
  return u;
}

FDModule functor_F_with_basis(const CornerReduction& cr, const FDModule& m,
                              Mat* basis_out) {
  if (m.algebra() != cr.big)
    throw domain_error("functor_F: module not over the big algebra");
  const FDAlgebra& corner = *cr.corner;
  Mat u = corner_block_basis(cr, m);
  std::vector<Mat> act;
  act.reserve(corner.dim());
  for (std::size_t g = 0; g < corner.dim(); ++g) {
    auto x = u.solve(m.act(cr.embed[g]) * u);
    if (!x) throw domain_error("internal: corner subspace not invariant");
    act.push_back(std::move(*x));
  }
  if (basis_out) *basis_out = u;
  return FDModule(cr.corner, std::move(act), FDModule::Verify::Basic);
}

struct TensorData {
  std::vector<int> w;            // big basis indices with source in the corner
  std::vector<int> pos_of_big;   // big index -> position in w (or -1)
  FDModule t;                    // A-module structure on A(1-e) (x)_k X
  Mat relations;                 // bilinearity relations inside t
};

TensorData tensor_space(const CornerReduction& cr, const FDModule& x) {
  if (x.algebra() != cr.corner)
    throw domain_error("functor_G: module not over the corner algebra");
  const FDAlgebra& big = *cr.big;
  const Field& f = big.field();
  std::vector<int> w;
  std::vector<int> pos_of_big(big.dim(), -1);
  auto kept = [&](int ordinal) {
    return std::find(cr.kept_idems.begin(), cr.kept_idems.end(), ordinal) !=
           cr.kept_idems.end();
  };
  for (std::size_t b = 0; b < big.dim(); ++b)
    if (kept(big.src_idem(static_cast<int>(b)))) {
      pos_of_big[b] = static_cast<int>(w.size());
      w.push_back(static_cast<int>(b));
    }
  std::size_t dx = x.dim();
  std::size_t dim_t = w.size() * dx;

  std::vector<Mat> act(big.dim(), Mat(f, dim_t, dim_t));
  for (std::size_t i = 0; i < big.dim(); ++i)
    for (std::size_t wi = 0; wi < w.size(); ++wi)
      for (const auto& [k, c] : big.product(static_cast<int>(i), w[wi])) {
        int kp = pos_of_big[k];
        if (kp < 0)
          throw domain_error("internal: left action escaped A(1-e)");
        for (std::size_t j = 0; j < dx; ++j)
          act[i].at(kp * dx + j, wi * dx + j) += c;
      }
  FDModule t(cr.big, std::move(act), FDModule::Verify::Basic);

  SpanBuilder rel(f, dim_t);
  for (std::size_t wi = 0; wi < w.size(); ++wi) {
    for (std::size_t g = 0; g < cr.corner->dim(); ++g) {
      const Mat& xg = x.act(static_cast<int>(g));
      for (std::size_t kk = 0; kk < dx; ++kk) {
        Vec r = zero_vector(f, dim_t);
        for (const auto& [k, c] : big.product(w[wi], cr.embed[g])) {
          int kp = pos_of_big[k];
          if (kp < 0) throw domain_error("internal: w*gamma escaped A(1-e)");
          r[kp * dx + kk] += c;
        }
        for (std::size_t j = 0; j < dx; ++j) r[wi * dx + j] -= xg.at(j, kk);
        if (!vec_is_zero(r)) rel.add(r);
      }
    }
  }
  return TensorData{std::move(w), std::move(pos_of_big), std::move(t),
                    rel.basis_matrix()};
}

}  // namespace

FDModule functor_F(const CornerReduction& cr, const FDModule& m) {
  return functor_F_with_basis(cr, m, nullptr);
}

FDModule functor_G(const CornerReduction& cr, const FDModule& x) {
  TensorData td = tensor_space(cr, x);
  return quotient_module(td.t, td.relations);
}

UnitOfAdjunction unit_of_adjunction(const CornerReduction& cr, const FDModule& x) {
  const FDAlgebra& big = *cr.big;
  const Field& f = big.field();
  TensorData td = tensor_space(cr, x);
  ModuleMap proj;
  FDModule gx = quotient_module(td.t, td.relations, &proj);

  std::size_t dx = x.dim();
  // eta(x) = sum over kept v of [e_v (x) e_v x].
  Mat eta_t(f, td.t.dim(), dx);
  for (std::size_t ci = 0; ci < cr.kept_idems.size(); ++ci) {
    int v = cr.kept_idems[ci];
    int big_e = big.idempotent_basis_index(v);
    int wp = td.pos_of_big[big_e];
    const Mat& xe = x.act(cr.corner->idempotent_basis_index(static_cast<int>(ci)));
    for (std::size_t j = 0; j < dx; ++j)
      for (std::size_t k = 0; k < dx; ++k)
        eta_t.at(wp * dx + j, k) += xe.at(j, k);
  }

  Mat u;
  FDModule fgx = functor_F_with_basis(cr, gx, &u);
  Mat eta_gx = proj.m * eta_t;
  auto eta = u.solve(eta_gx);
  if (!eta) throw domain_error("internal: unit image misses the corner");

  UnitOfAdjunction out{std::move(gx), std::move(fgx), std::move(*eta), false};
  // eta must intertwine the corner action and be invertible.
  bool ok = out.eta.rows() == out.eta.cols();
  if (ok) {
    for (std::size_t g = 0; g < cr.corner->dim() && ok; ++g)
      ok = (out.eta * x.act(static_cast<int>(g)) ==
            out.fgx.act(static_cast<int>(g)) * out.eta);
    ok = ok && out.eta.inverse().has_value();
  }
  out.natural_iso = ok;
  return out;
}

}  // namespace fdimlab
