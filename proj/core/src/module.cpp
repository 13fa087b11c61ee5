#include "fdimlab/module.hpp"

#include <algorithm>
#include <sstream>

namespace fdimlab {

namespace {

Mat image_basis(const Mat& a) {
  return a.select_columns(a.independent_columns());
}

// Block-aligned coordinates of a module: columns of T are bases of the
// idempotent blocks e_0 M, e_1 M, ... in order.
struct BlockForm {
  Mat t;
  Mat tinv;
  std::vector<std::size_t> offset;  // per idempotent ordinal, plus total
};

BlockForm block_form(const FDModule& m) {
  const FDAlgebra& a = *m.algebra();
  const Field& f = a.field();
  BlockForm b;
  Mat t(f, m.dim(), 0);
  b.offset.push_back(0);
  for (int e = 0; e < a.idempotent_count(); ++e) {
    Mat img = image_basis(m.act(a.idempotent_basis_index(e)));
    t = Mat::hstack(t, img);
    b.offset.push_back(t.cols());
  }
  if (t.cols() != m.dim())
    throw domain_error("idempotent blocks do not span the module");
  auto inv = t.inverse();
  if (!inv) throw domain_error("block basis not invertible");
  b.t = std::move(t);
  b.tinv = std::move(*inv);
  return b;
}

Mat slice(const Mat& m, std::size_t r0, std::size_t r1, std::size_t c0,
          std::size_t c1) {
  Mat out(m.field(), r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) out.at(i - r0, j - c0) = m.at(i, j);
  return out;
}

}  // namespace

FDModule::FDModule(AlgebraPtr alg, std::vector<Mat> act, Verify level)
    : alg_(std::move(alg)), act_(std::move(act)) {
  if (act_.size() != alg_->dim())
    throw domain_error("module needs one action matrix per basis element");
  dim_ = act_.empty() ? 0 : act_[0].rows();
  for (const Mat& m : act_)
    if (m.rows() != dim_ || m.cols() != dim_)
      throw domain_error("module action matrices must be square and equal-sized");
  verify_basic();
  if (level == Verify::Full ||
      (level == Verify::Auto && dim_ <= 16 && alg_->dim() <= 24))
    verify_full();
  dim_vector_.resize(alg_->idempotent_count());
  for (int e = 0; e < alg_->idempotent_count(); ++e)
    dim_vector_[e] = act_[alg_->idempotent_basis_index(e)].rank();
}

FDModule FDModule::zero(AlgebraPtr alg) {
  std::vector<Mat> act(alg->dim(), Mat(alg->field(), 0, 0));
  return FDModule(std::move(alg), std::move(act), Verify::None);
}

Mat FDModule::act_of_vec(const Vec& a) const {
  Mat r(alg_->field(), dim_, dim_);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) r = r + act_[i].scaled(a[i]);
  return r;
}

void FDModule::verify_basic() const {
  if (dim_ == 0) return;
  const FDAlgebra& a = *alg_;
  Mat sum(a.field(), dim_, dim_);
  for (int e = 0; e < a.idempotent_count(); ++e) {
    const Mat& pe = act_[a.idempotent_basis_index(e)];
    if (!(pe * pe == pe)) throw domain_error("idempotent action not a projector");
    sum = sum + pe;
    for (int g = 0; g < e; ++g) {
      const Mat& pg = act_[a.idempotent_basis_index(g)];
      if (!(pe * pg).is_zero() || !(pg * pe).is_zero())
        throw domain_error("idempotent actions not orthogonal");
    }
  }
  if (!(sum == Mat::identity(a.field(), dim_)))
    throw domain_error("idempotent actions do not sum to the identity");
}

void FDModule::verify_full() const {
  const FDAlgebra& a = *alg_;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Mat lhs = act_[i] * act_[j];
      Mat rhs(a.field(), dim_, dim_);
      for (const auto& [k, c] : a.product(static_cast<int>(i), static_cast<int>(j)))
        rhs = rhs + act_[k].scaled(c);
      if (!(lhs == rhs))
        throw domain_error("action violates the multiplication table at (" +
                           a.label(static_cast<int>(i)) + ", " +
                           a.label(static_cast<int>(j)) + ")");
    }
}

std::string FDModule::dims_str() const {
  std::ostringstream os;
  os << dim_ << " (";
  for (std::size_t i = 0; i < dim_vector_.size(); ++i)
    os << (i ? "," : "") << dim_vector_[i];
  os << ")";
  return os.str();
}

bool ModuleMap::is_intertwiner() const {
  const FDAlgebra& a = *src->algebra();
  if (tgt->algebra().get() != &a) return false;
  auto check = [&](int i) {
    return m * src->act(i) == tgt->act(i) * m;
  };
  for (int e = 0; e < a.idempotent_count(); ++e)
    if (!check(a.idempotent_basis_index(e))) return false;
  for (int g : a.generators().gens)
    if (!check(g)) return false;
  return true;
}

FDModule simple_module(AlgebraPtr a, int idem_ordinal) {
  if (idem_ordinal < 0 || idem_ordinal >= a->idempotent_count())
    throw domain_error("simple_module: bad idempotent ordinal");
  const Field& f = a->field();
  std::vector<Mat> act(a->dim(), Mat(f, 1, 1));
  act[a->idempotent_basis_index(idem_ordinal)].at(0, 0) = Scalar::one(f);
  return FDModule(a, std::move(act), FDModule::Verify::Basic);
}

FDModule projective_module(AlgebraPtr a, int idem_ordinal) {
  std::vector<int> mults(a->idempotent_count(), 0);
  mults.at(idem_ordinal) = 1;
  return *projective_sum(a, mults).mod;
}

ProjectiveSum projective_sum(AlgebraPtr a, const std::vector<int>& mults) {
  if (static_cast<int>(mults.size()) != a->idempotent_count())
    throw domain_error("projective_sum: multiplicity vector length mismatch");
  const Field& f = a->field();
  ProjectiveSum ps;
  ps.mults = mults;
  ps.generator_coord.resize(a->idempotent_count());
  std::vector<std::vector<std::size_t>> pos_of(a->dim());
  for (int v = 0; v < a->idempotent_count(); ++v) {
    std::vector<int> col_basis;
    for (std::size_t b = 0; b < a->dim(); ++b)
      if (a->src_idem(static_cast<int>(b)) == v) col_basis.push_back(static_cast<int>(b));
    for (int c = 0; c < mults[v]; ++c) {
      for (int b : col_basis) {
        if (b == a->idempotent_basis_index(v))
          ps.generator_coord[v].push_back(ps.coords.size());
        pos_of[b].push_back(ps.coords.size());
        ps.coords.push_back(ProjectiveSum::Coord{v, c, b});
      }
    }
  }
  std::size_t d = ps.coords.size();
  std::vector<Mat> act(a->dim(), Mat(f, d, d));
  for (std::size_t col = 0; col < d; ++col) {
    const auto& coord = ps.coords[col];
    for (std::size_t i = 0; i < a->dim(); ++i) {
      for (const auto& [k, c] : a->product(static_cast<int>(i), coord.alg_basis)) {
        // b_i * (copy-local word) stays in the same copy.
        for (std::size_t row : pos_of[k]) {
          if (ps.coords[row].idem_ordinal == coord.idem_ordinal &&
              ps.coords[row].copy == coord.copy) {
            act[i].at(row, col) = c;
            break;
          }
        }
      }
    }
  }
  ps.mod = std::make_shared<FDModule>(a, std::move(act), FDModule::Verify::Basic);
  return ps;
}

FDModule direct_sum(const std::vector<const FDModule*>& parts) {
  if (parts.empty()) throw domain_error("direct_sum of nothing");
  AlgebraPtr a = parts[0]->algebra();
  const Field& f = a->field();
  std::size_t d = 0;
  for (auto* p : parts) {
    if (p->algebra() != a) throw domain_error("direct_sum across algebras");
    d += p->dim();
  }
  std::vector<Mat> act(a->dim(), Mat(f, d, d));
  for (std::size_t i = 0; i < a->dim(); ++i) {
    std::size_t off = 0;
    for (auto* p : parts) {
      const Mat& m = p->act(static_cast<int>(i));
      for (std::size_t r = 0; r < p->dim(); ++r)
        for (std::size_t c = 0; c < p->dim(); ++c)
          act[i].at(off + r, off + c) = m.at(r, c);
      off += p->dim();
    }
  }
  return FDModule(a, std::move(act), FDModule::Verify::Basic);
}

FDModule submodule(const FDModule& m, const Mat& u, ModuleMap* inclusion) {
  AlgebraPtr a = m.algebra();
  std::vector<Mat> act;
  act.reserve(a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) {
    auto x = u.solve(m.act(static_cast<int>(i)) * u);
    if (!x) throw domain_error("subspace is not action-invariant");
    act.push_back(std::move(*x));
  }
  FDModule sub(a, std::move(act), FDModule::Verify::Basic);
  if (inclusion) {
    inclusion->m = u;
    inclusion->tgt = std::make_shared<FDModule>(m);
    inclusion->src = std::make_shared<FDModule>(sub);
  }
  return sub;
}

FDModule quotient_module(const FDModule& m, const Mat& u, ModuleMap* projection) {
  AlgebraPtr a = m.algebra();
  const Field& f = a->field();
  std::size_t d = m.dim();
  Mat uu = image_basis(u);
  // Complete with standard basis vectors.
  Mat big = Mat::hstack(uu, Mat::identity(f, d));
  auto pivots = big.independent_columns();
  std::vector<std::size_t> compl_idx;
  for (std::size_t p : pivots)
    if (p >= uu.cols()) compl_idx.push_back(p - uu.cols());
  Mat e(f, d, compl_idx.size());
  for (std::size_t j = 0; j < compl_idx.size(); ++j)
    e.at(compl_idx[j], j) = Scalar::one(f);
  Mat full = Mat::hstack(uu, e);
  auto finv = full.inverse();
  if (!finv) throw domain_error("internal: completion not invertible");
  Mat proj = slice(*finv, uu.cols(), d, 0, d);  // quotient coordinates
  std::vector<Mat> act;
  act.reserve(a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i)
    act.push_back(proj * (m.act(static_cast<int>(i)) * e));
  FDModule q(a, std::move(act), FDModule::Verify::Basic);
  if (projection) {
    projection->m = proj;
    projection->src = std::make_shared<FDModule>(m);
    projection->tgt = std::make_shared<FDModule>(q);
  }
  return q;
}

namespace {

Mat radical_span(const FDModule& m) {
  const FDAlgebra& a = *m.algebra();
  SpanBuilder sp(a.field(), m.dim());
  for (int r : a.radical_basis()) {
    const Mat& mr = m.act(r);
    for (std::size_t c = 0; c < mr.cols(); ++c) {
      auto col = mr.column(c);
      if (!vec_is_zero(col)) sp.add(col);
    }
  }
  return sp.basis_matrix();
}

}  // namespace

StructureParts structure_parts(const FDModule& m) {
  const FDAlgebra& a = *m.algebra();
  const Field& f = a.field();
  Mat u = radical_span(m);

  ModuleMap rad_incl, top_proj, soc_incl;
  FDModule rad = submodule(m, u, &rad_incl);
  FDModule top = quotient_module(m, u, &top_proj);

  auto radical = a.radical_basis();
  Mat stacked(f, 0, m.dim());
  for (int r : radical) stacked = Mat::vstack(stacked, m.act(r));
  Mat k = radical.empty() ? Mat::identity(f, m.dim()) : stacked.kernel_basis();
  FDModule soc = submodule(m, k, &soc_incl);

  return StructureParts{std::move(rad), std::move(rad_incl), std::move(top),
                        std::move(top_proj), std::move(soc), std::move(soc_incl)};
}

std::vector<std::size_t> radical_series_dims(const FDModule& m) {
  const FDAlgebra& a = *m.algebra();
  std::vector<std::size_t> dims;
  Mat v = Mat::identity(a.field(), m.dim());
  dims.push_back(m.dim());
  while (dims.back() > 0) {
    SpanBuilder sp(a.field(), m.dim());
    for (int r : a.radical_basis()) {
      Mat rv = m.act(r) * v;
      for (std::size_t c = 0; c < rv.cols(); ++c) {
        auto col = rv.column(c);
        if (!vec_is_zero(col)) sp.add(col);
      }
    }
    v = sp.basis_matrix();
    if (sp.rank() >= dims.back() && sp.rank() > 0)
      throw domain_error("radical not nilpotent on the module");
    dims.push_back(sp.rank());
  }
  return dims;
}

std::vector<std::size_t> socle_series_dims(const FDModule& m) {
  const FDAlgebra& a = *m.algebra();
  const Field& f = a.field();
  // Bases of rad^k A for k = 1, 2, ... as algebra vectors.
  std::vector<std::vector<Vec>> radpow;
  {
    std::vector<Vec> r1;
    for (int r : a.radical_basis()) r1.push_back(a.basis_vec(r));
    radpow.push_back(std::move(r1));
    while (!radpow.back().empty()) {
      SpanBuilder sp(f, a.dim());
      for (int r : a.radical_basis())
        for (const Vec& x : radpow.back()) {
          Vec p = a.mul(a.basis_vec(r), x);
          if (!vec_is_zero(p)) sp.add(p);
        }
      if (sp.rank() == 0) break;
      radpow.push_back(sp.basis());
    }
  }
  std::vector<std::size_t> dims;
  for (const auto& pow : radpow) {
    Mat stacked(f, 0, m.dim());
    for (const Vec& x : pow) stacked = Mat::vstack(stacked, m.act_of_vec(x));
    std::size_t d = pow.empty() ? m.dim() : m.dim() - stacked.rank();
    dims.push_back(d);
    if (d == m.dim()) break;
  }
  if (dims.empty() || dims.back() != m.dim()) dims.push_back(m.dim());
  return dims;
}

int loewy_length(const FDModule& m) {
  auto dims = radical_series_dims(m);
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (dims[k] == 0) return static_cast<int>(k);
  return static_cast<int>(dims.size());
}

Cover projective_cover(const FDModule& m) {
  if (m.is_zero()) throw domain_error("projective cover of the zero module");
  const FDAlgebra& a = *m.algebra();
  const Field& f = a.field();
  Mat rad = radical_span(m);

  std::vector<int> mults(a.idempotent_count(), 0);
  std::vector<std::vector<std::vector<Scalar>>> gens(a.idempotent_count());
  for (int v = 0; v < a.idempotent_count(); ++v) {
    const Mat& pv = m.act(a.idempotent_basis_index(v));
    SpanBuilder sp(f, m.dim());
    Mat rv = pv * rad;
    for (std::size_t c = 0; c < rv.cols(); ++c) {
      auto col = rv.column(c);
      if (!vec_is_zero(col)) sp.add(col);
    }
    Mat bv = image_basis(pv);
    for (std::size_t c = 0; c < bv.cols(); ++c) {
      auto col = bv.column(c);
      if (sp.add(col)) {
        gens[v].push_back(col);
        ++mults[v];
      }
    }
  }

  Cover cov{projective_sum(m.algebra(), mults), Mat(), FDModule::zero(m.algebra()), Mat()};
  const ProjectiveSum& ps = cov.p;
  Mat epi(f, m.dim(), ps.mod->dim());
  for (std::size_t col = 0; col < ps.coords.size(); ++col) {
    const auto& c = ps.coords[col];
    std::vector<Scalar> img = m.act(c.alg_basis).apply(gens[c.idem_ordinal][c.copy]);
    for (std::size_t i = 0; i < m.dim(); ++i) epi.at(i, col) = img[i];
  }
  if (epi.rank() != m.dim())
    throw domain_error("internal: projective cover not surjective");
  Mat k = epi.kernel_basis();
  // Minimality: the kernel misses the top of P, i.e. vanishes on the
  // generator coordinates.
  for (std::size_t j = 0; j < k.cols(); ++j)
    for (int v = 0; v < static_cast<int>(ps.generator_coord.size()); ++v)
      for (std::size_t pos : ps.generator_coord[v])
        if (!k.at(pos, j).is_zero())
          throw domain_error("internal: cover kernel not inside rad P");
  cov.epi = std::move(epi);
  cov.syzygy = submodule(*ps.mod, k);
  cov.syz_incl = std::move(k);
  return cov;
}

std::vector<Mat> hom_space(const FDModule& m, const FDModule& n) {
  const FDAlgebra& a = *m.algebra();
  if (n.algebra().get() != &a)
    throw domain_error("hom_space across different algebras");
  const Field& f = a.field();
  if (m.dim() == 0 || n.dim() == 0) return {};
  BlockForm bm = block_form(m);
  BlockForm bn = block_form(n);
  int nv = a.idempotent_count();

  auto mdim = [&](int v) { return bm.offset[v + 1] - bm.offset[v]; };
  auto ndim = [&](int v) { return bn.offset[v + 1] - bn.offset[v]; };
  std::vector<std::size_t> var_off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) var_off[v + 1] = var_off[v] + ndim(v) * mdim(v);
  std::size_t nvars = var_off[nv];
  if (nvars == 0) return {};

  const auto& gens = a.generators().gens;
  std::size_t nrows = 0;
  std::vector<std::pair<Mat, Mat>> blocks;  // per generator: (A_g, B_g)
  std::vector<std::pair<int, int>> gsrc_tgt;
  for (int g : gens) {
    int s = a.src_idem(g), t = a.tgt_idem(g);
    Mat am = bm.tinv * (m.act(g) * bm.t);
    Mat an = bn.tinv * (n.act(g) * bn.t);
    blocks.push_back({slice(am, bm.offset[t], bm.offset[t + 1], bm.offset[s], bm.offset[s + 1]),
                      slice(an, bn.offset[t], bn.offset[t + 1], bn.offset[s], bn.offset[s + 1])});
    gsrc_tgt.push_back({s, t});
    nrows += ndim(t) * mdim(s);
  }

  Mat sys(f, nrows, nvars);
  std::size_t row = 0;
  for (std::size_t gi = 0; gi < blocks.size(); ++gi) {
    auto [s, t] = gsrc_tgt[gi];
    const Mat& ag = blocks[gi].first;   // mdim(t) x mdim(s)
    const Mat& bg = blocks[gi].second;  // ndim(t) x ndim(s)
    for (std::size_t i = 0; i < ndim(t); ++i)
      for (std::size_t j = 0; j < mdim(s); ++j) {
        // sum_k X_t[i,k] * ag[k,j] - sum_k bg[i,k] * X_s[k,j] = 0
        for (std::size_t k = 0; k < mdim(t); ++k)
          sys.at(row, var_off[t] + i * mdim(t) + k) += ag.at(k, j);
        for (std::size_t k = 0; k < ndim(s); ++k)
          sys.at(row, var_off[s] + k * mdim(s) + j) -= bg.at(i, k);
        ++row;
      }
  }

  Mat ker = sys.kernel_basis();
  std::vector<Mat> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Mat xb(f, n.dim(), m.dim());
    for (int v = 0; v < nv; ++v)
      for (std::size_t i = 0; i < ndim(v); ++i)
        for (std::size_t k = 0; k < mdim(v); ++k)
          xb.at(bn.offset[v] + i, bm.offset[v] + k) =
              ker.at(var_off[v] + i * mdim(v) + k, c);
    out.push_back(bn.t * (xb * bm.tinv));
  }
  return out;
}

std::vector<std::size_t> fingerprint(const FDModule& m) {
  std::vector<std::size_t> fp;
  fp.push_back(m.dim());
  for (auto d : m.dim_vector()) fp.push_back(d);
  fp.push_back(9991);
  for (auto d : radical_series_dims(m)) fp.push_back(d);
  fp.push_back(9992);
  for (auto d : socle_series_dims(m)) fp.push_back(d);
  return fp;
}

IsoResult is_isomorphic(const FDModule& m, const FDModule& n, long budget) {
  if (m.algebra() != n.algebra())
    throw domain_error("is_isomorphic across different algebras");
  IsoResult res;
  if (m.dim() != n.dim() || m.dim_vector() != n.dim_vector()) {
    res.verdict = Tristate::No;
    return res;
  }
  if (m.dim() == 0) {
    res.verdict = Tristate::Yes;
    res.intertwiner = Mat(m.algebra()->field(), 0, 0);
    return res;
  }
  if (fingerprint(m) != fingerprint(n)) {
    res.verdict = Tristate::No;
    return res;
  }
  std::vector<Mat> h = hom_space(m, n);
  if (h.empty()) {
    res.verdict = Tristate::No;
    return res;
  }
  auto try_mat = [&](const Mat& x) -> bool {
    auto inv = x.inverse();
    if (!inv) return false;
    res.verdict = Tristate::Yes;
    res.intertwiner = x;
    return true;
  };
  for (const Mat& x : h)
    if (try_mat(x)) return res;

  const Field& f = m.algebra()->field();
  std::size_t hn = h.size();
  long base = f.is_rational() ? static_cast<long>(m.dim()) + 1
                              : static_cast<long>(f.p);
  // Grid size base^hn, capped by the budget.
  double total = 1;
  bool complete = true;
  for (std::size_t i = 0; i < hn; ++i) {
    total *= static_cast<double>(base);
    if (total > static_cast<double>(budget)) {
      complete = false;
      break;
    }
  }
  std::vector<long> odo(hn, 0);
  long tried = 0;
  for (;;) {
    // Advance odometer (skipping the all-zero combination).
    std::size_t pos = 0;
    while (pos < hn) {
      if (++odo[pos] < base) break;
      odo[pos] = 0;
      ++pos;
    }
    if (pos == hn) break;  // wrapped: grid done
    if (++tried > budget) {
      complete = false;
      break;
    }
    Mat x(f, n.dim(), m.dim());
    for (std::size_t i = 0; i < hn; ++i)
      if (odo[i] != 0) x = x + h[i].scaled(Scalar::from_int(f, odo[i]));
    if (try_mat(x)) return res;
  }
  res.verdict = complete ? Tristate::No : Tristate::Unknown;
  return res;
}

// ---------------------------------------------------------------------------
// Endomorphism algebras, indecomposability, decomposition.

namespace {

Vec flatten(const Mat& m) {
  Vec v = zero_vector(m.field(), m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
  return v;
}

// Unital associative algebra spanned by endomorphism matrices.
struct EndAlg {
  Field f;
  std::vector<Mat> basis;
  SpanBuilder span;
  std::vector<std::vector<Vec>> sc;  // structure constants
  Vec unit;

  explicit EndAlg(const FDModule& m)
      : f(m.algebra()->field()), span(f, m.dim() * m.dim()) {
    basis = hom_space(m, m);
    for (const Mat& b : basis)
      if (!span.add(flatten(b)))
        throw domain_error("internal: hom basis dependent");
    std::size_t n = basis.size();
    sc.assign(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto c = span.coordinates(flatten(basis[i] * basis[j]));
        if (!c) throw domain_error("internal: End not closed under composition");
        sc[i][j] = std::move(*c);
      }
    auto u = span.coordinates(flatten(Mat::identity(f, m.dim())));
    if (!u) throw domain_error("internal: identity not in End");
    unit = std::move(*u);
  }

  std::size_t n() const { return basis.size(); }

  Vec mul(const Vec& a, const Vec& b) const {
    Vec r = zero_vector(f, n());
    for (std::size_t i = 0; i < n(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < n(); ++j) {
        if (b[j].is_zero()) continue;
        Scalar c = a[i] * b[j];
        axpy(r, c, sc[i][j]);
      }
    }
    return r;
  }

  Scalar trace_left(const Vec& z) const {
    Scalar t = Scalar::zero(f);
    for (std::size_t i = 0; i < n(); ++i) {
      Vec zi = mul(z, unit_vector(f, n(), i));
      t += zi[i];
    }
    return t;
  }

  Mat realize(const Vec& z) const {
    Mat r(f, basis[0].rows(), basis[0].cols());
    for (std::size_t i = 0; i < n(); ++i)
      if (!z[i].is_zero()) r = r + basis[i].scaled(z[i]);
    return r;
  }

  bool is_idempotent(const Vec& z) const { return mul(z, z) == z; }
  bool is_trivial_idem(const Vec& z) const {
    return vec_is_zero(z) || z == unit;
  }

  // Radical via the trace form; valid in char 0 or char p > dim.
  Mat radical_basis_mat() const {
    Mat t(f, n(), n());
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = 0; j < n(); ++j) {
        Vec prod = mul(unit_vector(f, n(), i), unit_vector(f, n(), j));
        t.at(j, i) = trace_left(prod);
      }
    return t.kernel_basis();
  }
};

using Poly = std::vector<Scalar>;  // ascending coefficients

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
  poly_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Scalar c = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    poly_trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, const Field& f) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Scalar::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// u*a + v*b = 1 for coprime a, b.
void poly_ext_gcd_coprime(const Poly& a, const Poly& b, const Field& f, Poly& u,
                          Poly& v) {
  Poly r0 = a, r1 = b;
  Poly s0 = {Scalar::one(f)}, s1 = {};
  Poly t0 = {}, t1 = {Scalar::one(f)};
  poly_trim(r0);
  poly_trim(r1);
  while (!r1.empty()) {
    // r0 = q*r1 + r
    Poly q;
    Poly r = r0;
    poly_trim(r);
    if (r.size() >= r1.size()) {
      q.assign(r.size() - r1.size() + 1, Scalar::zero(f));
      while (r.size() >= r1.size() && !r.empty()) {
        Scalar c = r.back() / r1.back();
        std::size_t off = r.size() - r1.size();
        q[off] = c;
        for (std::size_t i = 0; i < r1.size(); ++i) r[off + i] -= c * r1[i];
        poly_trim(r);
      }
    }
    auto comb = [&](const Poly& x0, const Poly& x1) {
      Poly qq = poly_mul(q, x1, f);
      Poly out = x0;
      if (out.size() < qq.size()) out.resize(qq.size(), Scalar::zero(f));
      for (std::size_t i = 0; i < qq.size(); ++i) out[i] -= qq[i];
      poly_trim(out);
      return out;
    };
    Poly s2 = comb(s0, s1), t2 = comb(t0, t1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw domain_error("ext_gcd: inputs not coprime");
  Scalar inv = r0[0].inverse();
  u = s0;
  v = t0;
  for (auto& c : u) c *= inv;
  for (auto& c : v) c *= inv;
}

// Quotient of an EndAlg by a subspace (the radical): multiplication is
// inherited and minimal polynomials are computed in the quotient.
struct QuotAlg {
  const EndAlg& e;
  std::size_t nj;
  SpanBuilder sp;     // radical columns, then kept basis vectors
  std::vector<std::size_t> kept;

  QuotAlg(const EndAlg& e, const Mat& rad) : e(e), nj(rad.cols()), sp(e.f, e.n()) {
    for (std::size_t c = 0; c < rad.cols(); ++c) sp.add(rad.column(c));
    for (std::size_t i = 0; i < e.n(); ++i)
      if (sp.add(unit_vector(e.f, e.n(), i))) kept.push_back(i);
  }

  std::size_t dim() const { return kept.size(); }

  Vec project(const Vec& big) const {
    auto c = sp.coordinates(big);
    if (!c) throw domain_error("internal: quotient projection failed");
    Vec r = zero_vector(e.f, dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = (*c)[nj + i];
    return r;
  }
  Vec lift(const Vec& small) const {
    Vec r = zero_vector(e.f, e.n());
    for (std::size_t i = 0; i < dim(); ++i)
      if (!small[i].is_zero()) r[kept[i]] = small[i];
    return r;
  }
  Vec mul(const Vec& a, const Vec& b) const {
    return project(e.mul(lift(a), lift(b)));
  }
  Vec unit() const { return project(e.unit); }

  Poly min_poly(const Vec& d) const {
    SpanBuilder powers(e.f, dim());
    std::vector<Vec> pows;
    Vec cur = unit();
    for (;;) {
      if (!powers.add(cur)) {
        auto coords = powers.coordinates(cur);
        Poly p;
        for (const auto& c : *coords) p.push_back(-c);
        p.push_back(Scalar::one(e.f));
        return p;
      }
      pows.push_back(cur);
      cur = mul(cur, d);
    }
  }
};

// Linear-factor roots of a monic-ish polynomial over the field: exhaustive
// over small GF(p); rational-root candidates over QQ.
std::vector<Scalar> poly_linear_roots(const Poly& p, const Field& f) {
  std::vector<Scalar> roots;
  auto eval = [&](const Scalar& x) {
    Scalar v = Scalar::zero(f);
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
  };
  if (!f.is_rational()) {
    if (f.p > 4096) return roots;  // documented bound; Unknown upstream
    for (std::uint32_t c = 0; c < f.p; ++c) {
      Scalar x = Scalar::from_int(f, c);
      if (eval(x).is_zero()) roots.push_back(x);
    }
    return roots;
  }
  // Rational roots p/q of the integer-cleared polynomial.
  mpz_class denlcm(1);
  for (const auto& c : p) denlcm = denlcm * c.rational().get_den() /
                                   gcd(denlcm, c.rational().get_den());
  std::vector<mpz_class> ic;
  for (const auto& c : p) {
    mpq_class q = c.rational() * mpq_class(denlcm);
    ic.push_back(q.get_num());
  }
  while (!ic.empty() && ic.back() == 0) ic.pop_back();
  if (ic.size() <= 1) return roots;
  // Strip trailing zero roots.
  std::size_t shift = 0;
  while (shift < ic.size() && ic[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(Scalar::zero(f));
  mpz_class a0 = shift < ic.size() ? ic[shift] : mpz_class(1);
  mpz_class an = ic.back();
  auto divisors = [](mpz_class n) {
    std::vector<mpz_class> ds;
    n = abs(n);
    for (mpz_class d = 1; d * d <= n && ds.size() < 64; ++d)
      if (n % d == 0) {
        ds.push_back(d);
        if (d * d != n) ds.push_back(n / d);
      }
    return ds;
  };
  for (const mpz_class& num : divisors(a0))
    for (const mpz_class& den : divisors(an))
      for (int sign : {1, -1}) {
        mpq_class cand(num * sign, den);
        cand.canonicalize();
        Scalar x = Scalar::from_mpq(f, cand);
        if (eval(x).is_zero()) {
          if (std::find(roots.begin(), roots.end(), x) == roots.end())
            roots.push_back(x);
        }
      }
  return roots;
}

// Searches a nontrivial idempotent in End(M); Yes means none exists
// (indecomposable), No carries a witness.
struct IndecomposableOutcome {
  Tristate verdict = Tristate::Unknown;
  std::optional<Mat> idem;
};

IndecomposableOutcome find_idempotent(const FDModule& m, long budget) {
  IndecomposableOutcome out;
  if (m.dim() == 0) {
    out.verdict = Tristate::No;  // conventional: zero module is not indecomposable
    return out;
  }
  if (m.dim() == 1) {
    out.verdict = Tristate::Yes;
    return out;
  }
  EndAlg e(m);
  if (e.n() == 1) {
    out.verdict = Tristate::Yes;
    return out;
  }
  const Field& f = e.f;
  // Cheap pre-scan of the basis.
  for (std::size_t i = 0; i < e.n(); ++i) {
    Vec z = unit_vector(f, e.n(), i);
    if (e.is_idempotent(z) && !e.is_trivial_idem(z)) {
      out.verdict = Tristate::No;
      out.idem = e.realize(z);
      return out;
    }
  }
  bool trace_ok = f.is_rational() || f.p > e.n();
  if (!trace_ok) {
    // Small prime field: exhaust End(M) when it fits the budget.
    double total = 1;
    for (std::size_t i = 0; i < e.n(); ++i) {
      total *= f.p;
      if (total > static_cast<double>(budget)) {
        out.verdict = Tristate::Unknown;
        return out;
      }
    }
    std::vector<std::uint32_t> odo(e.n(), 0);
    for (;;) {
      std::size_t pos = 0;
      while (pos < e.n()) {
        if (++odo[pos] < f.p) break;
        odo[pos] = 0;
        ++pos;
      }
      if (pos == e.n()) break;
      Vec z = zero_vector(f, e.n());
      for (std::size_t i = 0; i < e.n(); ++i)
        z[i] = Scalar::from_int(f, odo[i]);
      if (e.is_idempotent(z) && !e.is_trivial_idem(z)) {
        out.verdict = Tristate::No;
        out.idem = e.realize(z);
        return out;
      }
    }
    out.verdict = Tristate::Yes;
    return out;
  }

  Mat rad = e.radical_basis_mat();
  QuotAlg d(e, rad);
  if (d.dim() == 1) {
    out.verdict = Tristate::Yes;  // local: End/rad is one-dimensional
    return out;
  }
  // Candidate elements: basis of D and pairwise sums (budget-capped).
  std::vector<Vec> cands;
  for (std::size_t i = 0; i < d.dim(); ++i)
    cands.push_back(unit_vector(f, d.dim(), i));
  for (std::size_t i = 0; i < d.dim() && cands.size() < 64; ++i)
    for (std::size_t j = i + 1; j < d.dim() && cands.size() < 64; ++j) {
      Vec v = unit_vector(f, d.dim(), i);
      v[j] = Scalar::one(f);
      cands.push_back(v);
    }
  for (const Vec& cd : cands) {
    Poly mu = d.min_poly(cd);
    if (mu.size() <= 2) continue;  // scalar element
    for (const Scalar& root : poly_linear_roots(mu, f)) {
      // mu = (x - root)^k * g with g(root) != 0.
      Poly lin = {-root, Scalar::one(f)};
      Poly g = mu;
      Poly pk = {Scalar::one(f)};
      int k = 0;
      for (;;) {
        Poly rem = poly_mod(g, lin);
        if (!rem.empty()) break;
        // divide g by lin
        Poly qout(g.size() - 1, Scalar::zero(f));
        Poly r = g;
        for (std::size_t i = g.size(); i-- > 1;) {
          Scalar c = r[i];
          qout[i - 1] = c;
          r[i] -= c;
          r[i - 1] += c * root;
        }
        g = qout;
        pk = poly_mul(pk, lin, f);
        ++k;
      }
      poly_trim(g);
      if (k == 0 || g.size() <= 1) continue;  // no proper coprime split
      Poly u, v;
      poly_ext_gcd_coprime(pk, g, f, u, v);
      Poly h = poly_mul(v, g, f);  // h = 1 mod (x-c)^k, 0 mod g
      h = poly_mod(h, mu);
      // Evaluate h at cd inside D.
      Vec eps = zero_vector(f, d.dim());
      Vec pw = d.unit();
      for (std::size_t i = 0; i < h.size(); ++i) {
        axpy(eps, h[i], pw);
        pw = d.mul(pw, cd);
      }
      if (!(d.mul(eps, eps) == eps) || vec_is_zero(eps) || eps == d.unit())
        continue;
      // Lift to an exact idempotent of E (rad is nilpotent).
      Vec ee = d.lift(eps);
      for (int it = 0; it < 64 && !(e.mul(ee, ee) == ee); ++it) {
        Vec sq = e.mul(ee, ee);
        Vec cube = e.mul(sq, ee);
        Vec next = zero_vector(f, e.n());
        axpy(next, Scalar::from_int(f, 3), sq);
        axpy(next, Scalar::from_int(f, -2), cube);
        ee = std::move(next);
      }
      if (!(e.mul(ee, ee) == ee)) continue;
      if (e.is_trivial_idem(ee)) continue;
      out.verdict = Tristate::No;
      out.idem = e.realize(ee);
      return out;
    }
  }
  out.verdict = Tristate::Unknown;
  return out;
}

}  // namespace

Tristate is_indecomposable(const FDModule& m, long budget) {
  return find_idempotent(m, budget).verdict;
}

Decomposition decompose(const FDModule& m, long budget) {
  Decomposition out;
  std::vector<FDModule> stack{m};
  while (!stack.empty()) {
    FDModule x = std::move(stack.back());
    stack.pop_back();
    if (x.dim() == 0) continue;
    IndecomposableOutcome o = find_idempotent(x, budget);
    if (o.verdict == Tristate::Yes) {
      out.parts.push_back(std::move(x));
    } else if (o.verdict == Tristate::No && o.idem) {
      const Mat& eps = *o.idem;
      Mat img = image_basis(eps);
      Mat ker = eps.kernel_basis();
      stack.push_back(submodule(x, img));
      stack.push_back(submodule(x, ker));
    } else {
      out.parts.push_back(std::move(x));
      out.complete = false;
    }
  }
  std::stable_sort(out.parts.begin(), out.parts.end(),
                   [](const FDModule& a, const FDModule& b) {
                     return fingerprint(a) < fingerprint(b);
                   });
  return out;
}

FDModule random_cokernel_module(AlgebraPtr a, std::mt19937_64& rng,
                                int max_copies, int coeff_bound) {
  const Field& f = a->field();
  int nv = a->idempotent_count();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<int> m0(nv), m1(nv);
    auto draw = [&](int lo, int hi) {
      return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    };
    int total0 = 0;
    for (int v = 0; v < nv; ++v) {
      m0[v] = draw(0, max_copies);
      total0 += m0[v];
      m1[v] = draw(0, max_copies);
    }
    if (total0 == 0) continue;
    ProjectiveSum p0 = projective_sum(a, m0);
    ProjectiveSum p1 = projective_sum(a, m1);
    // Random elements of e_v A e_w per copy pair.
    std::vector<std::vector<Vec>> x;  // [copy1][copy0] as flattened copies
    struct CopyRef { int v; int c; };
    std::vector<CopyRef> copies0, copies1;
    for (int v = 0; v < nv; ++v)
      for (int c = 0; c < m0[v]; ++c) copies0.push_back({v, c});
    for (int v = 0; v < nv; ++v)
      for (int c = 0; c < m1[v]; ++c) copies1.push_back({v, c});
    x.assign(copies1.size(), std::vector<Vec>(copies0.size()));
    for (std::size_t i = 0; i < copies1.size(); ++i)
      for (std::size_t j = 0; j < copies0.size(); ++j) {
        Vec e = zero_vector(f, a->dim());
        for (std::size_t b = 0; b < a->dim(); ++b)
          if (a->tgt_idem(static_cast<int>(b)) == copies1[i].v &&
              a->src_idem(static_cast<int>(b)) == copies0[j].v)
            e[b] = Scalar::from_int(f, draw(-coeff_bound, coeff_bound));
        x[i][j] = std::move(e);
      }
    // Columns of the induced map P1 -> P0.
    SpanBuilder img(f, p0.mod->dim());
    for (std::size_t col = 0; col < p1.coords.size(); ++col) {
      const auto& c1 = p1.coords[col];
      std::size_t i1 = 0;
      for (std::size_t i = 0; i < copies1.size(); ++i)
        if (copies1[i].v == c1.idem_ordinal && copies1[i].c == c1.copy) i1 = i;
      Vec colv = zero_vector(f, p0.mod->dim());
      for (std::size_t j = 0; j < copies0.size(); ++j) {
        Vec prod = a->mul(a->basis_vec(c1.alg_basis), x[i1][j]);
        // prod lies in A e_{w}; place in copy j of P0.
        for (std::size_t pos = 0; pos < p0.coords.size(); ++pos) {
          const auto& c0 = p0.coords[pos];
          if (c0.idem_ordinal == copies0[j].v && c0.copy == copies0[j].c)
            colv[pos] += prod[c0.alg_basis];
        }
      }
      if (!vec_is_zero(colv)) img.add(colv);
    }
    FDModule coker = quotient_module(*p0.mod, img.basis_matrix());
    if (coker.dim() > 0) return coker;
  }
  throw domain_error("random_cokernel_module: could not draw a nonzero module");
}

FDModule subspace_as_quotient_module(const QuotientResult& qr, const Mat& carrier) {
  const FDAlgebra& big = *qr.big;
  // The ideal must kill the carrier for the quotient action to be defined.
  for (std::size_t c = 0; c < qr.ideal.carrier.cols(); ++c) {
    Vec j = qr.ideal.carrier.column(c);
    for (std::size_t k = 0; k < carrier.cols(); ++k)
      if (!vec_is_zero(big.mul(j, carrier.column(k))))
        throw domain_error("ideal does not annihilate the carrier");
  }
  std::vector<Mat> act;
  act.reserve(qr.kept.size());
  for (int kb : qr.kept) {
    Mat lk = big.left_mul_matrix(kb);
    auto x = carrier.solve(lk * carrier);
    if (!x) throw domain_error("carrier not invariant under the algebra");
    act.push_back(std::move(*x));
  }
  return FDModule(qr.quotient, std::move(act), FDModule::Verify::Basic);
}

FDModule as_quotient_module(const QuotientResult& qr, const FDModule& m) {
  if (m.algebra() != qr.big)
    throw domain_error("as_quotient_module: module not over the big algebra");
  for (std::size_t c = 0; c < qr.ideal.carrier.cols(); ++c)
    if (!m.act_of_vec(qr.ideal.carrier.column(c)).is_zero())
      throw domain_error("module not killed by the ideal");
  std::vector<Mat> act;
  act.reserve(qr.kept.size());
  for (int kb : qr.kept) act.push_back(m.act(kb));
  return FDModule(qr.quotient, std::move(act), FDModule::Verify::Basic);
}

}  // namespace fdimlab
