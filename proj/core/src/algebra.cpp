#include "fdimlab/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace fdimlab {

FDAlgebra::FDAlgebra(Data d) : d_(std::move(d)) {
  if (d_.table.size() != dim() * dim())
    throw domain_error("algebra table size mismatch");
  if (d_.src_idem.size() != dim() || d_.tgt_idem.size() != dim())
    throw domain_error("idempotent block data size mismatch");
  validate();
}

std::optional<int> FDAlgebra::idempotent_ordinal_by_name(const std::string& n) const {
  for (int i = 0; i < idempotent_count(); ++i)
    if (d_.idem_names[i] == n) return i;
  return std::nullopt;
}

bool FDAlgebra::is_idempotent_element(int i) const {
  return std::find(d_.idempotents.begin(), d_.idempotents.end(), i) !=
         d_.idempotents.end();
}

Vec FDAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec r = zero_vector(field(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      for (const auto& [k, s] : product(static_cast<int>(i), static_cast<int>(j)))
        r[k] += c * s;
    }
  }
  return r;
}

Vec FDAlgebra::mul_basis(int i, int j) const {
  Vec r = zero_vector(field(), dim());
  for (const auto& [k, s] : product(i, j)) r[k] = s;
  return r;
}

Vec FDAlgebra::unit() const {
  Vec r = zero_vector(field(), dim());
  for (int e : d_.idempotents) r[e] = Scalar::one(field());
  return r;
}

Mat FDAlgebra::left_mul_matrix(int i) const {
  Mat m(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& [k, s] : product(i, static_cast<int>(j))) m.at(k, j) = s;
  return m;
}

Mat FDAlgebra::right_mul_matrix(int i) const {
  Mat m(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& [k, s] : product(static_cast<int>(j), i)) m.at(k, j) = s;
  return m;
}

std::vector<int> FDAlgebra::radical_basis() const {
  std::vector<int> r;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!is_idempotent_element(static_cast<int>(i))) r.push_back(static_cast<int>(i));
  return r;
}

void FDAlgebra::validate() const {
  const Field& f = field();
  const Scalar one = Scalar::one(f);
  // Idempotent laws: orthogonal idempotents summing to the unit, and
  // compatible block data on every basis element.
  for (int a = 0; a < idempotent_count(); ++a) {
    int ea = d_.idempotents[a];
    if (d_.src_idem[ea] != a || d_.tgt_idem[ea] != a)
      throw domain_error("idempotent block bookkeeping broken");
    for (int b = 0; b < idempotent_count(); ++b) {
      int eb = d_.idempotents[b];
      Vec p = mul_basis(ea, eb);
      Vec expect = zero_vector(f, dim());
      if (a == b) expect[ea] = one;
      if (p != expect) throw domain_error("idempotents not orthogonal");
    }
  }
  for (std::size_t i = 0; i < dim(); ++i) {
    int es = d_.idempotents[d_.src_idem[i]];
    int et = d_.idempotents[d_.tgt_idem[i]];
    Vec v = mul(mul_basis(et, static_cast<int>(i)), basis_vec(es));
    if (v != basis_vec(static_cast<int>(i)))
      throw domain_error("basis element not supported on its idempotent block: " +
                         label(static_cast<int>(i)));
  }
  // Associativity: exhaustive up to dim 64, sampled above.
  std::size_t n = dim();
  auto check_triple = [&](int i, int j, int k) {
    Vec left = mul(mul_basis(i, j), basis_vec(k));
    Vec right = mul(basis_vec(i), mul_basis(j, k));
    if (left != right)
      throw domain_error("multiplication not associative at (" + label(i) + "," +
                         label(j) + "," + label(k) + ")");
  };
  if (n <= 64) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          check_triple(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
  } else {
    std::size_t step = n / 16 + 1;
    for (std::size_t i = 0; i < n; i += step)
      for (std::size_t j = 0; j < n; j += step)
        for (std::size_t k = 0; k < n; k += step)
          check_triple(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
  }
}

const FDAlgebra::Generators& FDAlgebra::generators() const {
  if (gens_cache_) return *gens_cache_;
  auto g = std::make_shared<Generators>();
  const Field& f = field();
  std::size_t n = dim();

  // rad^2 as a subspace.
  std::vector<int> rad = radical_basis();
  SpanBuilder rad2(f, n);
  for (int i : rad)
    for (int j : rad) {
      Vec p = mul_basis(i, j);
      if (!vec_is_zero(p)) rad2.add(p);
    }
  // Generators: radical basis elements independent modulo rad^2.
  {
    SpanBuilder probe(f, n);
    for (const auto& v : rad2.basis()) probe.add(v);
    for (int i : rad)
      if (probe.add(basis_vec(i))) g->gens.push_back(i);
  }

  // Spin words in the generators until they span the algebra together with
  // the idempotents, tracking one expression per added word.
  struct Entry {
    bool is_idem;
    int idem_ordinal;
    std::vector<int> word;
  };
  std::vector<Entry> dict;
  std::vector<Vec> dict_vals;
  SpanBuilder span(f, n);
  for (int e = 0; e < idempotent_count(); ++e) {
    Vec v = basis_vec(d_.idempotents[e]);
    if (span.add(v)) {
      dict.push_back(Entry{true, e, {}});
      dict_vals.push_back(v);
    }
  }
  std::vector<std::pair<std::vector<int>, Vec>> frontier;
  for (std::size_t gi = 0; gi < g->gens.size(); ++gi)
    frontier.push_back({{static_cast<int>(gi)}, basis_vec(g->gens[gi])});
  int guard = 0;
  while (span.rank() < n) {
    if (frontier.empty() || ++guard > static_cast<int>(n) + 2)
      throw domain_error("algebra generators do not span (radical convention broken?)");
    std::vector<std::pair<std::vector<int>, Vec>> next;
    for (auto& [word, val] : frontier) {
      if (!span.add(val)) continue;
      dict.push_back(Entry{false, -1, word});
      dict_vals.push_back(val);
      for (std::size_t gi = 0; gi < g->gens.size(); ++gi) {
        Vec p = mul(val, basis_vec(g->gens[gi]));
        if (vec_is_zero(p)) continue;
        auto w = word;
        w.push_back(static_cast<int>(gi));
        next.push_back({std::move(w), std::move(p)});
      }
    }
    frontier = std::move(next);
    if (span.rank() == n) break;
  }

  g->exprs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto coords = span.coordinates(basis_vec(static_cast<int>(i)));
    if (!coords) throw domain_error("internal: basis element outside word span");
    Generators::Expr& e = g->exprs[i];
    if (is_idempotent_element(static_cast<int>(i))) {
      e.is_idempotent = true;
      e.idem_ordinal = d_.src_idem[i];
      continue;
    }
    for (std::size_t t = 0; t < coords->size(); ++t) {
      if ((*coords)[t].is_zero()) continue;
      if (dict[t].is_idem)
        throw domain_error("internal: radical element needs idempotent summand");
      e.terms.push_back(Generators::Term{(*coords)[t], dict[t].word});
    }
  }
  gens_cache_ = std::move(g);
  return *gens_cache_;
}

std::string FDAlgebra::describe() const {
  std::ostringstream os;
  os << (d_.name.empty() ? std::string("algebra") : d_.name) << ": dim " << dim()
     << ", field " << field().name() << ", idempotents";
  for (int e = 0; e < idempotent_count(); ++e) os << " " << d_.idem_names[e];
  return os.str();
}

AlgebraPtr build_algebra(std::shared_ptr<const NormalBasis> nb) {
  const Quiver& q = nb->quiver();
  const Field& f = nb->field();
  int n = nb->dim();

  FDAlgebra::Data d;
  d.field = f;
  d.normal_basis_link = nb;
  for (const Path& p : nb->paths) d.labels.push_back(p.str(q));
  d.table.resize(static_cast<std::size_t>(n) * n);
  d.src_idem.resize(n);
  d.tgt_idem.resize(n);
  for (int i = 0; i < n; ++i) {
    d.src_idem[i] = nb->paths[i].source();
    d.tgt_idem[i] = nb->paths[i].target();
  }
  for (int v = 0; v < q.vertex_count(); ++v) {
    int idx = *nb->find(Path::trivial(v));
    d.idempotents.push_back(idx);
    d.idem_names.push_back(q.vertex_name(v));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto c = compose(q, nb->paths[i], nb->paths[j]);
      if (!c) continue;
      AlgebraElement e = AlgebraElement::from_path(f, *c, Scalar::one(f));
      Vec coords = nb->coordinates(e);
      auto& cell = d.table[static_cast<std::size_t>(i) * n + j];
      for (int k = 0; k < n; ++k)
        if (!coords[k].is_zero()) cell.push_back({k, coords[k]});
    }
  }
  return std::make_shared<FDAlgebra>(std::move(d));
}

Vec CornerReduction::restrict_vec(const Vec& big_v) const {
  Vec r = zero_vector(corner->field(), corner->dim());
  for (std::size_t i = 0; i < embed.size(); ++i) r[i] = big_v[embed[i]];
  return r;
}

Vec CornerReduction::embed_vec(const Vec& corner_v) const {
  Vec r = zero_vector(big->field(), big->dim());
  for (std::size_t i = 0; i < embed.size(); ++i) r[embed[i]] = corner_v[i];
  return r;
}

CornerReduction idempotent_reduction(AlgebraPtr a,
                                     const std::vector<int>& removed_ordinals) {
  CornerReduction out;
  out.big = a;
  out.removed_idems = removed_ordinals;
  std::sort(out.removed_idems.begin(), out.removed_idems.end());
  out.removed_idems.erase(
      std::unique(out.removed_idems.begin(), out.removed_idems.end()),
      out.removed_idems.end());
  for (int e : out.removed_idems)
    if (e < 0 || e >= a->idempotent_count())
      throw domain_error("idempotent ordinal out of range");
  auto removed = [&](int ordinal) {
    return std::binary_search(out.removed_idems.begin(), out.removed_idems.end(),
                              ordinal);
  };
  for (int e = 0; e < a->idempotent_count(); ++e)
    if (!removed(e)) out.kept_idems.push_back(e);

  if (out.removed_idems.empty())
    out.warning = "e = 0: corner equals the original algebra";
  if (out.kept_idems.empty())
    out.warning = "e = 1: corner is the zero algebra";

  FDAlgebra::Data d;
  d.field = a->field();
  d.name = a->name().empty() ? "corner" : a->name() + "-corner";
  std::vector<int> ord_map(a->idempotent_count(), -1);
  for (std::size_t k = 0; k < out.kept_idems.size(); ++k)
    ord_map[out.kept_idems[k]] = static_cast<int>(k);

  for (std::size_t i = 0; i < a->dim(); ++i) {
    int ii = static_cast<int>(i);
    if (removed(a->src_idem(ii)) || removed(a->tgt_idem(ii))) continue;
    out.embed.push_back(ii);
    d.labels.push_back(a->label(ii));
    d.src_idem.push_back(ord_map[a->src_idem(ii)]);
    d.tgt_idem.push_back(ord_map[a->tgt_idem(ii)]);
  }
  std::size_t m = out.embed.size();
  std::vector<int> back(a->dim(), -1);
  for (std::size_t i = 0; i < m; ++i) back[out.embed[i]] = static_cast<int>(i);
  for (int e : out.kept_idems) {
    d.idempotents.push_back(back[a->idempotent_basis_index(e)]);
    d.idem_names.push_back(a->idempotent_name(e));
  }
  d.table.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      for (const auto& [k, s] : a->product(out.embed[i], out.embed[j])) {
        if (back[k] < 0)
          throw domain_error("corner product escaped the corner block");
        d.table[i * m + j].push_back({back[k], s});
      }
    }
  out.corner = std::make_shared<FDAlgebra>(std::move(d));
  return out;
}

IdealModule ideal_closure(const FDAlgebra& a, const std::vector<Vec>& gens,
                          bool close_two_sided) {
  const Field& f = a.field();
  std::size_t n = a.dim();
  SpanBuilder span(f, n);
  std::vector<Vec> work;
  for (const Vec& g : gens)
    if (span.add(g)) work.push_back(g);
  // e_i * g and g * e_i are block projections of g, so seeding with the gens
  // and closing under multiplication by all basis elements suffices.
  while (!work.empty()) {
    Vec v = std::move(work.back());
    work.pop_back();
    for (std::size_t b = 0; b < n; ++b) {
      Vec lv = a.mul(a.basis_vec(static_cast<int>(b)), v);
      if (!vec_is_zero(lv) && span.add(lv)) work.push_back(lv);
      if (close_two_sided) {
        Vec rv = a.mul(v, a.basis_vec(static_cast<int>(b)));
        if (!vec_is_zero(rv) && span.add(rv)) work.push_back(rv);
      }
    }
  }
  IdealModule out;
  out.carrier = span.basis_matrix();
  // Exact re-verification of the closure certificates.
  out.left_closed = true;
  out.two_sided = true;
  for (std::size_t c = 0; c < out.carrier.cols(); ++c) {
    Vec v = out.carrier.column(c);
    for (std::size_t b = 0; b < n; ++b) {
      if (!span.contains(a.mul(a.basis_vec(static_cast<int>(b)), v)))
        out.left_closed = false;
      if (!span.contains(a.mul(v, a.basis_vec(static_cast<int>(b)))))
        out.two_sided = false;
    }
  }
  if (close_two_sided && (!out.left_closed || !out.two_sided))
    throw domain_error("internal: ideal closure not closed");
  return out;
}

Vec QuotientResult::project_vec(const Vec& big_v) const {
  // Coordinates of big_v modulo J over the kept basis.
  std::size_t nj = ideal.carrier.cols();
  SpanBuilder sp(big->field(), big->dim());
  for (std::size_t c = 0; c < nj; ++c) sp.add(ideal.carrier.column(c));
  for (int k : kept) sp.add(big->basis_vec(k));
  auto coords = sp.coordinates(big_v);
  if (!coords) throw domain_error("vector outside the algebra span");
  Vec r = zero_vector(big->field(), kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) r[i] = (*coords)[nj + i];
  return r;
}

QuotientResult quotient_by_ideal(AlgebraPtr a, const std::vector<Vec>& gens) {
  QuotientResult out;
  out.big = a;
  out.ideal = ideal_closure(*a, gens, /*close_two_sided=*/true);
  const Field& f = a->field();
  std::size_t n = a->dim();
  std::size_t nj = out.ideal.carrier.cols();

  SpanBuilder sp(f, n);
  for (std::size_t c = 0; c < nj; ++c) sp.add(out.ideal.carrier.column(c));
  // Basis order puts idempotents first, so surviving idempotents are kept.
  for (std::size_t i = 0; i < n; ++i)
    if (sp.add(a->basis_vec(static_cast<int>(i))))
      out.kept.push_back(static_cast<int>(i));

  if (out.kept.empty())
    out.warning = "generators span the whole algebra: quotient is zero";

  FDAlgebra::Data d;
  d.field = f;
  d.name = a->name().empty() ? "quotient" : a->name() + "-quotient";
  std::vector<int> ord_map(a->idempotent_count(), -1);
  for (int k : out.kept) {
    if (a->is_idempotent_element(k)) {
      int ordinal = a->src_idem(k);
      ord_map[ordinal] = static_cast<int>(d.idempotents.size());
      d.idempotents.push_back(-1);  // filled below once positions are known
      d.idem_names.push_back(a->idempotent_name(ordinal));
    }
  }
  for (std::size_t i = 0; i < out.kept.size(); ++i) {
    int k = out.kept[i];
    d.labels.push_back(a->label(k));
    if (ord_map[a->src_idem(k)] < 0 || ord_map[a->tgt_idem(k)] < 0)
      throw domain_error("kept basis element rides a dead idempotent: " +
                         a->label(k));
    d.src_idem.push_back(ord_map[a->src_idem(k)]);
    d.tgt_idem.push_back(ord_map[a->tgt_idem(k)]);
    if (a->is_idempotent_element(k))
      d.idempotents[ord_map[a->src_idem(k)]] = static_cast<int>(i);
  }
  std::size_t m = out.kept.size();
  d.table.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec p = a->mul_basis(out.kept[i], out.kept[j]);
      auto coords = sp.coordinates(p);
      if (!coords) throw domain_error("internal: product outside span");
      for (std::size_t t = 0; t < m; ++t)
        if (!(*coords)[nj + t].is_zero())
          d.table[i * m + j].push_back({static_cast<int>(t), (*coords)[nj + t]});
    }
  out.quotient = std::make_shared<FDAlgebra>(std::move(d));
  return out;
}

AlgebraPtr opposite_algebra(AlgebraPtr a) {
  FDAlgebra::Data d;
  d.field = a->field();
  d.name = a->name().empty() ? "op" : a->name() + "-op";
  std::size_t n = a->dim();
  for (std::size_t i = 0; i < n; ++i) d.labels.push_back(a->label(static_cast<int>(i)));
  for (int e = 0; e < a->idempotent_count(); ++e) {
    d.idempotents.push_back(a->idempotent_basis_index(e));
    d.idem_names.push_back(a->idempotent_name(e));
  }
  for (std::size_t i = 0; i < n; ++i) {
    d.src_idem.push_back(a->tgt_idem(static_cast<int>(i)));
    d.tgt_idem.push_back(a->src_idem(static_cast<int>(i)));
  }
  d.table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d.table[i * n + j] = a->product(static_cast<int>(j), static_cast<int>(i));
  return std::make_shared<FDAlgebra>(std::move(d));
}

AlgebraPtr semisimple_algebra(const Field& f, const std::vector<std::string>& names) {
  FDAlgebra::Data d;
  d.field = f;
  d.name = "semisimple";
  std::size_t n = names.size();
  d.table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    d.labels.push_back("e(" + names[i] + ")");
    d.idempotents.push_back(static_cast<int>(i));
    d.idem_names.push_back(names[i]);
    d.src_idem.push_back(static_cast<int>(i));
    d.tgt_idem.push_back(static_cast<int>(i));
    d.table[i * n + i].push_back({static_cast<int>(i), Scalar::one(f)});
  }
  return std::make_shared<FDAlgebra>(std::move(d));
}

}  // namespace fdimlab
