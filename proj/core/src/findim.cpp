#include "fdimlab/findim.hpp"

#include <algorithm>
#include <sstream>

namespace fdimlab {

namespace {

// ---------------------------------------------------------------------------
// Small dense matrices over GF(p), uint32 entries. Used by the exhaustive
// search engine; everything here is throwaway per candidate.
struct FpMat {
  int r = 0, c = 0;
  std::uint32_t p = 2;
  std::vector<std::uint32_t> a;

  FpMat() = default;
  FpMat(int r, int c, std::uint32_t p) : r(r), c(c), p(p), a(static_cast<std::size_t>(r) * c, 0) {}
  std::uint32_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * c + j]; }
  std::uint32_t get(int i, int j) const { return a[static_cast<std::size_t>(i) * c + j]; }

  static FpMat identity(int n, std::uint32_t p) {
    FpMat m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  FpMat mul(const FpMat& o) const {
    FpMat out(r, o.c, p);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < c; ++k) {
        std::uint64_t v = get(i, k);
        if (!v) continue;
        for (int j = 0; j < o.c; ++j)
          out.at(i, j) = static_cast<std::uint32_t>(
              (out.get(i, j) + v * o.get(k, j)) % p);
      }
    return out;
  }

  FpMat add_scaled(const FpMat& o, std::uint32_t s) const {
    FpMat out = *this;
    for (std::size_t i = 0; i < a.size(); ++i)
      out.a[i] = static_cast<std::uint32_t>(
          (out.a[i] + static_cast<std::uint64_t>(s) * o.a[i]) % p);
    return out;
  }

  bool operator==(const FpMat& o) const { return r == o.r && c == o.c && a == o.a; }
  bool is_zero() const {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t x) { return x == 0; });
  }
};

std::uint32_t fp_inv(std::uint32_t x, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = x % p;
  while (nr) {
    std::int64_t q = r / nr, tmp;
    tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  return t < 0 ? static_cast<std::uint32_t>(t + p) : static_cast<std::uint32_t>(t);
}

// Row echelon in place; returns pivot columns.
std::vector<int> fp_echelon(FpMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.c && row < m.r; ++col) {
    int piv = -1;
    for (int i = row; i < m.r; ++i)
      if (m.get(i, col)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.c; ++j) std::swap(m.at(piv, j), m.at(row, j));
    std::uint64_t inv = fp_inv(m.get(row, col), m.p);
    for (int j = col; j < m.c; ++j)
      m.at(row, j) = static_cast<std::uint32_t>(m.get(row, j) * inv % m.p);
    for (int i = 0; i < m.r; ++i) {
      if (i == row) continue;
      std::uint64_t f = m.get(i, col);
      if (!f) continue;
      std::uint64_t neg = m.p - f;
      for (int j = col; j < m.c; ++j)
        m.at(i, j) = static_cast<std::uint32_t>(
            (m.get(i, j) + neg * m.get(row, j)) % m.p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

[[maybe_unused]] int fp_rank(FpMat m) { return static_cast<int>(fp_echelon(m).size()); }

FpMat fp_kernel(const FpMat& m) {
  FpMat e = m;
  std::vector<int> piv = fp_echelon(e);
  std::vector<bool> is_piv(m.c, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.c; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  FpMat k(m.c, static_cast<int>(free_cols.size()), m.p);
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    k.at(free_cols[j], static_cast<int>(j)) = 1;
    for (std::size_t rr = 0; rr < piv.size(); ++rr) {
      std::uint32_t v = e.get(static_cast<int>(rr), free_cols[j]);
      if (v) k.at(piv[rr], static_cast<int>(j)) = m.p - v;
    }
  }
  return k;
}

// Any X with A*X = B; nullopt when inconsistent.
std::optional<FpMat> fp_solve(const FpMat& a, const FpMat& b) {
  FpMat aug(a.r, a.c + b.c, a.p);
  for (int i = 0; i < a.r; ++i) {
    for (int j = 0; j < a.c; ++j) aug.at(i, j) = a.get(i, j);
    for (int j = 0; j < b.c; ++j) aug.at(i, a.c + j) = b.get(i, j);
  }
  std::vector<int> piv = fp_echelon(aug);
  for (int c : piv)
    if (c >= a.c) return std::nullopt;
  FpMat x(a.c, b.c, a.p);
  for (std::size_t rr = 0; rr < piv.size(); ++rr)
    for (int j = 0; j < b.c; ++j) x.at(piv[rr], j) = aug.get(static_cast<int>(rr), a.c + j);
  return x;
}

// Independent columns, as a matrix.
FpMat fp_image(const FpMat& m) {
  FpMat e = m;
  std::vector<int> piv = fp_echelon(e);
  FpMat out(m.r, static_cast<int>(piv.size()), m.p);
  for (std::size_t j = 0; j < piv.size(); ++j)
    for (int i = 0; i < m.r; ++i) out.at(i, static_cast<int>(j)) = m.get(i, piv[j]);
  return out;
}

// Incremental span of column vectors over GF(p).
struct FpSpan {
  int dim;
  std::uint32_t p;
  std::vector<std::pair<int, std::vector<std::uint32_t>>> rows;  // pivot, reduced
  std::vector<std::vector<std::uint32_t>> basis;

  FpSpan(int dim, std::uint32_t p) : dim(dim), p(p) {}
  bool add(const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> res = v;
    for (const auto& [pv, rv] : rows) {
      std::uint64_t f = res[pv];
      if (!f) continue;
      std::uint64_t neg = p - f;
      for (int i = 0; i < dim; ++i)
        res[i] = static_cast<std::uint32_t>((res[i] + neg * rv[i]) % p);
    }
    int pv = -1;
    for (int i = 0; i < dim; ++i)
      if (res[i]) { pv = i; break; }
    if (pv < 0) return false;
    std::uint64_t inv = fp_inv(res[pv], p);
    for (int i = 0; i < dim; ++i)
      res[i] = static_cast<std::uint32_t>(res[i] * inv % p);
    rows.push_back({pv, std::move(res)});
    basis.push_back(v);
    return true;
  }
};

// ---------------------------------------------------------------------------
// Exhaustive-search engine over GF(p): algebra tables with uint32
// coefficients plus a module pd routine mirroring the generic one.
struct FpEngine {
  AlgebraPtr alg;
  std::uint32_t p;
  int n, nv;
  std::vector<std::vector<std::pair<int, std::uint32_t>>> table;
  std::vector<int> idem_idx, src, tgt;
  std::vector<int> rad;
  std::vector<std::vector<int>> proj_basis;  // per vertex ordinal

  explicit FpEngine(AlgebraPtr a) : alg(a) {
    if (a->field().is_rational())
      throw domain_error("exhaustive search requires a finite field");
    p = a->field().p;
    n = static_cast<int>(a->dim());
    nv = a->idempotent_count();
    table.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (const auto& [k, s] : a->product(i, j))
          table[static_cast<std::size_t>(i) * n + j].push_back({k, s.residue()});
    for (int v = 0; v < nv; ++v) idem_idx.push_back(a->idempotent_basis_index(v));
    for (int i = 0; i < n; ++i) {
      src.push_back(a->src_idem(i));
      tgt.push_back(a->tgt_idem(i));
    }
    rad = a->radical_basis();
    proj_basis.resize(nv);
    for (int v = 0; v < nv; ++v)
      for (int i = 0; i < n; ++i)
        if (src[i] == v) proj_basis[v].push_back(i);
  }

  struct Mod {
    int d = 0;
    std::vector<FpMat> act;  // per algebra basis element
  };

  bool table_consistent(const Mod& m) const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        FpMat lhs = m.act[i].mul(m.act[j]);
        FpMat rhs(m.d, m.d, p);
        for (const auto& [k, s] : table[static_cast<std::size_t>(i) * n + j])
          rhs = rhs.add_scaled(m.act[k], s);
        if (!(lhs == rhs)) return false;
      }
    return true;
  }

  // One minimal cover step: returns the syzygy (d = -1 signals dim guard).
  Mod syzygy_step(const Mod& m, int dim_guard) const {
    // Radical span.
    FpSpan radsp(m.d, p);
    for (int r : rad)
      for (int j = 0; j < m.d; ++j) {
        std::vector<std::uint32_t> col(m.d);
        bool nz = false;
        for (int i = 0; i < m.d; ++i) {
          col[i] = m.act[r].get(i, j);
          nz |= col[i] != 0;
        }
        if (nz) radsp.add(col);
      }
    // Generators per vertex: block basis columns independent mod radical.
    std::vector<std::vector<std::vector<std::uint32_t>>> gens(nv);
    std::vector<int> mults(nv, 0);
    for (int v = 0; v < nv; ++v) {
      FpSpan sp(m.d, p);
      const FpMat& pv = m.act[idem_idx[v]];
      for (const auto& b : radsp.basis) {
        std::vector<std::uint32_t> col(m.d, 0);
        bool nz = false;
        for (int i = 0; i < m.d; ++i) {
          std::uint64_t acc = 0;
          for (int k2 = 0; k2 < m.d; ++k2)
            acc += static_cast<std::uint64_t>(pv.get(i, k2)) * b[k2];
          col[i] = static_cast<std::uint32_t>(acc % p);
          nz |= col[i] != 0;
        }
        if (nz) sp.add(col);
      }
      FpMat img = fp_image(pv);
      for (int j = 0; j < img.c; ++j) {
        std::vector<std::uint32_t> col(m.d);
        for (int i = 0; i < m.d; ++i) col[i] = img.get(i, j);
        if (sp.add(col)) {
          gens[v].push_back(col);
          ++mults[v];
        }
      }
    }
    // Cover P and the epi.
    struct Coord { int v, copy, b; };
    std::vector<Coord> coords;
    std::vector<std::vector<int>> pos_of(n);
    for (int v = 0; v < nv; ++v)
      for (int cpy = 0; cpy < mults[v]; ++cpy)
        for (int b : proj_basis[v]) {
          pos_of[b].push_back(static_cast<int>(coords.size()));
          coords.push_back({v, cpy, b});
        }
    int dp = static_cast<int>(coords.size());
    if (dp > dim_guard) return Mod{-1, {}};
    FpMat epi(m.d, dp, p);
    for (int col = 0; col < dp; ++col) {
      const auto& cd = coords[col];
      const FpMat& ab = m.act[cd.b];
      const auto& g = gens[cd.v][cd.copy];
      for (int i = 0; i < m.d; ++i) {
        std::uint64_t acc = 0;
        for (int k2 = 0; k2 < m.d; ++k2)
          acc += static_cast<std::uint64_t>(ab.get(i, k2)) * g[k2];
        epi.at(i, col) = static_cast<std::uint32_t>(acc % p);
      }
    }
    FpMat kern = fp_kernel(epi);
    if (kern.c == 0) return Mod{0, {}};
    // Action of P restricted to the kernel.
    std::vector<FpMat> pact(n, FpMat(dp, dp, p));
    for (int i = 0; i < n; ++i)
      for (int col = 0; col < dp; ++col) {
        const auto& cd = coords[col];
        for (const auto& [k, s] : table[static_cast<std::size_t>(i) * n + cd.b])
          for (int pos : pos_of[k])
            if (coords[pos].v == cd.v && coords[pos].copy == cd.copy) {
              pact[i].at(pos, col) = s;
              break;
            }
      }
    Mod out;
    out.d = kern.c;
    out.act.reserve(n);
    for (int i = 0; i < n; ++i) {
      auto x = fp_solve(kern, pact[i].mul(kern));
      if (!x) throw domain_error("internal: fp syzygy not invariant");
      out.act.push_back(std::move(*x));
    }
    return out;
  }

  // pd via iterated covers; -1 = unknown (cap or dim guard).
  int pd(Mod m, int step_cap, int dim_guard) const {
    for (int step = 0; step <= step_cap; ++step) {
      if (m.d == 0) return step == 0 ? 0 : step - 1;
      Mod next = syzygy_step(m, dim_guard);
      if (next.d < 0) return -1;
      if (next.d == 0) return step;
      m = std::move(next);
    }
    return -1;
  }
};

// Enumerates blockwise generator matrices for all dimension vectors with
// total <= dim_cap; the first generator between distinct blocks is reduced
// to rank normal form (a change of basis in its two blocks realizes any
// module this way, so the enumeration still meets every iso class).
struct GenEnum {
  AlgebraPtr a;
  int dim_cap;
  long budget;
  std::vector<int> gens;
  std::vector<std::pair<int, int>> gen_blocks;  // (src, tgt) ordinals
  int nv;

  explicit GenEnum(AlgebraPtr alg, int cap, long budget)
      : a(alg), dim_cap(cap), budget(budget) {
    if (a->field().is_rational())
      throw domain_error("module enumeration requires a finite field");
    nv = a->idempotent_count();
    gens = a->generators().gens;
    for (int g : gens) gen_blocks.push_back({a->src_idem(g), a->tgt_idem(g)});
  }

  // fn(dims, entries) -> void; entries[gi] is row-major dim_tgt x dim_src.
  template <class Fn>
  void run(Fn&& fn) {
    std::vector<int> dims(nv, 0);
    long spent = 0;
    enum_dims(0, dim_cap, dims, spent, fn);
  }

 private:
  template <class Fn>
  void enum_dims(int v, int left, std::vector<int>& dims, long& spent, Fn&& fn) {
    if (v == nv) {
      if (std::all_of(dims.begin(), dims.end(), [](int d) { return d == 0; }))
        return;
      enum_mats(dims, spent, fn);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      dims[v] = d;
      enum_dims(v + 1, left - d, dims, spent, fn);
    }
    dims[v] = 0;
  }

  template <class Fn>
  void enum_mats(const std::vector<int>& dims, long& spent, Fn&& fn) {
    std::uint32_t p = a->field().p;
    int canon = -1;  // index of rank-canonicalized generator
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
      if (gen_blocks[gi].first != gen_blocks[gi].second) {
        canon = static_cast<int>(gi);
        break;
      }
    std::vector<std::vector<std::uint32_t>> entries(gens.size());
    std::vector<long> free_sizes;
    long total_free = 0;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      auto [s, t] = gen_blocks[gi];
      long sz = static_cast<long>(dims[t]) * dims[s];
      entries[gi].assign(sz, 0);
      if (static_cast<int>(gi) != canon) {
        free_sizes.push_back(sz);
        total_free += sz;
      }
    }
    // Budget: p^total_free * (rank choices).
    double combos = 1;
    for (long i = 0; i < total_free; ++i) {
      combos *= p;
      if (combos > static_cast<double>(budget))
        throw domain_error(
            "exhaustive enumeration budget exceeded; lower --dim-cap");
    }

    auto emit_all_free = [&](auto&& self, std::size_t gi, Fn&& fn2) -> void {
      if (gi == gens.size()) {
        if (++spent > budget)
          throw domain_error("exhaustive enumeration budget exceeded");
        fn2(dims, entries);
        return;
      }
      if (static_cast<int>(gi) == canon) {
        self(self, gi + 1, fn2);
        return;
      }
      std::size_t sz = entries[gi].size();
      std::vector<std::uint32_t>& e = entries[gi];
      std::fill(e.begin(), e.end(), 0);
      for (;;) {
        self(self, gi + 1, fn2);
        std::size_t pos = 0;
        while (pos < sz) {
          if (++e[pos] < p) break;
          e[pos] = 0;
          ++pos;
        }
        if (pos == sz) break;
        if (sz == 0) break;
      }
      if (sz == 0) return;
    };

    if (canon < 0) {
      emit_all_free(emit_all_free, 0, fn);
      return;
    }
    auto [s, t] = gen_blocks[canon];
    int maxr = std::min(dims[s], dims[t]);
    for (int r = 0; r <= maxr; ++r) {
      std::fill(entries[canon].begin(), entries[canon].end(), 0);
      for (int i = 0; i < r; ++i)
        entries[canon][static_cast<std::size_t>(i) * dims[s] + i] = 1;
      emit_all_free(emit_all_free, 0, fn);
    }
  }
};

std::string encode_candidate(const std::vector<int>& dims,
                             const std::vector<std::vector<std::uint32_t>>& entries) {
  std::ostringstream os;
  os << "dims(";
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << ") gens[";
  for (std::size_t g = 0; g < entries.size(); ++g) {
    if (g) os << "|";
    for (std::size_t i = 0; i < entries[g].size(); ++i)
      os << (i ? " " : "") << entries[g][i];
  }
  os << "]";
  return os.str();
}

}  // namespace

std::optional<FDModule> module_from_generator_matrices(
    AlgebraPtr a, const std::vector<int>& dims,
    const std::vector<std::vector<std::uint32_t>>& gen_entries) {
  const Field& f = a->field();
  int nv = a->idempotent_count();
  const auto& gd = a->generators();
  std::vector<int> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + dims[v];
  int d = off[nv];
  auto block_mat = [&](int sv, int tv, const std::vector<std::uint32_t>& e) {
    Mat m(f, d, d);
    for (int i = 0; i < dims[tv]; ++i)
      for (int j = 0; j < dims[sv]; ++j)
        m.at(off[tv] + i, off[sv] + j) =
            Scalar::from_int(f, e[static_cast<std::size_t>(i) * dims[sv] + j]);
    return m;
  };
  std::vector<Mat> gen_act;
  for (std::size_t gi = 0; gi < gd.gens.size(); ++gi)
    gen_act.push_back(block_mat(a->src_idem(gd.gens[gi]), a->tgt_idem(gd.gens[gi]),
                                gen_entries[gi]));
  std::vector<Mat> act(a->dim(), Mat(f, d, d));
  for (std::size_t b = 0; b < a->dim(); ++b) {
    const auto& ex = gd.exprs[b];
    if (ex.is_idempotent) {
      int v = ex.idem_ordinal;
      for (int i = 0; i < dims[v]; ++i)
        act[b].at(off[v] + i, off[v] + i) = Scalar::one(f);
      continue;
    }
    Mat sum(f, d, d);
    for (const auto& term : ex.terms) {
      Mat prod = Mat::identity(f, d);
      for (int w : term.word) prod = prod * gen_act[w];
      sum = sum + prod.scaled(term.coeff);
    }
    act[b] = std::move(sum);
  }
  try {
    FDModule m(a, std::move(act), FDModule::Verify::None);
    m.verify_full();
    return m;
  } catch (const domain_error&) {
    return std::nullopt;
  }
}

namespace {

FindimEstimate findim_exhaustive(AlgebraPtr a, const FindimOptions& opts) {
  FindimEstimate est;
  est.exhaustive = true;
  est.dim_cap = opts.dim_cap;
  est.field = a->field();

  FpEngine eng(a);
  const auto& gd = a->generators();
  int step_cap = opts.resolution_cap > 0 ? opts.resolution_cap
                                         : default_resolution_cap(*a);
  int dim_guard = 16 * std::max(1, opts.dim_cap) * static_cast<int>(a->dim());

  int best = -1;
  std::vector<int> best_dims;
  std::vector<std::vector<std::uint32_t>> best_entries;

  GenEnum en(a, opts.dim_cap, opts.budget);
  en.run([&](const std::vector<int>& dims,
             const std::vector<std::vector<std::uint32_t>>& entries) {
    ++est.candidates;
    // Assemble the candidate over GF(p).
    std::vector<int> off(eng.nv + 1, 0);
    for (int v = 0; v < eng.nv; ++v) off[v + 1] = off[v] + dims[v];
    int d = off[eng.nv];
    FpEngine::Mod m;
    m.d = d;
    m.act.assign(eng.n, FpMat(d, d, eng.p));
    std::vector<FpMat> gen_act;
    for (std::size_t gi = 0; gi < gd.gens.size(); ++gi) {
      int sv = eng.src[gd.gens[gi]], tv = eng.tgt[gd.gens[gi]];
      FpMat g(d, d, eng.p);
      for (int i = 0; i < dims[tv]; ++i)
        for (int j = 0; j < dims[sv]; ++j)
          g.at(off[tv] + i, off[sv] + j) =
              entries[gi][static_cast<std::size_t>(i) * dims[sv] + j];
      gen_act.push_back(std::move(g));
    }
    for (int b = 0; b < eng.n; ++b) {
      const auto& ex = gd.exprs[b];
      if (ex.is_idempotent) {
        int v = ex.idem_ordinal;
        for (int i = 0; i < dims[v]; ++i) m.act[b].at(off[v] + i, off[v] + i) = 1;
        continue;
      }
      for (const auto& term : ex.terms) {
        FpMat prod = FpMat::identity(d, eng.p);
        for (int w : term.word) prod = prod.mul(gen_act[w]);
        m.act[b] = m.act[b].add_scaled(prod, term.coeff.residue());
      }
    }
    if (!eng.table_consistent(m)) return;
    int pd = eng.pd(m, step_cap, dim_guard);
    if (pd < 0) {
      ++est.unknown_count;
      return;
    }
    ++est.finite_count;
    if (pd > best) {
      best = pd;
      best_dims = dims;
      best_entries = entries;
    }
  });

  if (best < 0) {
    est.value = 0;
    est.note = "no module of positive dimension admitted a finite certificate";
    return est;
  }
  est.value = best;
  est.witness = encode_candidate(best_dims, best_entries);
  // Re-check the witness through the generic machinery.
  auto wit = module_from_generator_matrices(a, best_dims, best_entries);
  if (!wit) throw domain_error("internal: witness fails generic verification");
  est.witness_pd = projective_dimension(*wit, step_cap);
  if (!est.witness_pd.is_finite() || est.witness_pd.value != best)
    throw domain_error("internal: witness pd mismatch between engines");
  return est;
}

FindimEstimate findim_curated(AlgebraPtr a, const FindimOptions& opts) {
  FindimEstimate est;
  est.dim_cap = opts.dim_cap;
  est.field = a->field();
  int cap = opts.resolution_cap > 0 ? opts.resolution_cap
                                    : default_resolution_cap(*a);
  int best = -1;
  for (const auto& [name, m] : opts.curated) {
    if (m.algebra() != a)
      throw domain_error("curated module over a different algebra: " + name);
    ++est.candidates;
    PdResult pd = projective_dimension(m, cap);
    if (pd.is_finite()) {
      ++est.finite_count;
      if (pd.value > best) {
        best = pd.value;
        est.witness = name;
        est.witness_pd = pd;
      }
    } else if (pd.kind == PdResult::Kind::InfiniteCertified) {
      ++est.infinite_count;
    } else {
      ++est.unknown_count;
    }
  }
  est.value = std::max(best, 0);
  if (best < 0) est.note = "no curated module had finite projective dimension";
  return est;
}

FindimEstimate findim_sampled(AlgebraPtr a, const FindimOptions& opts) {
  FindimEstimate est;
  est.dim_cap = opts.dim_cap;
  est.field = a->field();
  int cap = opts.resolution_cap > 0 ? opts.resolution_cap
                                    : default_resolution_cap(*a);
  std::mt19937_64 rng(opts.seed);
  int best = -1;
  for (int s = 0; s < opts.samples; ++s) {
    FDModule m = random_cokernel_module(a, rng);
    ++est.candidates;
    PdResult pd = projective_dimension(m, cap);
    if (pd.is_finite()) {
      ++est.finite_count;
      if (pd.value > best) {
        best = pd.value;
        est.witness = "sampled cokernel #" + std::to_string(s) + " dim " + m.dims_str();
        est.witness_pd = pd;
      }
    } else if (pd.kind == PdResult::Kind::InfiniteCertified) {
      ++est.infinite_count;
    } else {
      ++est.unknown_count;
    }
  }
  est.value = std::max(best, 0);
  if (best < 0) est.note = "no sample had finite projective dimension";
  return est;
}

}  // namespace

FindimEstimate findim_bounded(AlgebraPtr a, FindimMode mode,
                              const FindimOptions& opts) {
  if (a->dim() == 0) {
    FindimEstimate est;
    est.exact = true;
    est.note = "zero algebra";
    return est;
  }
  FindimEstimate est;
  switch (mode) {
    case FindimMode::Exhaustive:
      est = findim_exhaustive(a, opts);
      break;
    case FindimMode::Curated:
      est = findim_curated(a, opts);
      break;
    case FindimMode::Sampled:
      est = findim_sampled(a, opts);
      break;
  }
  // A finite global dimension pins findim exactly.
  int cap = opts.resolution_cap > 0 ? opts.resolution_cap
                                    : default_resolution_cap(*a);
  PdResult gd = global_dimension(a, cap);
  if (gd.is_finite()) {
    if (est.value > gd.value)
      throw domain_error("internal: estimate exceeds finite global dimension");
    if (gd.value > est.value) {
      est.note += (est.note.empty() ? "" : "; ");
      est.note += "raised to gl.dim " + std::to_string(gd.value);
      for (int v = 0; v < a->idempotent_count(); ++v) {
        PdResult pv = projective_dimension(simple_module(a, v), cap);
        if (pv.is_finite() && pv.value == gd.value) {
          est.witness = "S(" + a->idempotent_name(v) + ")";
          est.witness_pd = pv;
          break;
        }
      }
      est.value = gd.value;
    }
    est.exact = true;
  }
  return est;
}

std::vector<IndecClass> indecomposable_classes(AlgebraPtr a, int dim_cap,
                                               long budget) {
  std::vector<IndecClass> classes;
  int cap = default_resolution_cap(*a);
  GenEnum en(a, dim_cap, budget);
  en.run([&](const std::vector<int>& dims,
             const std::vector<std::vector<std::uint32_t>>& entries) {
    auto mod = module_from_generator_matrices(a, dims, entries);
    if (!mod) return;
    Decomposition dec = decompose(*mod);
    if (!dec.complete)
      throw domain_error("indecomposable_classes: decomposition budget hit");
    for (FDModule& part : dec.parts) {
      bool known = false;
      for (const IndecClass& c : classes) {
        IsoResult iso = is_isomorphic(c.rep, part);
        if (iso.verdict == Tristate::Yes) {
          known = true;
          break;
        }
        if (iso.verdict == Tristate::Unknown)
          throw domain_error("indecomposable_classes: iso budget hit");
      }
      if (!known) {
        IndecClass c{part, projective_dimension(part, cap), part.dim_vector()};
        classes.push_back(std::move(c));
      }
    }
  });
  std::stable_sort(classes.begin(), classes.end(),
                   [](const IndecClass& x, const IndecClass& y) {
                     return fingerprint(x.rep) < fingerprint(y.rep);
                   });
  return classes;
}

}  // namespace fdimlab
