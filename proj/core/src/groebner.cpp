#include "fdimlab/groebner.hpp"

#include <algorithm>

namespace fdimlab {

namespace {

// Locates an occurrence of tip_word as a contiguous subword of w; returns the
// offset or -1.
int find_subword(const std::vector<int>& w, const std::vector<int>& tip_word) {
  if (tip_word.empty() || tip_word.size() > w.size()) return -1;
  for (std::size_t i = 0; i + tip_word.size() <= w.size(); ++i)
    if (std::equal(tip_word.begin(), tip_word.end(), w.begin() + i))
      return static_cast<int>(i);
  return -1;
}

AlgebraElement make_monic(const Quiver&, const AlgebraElement& x,
                          const AdmissibleOrder& ord) {
  Scalar c = tip_coefficient(x, ord);
  return x.scaled(c.inverse());
}

// One rewrite: replaces the occurrence of tip(g) inside path p (at offset
// off) using monic g, i.e. returns l * g * r with l,r the flanking paths.
AlgebraElement splice(const Quiver& q, const Path& p, int off,
                      const AlgebraElement& g, int tip_len) {
  const std::vector<int>& w = p.word();
  AlgebraElement out = g;
  if (off > 0) {
    std::vector<int> lw(w.begin(), w.begin() + off);
    out = out.mul_path_left(q, *Path::from_word(q, lw));
  }
  if (off + tip_len < static_cast<int>(w.size())) {
    std::vector<int> rw(w.begin() + off + tip_len, w.end());
    out = out.mul_path_right(q, *Path::from_word(q, rw));
  }
  return out;
}

void inter_reduce(const Quiver& q, std::vector<AlgebraElement>& basis,
                  const AdmissibleOrder& ord) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<AlgebraElement> others;
      others.reserve(basis.size() - 1);
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      AlgebraElement r = reduce(q, basis[i], others, ord);
      if (r.is_zero()) {
        basis.erase(basis.begin() + i);
        changed = true;
        break;
      }
      r = make_monic(q, r, ord);
      if (!(r == basis[i])) {
        basis[i] = std::move(r);
        changed = true;
      }
    }
  }
  // Drop duplicates, keeping first occurrences.
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = basis.size(); j-- > i + 1;)
      if (basis[j] == basis[i]) basis.erase(basis.begin() + j);
}

}  // namespace

std::vector<Path> GroebnerBasis::tips() const {
  std::vector<Path> t;
  t.reserve(elements.size());
  for (const auto& e : elements) t.push_back(tip(e, order));
  return t;
}

Path tip(const AlgebraElement& x, const AdmissibleOrder& ord) {
  if (x.is_zero()) throw domain_error("tip of the zero element");
  const Path* best = nullptr;
  for (const auto& [p, c] : x.terms())
    if (!best || ord.compare(p, *best) > 0) best = &p;
  return *best;
}

Scalar tip_coefficient(const AlgebraElement& x, const AdmissibleOrder& ord) {
  return x.terms().at(tip(x, ord));
}

AlgebraElement reduce(const Quiver& q, const AlgebraElement& x,
                      const std::vector<AlgebraElement>& basis,
                      const AdmissibleOrder& ord) {
  struct TipInfo {
    const AlgebraElement* g;
    Path tip;
  };
  std::vector<TipInfo> tips;
  tips.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    Path t = tip(g, ord);
    if (t.is_trivial())
      throw domain_error("basis element with trivial tip; ideal not admissible");
    if (!tip_coefficient(g, ord).is_one())
      throw domain_error("reduce requires monic basis elements");
    tips.push_back(TipInfo{&g, std::move(t)});
  }

  AlgebraElement cur = x;
  for (;;) {
    // Largest reducible term, for a deterministic reduction sequence.
    const Path* target = nullptr;
    const TipInfo* hit = nullptr;
    int off = -1;
    for (const auto& [p, c] : cur.terms()) {
      if (target && ord.compare(p, *target) <= 0) continue;
      for (const auto& ti : tips) {
        int o = find_subword(p.word(), ti.tip.word());
        if (o >= 0) {
          target = &p;
          hit = &ti;
          off = o;
          break;
        }
      }
    }
    if (!target) return cur;
    Scalar c = cur.terms().at(*target);
    AlgebraElement repl =
        splice(q, *target, off, *hit->g, hit->tip.length()).scaled(c);
    cur = cur - repl;
  }
}

std::vector<AlgebraElement> overlap_relations(const Quiver& q,
                                              const AlgebraElement& x,
                                              const AlgebraElement& y,
                                              const AdmissibleOrder& ord) {
  std::vector<AlgebraElement> out;
  if (x.is_zero() || y.is_zero()) return out;
  const Path tx = tip(x, ord);
  const Path ty = tip(y, ord);
  const std::vector<int>& wx = tx.word();
  const std::vector<int>& wy = ty.word();
  int lx = static_cast<int>(wx.size()), ly = static_cast<int>(wy.size());
  // Proper overlap of length s: the last s symbols of tip(x) equal the first
  // s symbols of tip(y); then m is the tail of tip(y) and n the head of
  // tip(x), both nontrivial.
  for (int s = 1; s <= std::min(lx, ly) - 1; ++s) {
    if (!std::equal(wx.end() - s, wx.end(), wy.begin())) continue;
    std::vector<int> mw(wy.begin() + s, wy.end());
    std::vector<int> nw(wx.begin(), wx.end() - s);
    auto m = Path::from_word(q, mw);
    auto n = Path::from_word(q, nw);
    if (!m || !n) continue;  // cannot happen for subwords of valid paths
    out.push_back(x.mul_path_right(q, *m) - y.mul_path_left(q, *n));
  }
  return out;
}

int default_degree_cap(const PathAlgebraPresentation& pres) {
  return 2 * std::max(2, pres.max_relation_length()) + 2;
}

GroebnerBasis groebner_basis(std::shared_ptr<const PathAlgebraPresentation> pres,
                             const AdmissibleOrder& ord, int degree_cap) {
  const Quiver& q = pres->quiver;
  if (degree_cap < pres->max_relation_length())
    throw domain_error("degree cap " + std::to_string(degree_cap) +
                       " is below the longest relation (" +
                       std::to_string(pres->max_relation_length()) + ")");

  GroebnerBasis gb;
  gb.presentation = pres;
  gb.order = ord;
  gb.degree_cap = degree_cap;

  std::vector<AlgebraElement>& basis = gb.elements;
  for (const auto& r : pres->relations)
    if (!r.is_zero()) basis.push_back(make_monic(q, r, ord));
  inter_reduce(q, basis, ord);

  const int max_passes = 64;  // safety; tips below the cap are finite
  for (;;) {
    ++gb.completion_passes;
    if (gb.completion_passes > max_passes)
      throw domain_error("Groebner completion did not stabilize");
    bool added_below_cap = false;
    std::size_t pass_size = basis.size();
    for (std::size_t i = 0; i < pass_size; ++i) {
      for (std::size_t j = 0; j < pass_size; ++j) {
        for (const AlgebraElement& o :
             overlap_relations(q, basis[i], basis[j], ord)) {
          AlgebraElement r = reduce(q, o, basis, ord);
          if (r.is_zero()) continue;
          r = make_monic(q, r, ord);
          if (tip(r, ord).length() > degree_cap) {
            ++gb.discarded_above_cap;
            continue;
          }
          basis.push_back(std::move(r));
          added_below_cap = true;
        }
      }
    }
    if (!added_below_cap) {
      gb.complete_below_cap = true;
      break;
    }
    inter_reduce(q, basis, ord);
  }
  inter_reduce(q, basis, ord);

  // Soundness: every input relation reduces to zero.
  for (const auto& r : pres->relations)
    if (!reduce(q, r, basis, ord).is_zero())
      throw domain_error("internal: input relation does not reduce to zero");
  return gb;
}

NormalBasis normal_basis(std::shared_ptr<const GroebnerBasis> gb) {
  if (!gb->complete_below_cap)
    throw domain_error("normal_basis requires a basis complete below the cap");
  const Quiver& q = gb->presentation->quiver;
  const AdmissibleOrder& ord = gb->order;

  std::vector<std::vector<int>> tip_words;
  for (const auto& e : gb->elements)
    tip_words.push_back(tip(e, ord).word());

  NormalBasis nb;
  nb.gb = gb;

  std::vector<Path> level;
  for (int v = 0; v < q.vertex_count(); ++v) level.push_back(Path::trivial(v));

  int length = 0;
  while (!level.empty()) {
    if (length > gb->degree_cap)
      throw NotFiniteDimensionalAtCap(gb->degree_cap,
                                      static_cast<int>(level.size()));
    std::sort(level.begin(), level.end(),
              [&](const Path& a, const Path& b) { return ord.less(a, b); });
    nb.count_by_length.push_back(static_cast<int>(level.size()));
    for (const Path& p : level) {
      nb.index.emplace(p, static_cast<int>(nb.paths.size()));
      nb.paths.push_back(p);
    }

    std::vector<Path> next;
    for (const Path& p : level) {
      for (int a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).src != p.target()) continue;
        std::vector<int> w;
        w.reserve(p.length() + 1);
        w.push_back(a);
        w.insert(w.end(), p.word().begin(), p.word().end());
        // All proper subwords of w avoiding position 0 lie inside p and are
        // normal; only prefixes of w can be tips.
        bool blocked = false;
        for (const auto& tw : tip_words) {
          if (tw.size() > w.size()) continue;
          if (std::equal(tw.begin(), tw.end(), w.begin())) {
            blocked = true;
            break;
          }
        }
        if (!blocked) next.push_back(*Path::from_word(q, w));
      }
    }
    level = std::move(next);
    ++length;
  }
  nb.termination_length = length;
  return nb;
}

std::vector<int> NormalBasis::paths_with_source(int v) const {
  std::vector<int> r;
  for (int i = 0; i < dim(); ++i)
    if (paths[i].source() == v) r.push_back(i);
  return r;
}

std::vector<int> NormalBasis::paths_with_target(int v) const {
  std::vector<int> r;
  for (int i = 0; i < dim(); ++i)
    if (paths[i].target() == v) r.push_back(i);
  return r;
}

std::optional<int> NormalBasis::find(const Path& p) const {
  auto it = index.find(p);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<Scalar> NormalBasis::coordinates(const AlgebraElement& x) const {
  const Quiver& q = quiver();
  AlgebraElement nf = reduce(q, x, gb->elements, gb->order);
  std::vector<Scalar> v = zero_vector(field(), paths.size());
  for (const auto& [p, c] : nf.terms()) {
    auto i = find(p);
    if (!i)
      throw domain_error("normal form has a path outside the normal basis: " +
                         p.str(q));
    v[*i] = c;
  }
  return v;
}

AvoidanceReport avoidance_report(const PathAlgebraPresentation& pres,
                                 const QuiverElement& x, const GroebnerBasis& gb,
                                 const NormalBasis& nb) {
  const Quiver& q = pres.quiver;
  AvoidanceReport rep;

  rep.relations_avoid_x = true;
  for (const auto& r : pres.relations)
    if (r.involves(q, x)) {
      rep.relations_avoid_x = false;
      break;
    }

  // Cor 3.4-style closure of the normal basis under p1 * x * p2.
  rep.basis_closed = true;
  Path xpath = x.is_vertex ? Path::trivial(x.id) : Path::of_arrow(q, x.id);
  for (const Path& p2 : nb.paths) {
    if (p2.target() != xpath.source()) continue;
    auto xp2 = compose(q, xpath, p2);
    for (const Path& p1 : nb.paths) {
      if (p1.source() != xpath.target()) continue;
      auto p = compose(q, p1, *xp2);
      if (!p) continue;
      if (!nb.find(*p)) {
        rep.basis_closed = false;
        if (!rep.counterexample) rep.counterexample = *p;
        break;
      }
    }
    if (!rep.basis_closed) break;
  }

  rep.gb_avoids_x = true;
  if (rep.relations_avoid_x) {
    for (const auto& g : gb.elements)
      if (g.involves(q, x)) {
        rep.gb_avoids_x = false;
        for (const auto& [p, c] : g.terms())
          if (path_involves(q, p, x) && !rep.counterexample) rep.counterexample = p;
        break;
      }
  }
  return rep;
}

}  // namespace fdimlab
