#include "oracles.hpp"

#include <algorithm>

namespace fdimlab::oracle {

std::vector<Path> paths_of_length(const Quiver& q, int len) {
  std::vector<Path> out;
  if (len == 0) {
    for (int v = 0; v < q.vertex_count(); ++v) out.push_back(Path::trivial(v));
    return out;
  }
  // Extend written words on the left (later arrows applied last).
  std::vector<std::vector<int>> words;
  for (int a = 0; a < q.arrow_count(); ++a) words.push_back({a});
  for (int l = 1; l < len; ++l) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words)
      for (int a = 0; a < q.arrow_count(); ++a)
        if (q.arrow(a).src == q.arrow(w.front()).tgt) {
          std::vector<int> nw;
          nw.push_back(a);
          nw.insert(nw.end(), w.begin(), w.end());
          next.push_back(std::move(nw));
        }
    words = std::move(next);
  }
  for (const auto& w : words) out.push_back(*Path::from_word(q, w));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Spanning vectors of the degree-l piece of I over the degree-l path basis.
std::vector<std::vector<Scalar>> ideal_span_at(
    const PathAlgebraPresentation& pres, int l,
    const std::map<Path, int>& index) {
  const Quiver& q = pres.quiver;
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : pres.relations) {
    int d = r.max_term_length();
    if (r.min_term_length() != d)
      throw domain_error("oracle requires homogeneous relations");
    for (int lp = 0; lp + d <= l; ++lp) {
      int lq = l - d - lp;
      for (const Path& p : paths_of_length(q, lp)) {
        AlgebraElement pr = r.mul_path_left(q, p);
        if (pr.is_zero()) continue;
        for (const Path& s : paths_of_length(q, lq)) {
          AlgebraElement prs = pr.mul_path_right(q, s);
          if (prs.is_zero()) continue;
          std::vector<Scalar> row = zero_vector(pres.field, index.size());
          for (const auto& [path, c] : prs.terms()) row[index.at(path)] = c;
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

}  // namespace

std::vector<int> quotient_dims_by_length(const PathAlgebraPresentation& pres,
                                         int maxlen) {
  const Quiver& q = pres.quiver;
  std::vector<int> dims;
  for (int l = 0; l <= maxlen; ++l) {
    std::vector<Path> paths = paths_of_length(q, l);
    std::map<Path, int> index;
    for (std::size_t i = 0; i < paths.size(); ++i)
      index.emplace(paths[i], static_cast<int>(i));
    SpanBuilder sp(pres.field, paths.size());
    for (auto& row : ideal_span_at(pres, l, index)) sp.add(row);
    dims.push_back(static_cast<int>(paths.size() - sp.rank()));
  }
  return dims;
}

bool in_ideal_homogeneous(const PathAlgebraPresentation& pres,
                          const AlgebraElement& x) {
  if (x.is_zero()) return true;
  int l = x.max_term_length();
  if (x.min_term_length() != l)
    throw domain_error("oracle requires a homogeneous element");
  const Quiver& q = pres.quiver;
  std::vector<Path> paths = paths_of_length(q, l);
  std::map<Path, int> index;
  for (std::size_t i = 0; i < paths.size(); ++i)
    index.emplace(paths[i], static_cast<int>(i));
  SpanBuilder sp(pres.field, paths.size());
  for (auto& row : ideal_span_at(pres, l, index)) sp.add(row);
  std::vector<Scalar> v = zero_vector(pres.field, paths.size());
  for (const auto& [path, c] : x.terms()) v[index.at(path)] = c;
  return sp.contains(v);
}

int count_subword_free_walks(const Quiver& q,
                             const std::vector<std::vector<int>>& forbidden,
                             int maxlen) {
  int count = q.vertex_count();
  std::vector<std::vector<int>> words;
  for (int a = 0; a < q.arrow_count(); ++a) words.push_back({a});
  for (int l = 1; l <= maxlen; ++l) {
    std::vector<std::vector<int>> keep;
    for (auto& w : words) {
      bool bad = false;
      for (const auto& f : forbidden) {
        if (f.size() > w.size()) continue;
        for (std::size_t i = 0; i + f.size() <= w.size() && !bad; ++i)
          bad = std::equal(f.begin(), f.end(), w.begin() + i);
        if (bad) break;
      }
      if (!bad) keep.push_back(std::move(w));
    }
    count += static_cast<int>(keep.size());
    std::vector<std::vector<int>> next;
    for (const auto& w : keep)
      for (int a = 0; a < q.arrow_count(); ++a)
        if (q.arrow(a).src == q.arrow(w.front()).tgt) {
          std::vector<int> nw;
          nw.push_back(a);
          nw.insert(nw.end(), w.begin(), w.end());
          next.push_back(std::move(nw));
        }
    words = std::move(next);
  }
  return count;
}

}  // namespace fdimlab::oracle
