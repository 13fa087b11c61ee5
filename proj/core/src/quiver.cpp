#include "fdimlab/quiver.hpp"

#include <algorithm>

namespace fdimlab {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (int v = 0; v < vertex_count(); ++v) {
    if (!vertex_ids_.emplace(vertices_[v], v).second)
      throw domain_error("duplicate vertex name: " + vertices_[v]);
  }
  for (int a = 0; a < arrow_count(); ++a) {
    const Arrow& ar = arrows_[a];
    if (!arrow_ids_.emplace(ar.name, a).second)
      throw domain_error("duplicate arrow name: " + ar.name);
    if (vertex_ids_.count(ar.name))
      throw domain_error("arrow name collides with vertex name: " + ar.name);
    if (ar.src < 0 || ar.src >= vertex_count() || ar.tgt < 0 ||
        ar.tgt >= vertex_count())
      throw domain_error("arrow endpoint out of range: " + ar.name);
  }
}

std::optional<int> Quiver::vertex_id(const std::string& name) const {
  auto it = vertex_ids_.find(name);
  if (it == vertex_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Quiver::arrow_id(const std::string& name) const {
  auto it = arrow_ids_.find(name);
  if (it == arrow_ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Quiver::arrows_from(int v) const {
  std::vector<int> r;
  for (int a = 0; a < arrow_count(); ++a)
    if (arrows_[a].src == v) r.push_back(a);
  return r;
}

std::vector<int> Quiver::arrows_into(int v) const {
  std::vector<int> r;
  for (int a = 0; a < arrow_count(); ++a)
    if (arrows_[a].tgt == v) r.push_back(a);
  return r;
}

Path Path::trivial(int v) {
  Path p;
  p.src_ = p.tgt_ = v;
  return p;
}

Path Path::of_arrow(const Quiver& q, int a) {
  Path p;
  p.word_ = {a};
  p.src_ = q.arrow(a).src;
  p.tgt_ = q.arrow(a).tgt;
  return p;
}

std::optional<Path> Path::from_word(const Quiver& q, const std::vector<int>& word) {
  if (word.empty()) throw domain_error("from_word requires a nonempty word");
  // word[k] applied after word[k+1]: need src(word[k]) == tgt(word[k+1]).
  for (std::size_t k = 0; k + 1 < word.size(); ++k)
    if (q.arrow(word[k]).src != q.arrow(word[k + 1]).tgt) return std::nullopt;
  Path p;
  p.word_ = word;
  p.src_ = q.arrow(word.back()).src;
  p.tgt_ = q.arrow(word.front()).tgt;
  return p;
}

std::strong_ordering Path::operator<=>(const Path& o) const {
  if (auto c = length() <=> o.length(); c != 0) return c;
  if (is_trivial()) return src_ <=> o.src_;
  return std::lexicographical_compare_three_way(
      word_.begin(), word_.end(), o.word_.begin(), o.word_.end());
}

bool Path::contains_word(const std::vector<int>& w) const {
  if (w.empty() || w.size() > word_.size()) return false;
  for (std::size_t i = 0; i + w.size() <= word_.size(); ++i)
    if (std::equal(w.begin(), w.end(), word_.begin() + i)) return true;
  return false;
}

std::vector<int> Path::visited_vertices(const Quiver& q) const {
  std::vector<int> vs;
  vs.reserve(word_.size() + 1);
  vs.push_back(src_);
  for (auto it = word_.rbegin(); it != word_.rend(); ++it)
    vs.push_back(q.arrow(*it).tgt);
  return vs;
}

bool Path::passes_through_vertex(const Quiver& q, int v) const {
  if (is_trivial()) return src_ == v;
  auto vs = visited_vertices(q);
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

bool Path::uses_arrow(int a) const {
  return std::find(word_.begin(), word_.end(), a) != word_.end();
}

std::string Path::str(const Quiver& q) const {
  if (is_trivial()) return "e(" + q.vertex_name(src_) + ")";
  std::string s;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) s += "*";
    s += q.arrow(word_[i]).name;
  }
  return s;
}

std::optional<Path> compose(const Quiver& q, const Path& p, const Path& r) {
  if (r.target() != p.source()) return std::nullopt;
  if (p.is_trivial()) return r;
  if (r.is_trivial()) return p;
  std::vector<int> w = p.word();
  w.insert(w.end(), r.word().begin(), r.word().end());
  return Path::from_word(q, w);
}

std::optional<QuiverElement> QuiverElement::by_name(const Quiver& q,
                                                    const std::string& name) {
  if (auto v = q.vertex_id(name)) return QuiverElement{true, *v};
  if (auto a = q.arrow_id(name)) return QuiverElement{false, *a};
  return std::nullopt;
}

std::string QuiverElement::str(const Quiver& q) const {
  return is_vertex ? "e(" + q.vertex_name(id) + ")" : q.arrow(id).name;
}

bool path_involves(const Quiver& q, const Path& p, const QuiverElement& x) {
  return x.is_vertex ? p.passes_through_vertex(q, x.id) : p.uses_arrow(x.id);
}

}  // namespace fdimlab
