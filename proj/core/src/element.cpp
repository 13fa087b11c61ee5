#include "fdimlab/element.hpp"

#include <algorithm>

namespace fdimlab {

AdmissibleOrder AdmissibleOrder::declaration_order(const Quiver& q) {
  AdmissibleOrder o;
  o.rank_.resize(q.arrow_count());
  for (int a = 0; a < q.arrow_count(); ++a) o.rank_[a] = a;
  return o;
}

AdmissibleOrder AdmissibleOrder::from_precedence(
    const Quiver& q, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != q.arrow_count())
    throw domain_error("precedence list must name every arrow exactly once");
  AdmissibleOrder o;
  o.rank_.assign(q.arrow_count(), -1);
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto a = q.arrow_id(names[i]);
    if (!a) throw domain_error("unknown arrow in precedence list: " + names[i]);
    if (o.rank_[*a] != -1)
      throw domain_error("arrow repeated in precedence list: " + names[i]);
    o.rank_[*a] = static_cast<int>(i);
  }
  return o;
}

std::strong_ordering AdmissibleOrder::compare(const Path& p, const Path& q) const {
  if (auto c = p.length() <=> q.length(); c != 0) return c;
  if (p.is_trivial()) return p.trivial_vertex() <=> q.trivial_vertex();
  const auto& pw = p.word();
  const auto& qw = q.word();
  for (std::size_t i = 0; i < pw.size(); ++i)
    if (auto c = rank_[pw[i]] <=> rank_[qw[i]]; c != 0) return c;
  return std::strong_ordering::equal;
}

AlgebraElement AlgebraElement::from_path(const Field& f, const Path& p,
                                         const Scalar& c) {
  AlgebraElement e(f);
  e.add_term(p, c);
  return e;
}

void AlgebraElement::add_term(const Path& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (const auto& [p, c] : o.terms_) r.add_term(p, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (const auto& [p, c] : o.terms_) r.add_term(p, -c);
  return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement r(field_);
  if (c.is_zero()) return r;
  for (const auto& [p, x] : terms_) r.terms_.emplace(p, x * c);
  return r;
}

AlgebraElement AlgebraElement::mul_path_left(const Quiver& q, const Path& p) const {
  AlgebraElement r(field_);
  for (const auto& [t, c] : terms_)
    if (auto pc = compose(q, p, t)) r.add_term(*pc, c);
  return r;
}

AlgebraElement AlgebraElement::mul_path_right(const Quiver& q, const Path& p) const {
  AlgebraElement r(field_);
  for (const auto& [t, c] : terms_)
    if (auto pc = compose(q, t, p)) r.add_term(*pc, c);
  return r;
}

AlgebraElement AlgebraElement::mul(const Quiver& q, const AlgebraElement& o) const {
  AlgebraElement r(field_);
  for (const auto& [p, c] : terms_)
    for (const auto& [t, d] : o.terms_)
      if (auto pc = compose(q, p, t)) r.add_term(*pc, c * d);
  return r;
}

bool AlgebraElement::is_uniform() const {
  if (terms_.empty()) return true;
  int s = terms_.begin()->first.source();
  int t = terms_.begin()->first.target();
  for (const auto& [p, c] : terms_)
    if (p.source() != s || p.target() != t) return false;
  return true;
}

int AlgebraElement::uniform_source() const {
  if (terms_.empty() || !is_uniform())
    throw domain_error("uniform_source on a non-uniform element");
  return terms_.begin()->first.source();
}

int AlgebraElement::uniform_target() const {
  if (terms_.empty() || !is_uniform())
    throw domain_error("uniform_target on a non-uniform element");
  return terms_.begin()->first.target();
}

std::vector<AlgebraElement> AlgebraElement::uniform_components() const {
  std::map<std::pair<int, int>, AlgebraElement> buckets;
  for (const auto& [p, c] : terms_) {
    auto key = std::make_pair(p.source(), p.target());
    auto it = buckets.find(key);
    if (it == buckets.end())
      it = buckets.emplace(key, AlgebraElement(field_)).first;
    it->second.add_term(p, c);
  }
  std::vector<AlgebraElement> r;
  r.reserve(buckets.size());
  for (auto& [k, e] : buckets) r.push_back(std::move(e));
  return r;
}

int AlgebraElement::max_term_length() const {
  int m = -1;
  for (const auto& [p, c] : terms_) m = std::max(m, p.length());
  return m;
}

int AlgebraElement::min_term_length() const {
  int m = -1;
  for (const auto& [p, c] : terms_)
    m = (m < 0) ? p.length() : std::min(m, p.length());
  return m;
}

bool AlgebraElement::involves(const Quiver& q, const QuiverElement& x) const {
  for (const auto& [p, c] : terms_)
    if (path_involves(q, p, x)) return true;
  return false;
}

std::string AlgebraElement::str(const Quiver& q, const AdmissibleOrder* ord) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Path, Scalar>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  if (ord) {
    std::stable_sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
      return ord->compare(a->first, b->first) > 0;  // tip first
    });
  }
  std::string s;
  bool first = true;
  for (auto* t : ts) {
    const Scalar& c = t->second;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    if (mag != "1") s += mag + "*";
    s += t->first.str(q);
  }
  return s;
}

}  // namespace fdimlab
