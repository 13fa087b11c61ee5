#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fdimlab/scalar.hpp"

namespace fdimlab {

struct Arrow {
  std::string name;
  int src;
  int tgt;
};

// Finite quiver Q = (Q0, Q1). Vertex and arrow names are unique; endpoints
// must be declared vertices.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_name(int v) const { return vertices_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<int> vertex_id(const std::string& name) const;
  std::optional<int> arrow_id(const std::string& name) const;
  std::vector<int> arrows_from(int v) const;
  std::vector<int> arrows_into(int v) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_ids_;
  std::map<std::string, int> arrow_ids_;
};

// A path, stored as its written word: word()[0] is the LAST arrow applied,
// matching the paper-style notation where the word "ba" means "a first, then
// b". Trivial paths carry just their vertex. Source/target are cached.
class Path {
 public:
  static Path trivial(int v);
  static Path of_arrow(const Quiver& q, int a);
  // Builds a path from a written word (leftmost symbol applied last);
  // nullopt when consecutive arrows do not compose.
  static std::optional<Path> from_word(const Quiver& q, const std::vector<int>& word);

  bool is_trivial() const { return word_.empty(); }
  int length() const { return static_cast<int>(word_.size()); }
  int source() const { return src_; }
  int target() const { return tgt_; }
  const std::vector<int>& word() const { return word_; }
  int trivial_vertex() const { return src_; }

  // Structural order used for containers: by length, then written word, with
  // trivial paths ordered by vertex. (Admissible comparison lives in
  // AdmissibleOrder.)
  std::strong_ordering operator<=>(const Path& o) const;
  bool operator==(const Path& o) const = default;

  bool contains_word(const std::vector<int>& w) const;
  // Vertices visited, in application order (length+1 entries).
  std::vector<int> visited_vertices(const Quiver& q) const;
  bool passes_through_vertex(const Quiver& q, int v) const;
  bool uses_arrow(int a) const;

  std::string str(const Quiver& q) const;  // "b*a" or "e(v)"

 private:
  Path() = default;
  int src_ = -1, tgt_ = -1;
  std::vector<int> word_;
};

// compose(p, q) = "q then p": defined when target(q) == source(p); the
// written word of the result is word(p) ++ word(q).
std::optional<Path> compose(const Quiver& q, const Path& p, const Path& r);

// Element of Q0 ∪ Q1 (a vertex or an arrow), as used by the avoidance
// analysis and the two-sided-ideal constructions.
struct QuiverElement {
  bool is_vertex;
  int id;
  static std::optional<QuiverElement> by_name(const Quiver& q, const std::string& name);
  std::string str(const Quiver& q) const;
};

// True when some factorization p = p1 * x * p2 (p1, p2 paths, possibly
// trivial) exists: for an arrow this means the word uses it; for a vertex it
// means the path passes through it.
bool path_involves(const Quiver& q, const Path& p, const QuiverElement& x);

}  // namespace fdimlab
