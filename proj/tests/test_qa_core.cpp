#include <doctest.h>

#include <random>

#include "fdimlab/demo.hpp"
#include "fdimlab/presentation.hpp"

using namespace fdimlab;

namespace {

std::vector<Path> paths_up_to(const Quiver& q, int maxlen) {
  std::vector<Path> all;
  for (int v = 0; v < q.vertex_count(); ++v) all.push_back(Path::trivial(v));
  std::vector<Path> level = all;
  for (int l = 0; l < maxlen; ++l) {
    std::vector<Path> next;
    for (const Path& p : level)
      for (int a = 0; a < q.arrow_count(); ++a)
        if (q.arrow(a).src == p.target())
          next.push_back(*compose(q, Path::of_arrow(q, a), p));
    for (const Path& p : next) all.push_back(p);
    level = std::move(next);
  }
  return all;
}

}  // namespace

TEST_CASE("parse the C3 document") {
  PathAlgebraPresentation p = parse_algebra_spec(demo::c3());
  CHECK(p.quiver.vertex_count() == 3);
  CHECK(p.quiver.arrow_count() == 3);
  CHECK(p.relations.size() == 1);
  CHECK(p.relations[0].term_count() == 1);
  CHECK(p.relations[0].max_term_length() == 3);
  CHECK(p.field.is_rational());
}

TEST_CASE("parse the base field document") {
  PathAlgebraPresentation p = parse_algebra_spec("field QQ\nvertices v\n");
  CHECK(p.quiver.vertex_count() == 1);
  CHECK(p.quiver.arrow_count() == 0);
  CHECK(p.relations.empty());
}

TEST_CASE("parse the D4 document: four uniform relations") {
  PathAlgebraPresentation p = parse_algebra_spec(demo::d4());
  CHECK(p.quiver.vertex_count() == 4);
  CHECK(p.quiver.arrow_count() == 5);
  REQUIRE(p.relations.size() == 4);
  for (const auto& r : p.relations) CHECK(r.is_uniform());
}

TEST_CASE("non-uniform expressions split into uniform components") {
  // b*a (1->4) and e*d (3->1) are parallel to nothing in common.
  std::string doc =
      "field QQ\nvertices 1 2 3 4\n"
      "arrow a : 1 -> 2\narrow b : 2 -> 4\narrow d : 3 -> 4\narrow e : 4 -> 1\n"
      "relations:\nb*a + e*d\n";
  PathAlgebraPresentation p = parse_algebra_spec(doc);
  CHECK(p.relations.size() == 2);
  for (const auto& r : p.relations) CHECK(r.is_uniform());
}

TEST_CASE("parser errors carry positions") {
  CHECK_THROWS_AS(parse_algebra_spec("field QQ\nvertices 1 2\narrow a : 1 -> 9\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_algebra_spec("field QQ\nvertices 1\nrelations:\nzz\n"),
                  ParseError);
  // Non-composable product is an error, not silent zero.
  std::string doc =
      "field QQ\nvertices 1 2 3\narrow a : 1 -> 2\narrow b : 2 -> 3\n"
      "relations:\na*b\n";
  try {
    parse_algebra_spec(doc);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("non-composable") != std::string::npos);
    CHECK(e.line == 6);
  }
  // Relations must have all paths of length >= 2.
  CHECK_THROWS_AS(
      parse_algebra_spec("field QQ\nvertices 1 2\narrow a : 1 -> 2\nrelations:\na\n"),
      ParseError);
  // Missing field.
  CHECK_THROWS_AS(parse_algebra_spec("vertices 1 2\nrelations:\n"), ParseError);
}

TEST_CASE("compose follows the right-to-left convention") {
  PathAlgebraPresentation p = parse_algebra_spec(demo::d4());
  const Quiver& q = p.quiver;
  Path a = Path::of_arrow(q, *q.arrow_id("a"));  // 1 -> 2
  Path b = Path::of_arrow(q, *q.arrow_id("b"));  // 2 -> 4
  auto ba = compose(q, b, a);  // "a then b"
  REQUIRE(ba.has_value());
  CHECK(ba->source() == *q.vertex_id("1"));
  CHECK(ba->target() == *q.vertex_id("4"));
  CHECK(ba->length() == 2);
  CHECK(ba->str(q) == "b*a");
  // Trivial paths are two-sided units.
  CHECK(*compose(q, Path::trivial(a.target()), a) == a);
  CHECK(*compose(q, a, Path::trivial(a.source())) == a);
  // Non-composable is the zero marker.
  CHECK(!compose(q, a, b).has_value());
}

TEST_CASE("length-lex admissible order") {
  PathAlgebraPresentation p = parse_algebra_spec(demo::d4());
  const Quiver& q = p.quiver;
  AdmissibleOrder ord = AdmissibleOrder::declaration_order(q);  // a<b<g<d<e
  Path a = Path::of_arrow(q, *q.arrow_id("a"));
  Path ba = *compose(q, Path::of_arrow(q, *q.arrow_id("b")), a);
  Path dg = *compose(q, Path::of_arrow(q, *q.arrow_id("d")),
                     Path::of_arrow(q, *q.arrow_id("g")));
  CHECK(ord.compare(a, ba) < 0);  // length dominates
  CHECK(ord.compare(ba, ba) == 0);
  CHECK(ord.compare(ba, dg) < 0);  // b < d at the first written symbol
  // Custom precedence reverses the verdict.
  AdmissibleOrder rev = AdmissibleOrder::from_precedence(q, {"e", "d", "g", "b", "a"});
  CHECK(rev.compare(ba, dg) > 0);
}

TEST_CASE("composition is associative on all short paths") {
  for (const auto& fx : demo::all_fixtures()) {
    PathAlgebraPresentation p = parse_algebra_spec(fx.doc);
    const Quiver& q = p.quiver;
    auto all = paths_up_to(q, 3);
    for (const Path& x : all)
      for (const Path& y : all) {
        auto xy = compose(q, x, y);
        for (const Path& z : all) {
          auto yz = compose(q, y, z);
          auto left = xy ? compose(q, *xy, z) : std::nullopt;
          auto right = yz ? compose(q, x, *yz) : std::nullopt;
          CHECK(left.has_value() == right.has_value());
          if (left && right) CHECK(*left == *right);
        }
      }
  }
}

TEST_CASE("order admissibility on random composable triples") {
  std::mt19937_64 rng(20260810);
  for (const auto& fx : demo::all_fixtures()) {
    PathAlgebraPresentation pres = parse_algebra_spec(fx.doc);
    const Quiver& q = pres.quiver;
    if (q.arrow_count() == 0) continue;
    AdmissibleOrder ord = AdmissibleOrder::declaration_order(q);
    auto all = paths_up_to(q, 4);
    for (int trial = 0; trial < 300; ++trial) {
      const Path& p = all[rng() % all.size()];
      const Path& s = all[rng() % all.size()];
      const Path& r = all[rng() % all.size()];
      if (ord.compare(p, s) < 0) {
        auto rp = compose(q, r, p), rs = compose(q, r, s);
        if (rp && rs) CHECK(ord.compare(*rp, *rs) < 0);
        auto pr = compose(q, p, r), sr = compose(q, s, r);
        if (pr && sr) CHECK(ord.compare(*pr, *sr) < 0);
      }
      // Every proper subpath is smaller.
      if (p.length() >= 1) {
        for (int i = 0; i < p.length(); ++i)
          for (int len = 1; i + len <= p.length(); ++len) {
            if (len == p.length()) continue;
            std::vector<int> w(p.word().begin() + i, p.word().begin() + i + len);
            CHECK(ord.compare(*Path::from_word(q, w), p) < 0);
          }
      }
    }
  }
}

TEST_CASE("pretty-print round trip") {
  for (const auto& fx : demo::all_fixtures()) {
    PathAlgebraPresentation p = parse_algebra_spec(fx.doc);
    std::string normalized = pretty_print(p);
    PathAlgebraPresentation p2 = parse_algebra_spec(normalized);
    CHECK(pretty_print(p2) == normalized);  // identity on normalized documents
    CHECK(p2.quiver.vertices() == p.quiver.vertices());
    CHECK(p2.relations.size() == p.relations.size());
    for (std::size_t i = 0; i < p.relations.size(); ++i)
      CHECK(p2.relations[i] == p.relations[i]);
  }
}

TEST_CASE("GF(p) scalars and fields") {
  Field f2 = Field::prime(2);
  CHECK(Field::parse("GF(2)") == f2);
  CHECK(Field::parse("QQ").is_rational());
  CHECK_THROWS_AS(Field::prime(4), domain_error);
  Scalar a = Scalar::from_int(f2, 3);
  CHECK(a.is_one());
  CHECK((a + a).is_zero());
  Scalar half = Scalar::from_mpq(Field::prime(7), mpq_class(1, 2));
  CHECK(half.residue() == 4);  // 2 * 4 = 8 = 1 mod 7
  CHECK_THROWS_AS(Scalar::from_int(f2, 0).inverse(), domain_error);
}
