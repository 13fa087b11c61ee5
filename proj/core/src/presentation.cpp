#include "fdimlab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fdimlab {

namespace {

struct Token {
  enum Kind { Ident, Integer, Sym, End } kind = End;
  std::string text;
  long long value = 0;
  int line = 0, col = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }
  bool at_end() const { return tok_.kind == Token::End; }

 private:
  void advance() {
    skip_ws_and_comments();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= s_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_')) {
        id += s_[pos_];
        bump();
      }
      tok_.kind = Token::Ident;
      tok_.text = id;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        num += s_[pos_];
        bump();
      }
      // Identifiers may not start with a digit, but vertex names like "1" are
      // common; the parser decides from context whether this is a name or a
      // coefficient.
      tok_.kind = Token::Integer;
      tok_.text = num;
      tok_.value = std::stoll(num);
      return;
    }
    if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
      bump();
      bump();
      tok_.kind = Token::Sym;
      tok_.text = "->";
      return;
    }
    static const std::string singles = ":*+-;()=,";
    if (singles.find(c) != std::string::npos) {
      bump();
      tok_.kind = Token::Sym;
      tok_.text = std::string(1, c);
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

  void skip_ws_and_comments() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(msg, t.line, t.col);
}

bool is_word(const Token& t, const std::string& w) {
  return (t.kind == Token::Ident || t.kind == Token::Integer) && t.text == w;
}

std::string name_of(const Token& t) {
  if (t.kind != Token::Ident && t.kind != Token::Integer)
    fail(t, "expected a name");
  return t.text;
}

class DocParser {
 public:
  explicit DocParser(const std::string& text) : lex_(text) {}

  PathAlgebraPresentation parse() {
    bool have_field = false, have_vertices = false;
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<std::string> names;  // vertex names seen so far
    Field field = Field::rationals();

    auto build_quiver = [&]() { return Quiver(vertices, arrows); };

    while (!lex_.at_end()) {
      Token t = lex_.peek();
      if (is_word(t, "field")) {
        lex_.next();
        field = parse_field();
        have_field = true;
      } else if (is_word(t, "vertices")) {
        lex_.next();
        if (have_vertices) fail(t, "duplicate vertices line");
        int line = t.line;
        while (!lex_.at_end() && lex_.peek().line == line) {
          Token v = lex_.next();
          vertices.push_back(name_of(v));
        }
        if (vertices.empty()) fail(t, "vertices line names no vertices");
        have_vertices = true;
      } else if (is_word(t, "arrow")) {
        lex_.next();
        if (!have_vertices) fail(t, "arrow declared before vertices");
        Token nm = lex_.next();
        std::string an = name_of(nm);
        expect_sym(":");
        Token st = lex_.next();
        expect_sym("->");
        Token tt = lex_.next();
        int src = find_vertex(vertices, st);
        int tgt = find_vertex(vertices, tt);
        arrows.push_back(Arrow{an, src, tgt});
      } else if (is_word(t, "relations")) {
        lex_.next();
        expect_sym(":");
        if (!have_field) fail(t, "relations before field declaration");
        PathAlgebraPresentation p;
        p.quiver = build_quiver();
        p.field = field;
        parse_relations(p);
        if (!lex_.at_end()) fail(lex_.peek(), "content after relations section");
        return p;
      } else {
        fail(t, "expected field, vertices, arrow, or relations");
      }
    }
    if (!have_field) {
      Token t = lex_.peek();
      fail(t, "missing field declaration");
    }
    if (!have_vertices) {
      Token t = lex_.peek();
      fail(t, "missing vertices declaration");
    }
    PathAlgebraPresentation p;
    p.quiver = build_quiver();
    p.field = field;
    return p;
  }

  AlgebraElement parse_full_expression(const PathAlgebraPresentation& p) {
    AlgebraElement e = parse_expression(p);
    if (!lex_.at_end()) fail(lex_.peek(), "trailing content after expression");
    return e;
  }

  // Expression parsing against a fixed presentation (also used standalone).
  AlgebraElement parse_expression(const PathAlgebraPresentation& p) {
    AlgebraElement e(p.field);
    bool neg = false;
    if (lex_.peek().kind == Token::Sym &&
        (lex_.peek().text == "-" || lex_.peek().text == "+")) {
      neg = lex_.next().text == "-";
    }
    parse_term(p, e, neg);
    while (lex_.peek().kind == Token::Sym &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      bool minus = lex_.next().text == "-";
      parse_term(p, e, minus);
    }
    return e;
  }

 private:
  Field parse_field() {
    Token t = lex_.next();
    if (is_word(t, "QQ")) return Field::rationals();
    if (is_word(t, "GF")) {
      expect_sym("(");
      Token pt = lex_.next();
      if (pt.kind != Token::Integer) fail(pt, "expected a prime after GF(");
      expect_sym(")");
      try {
        return Field::prime(static_cast<std::uint32_t>(pt.value));
      } catch (const domain_error& e) {
        fail(pt, e.what());
      }
    }
    fail(t, "expected QQ or GF(p)");
  }

  void expect_sym(const std::string& s) {
    Token t = lex_.next();
    if (t.kind != Token::Sym || t.text != s) fail(t, "expected '" + s + "'");
  }

  int find_vertex(const std::vector<std::string>& vertices, const Token& t) {
    std::string n = name_of(t);
    auto it = std::find(vertices.begin(), vertices.end(), n);
    if (it == vertices.end()) fail(t, "unknown vertex name: " + n);
    return static_cast<int>(it - vertices.begin());
  }

  void parse_relations(PathAlgebraPresentation& p) {
    while (!lex_.at_end()) {
      if (lex_.peek().kind == Token::Sym && lex_.peek().text == ";") {
        lex_.next();
        continue;
      }
      Token start = lex_.peek();
      AlgebraElement e = parse_expression(p);
      if (e.is_zero())
        fail(start, "relation expression is zero");
      for (AlgebraElement& comp : e.uniform_components()) {
        if (comp.min_term_length() < 2)
          fail(start, "relation contains a path of length < 2");
        p.relations.push_back(std::move(comp));
      }
      if (!lex_.at_end()) {
        Token t = lex_.peek();
        if (t.kind == Token::Sym && t.text == ";")
          lex_.next();
        else
          fail(t, "expected ';' between relation expressions");
      }
    }
  }

  void parse_term(const PathAlgebraPresentation& p, AlgebraElement& acc, bool neg) {
    Scalar coeff = Scalar::one(p.field);
    Token t = lex_.peek();
    if (t.kind == Token::Integer && !p.quiver.arrow_id(t.text) &&
        !(t.text == "e")) {
      // Integer not naming an arrow: coefficient.
      lex_.next();
      coeff = Scalar::from_int(p.field, t.value);
      expect_sym("*");
    }
    if (neg) coeff = -coeff;
    Path path = parse_factor(p);
    while (lex_.peek().kind == Token::Sym && lex_.peek().text == "*") {
      lex_.next();
      Token ft = lex_.peek();
      Path f = parse_factor(p);
      auto c = compose(p.quiver, path, f);
      if (!c)
        fail(ft, "non-composable product (the written product denotes 0): '" +
                     path.str(p.quiver) + "*" + f.str(p.quiver) + "'");
      path = *c;
    }
    acc.add_term(path, coeff);
  }

  Path parse_factor(const PathAlgebraPresentation& p) {
    Token t = lex_.next();
    std::string n = name_of(t);
    if (n == "e" && lex_.peek().kind == Token::Sym && lex_.peek().text == "(" &&
        !p.quiver.arrow_id("e")) {
      lex_.next();
      Token vt = lex_.next();
      auto v = p.quiver.vertex_id(name_of(vt));
      if (!v) fail(vt, "unknown vertex name: " + vt.text);
      expect_sym(")");
      return Path::trivial(*v);
    }
    auto a = p.quiver.arrow_id(n);
    if (a) return Path::of_arrow(p.quiver, *a);
    if (p.quiver.vertex_id(n))
      fail(t, "'" + n + "' names a vertex; write e(" + n + ") for the trivial path");
    fail(t, "unknown arrow name: " + n);
  }

  Lexer lex_;
};

}  // namespace

bool PathAlgebraPresentation::relations_homogeneous() const {
  for (const auto& r : relations)
    if (r.min_term_length() != r.max_term_length()) return false;
  return true;
}

int PathAlgebraPresentation::max_relation_length() const {
  int m = 0;
  for (const auto& r : relations) m = std::max(m, r.max_term_length());
  return m;
}

PathAlgebraPresentation parse_algebra_spec(const std::string& text) {
  DocParser dp(text);
  return dp.parse();
}

std::string pretty_print(const PathAlgebraPresentation& p) {
  std::ostringstream os;
  os << "field " << p.field.name() << "\n";
  os << "vertices";
  for (const auto& v : p.quiver.vertices()) os << " " << v;
  os << "\n";
  for (const auto& a : p.quiver.arrows())
    os << "arrow " << a.name << " : " << p.quiver.vertex_name(a.src) << " -> "
       << p.quiver.vertex_name(a.tgt) << "\n";
  if (!p.relations.empty()) {
    os << "relations:\n";
    AdmissibleOrder ord = AdmissibleOrder::declaration_order(p.quiver);
    for (const auto& r : p.relations)
      os << r.str(p.quiver, &ord) << ";\n";
  }
  return os.str();
}

AlgebraElement parse_element(const PathAlgebraPresentation& p, const std::string& expr) {
  DocParser dp(expr);
  return dp.parse_full_expression(p);
}

}  // namespace fdimlab
